#pragma once

// Exact arithmetic base layer. All core computations run on GMP integers and
// rationals; doubles appear only in presentation fields of reports.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace plumbcalc {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// mpz_class has no long long constructor; long is 64-bit on every platform
// this project targets.
inline BigInt big_of(long long v) { return BigInt(static_cast<long>(v)); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
    return v.get_num().get_str() + (v.get_den() == 1 ? "" : "/" + v.get_den().get_str());
}

inline BigInt big_from_string(const std::string& s) { return BigInt(s); }

// gcd of absolute values over a vector; 0 for an all-zero vector.
inline BigInt vector_gcd(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

// Scales a rational vector to the integer vector with coprime entries,
// preserving direction. Zero vector maps to zero vector.
std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v);

inline double to_double(const Rational& v) { return v.get_d(); }

// FNV-1a 64-bit, used to stamp reports with a deterministic input hash.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view data);

}  // namespace plumbcalc
