#include "plumbcalc/numeric.hpp"

#include <cstdio>

namespace plumbcalc {

std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v) {
    BigInt den_lcm = 1;
    for (const Rational& r : v)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());

    std::vector<BigInt> out;
    out.reserve(v.size());
    for (const Rational& r : v) out.push_back(r.get_num() * (den_lcm / r.get_den()));

    BigInt g = vector_gcd(out);
    if (g > 1)
        for (BigInt& x : out) x /= g;
    return out;
}

std::string fnv1a64_hex(std::string_view data) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return std::string(buf);
}

}  // namespace plumbcalc
