#include "plumbcalc/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace plumbcalc {

const char* parse_error_kind_name(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::MalformedLine: return "malformed-line";
        case ParseErrorKind::NonIntegerToken: return "non-integer-token";
        case ParseErrorKind::BValueTooSmall: return "b-value-too-small";
        case ParseErrorKind::AValueTooSmall: return "a-value-too-small";
        case ParseErrorKind::DuplicateSweep: return "duplicate-sweep";
        case ParseErrorKind::LengthMismatch: return "length-mismatch";
        case ParseErrorKind::BadSweepRange: return "bad-sweep-range";
        case ParseErrorKind::EmptyConfig: return "empty-config";
    }
    return "unknown";
}

namespace {

std::string format_message(ParseErrorKind kind, std::size_t line, std::size_t column,
                           const std::string& message) {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << message << " ["
       << parse_error_kind_name(kind) << "]";
    return os.str();
}

}  // namespace

parse_error::parse_error(ParseErrorKind kind, std::size_t line, std::size_t column,
                         const std::string& message)
    : input_error(format_message(kind, line, column, message)),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

// Cursor over one line; columns are 1-based for error reporting.
struct LineCursor {
    const std::string& text;
    std::size_t line_no;
    std::size_t pos = 0;

    std::size_t column() const { return pos + 1; }

    void skip_spaces() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool at_end() {
        skip_spaces();
        return pos >= text.size();
    }

    [[noreturn]] void fail(ParseErrorKind kind, const std::string& message) const {
        throw parse_error(kind, line_no, column(), message);
    }

    void expect(char c, const std::string& what) {
        skip_spaces();
        if (pos >= text.size() || text[pos] != c)
            fail(ParseErrorKind::MalformedLine, "expected '" + std::string(1, c) + "' " + what);
        ++pos;
    }

    std::string word() {
        skip_spaces();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_' || text[pos] == '-'))
            ++pos;
        return text.substr(start, pos - start);
    }

    BigInt integer() {
        skip_spaces();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string token = text.substr(start, pos - start);
        if (token.empty() || token == "-" || token == "+") {
            pos = start;
            fail(ParseErrorKind::NonIntegerToken, "expected an integer");
        }
        return BigInt(token);
    }

    // name=[v1,v2,...]
    std::vector<BigInt> named_list(const std::string& name) {
        skip_spaces();
        const std::size_t key_col = column();
        const std::string key = word();
        if (key != name)
            throw parse_error(ParseErrorKind::MalformedLine, line_no, key_col,
                              "expected '" + name + "=[...]', found '" + key + "'");
        expect('=', "after '" + name + "'");
        expect('[', "to open the " + name + " list");
        std::vector<BigInt> values;
        if (!at_end() && text[pos] == ']') {
            ++pos;
            return values;
        }
        while (true) {
            values.push_back(integer());
            skip_spaces();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect(']', "to close the " + name + " list");
            break;
        }
        return values;
    }
};

}  // namespace

ConfigFile parse_config(const std::string& text) {
    ConfigFile out;
    std::istringstream input(text);
    std::string raw;
    std::size_t line_no = 0;
    bool saw_sweep = false;

    while (std::getline(input, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        LineCursor cur{raw, line_no};
        if (cur.at_end()) continue;

        const std::size_t directive_col = cur.column();
        const std::string directive = cur.word();
        if (directive == "chain") {
            const std::size_t b_col = cur.column();
            std::vector<BigInt> b = cur.named_list("b");
            const std::size_t a_col = cur.column();
            std::vector<BigInt> a = cur.named_list("a");
            if (!cur.at_end())
                cur.fail(ParseErrorKind::MalformedLine, "unexpected trailing text");
            if (b.empty())
                throw parse_error(ParseErrorKind::MalformedLine, line_no, b_col,
                                  "chain needs at least one curve");
            if (b.size() != a.size())
                throw parse_error(ParseErrorKind::LengthMismatch, line_no, a_col,
                                  "b has " + std::to_string(b.size()) + " entries but a has " +
                                      std::to_string(a.size()));
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j] < 2)
                    throw parse_error(ParseErrorKind::BValueTooSmall, line_no, b_col,
                                      "b[" + std::to_string(j + 1) + "] = " + to_string(b[j]) +
                                          " must be >= 2");
                if (a[j] < 1)
                    throw parse_error(ParseErrorKind::AValueTooSmall, line_no, a_col,
                                      "a[" + std::to_string(j + 1) + "] = " + to_string(a[j]) +
                                          " must be >= 1");
            }
            out.config.chains.push_back(ChainSpec{std::move(b), std::move(a)});
        } else if (directive == "sweep") {
            if (saw_sweep)
                throw parse_error(ParseErrorKind::DuplicateSweep, line_no, directive_col,
                                  "sweep block already declared");
            saw_sweep = true;
            std::vector<BigInt> range = cur.named_list("n");
            if (!cur.at_end())
                cur.fail(ParseErrorKind::MalformedLine, "unexpected trailing text");
            if (range.size() != 2)
                throw parse_error(ParseErrorKind::BadSweepRange, line_no, directive_col,
                                  "sweep needs n=[lo,hi]");
            if (range[0] < 1 || range[1] < range[0] || !range[0].fits_slong_p() ||
                !range[1].fits_slong_p())
                throw parse_error(ParseErrorKind::BadSweepRange, line_no, directive_col,
                                  "sweep range must satisfy 1 <= lo <= hi");
            out.sweep = NRange{range[0].get_si(), range[1].get_si()};
        } else {
            throw parse_error(ParseErrorKind::MalformedLine, line_no, directive_col,
                              "unknown directive '" + directive + "' (expected 'chain' or 'sweep')");
        }
    }

    if (out.config.chains.empty())
        throw parse_error(ParseErrorKind::EmptyConfig, line_no ? line_no : 1, 1,
                          "config declares no chains");
    return out;
}

}  // namespace plumbcalc
