#pragma once

// Plain-line config format:
//   chain b=[3,2,2] a=[1,1,2]
//   sweep n=[2,10]
// One declaration per line; '#' starts a comment. Parse failures carry the
// line/column and a stable error category.

#include <optional>
#include <string>

#include "plumbcalc/cohomology.hpp"
#include "plumbcalc/config.hpp"
#include "plumbcalc/errors.hpp"

namespace plumbcalc {

enum class ParseErrorKind {
    MalformedLine,
    NonIntegerToken,
    BValueTooSmall,
    AValueTooSmall,
    DuplicateSweep,
    LengthMismatch,
    BadSweepRange,
    EmptyConfig,
};

const char* parse_error_kind_name(ParseErrorKind kind);

class parse_error : public input_error {
  public:
    parse_error(ParseErrorKind kind, std::size_t line, std::size_t column,
                const std::string& message);

    ParseErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

struct ConfigFile {
    PlumbingConfig config;
    std::optional<NRange> sweep;

    bool operator==(const ConfigFile&) const = default;
};

ConfigFile parse_config(const std::string& text);

}  // namespace plumbcalc
