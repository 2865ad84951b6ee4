#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lambda1/term.hpp"

namespace pars::lambda1 {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Surface syntax: identifiers `[A-Za-z_][A-Za-z0-9_']*`; application by
/// juxtaposition (left-associative); `\x. M`, `\!x. M`, `!M`;
/// `M +{p/q} N` with 0 < p/q < 1, binding looser than application and
/// associating to the right; abstraction bodies extend as far as possible.
Term parse(std::string_view src);

/// Prints with the fewest parentheses that parse back to the same term.
std::string print(const Term& m);

}  // namespace pars::lambda1
