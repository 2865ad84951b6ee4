#pragma once

// The .pars text format:
//
//   # comment
//   a -> 2/3 b | 1/3 c     one successor distribution of a
//   a -> 2/5 a | 3/5 d     a second one (rules accumulate)
//   d                      declares an element with no rules
//
// Weights are `p/q` or integers and must sum to exactly 1 per rule.
// Names match [A-Za-z_][A-Za-z0-9_']*.

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pars/pars.hpp"

namespace pars::io {

class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

FinitePars parse_pars(std::string_view src);

/// Inverse of parse_pars: rules in order, then bare lines for elements
/// that appear nowhere else.
std::string print_pars(const FinitePars& p);

/// Reads and parses a file. Throws std::runtime_error when unreadable.
FinitePars load_pars(const std::filesystem::path& path);

bool valid_name(std::string_view s);

}  // namespace pars::io
