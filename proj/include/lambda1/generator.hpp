#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lambda1/term.hpp"

namespace pars::lambda1 {

/// Corpus generator parameters.
struct GenConfig {
    /// Free variables available everywhere.
    std::vector<std::string> free_vars{"y", "z", "w"};
    /// Choice probabilities are k/d with 2 ≤ d ≤ max_denominator.
    unsigned max_denominator = 8;
    /// Percent chance, per application node, of building a β or β! redex.
    unsigned redex_bias = 50;
};

/// A well-formed term with at most `size_budget` constructors (budget 1
/// gives a variable). Deterministic in (seed, size_budget, config).
Term gen_term(std::uint64_t seed, std::size_t size_budget, const GenConfig& config = {});

/// A well-formed term in which `hole` occurs free exactly once and not
/// under a thunk, so `\hole. result` is well-formed.
Term gen_linear_context(std::uint64_t seed, std::size_t size_budget, const std::string& hole,
                        const GenConfig& config = {});

/// Seed of the i-th sample of a corpus run with master seed `seed`.
std::uint64_t corpus_seed(std::uint64_t seed, std::size_t i);

}  // namespace pars::lambda1
