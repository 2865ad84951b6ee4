#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with it beyond constructing inputs.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pars/pars.hpp"

namespace oracle {

// ---- small systems over {a, b, c} ------------------------------------

/// Mass vector over a, b, c in units of 1/6 (rules) or 1/360 (results).
using Mass = std::array<int, 3>;

/// Each element's rules as canonical mass vectors in 1/6 units.
struct SmallSystem {
    std::array<std::vector<Mass>, 3> rules;
};

/// All canonical distributions over {a,b,c} with denominators ≤ 3, in
/// 1/6 units.
std::vector<Mass> small_dists();

pars::FinitePars to_pars(const SmallSystem& s);
pars::PointDist to_point_dist(const Mass& sixths);

/// Canonical forms reachable from the distribution `sixths` (1/6 units)
/// by splitting each point into at most three parts whose weights have
/// denominator ≤ 6, letting each part keep or follow one rule, and
/// summing. Sorted, in 1/360 units.
std::vector<Mass> one_step_brute(const SmallSystem& s, const Mass& sixths);

bool intersects(const std::vector<Mass>& x, const std::vector<Mass>& y);

// ---- ~ graph over list distributions -----------------------------------

/// A list distribution with weights in units of 1/12.
using Units = std::vector<std::pair<int, int>>;  // (weight, element)

struct EquivUniverse {
    std::size_t max_points = 4;
    int max_total = 36;
};

/// Connected-component label of each start under Flip / Join / Split
/// (split parts in 1/12 units), exploring only lists within `universe`.
/// Starts in the same component get the same label.
std::vector<std::size_t> equiv_components(const std::vector<Units>& starts, const EquivUniverse& universe);

pars::PointDist to_point_dist(const Units& twelfths);

// ---- terminal distributions of acyclic systems -------------------------

/// Machine-integer fraction in lowest terms.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;
    Frac() = default;
    Frac(std::int64_t n, std::int64_t d);
    friend Frac operator+(const Frac& x, const Frac& y);
    friend Frac operator*(const Frac& x, const Frac& y);
    friend auto operator<=>(const Frac&, const Frac&) = default;
};

using FracDist = std::map<std::string, Frac>;

/// The set of canonical supports of the maximal trees at `root`, by
/// structural recursion. Requires an acyclic system.
std::set<FracDist> terminal_supports(const pars::FinitePars& p, const std::string& root);

FracDist to_frac(const pars::CanonicalDist& d);

}  // namespace oracle

namespace oracle {

// ---- random systems --------------------------------------------------------

/// Uniform integer in [0, n) by rejection.
std::size_t below(std::mt19937_64& rng, std::size_t n);

/// Random system over e0..e{n-1} (2 ≤ n ≤ max_elements) whose rules only
/// point forward, so its element graph is acyclic. Each element gets up to
/// `max_rules` rules with 1–3 branches and weights of denominator ≤ max_den.
pars::FinitePars random_sn_system(std::mt19937_64& rng, std::size_t max_elements, std::size_t max_rules, int max_den);

}  // namespace oracle
