#pragma once

// Exact rational feasibility of { x ≥ 0 : A x = b }.

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "pars/weight.hpp"

namespace pars::lp {

/// Sparse equality system A x = b over non-negative variables.
class EqualitySystem {
public:
    explicit EqualitySystem(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    std::size_t add_var() { return num_vars_++; }
    /// Adds Σ coeffs[j]·x_j = rhs; returns the row index.
    std::size_t add_row(std::map<std::size_t, Rational> coeffs, Rational rhs);

    std::size_t num_vars() const { return num_vars_; }
    std::size_t num_rows() const { return rows_.size(); }
    const std::map<std::size_t, Rational>& row(std::size_t i) const { return rows_[i]; }
    const Rational& rhs(std::size_t i) const { return rhs_[i]; }

    /// Checks x ≥ 0 and A x = b exactly.
    bool satisfied_by(const std::vector<Rational>& x) const;
    /// Checks yᵀA ≤ 0 componentwise and yᵀb > 0: no x ≥ 0 can solve A x = b.
    bool refuted_by(const std::vector<Rational>& y) const;

private:
    std::size_t num_vars_;
    std::vector<std::map<std::size_t, Rational>> rows_;
    std::vector<Rational> rhs_;
};

struct Feasible {
    std::vector<Rational> x;
};

/// Farkas certificate: yᵀA ≤ 0 and yᵀb > 0.
struct Infeasible {
    std::vector<Rational> y;
};

using Outcome = std::variant<Feasible, Infeasible>;

/// Phase-I simplex with Bland's rule over exact rationals. Always
/// terminates; the returned witness or certificate is exact.
Outcome solve(const EqualitySystem& sys);

}  // namespace pars::lp
