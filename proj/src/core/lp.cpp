#include "pars/lp.hpp"

#include <stdexcept>

namespace pars::lp {

std::size_t EqualitySystem::add_row(std::map<std::size_t, Rational> coeffs, Rational rhs) {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (it->first >= num_vars_) throw std::out_of_range("row references an unknown variable");
        it->second.canonicalize();
        if (sgn(it->second) == 0)
            it = coeffs.erase(it);
        else
            ++it;
    }
    rhs.canonicalize();
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(std::move(rhs));
    return rows_.size() - 1;
}

bool EqualitySystem::satisfied_by(const std::vector<Rational>& x) const {
    if (x.size() != num_vars_) return false;
    for (const auto& v : x)
        if (sgn(v) < 0) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational sum = 0;
        for (const auto& [j, c] : rows_[i]) sum += c * x[j];
        if (sum != rhs_[i]) return false;
    }
    return true;
}

bool EqualitySystem::refuted_by(const std::vector<Rational>& y) const {
    if (y.size() != rows_.size()) return false;
    std::vector<Rational> ya(num_vars_, 0);
    Rational yb = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(y[i]) == 0) continue;
        for (const auto& [j, c] : rows_[i]) ya[j] += y[i] * c;
        yb += y[i] * rhs_[i];
    }
    for (const auto& v : ya)
        if (sgn(v) > 0) return false;
    return sgn(yb) > 0;
}

namespace {

/// Dense Phase-I tableau. Columns [0, n) are the problem variables,
/// [n, n+m) the artificials, and column n+m the right-hand side.
class Tableau {
public:
    explicit Tableau(const EqualitySystem& sys)
        : m_(sys.num_rows()), n_(sys.num_vars()), width_(n_ + m_ + 1), cells_(m_ * width_), cost_(width_),
          basis_(m_), sign_(m_, 1) {
        for (std::size_t i = 0; i < m_; ++i) {
            if (sgn(sys.rhs(i)) < 0) sign_[i] = -1;
            for (const auto& [j, c] : sys.row(i)) at(i, j) = sign_[i] * c;
            at(i, n_ + i) = 1;
            at(i, n_ + m_) = sign_[i] * sys.rhs(i);
            basis_[i] = n_ + i;
        }
        // Reduced costs of min Σ artificials with the artificial basis.
        for (std::size_t j = 0; j < width_; ++j) {
            if (j >= n_ && j < n_ + m_) continue;
            Rational s = 0;
            for (std::size_t i = 0; i < m_; ++i) s -= at(i, j);
            cost_[j] = s;
        }
    }

    void run() {
        while (true) {
            std::size_t enter = width_;
            for (std::size_t j = 0; j + 1 < width_; ++j)
                if (sgn(cost_[j]) < 0) {
                    enter = j;
                    break;
                }
            if (enter == width_) return;

            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(at(i, enter)) <= 0) continue;
                Rational ratio = at(i, width_ - 1) / at(i, enter);
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            // Phase I is bounded below by 0, so an entering column always
            // has a positive entry.
            if (leave == m_) throw std::logic_error("unbounded phase-I simplex");
            pivot(leave, enter);
        }
    }

    bool feasible() const { return sgn(cost_[width_ - 1]) == 0; }

    std::vector<Rational> primal() const {
        std::vector<Rational> x(n_, 0);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = at(i, width_ - 1);
        return x;
    }

    /// y_i = 1 - (reduced cost of artificial i), mapped back through the
    /// row sign flips.
    std::vector<Rational> farkas() const {
        std::vector<Rational> y(m_);
        for (std::size_t i = 0; i < m_; ++i) y[i] = sign_[i] * (1 - cost_[n_ + i]);
        return y;
    }

private:
    Rational& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / at(r, c);
        for (std::size_t j = 0; j < width_; ++j)
            if (sgn(at(r, j)) != 0) at(r, j) *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < width_; ++j)
            if (sgn(at(r, j)) != 0) nz.push_back(j);
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || sgn(at(i, c)) == 0) continue;
            Rational f = at(i, c);
            for (std::size_t j : nz) at(i, j) -= f * at(r, j);
        }
        if (sgn(cost_[c]) != 0) {
            Rational f = cost_[c];
            for (std::size_t j : nz) cost_[j] -= f * at(r, j);
        }
        basis_[r] = c;
    }

    std::size_t m_, n_, width_;
    std::vector<Rational> cells_;
    // Reduced-cost row; the last entry holds minus the objective value.
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
    std::vector<int> sign_;
};

}  // namespace

Outcome solve(const EqualitySystem& sys) {
    Tableau t(sys);
    t.run();
    if (t.feasible()) return Feasible{t.primal()};
    return Infeasible{t.farkas()};
}

}  // namespace pars::lp
