#include "pars/certificates.hpp"

#include <algorithm>
#include <functional>

namespace pars {

std::vector<Invariant> invariant_basis(const Pars& p, const std::set<ElementId>& closure) {
    std::vector<ElementId> elems(closure.begin(), closure.end());
    std::map<ElementId, std::size_t> col;
    for (std::size_t i = 0; i < elems.size(); ++i) col[elems[i]] = i;
    const std::size_t n = elems.size();

    // One row per rule: e_a - D.
    std::vector<std::vector<Rational>> m;
    for (const auto& a : elems)
        for (const auto& d : p.successors(a)) {
            std::vector<Rational> row(n, 0);
            row[col.at(a)] += 1;
            for (const auto& pt : d) row[col.at(pt.element)] -= pt.weight.value();
            m.push_back(std::move(row));
        }

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<Invariant> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Invariant h;
        h[elems[f]] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (sgn(m[i][f]) != 0) h[elems[pivot_col[i]]] = -m[i][f];
        basis.push_back(std::move(h));
    }
    return basis;
}

Rational evaluate(const Invariant& h, const CanonicalDist& d) {
    Rational s = 0;
    for (const auto& [e, w] : d)
        if (auto it = h.find(e); it != h.end()) s += it->second * w.value();
    return s;
}

std::optional<Invariant> separating_invariant(const Pars& p, const CanonicalDist& left, const CanonicalDist& right,
                                              std::size_t max_elements) {
    std::set<ElementId> roots;
    for (const auto& [e, w] : left) roots.insert(e);
    for (const auto& [e, w] : right) roots.insert(e);
    auto closure = forward_closure(p, roots, max_elements);
    if (!closure) return std::nullopt;
    for (auto& h : invariant_basis(p, *closure))
        if (evaluate(h, left) != evaluate(h, right)) return h;
    return std::nullopt;
}

std::optional<std::size_t> closure_height(const Pars& p, const std::set<ElementId>& closure) {
    enum class Mark { Open, Done };
    std::map<ElementId, Mark> mark;
    std::map<ElementId, std::size_t> height;
    bool cyclic = false;
    std::function<std::size_t(const ElementId&)> visit = [&](const ElementId& a) -> std::size_t {
        if (auto it = mark.find(a); it != mark.end()) {
            if (it->second == Mark::Open) cyclic = true;
            return height[a];
        }
        mark[a] = Mark::Open;
        std::size_t h = 0;
        for (const auto& d : p.successors(a))
            for (const auto& pt : d) h = std::max(h, visit(pt.element) + 1);
        mark[a] = Mark::Done;
        height[a] = h;
        return h;
    };
    std::size_t best = 0;
    for (const auto& a : closure) best = std::max(best, visit(a));
    if (cyclic) return std::nullopt;
    return best;
}

std::optional<TerminalValues> terminal_values(const Pars& p, const std::set<ElementId>& roots,
                                              std::size_t max_elements) {
    auto closure = forward_closure(p, roots, max_elements);
    if (!closure) return std::nullopt;

    std::map<ElementId, std::vector<CanonicalDist>> succ;
    for (const auto& a : *closure) {
        for (const auto& d : p.successors(a)) succ[a].push_back(canonicalize(d));
    }

    TerminalValues tv;
    for (const auto& a : *closure)
        if (succ[a].empty()) tv.value[a] = CanonicalDist{{a, Weight(1)}};

    auto mix = [&](const CanonicalDist& d) {
        CanonicalDist out;
        for (const auto& [b, w] : d) out = combine(Weight(1), out, w, tv.value.at(b));
        return out;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& a : *closure) {
            if (tv.value.contains(a)) continue;
            for (std::size_t r = 0; r < succ[a].size(); ++r) {
                const auto& d = succ[a][r];
                bool ready = std::all_of(d.begin(), d.end(), [&](const auto& kv) { return tv.value.contains(kv.first); });
                if (!ready) continue;
                tv.value[a] = mix(d);
                tv.chosen_rule[a] = r;
                progress = true;
                break;
            }
        }
    }
    if (tv.value.size() != closure->size()) return std::nullopt;

    for (const auto& a : *closure)
        for (const auto& d : succ[a])
            if (mix(d) != tv.value.at(a)) return std::nullopt;
    return tv;
}

}  // namespace pars
