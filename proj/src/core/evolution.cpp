#include "pars/evolution.hpp"

#include <algorithm>

#include "pars/lp.hpp"

namespace pars {

bool is_proper(const EvolveChoice& c) {
    return std::any_of(c.begin(), c.end(), [](const PointChoice& pc) { return std::holds_alternative<Evolve>(pc); });
}

PointDist evolve(const Pars& p, const PointDist& d, const EvolveChoice& choice) {
    if (choice.size() != d.size()) throw DistError("evolve choice length does not match the distribution");
    std::vector<Point> out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Point& pt = d[i];
        if (std::holds_alternative<Keep>(choice[i])) {
            out.push_back(pt);
            continue;
        }
        std::size_t k = std::get<Evolve>(choice[i]).successor;
        auto succ = p.successors(pt.element);
        if (k >= succ.size())
            throw DistError("element " + pt.element.str() + " has no successor #" + std::to_string(k));
        for (const auto& q : succ[k]) out.push_back({pt.weight * q.weight, q.element});
    }
    return PointDist(std::move(out));
}

std::vector<Evolution> parallel_successors(const Pars& p, const PointDist& d) {
    // options[i] = every result of point i on its own, Keep first.
    std::vector<std::vector<std::pair<PointChoice, std::vector<Point>>>> options(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Point& pt = d[i];
        options[i].push_back({Keep{}, {pt}});
        auto succ = p.successors(pt.element);
        for (std::size_t k = 0; k < succ.size(); ++k) {
            std::vector<Point> pts;
            for (const auto& q : succ[k]) pts.push_back({pt.weight * q.weight, q.element});
            options[i].push_back({Evolve{k}, std::move(pts)});
        }
    }

    std::vector<Evolution> out;
    std::vector<std::size_t> idx(d.size(), 0);
    while (true) {
        Evolution ev;
        std::vector<Point> pts;
        for (std::size_t i = 0; i < d.size(); ++i) {
            const auto& [choice, part] = options[i][idx[i]];
            ev.choice.push_back(choice);
            pts.insert(pts.end(), part.begin(), part.end());
        }
        ev.result = PointDist(std::move(pts));
        out.push_back(std::move(ev));
        // Odometer with the last point varying fastest.
        std::size_t k = d.size();
        while (k > 0) {
            --k;
            if (++idx[k] < options[k].size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
        if (d.size() == 0) return out;
    }
}

StepPolytope::StepPolytope(const Pars& p, const CanonicalDist& base) : base_(base) {
    for (const auto& [a, w] : base_) {
        Generator g{a, w, {CanonicalDist{{a, Weight(1)}}}};
        for (const auto& s : p.successors(a)) g.options.push_back(canonicalize(s));
        generators_.push_back(std::move(g));
    }
}

std::vector<ElementId> StepPolytope::reachable_elements() const {
    std::set<ElementId> s;
    for (const auto& g : generators_)
        for (const auto& opt : g.options)
            for (const auto& [e, w] : opt) s.insert(e);
    return {s.begin(), s.end()};
}

CanonicalDist StepPolytope::realize(const std::vector<std::vector<Weight>>& coefficients) const {
    if (coefficients.size() != generators_.size()) throw DistError("one coefficient row per generator expected");
    CanonicalDist out;
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        const auto& gen = generators_[g];
        if (coefficients[g].size() != gen.options.size()) throw DistError("one coefficient per option expected");
        Weight sum;
        for (std::size_t o = 0; o < gen.options.size(); ++o) {
            const Weight& lambda = coefficients[g][o];
            sum += lambda;
            if (lambda.is_zero()) continue;
            for (const auto& [e, w] : gen.options[o]) out[e] += lambda * w;
        }
        if (sum != gen.mass) throw DistError("coefficients for " + gen.element.str() + " must sum to its mass");
    }
    return out;
}

std::optional<std::vector<std::vector<Weight>>> StepPolytope::find_realization(const CanonicalDist& target) const {
    lp::EqualitySystem sys;
    std::vector<std::vector<std::size_t>> var(generators_.size());
    std::map<ElementId, std::map<std::size_t, Rational>> contrib;
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        std::map<std::size_t, Rational> mass_row;
        for (std::size_t o = 0; o < generators_[g].options.size(); ++o) {
            std::size_t v = sys.add_var();
            var[g].push_back(v);
            mass_row[v] = 1;
            for (const auto& [e, w] : generators_[g].options[o]) contrib[e][v] += w.value();
        }
        sys.add_row(std::move(mass_row), generators_[g].mass.value());
    }
    for (const auto& [e, w] : target)
        if (!contrib.contains(e)) return std::nullopt;
    for (auto& [e, row] : contrib) {
        auto it = target.find(e);
        sys.add_row(std::move(row), it == target.end() ? Rational(0) : it->second.value());
    }
    auto outcome = lp::solve(sys);
    if (!std::holds_alternative<lp::Feasible>(outcome)) return std::nullopt;
    const auto& x = std::get<lp::Feasible>(outcome).x;
    std::vector<std::vector<Weight>> coeffs(generators_.size());
    for (std::size_t g = 0; g < generators_.size(); ++g)
        for (std::size_t v : var[g]) coeffs[g].push_back(Weight(x[v]));
    return coeffs;
}

StepPolytope one_step_polytope(const Pars& p, const PointDist& d) { return StepPolytope(p, canonicalize(d)); }

}  // namespace pars
