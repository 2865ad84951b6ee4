#include "pars/flow.hpp"

#include <set>
#include <stdexcept>

namespace pars {

const std::vector<CanonicalDist>& SuccessorCache::get(const ElementId& a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    std::vector<CanonicalDist> out;
    for (const auto& d : pars_.successors(a)) out.push_back(canonicalize(d));
    return cache_.emplace(a, std::move(out)).first->second;
}

namespace {

using Contributions = std::map<ElementId, std::map<std::size_t, Rational>>;

struct FlowSide {
    std::map<std::size_t, FlowLayerVar> vars;
    Contributions final_layer;
};

class FlowBuilder {
public:
    FlowBuilder(SuccessorCache& cache, std::size_t max_elements) : cache_(cache), max_elements_(max_elements) {}

    /// Adds the k-layer flow from `start`; false when too many elements.
    bool add_side(const CanonicalDist& start, std::size_t steps, const std::string& tag, FlowSide& side) {
        if (steps == 0) throw std::invalid_argument("flow needs at least one step");
        Contributions incoming;
        for (std::size_t t = 0; t < steps; ++t) {
            std::vector<ElementId> layer;
            if (t == 0)
                for (const auto& [e, w] : start) layer.push_back(e);
            else
                for (const auto& [e, row] : incoming) layer.push_back(e);

            Contributions next;
            for (const auto& b : layer) {
                if (seen_.insert(b).second && seen_.size() > max_elements_) return false;
                const auto& succ = cache_.get(b);
                std::map<std::size_t, Rational> row;
                for (std::size_t o = 0; o <= succ.size(); ++o) {
                    std::size_t v = sys.add_var();
                    side.vars.emplace(v, FlowLayerVar{t, b, o});
                    row[v] = 1;
                    if (o == 0)
                        next[b][v] += 1;
                    else
                        for (const auto& [c, w] : succ[o - 1]) next[c][v] += w.value();
                }
                Rational rhs = 0;
                if (t == 0) {
                    rhs = start.at(b).value();
                } else {
                    for (const auto& [v, coef] : incoming.at(b)) row[v] -= coef;
                }
                sys.add_row(std::move(row), rhs);
                labels.push_back("mass[" + std::to_string(t) + "](" + b.str() + ")@" + tag);
            }
            incoming = std::move(next);
        }
        for (const auto& [e, row] : incoming)
            if (seen_.insert(e).second && seen_.size() > max_elements_) return false;
        side.final_layer = std::move(incoming);
        return true;
    }

    lp::EqualitySystem sys;
    std::vector<std::string> labels;

private:
    SuccessorCache& cache_;
    std::size_t max_elements_;
    std::set<ElementId> seen_;
};

std::vector<std::pair<FlowLayerVar, Weight>> extract_flow(const FlowSide& side, const std::vector<Rational>& x) {
    std::vector<std::pair<FlowLayerVar, Weight>> out;
    for (const auto& [v, meta] : side.vars)
        if (sgn(x[v]) > 0) out.emplace_back(meta, Weight(x[v]));
    return out;
}

CanonicalDist final_mass(const FlowSide& side, const std::vector<Rational>& x) {
    CanonicalDist out;
    for (const auto& [e, row] : side.final_layer) {
        Rational s = 0;
        for (const auto& [v, c] : row) s += c * x[v];
        if (sgn(s) > 0) out[e] = Weight(s);
    }
    return out;
}

FlowRefutation refutation(const FlowBuilder& b, const std::vector<Rational>& y) {
    FlowRefutation r;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(y[i]) != 0) r.certificate.emplace_back(b.labels[i], y[i]);
    return r;
}

}  // namespace

FlowOutcome join_flow(SuccessorCache& cache, const CanonicalDist& left, const CanonicalDist& right, std::size_t steps,
                      std::size_t max_elements) {
    FlowBuilder b(cache, max_elements);
    FlowSide l, r;
    FlowOutcome out;
    if (!b.add_side(left, steps, "left", l) || !b.add_side(right, steps, "right", r)) {
        out.too_large = true;
        return out;
    }
    std::set<ElementId> targets;
    for (const auto& [e, row] : l.final_layer) targets.insert(e);
    for (const auto& [e, row] : r.final_layer) targets.insert(e);
    for (const auto& e : targets) {
        std::map<std::size_t, Rational> row;
        if (auto it = l.final_layer.find(e); it != l.final_layer.end())
            for (const auto& [v, c] : it->second) row[v] += c;
        if (auto it = r.final_layer.find(e); it != r.final_layer.end())
            for (const auto& [v, c] : it->second) row[v] -= c;
        b.sys.add_row(std::move(row), 0);
        b.labels.push_back("join(" + e.str() + ")");
    }
    auto outcome = lp::solve(b.sys);
    if (auto* f = std::get_if<lp::Feasible>(&outcome)) {
        out.witness = FlowWitness{final_mass(l, f->x), extract_flow(l, f->x), extract_flow(r, f->x)};
    } else {
        out.refutation = refutation(b, std::get<lp::Infeasible>(outcome).y);
    }
    return out;
}

FlowOutcome reach_flow(SuccessorCache& cache, const CanonicalDist& from, const CanonicalDist& target,
                       std::size_t steps, std::size_t max_elements) {
    FlowBuilder b(cache, max_elements);
    FlowSide l;
    FlowOutcome out;
    if (!b.add_side(from, steps, "from", l)) {
        out.too_large = true;
        return out;
    }
    std::set<ElementId> targets;
    for (const auto& [e, row] : l.final_layer) targets.insert(e);
    for (const auto& [e, w] : target) targets.insert(e);
    for (const auto& e : targets) {
        std::map<std::size_t, Rational> row;
        if (auto it = l.final_layer.find(e); it != l.final_layer.end()) row = it->second;
        auto t = target.find(e);
        b.sys.add_row(std::move(row), t == target.end() ? Rational(0) : t->second.value());
        b.labels.push_back("target(" + e.str() + ")");
    }
    auto outcome = lp::solve(b.sys);
    if (auto* f = std::get_if<lp::Feasible>(&outcome)) {
        out.witness = FlowWitness{final_mass(l, f->x), extract_flow(l, f->x), {}};
    } else {
        out.refutation = refutation(b, std::get<lp::Infeasible>(outcome).y);
    }
    return out;
}

}  // namespace pars
