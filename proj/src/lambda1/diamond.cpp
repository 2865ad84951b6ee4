#include "lambda1/diamond.hpp"

#include <map>
#include <stdexcept>

#include "lambda1/semantics.hpp"
#include "pars/evolution.hpp"

namespace pars::lambda1 {

namespace {

std::map<std::string, CanonicalDist> reachable(const LambdaPars& p, const PointDist& d) {
    std::map<std::string, CanonicalDist> out;
    for (const auto& ev : parallel_successors(p, d)) {
        CanonicalDist c = canonicalize(ev.result);
        out.emplace(to_string(c), std::move(c));
    }
    return out;
}

}  // namespace

CheckVerdict check_llin_diamond(const Term& m) {
    if (auto why = ill_formedness(m)) throw std::invalid_argument("ill-formed term: " + *why);
    LambdaPars p;
    ElementId root = encode(m);
    auto succ = p.successors(root);

    std::vector<std::map<std::string, CanonicalDist>> next;
    next.reserve(succ.size());
    for (const auto& d : succ) next.push_back(reachable(p, d));

    CheckVerdict v;
    for (std::size_t i = 0; i < succ.size(); ++i) {
        for (std::size_t j = i + 1; j < succ.size(); ++j) {
            ++v.checked;
            const auto& small = next[i].size() <= next[j].size() ? next[i] : next[j];
            const auto& large = next[i].size() <= next[j].size() ? next[j] : next[i];
            const CanonicalDist* meet = nullptr;
            for (const auto& [key, c] : small) {
                if (large.contains(key)) {
                    meet = &c;
                    break;
                }
            }
            if (!meet) {
                v.verdict = Verdict::Fails;
                Counterexample cx;
                cx.root = root;
                cx.left = succ[i];
                cx.right = succ[j];
                cx.explanation = "successors " + std::to_string(i) + " and " + std::to_string(j) +
                                 " have no common parallel step";
                v.counterexample = std::move(cx);
                v.summary = "diamond fails at " + root.str();
                return v;
            }
            v.witnesses.push_back({root, succ[i], succ[j], *meet, 1});
        }
    }
    v.verdict = Verdict::Holds;
    v.summary = std::to_string(succ.size()) + " successor(s), " + std::to_string(v.checked) + " pair(s) joined";
    return v;
}

}  // namespace pars::lambda1
