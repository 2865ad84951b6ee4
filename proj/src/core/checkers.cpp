#include "pars/checkers.hpp"

#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "pars/certificates.hpp"
#include "pars/evolution.hpp"
#include "pars/flow.hpp"

namespace pars {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::vector<std::size_t> step_schedule(std::size_t bound) {
    std::vector<std::size_t> ks;
    for (std::size_t k = 1; k < bound; k *= 2) ks.push_back(k);
    ks.push_back(bound);
    return ks;
}

std::vector<std::pair<std::string, Rational>> label_invariant(const Invariant& h) {
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& [e, v] : h)
        if (sgn(v) != 0) out.emplace_back("h(" + e.str() + ")", v);
    return out;
}

std::set<ElementId> support_of(const CanonicalDist& a, const CanonicalDist& b) {
    std::set<ElementId> s;
    for (const auto& [e, w] : a) s.insert(e);
    for (const auto& [e, w] : b) s.insert(e);
    return s;
}

/// Shared driver for join and reach searches: certificates first, then the
/// flow LP at growing step counts.
CheckVerdict bounded_flow_search(const Pars& p, const CanonicalDist& left, const CanonicalDist& right,
                                 std::size_t bound, bool reach, JoinWitness base) {
    CheckVerdict v;
    if (auto h = separating_invariant(p, left, right)) {
        v.verdict = Verdict::Fails;
        v.counterexample = Counterexample{base.root, base.left, base.right, {}, {}, label_invariant(*h),
                                          "an invariant separates the two sides; they can never meet"};
        v.summary = "not joinable (separating invariant)";
        return v;
    }
    auto closure = forward_closure(p, support_of(left, right), 4096);
    std::optional<std::size_t> closure_h = closure ? closure_height(p, *closure) : std::nullopt;
    const bool acyclic = closure_h.has_value();
    const std::size_t height = closure_h.value_or(0);

    SuccessorCache cache(p);
    for (std::size_t k : step_schedule(bound)) {
        if (acyclic && height > 0 && k > height) k = height;
        FlowOutcome out = reach ? reach_flow(cache, left, right, k) : join_flow(cache, left, right, k);
        if (out.too_large) break;
        if (out.witness) {
            base.meet = out.witness->meet;
            base.steps = k;
            v.verdict = Verdict::Holds;
            v.summary = (reach ? "reached in " : "joined within ") + std::to_string(k) + " step(s)";
            v.witnesses.push_back(std::move(base));
            return v;
        }
        if (acyclic && k >= height) {
            v.verdict = Verdict::Fails;
            v.counterexample = Counterexample{base.root, base.left, base.right, {}, {}, out.refutation->certificate,
                                              "acyclic closure of height " + std::to_string(height) +
                                                  " exhausted without a meeting point"};
            v.summary = reach ? "unreachable" : "not joinable";
            return v;
        }
    }
    v.verdict = Verdict::Unknown;
    v.summary = "no meeting point within " + std::to_string(bound) + " step(s)";
    v.counterexample = Counterexample{base.root, base.left, base.right, {}, {}, {}, v.summary};
    return v;
}

/// Folds a per-item verdict into an aggregate: first Fails wins, Unknown
/// is sticky, Holds witnesses accumulate.
void absorb(CheckVerdict& total, CheckVerdict item) {
    ++total.checked;
    if (total.verdict == Verdict::Fails) return;
    switch (item.verdict) {
        case Verdict::Fails:
            total.verdict = Verdict::Fails;
            total.counterexample = std::move(item.counterexample);
            total.summary = item.summary;
            break;
        case Verdict::Unknown:
            if (total.verdict == Verdict::Holds) {
                total.verdict = Verdict::Unknown;
                total.counterexample = std::move(item.counterexample);
                total.summary = item.summary;
            }
            break;
        case Verdict::Holds:
            for (auto& w : item.witnesses) total.witnesses.push_back(std::move(w));
            break;
    }
}

CheckVerdict holds(std::string summary) {
    CheckVerdict v;
    v.verdict = Verdict::Holds;
    v.summary = std::move(summary);
    return v;
}

std::string dist_key(const PointDist& d) { return to_string(d); }

}  // namespace

CheckVerdict joinable_one_step(const Pars& p, const PointDist& e, const PointDist& f) {
    SuccessorCache cache(p);
    CanonicalDist ce = canonicalize(e), cf = canonicalize(f);
    CheckVerdict v;
    FlowOutcome out = join_flow(cache, ce, cf, 1);
    if (out.too_large) {
        v.summary = "one-step polytopes too large";
        return v;
    }
    if (out.witness) {
        v.verdict = Verdict::Holds;
        v.summary = "joinable in one step";
        v.witnesses.push_back(JoinWitness{{}, e, f, out.witness->meet, 1});
        return v;
    }
    v.verdict = Verdict::Fails;
    v.summary = "one-step polytopes are disjoint";
    v.counterexample =
        Counterexample{std::nullopt, e, f, {}, {}, out.refutation->certificate, "no common one-step reduct modulo ≈"};
    return v;
}

CheckVerdict joinable_within(const Pars& p, const PointDist& e, const PointDist& f, std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be at least 1");
    return bounded_flow_search(p, canonicalize(e), canonicalize(f), bound, false, JoinWitness{{}, e, f, {}, 0});
}

CheckVerdict check_diamond(const FinitePars& p) {
    CheckVerdict total = holds("every one-step peak joins in one step");
    for (const auto& a : p.carrier()) {
        auto succ = p.successors(a);
        for (std::size_t i = 0; i < succ.size(); ++i)
            for (std::size_t j = i + 1; j < succ.size(); ++j) {
                CheckVerdict item = joinable_one_step(p, succ[i], succ[j]);
                for (auto& w : item.witnesses) w.root = a;
                if (item.counterexample) item.counterexample->root = a;
                if (item.fails()) item.summary = "peak at " + a.str() + " does not join in one step";
                absorb(total, std::move(item));
                if (total.fails()) return total;
            }
    }
    return total;
}

CheckVerdict check_local_confluence(const FinitePars& p, std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be at least 1");
    CheckVerdict total = holds("every proper one-step peak joins");
    for (const auto& a : p.carrier()) {
        auto succ = p.successors(a);
        for (std::size_t i = 0; i < succ.size(); ++i)
            for (std::size_t j = i + 1; j < succ.size(); ++j) {
                CheckVerdict item = bounded_flow_search(p, canonicalize(succ[i]), canonicalize(succ[j]), bound, false,
                                                        JoinWitness{a, succ[i], succ[j], {}, 0});
                if (item.fails()) item.summary = "peak at " + a.str() + " cannot be joined";
                absorb(total, std::move(item));
                if (total.fails()) return total;
            }
    }
    return total;
}

CheckVerdict check_semi_confluence(const FinitePars& p, const SemiLimits& limits) {
    if (limits.bound == 0) throw std::invalid_argument("bound must be at least 1");
    CheckVerdict total = holds("every semi-confluence peak joins");
    for (const auto& a : p.carrier()) {
        auto succ = p.successors(a);
        if (succ.size() < 2) {
            // Every peak F passes through the only rule: F is a reduct of E.
            continue;
        }
        if (terminal_values(p, {a})) {
            ++total.checked;
            continue;
        }
        for (std::size_t i = 0; i < succ.size(); ++i) {
            const PointDist& e = succ[i];
            CanonicalDist ce = canonicalize(e);
            std::unordered_set<std::string> seen;
            std::deque<std::pair<PointDist, std::size_t>> queue;
            for (std::size_t j = 0; j < succ.size(); ++j)
                if (j != i && seen.insert(dist_key(succ[j])).second) queue.emplace_back(succ[j], 1);
            bool truncated = false;
            while (!queue.empty()) {
                auto [f, depth] = std::move(queue.front());
                queue.pop_front();
                CheckVerdict item =
                    bounded_flow_search(p, ce, canonicalize(f), limits.bound, false, JoinWitness{a, e, f, {}, 0});
                if (item.fails()) item.summary = "semi-confluence peak at " + a.str() + " cannot be joined";
                absorb(total, std::move(item));
                if (total.fails()) return total;
                if (depth >= limits.bound) {
                    for (const auto& pt : f)
                        if (!p.is_terminal(pt.element)) truncated = true;
                    continue;
                }
                for (auto& ev : parallel_successors(p, f)) {
                    if (!is_proper(ev.choice)) continue;
                    if (!seen.insert(dist_key(ev.result)).second) continue;
                    if (seen.size() > limits.max_peaks) {
                        truncated = true;
                        break;
                    }
                    queue.emplace_back(std::move(ev.result), depth + 1);
                }
            }
            if (truncated && total.verdict == Verdict::Holds) {
                total.verdict = Verdict::Unknown;
                total.summary = "peak enumeration at " + a.str() + " truncated by the bound";
            }
        }
    }
    return total;
}

CheckVerdict check_sn(const FinitePars& p) {
    enum class Mark { Open, Done };
    std::map<ElementId, Mark> mark;
    std::vector<ElementId> stack;
    std::vector<ElementId> cycle;

    std::function<bool(const ElementId&)> visit = [&](const ElementId& a) -> bool {
        mark[a] = Mark::Open;
        stack.push_back(a);
        for (const auto& d : p.successors(a))
            for (const auto& pt : d) {
                auto it = mark.find(pt.element);
                if (it != mark.end() && it->second == Mark::Open) {
                    auto from = std::find(stack.begin(), stack.end(), pt.element);
                    cycle.assign(from, stack.end());
                    cycle.push_back(pt.element);
                    return true;
                }
                if (it == mark.end() && visit(pt.element)) return true;
            }
        stack.pop_back();
        mark[a] = Mark::Done;
        return false;
    };

    for (const auto& a : p.carrier()) {
        if (mark.contains(a)) continue;
        if (visit(a)) {
            CheckVerdict v;
            v.verdict = Verdict::Fails;
            std::string path;
            for (const auto& e : cycle) path += (path.empty() ? "" : "->") + e.str();
            v.summary = "element cycle " + path;
            Counterexample cx;
            cx.root = cycle.front();
            cx.cycle = cycle;
            cx.explanation = "the cycle yields an infinite chain of proper evolutions from [(1," + cycle.front().str() + ")]";
            v.counterexample = std::move(cx);
            return v;
        }
    }
    CheckVerdict v = holds("element graph is acyclic");
    v.checked = p.carrier().size();
    return v;
}

CheckVerdict check_newman(const FinitePars& p, std::size_t bound) {
    CheckVerdict sn = check_sn(p);
    if (!sn.holds()) {
        sn.verdict = Verdict::Unknown;
        sn.summary = "Newman inapplicable: not strongly normalising (" + sn.summary + ")";
        return sn;
    }
    CheckVerdict lc = check_local_confluence(p, bound);
    switch (lc.verdict) {
        case Verdict::Holds: lc.summary = "SN and LC hold, so the system is confluent"; break;
        case Verdict::Fails: lc.summary = "local confluence fails: " + lc.summary; break;
        case Verdict::Unknown: lc.summary = "local confluence undecided: " + lc.summary; break;
    }
    return lc;
}

CheckVerdict check_utd(const Pars& p, const ElementId& root, const TreeLimits& limits) {
    TreeEnumeration en = enumerate_maximal_trees(p, root, limits);
    CheckVerdict v;
    v.checked = en.trees.size();
    for (std::size_t i = 1; i < en.trees.size(); ++i) {
        if (equiv(supp(en.trees[0]), supp(en.trees[i]))) continue;
        v.verdict = Verdict::Fails;
        v.summary = "two maximal trees at " + root.str() + " have different supports";
        Counterexample cx;
        cx.root = root;
        cx.left = supp(en.trees[0]);
        cx.right = supp(en.trees[i]);
        cx.trees = {en.trees[0], en.trees[i]};
        cx.explanation = to_string(cx.left) + " is not equivalent to " + to_string(cx.right);
        v.counterexample = std::move(cx);
        return v;
    }
    if (en.complete) {
        v.verdict = Verdict::Holds;
        v.summary = "all " + std::to_string(en.trees.size()) + " maximal trees agree";
        if (!en.trees.empty()) v.common_support = canonicalize(supp(en.trees[0]));
        return v;
    }
    if (auto tv = terminal_values(p, {root})) {
        const CanonicalDist& n = tv->value.at(root);
        if (en.trees.empty() || canonicalize(supp(en.trees[0])) == n) {
            v.verdict = Verdict::Holds;
            v.summary = "confluent closure (terminal-value certificate); " + std::to_string(en.trees.size()) +
                        " enumerated maximal trees agree";
            v.common_support = n;
            return v;
        }
    }
    v.verdict = Verdict::Unknown;
    v.summary = "tree enumeration truncated after " + std::to_string(en.trees.size()) + " maximal trees";
    return v;
}

CheckVerdict check_simulates(const FinitePars& p1, const FinitePars& p2, std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be at least 1");
    for (const auto& a : p1.carrier())
        if (!p2.contains(a)) throw std::invalid_argument("carriers differ: " + a.str() + " is unknown to the simulating system");
    CheckVerdict total = holds("every rule is simulated");
    for (const auto& [a, d] : p1.rules()) {
        CanonicalDist from{{a, Weight(1)}};
        CheckVerdict item =
            bounded_flow_search(p2, from, canonicalize(d), bound, true, JoinWitness{a, PointDist::dirac(a), d, {}, 0});
        if (item.fails()) item.summary = "rule " + a.str() + " -> " + to_string(d.dist()) + " is not simulated";
        absorb(total, std::move(item));
        if (total.fails()) return total;
    }
    return total;
}

}  // namespace pars
