// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lambda1/diamond.hpp"
#include "lambda1/generator.hpp"
#include "lambda1/semantics.hpp"
#include "oracles.hpp"
#include "pars/checkers.hpp"
#include "pars/evolution.hpp"
#include "pars/limit.hpp"
#include "pars/tree.hpp"
#include "pars_io/cli.hpp"
#include "pars_io/pars_format.hpp"

using namespace pars;
namespace l1 = pars::lambda1;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

FinitePars bundled(const std::string& name) { return io::load_pars(std::string(PARS_DATA_DIR) + "/" + name); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Outcome o;
    auto t0 = Clock::now();
    FinitePars p = bundled("example.pars");
    ElementId a("a"), d("d");

    auto diamond = check_diamond(p);
    o.require(diamond.fails(), "check diamond is " + to_string(diamond.verdict));
    o.require(diamond.counterexample && diamond.counterexample->root == a, "diamond counterexample not at a");

    auto sn = check_sn(p);
    o.require(sn.fails(), "check sn is " + to_string(sn.verdict));
    o.require(sn.counterexample && sn.counterexample->cycle == std::vector<ElementId>{a, a}, "sn cycle is not a->a");

    // d is the only element without rules, so every terminal support is {d: 1}
    std::set<ElementId> terminal;
    for (const auto& e : p.carrier())
        if (p.successors(e).empty()) terminal.insert(e);
    o.require(terminal == std::set<ElementId>{d}, "expected d to be the only terminal element");

    auto utd = check_utd(p, a, TreeLimits{16, 10000});
    o.require(utd.holds(), "utd a is " + to_string(utd.verdict));
    o.require(utd.common_support && *utd.common_support == CanonicalDist{{d, Weight(1)}}, "common support is not {d: 1}");

    double s = seconds_since(t0);
    o.require(s < 1.0, "took " + std::to_string(s) + " s");
    if (o.pass) o.detail = "diamond fails at a, sn cycle a->a, utd a = {d: 1}, " + std::to_string(s) + " s";
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto t0 = Clock::now();
    auto v = check_diamond(bundled("counterexample.pars"));
    double s = seconds_since(t0);
    o.require(v.holds(), "check diamond is " + to_string(v.verdict));
    o.require(s < 1.0, "took " + std::to_string(s) + " s");
    if (o.pass) o.detail = "diamond holds on a -> 1/2 a | 1/2 b, " + std::to_string(s) + " s";
    return o;
}

Outcome criterion3() {
    Outcome o;
    FinitePars five = bundled("five.pars");
    Rational two20 = 1048576;
    LimitReport r = limit_estimate(five, PointDist::dirac(ElementId("a")), Weight(Rational(1 / two20)), 1000);
    o.require(r.converged, "limit did not converge");
    o.require(r.iterations == 20, "iterations = " + std::to_string(r.iterations));
    o.require(r.terminal_part == CanonicalDist{{ElementId("b"), Weight(Rational(1 - 1 / two20))}},
              "terminal_part = " + to_string(r.terminal_part));
    o.require(r.residual_liveness.value() == 1 / two20, "residual = " + r.residual_liveness.str());
    o.require(r.error_bound.value() == 2 / two20, "error bound = " + r.error_bound.str());

    // distance to a terminal reduct never exceeds twice the liveness
    std::mt19937_64 rng(20250501);
    std::size_t checked = 0, violations = 0;
    while (checked < 100) {
        FinitePars p = oracle::random_sn_system(rng, 6, 2, 4);
        auto is_terminal = [&](const ElementId& e) { return p.is_terminal(e); };
        auto random_choice = [&](const PointDist& x, bool all) {
            EvolveChoice c;
            for (const auto& pt : x) {
                auto succ = p.successors(pt.element);
                if (succ.empty() || (!all && oracle::below(rng, 2) == 0))
                    c.push_back(Keep{});
                else
                    c.push_back(Evolve{oracle::below(rng, succ.size())});
            }
            return c;
        };
        PointDist dd = PointDist::dirac(ElementId("e0"));
        std::size_t warmup = oracle::below(rng, 3);
        for (std::size_t i = 0; i < warmup; ++i) dd = evolve(p, dd, random_choice(dd, false));
        PointDist e = dd;
        while (liveness(e, is_terminal).is_positive()) e = evolve(p, e, random_choice(e, true));

        // L1 distance computed here from the raw points
        std::map<std::string, Rational> diff;
        for (const auto& pt : dd) diff[pt.element.str()] += pt.weight.value();
        for (const auto& pt : e) diff[pt.element.str()] -= pt.weight.value();
        Rational l1 = 0;
        for (const auto& [k, v] : diff) l1 += abs(v);
        Rational live = 0;
        for (const auto& pt : dd)
            if (!p.successors(pt.element).empty()) live += pt.weight.value();

        if (distance(canonicalize(dd), canonicalize(e)).value() != l1) ++violations;
        if (l1 > 2 * live) ++violations;
        ++checked;
    }
    o.require(violations == 0, std::to_string(violations) + " distance/liveness violations");
    if (o.pass)
        o.detail = "20 iterations, terminal_part b:1048575/1048576, residual 1/1048576, error 1/524288; "
                   "distance <= 2*liveness on 100/100 random evolutions";
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto t0 = Clock::now();
    auto ds = oracle::small_dists();
    std::vector<std::vector<oracle::Mass>> rule_sets{{}};
    for (std::size_t i = 0; i < ds.size(); ++i) rule_sets.push_back({ds[i]});
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i; j < ds.size(); ++j) rule_sets.push_back({ds[i], ds[j]});

    std::size_t peaks = 0, joinable = 0, lp_only = 0, grid_only = 0, replayed = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = i; j < ds.size(); ++j) {
            for (const auto& rb : rule_sets) {
                for (const auto& rc : rule_sets) {
                    oracle::SmallSystem s;
                    s.rules = {std::vector<oracle::Mass>{ds[i], ds[j]}, rb, rc};
                    FinitePars p = oracle::to_pars(s);
                    PointDist e = oracle::to_point_dist(ds[i]), f = oracle::to_point_dist(ds[j]);
                    auto v = joinable_one_step(p, e, f);
                    bool grid = oracle::intersects(oracle::one_step_brute(s, ds[i]), oracle::one_step_brute(s, ds[j]));
                    ++peaks;
                    joinable += v.holds();
                    if (v.holds() == grid) continue;
                    if (grid) {
                        ++grid_only;
                        continue;
                    }
                    ++lp_only;
                    // replay the meet on both sides with explicit coefficients
                    const CanonicalDist& meet = v.witnesses.at(0).meet;
                    bool ok = true;
                    for (const PointDist* side : {&e, &f}) {
                        StepPolytope poly(p, canonicalize(*side));
                        auto coeffs = poly.find_realization(meet);
                        if (!coeffs) {
                            ok = false;
                            break;
                        }
                        std::map<ElementId, Rational> sum;
                        for (std::size_t g = 0; g < poly.generators().size(); ++g) {
                            const auto& gen = poly.generators()[g];
                            // the options must be Keep and this element's rules, as listed in s
                            int el_index = gen.element.str()[0] - 'a';
                            const auto& own = s.rules[static_cast<std::size_t>(el_index)];
                            ok = ok && gen.options.size() == own.size() + 1 &&
                                 gen.options[0] == CanonicalDist{{gen.element, Weight(1)}};
                            for (std::size_t k = 1; ok && k < gen.options.size(); ++k)
                                ok = canonicalize(oracle::to_point_dist(own[k - 1])) == gen.options[k];
                            Rational row = 0;
                            for (std::size_t k = 0; k < gen.options.size(); ++k) {
                                const Rational& lam = (*coeffs)[g][k].value();
                                row += lam;
                                for (const auto& [el, w] : gen.options[k]) sum[el] += lam * w.value();
                            }
                            ok = ok && row == gen.mass.value();
                        }
                        for (const auto& [el, w] : meet) ok = ok && sum[el] == w.value();
                        for (const auto& [el, q] : sum) ok = ok && (q == 0 || meet.contains(el));
                    }
                    replayed += ok;
                }
            }
        }
    }
    double secs = seconds_since(t0);
    std::size_t disagreements = lp_only + grid_only;
    o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    o.require(secs < 300, "took " + std::to_string(secs) + " s");
    std::ostringstream d;
    d << peaks << " peaks, " << joinable << " LP-joinable, " << lp_only << " joinable only by LP (" << replayed
      << " meets replayed exactly), " << grid_only << " joinable only on the grid, " << secs << " s";
    o.detail = o.pass ? d.str() : o.detail + "; " + d.str();
    return o;
}

Outcome criterion5() {
    Outcome o;
    auto t0 = Clock::now();
    const int weights[] = {3, 4, 6, 8, 9, 12};  // twelfths: 1/4 1/3 1/2 2/3 3/4 1
    std::vector<oracle::Units> starts{{}};
    for (std::size_t len = 1; len <= 3; ++len) {
        std::vector<std::size_t> idx(len, 0);
        while (true) {
            oracle::Units u;
            for (std::size_t k = 0; k < len; ++k) u.push_back({weights[idx[k] / 3], static_cast<int>(idx[k] % 3)});
            starts.push_back(u);
            std::size_t k = 0;
            while (k < len && ++idx[k] == 18) idx[k++] = 0;
            if (k == len) break;
        }
    }
    auto label = oracle::equiv_components(starts, {});
    std::vector<PointDist> dists;
    for (const auto& u : starts) dists.push_back(oracle::to_point_dist(u));

    std::size_t pairs = 0, agree_equiv = 0, disagreements = 0;
    for (std::size_t i = 0; i < dists.size(); ++i) {
        for (std::size_t j = i; j < dists.size(); ++j) {
            bool lib = equiv(dists[i], dists[j]);
            bool search = label[i] == label[j];
            ++pairs;
            agree_equiv += lib && search;
            disagreements += lib != search;
        }
    }
    o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    std::ostringstream d;
    d << starts.size() << " distributions, " << pairs << " pairs, " << agree_equiv << " equivalent pairs, "
      << disagreements << " disagreements, " << seconds_since(t0) << " s";
    o.detail = o.pass ? d.str() : o.detail + "; " + d.str();
    return o;
}

std::vector<std::pair<Weight, ElementId>> encoded(const l1::TermDist& d) {
    std::vector<std::pair<Weight, ElementId>> out;
    for (const auto& [w, m] : d) out.emplace_back(w, l1::encode(m));
    return out;
}

bool among(const std::vector<std::pair<Weight, ElementId>>& want, const std::vector<l1::TermDist>& succ) {
    for (const auto& s : succ)
        if (encoded(s) == want) return true;
    return false;
}

Outcome criterion6() {
    Outcome o;
    auto t0 = Clock::now();

    std::ostringstream out, err;
    int code = io::run_cli({"--json", "l1", "corpus", "--samples", "1000", "--size", "12", "--seed", "6"}, out, err);
    auto report = nlohmann::json::parse(out.str());
    std::size_t holds = report["holds"].get<std::size_t>();
    o.require(code == 0 && holds == 1000, "diamond holds on " + std::to_string(holds) + "/1000");
    for (const char* k : {"var", "app", "lam", "bang_lam", "bang", "choice"})
        o.require(report["constructors"].contains(k), std::string("no ") + k + " in corpus");

    // substitution into a term that steps
    std::size_t sub_out = 0, sub_out_bad = 0;
    for (std::uint64_t s = 0; sub_out < 1000; ++s) {
        l1::Term m = l1::gen_term(l1::corpus_seed(61, s), 10);
        auto succ = l1::step_successors(m);
        if (succ.empty()) continue;
        l1::Term n = l1::gen_term(l1::corpus_seed(62, s), 5);
        auto fv = l1::free_vars(m);
        std::string x = fv.empty() ? "y" : *std::next(fv.begin(), static_cast<long>(s % fv.size()));
        auto after = l1::step_successors(l1::subst(m, x, n));
        for (const auto& d : succ) {
            l1::TermDist mapped;
            for (const auto& [w, t] : d) mapped.emplace_back(w, l1::subst(t, x, n));
            if (!among(encoded(mapped), after)) ++sub_out_bad;
        }
        ++sub_out;
    }
    o.require(sub_out_bad == 0, std::to_string(sub_out_bad) + " substitution-out failures");

    // plugging a stepping term into a linear hole
    std::size_t sub_in = 0, sub_in_bad = 0;
    for (std::uint64_t s = 0; sub_in < 1000; ++s) {
        l1::Term m = l1::gen_term(l1::corpus_seed(63, s), 8);
        auto succ = l1::step_successors(m);
        if (succ.empty()) continue;
        l1::Term ctx = l1::gen_linear_context(l1::corpus_seed(64, s), 8, "h");
        if (l1::count_free("h", ctx) != 1) {
            ++sub_in_bad;
            continue;
        }
        auto after = l1::step_successors(l1::subst(ctx, "h", m));
        for (const auto& d : succ) {
            l1::TermDist plugged;
            for (const auto& [w, t] : d) plugged.emplace_back(w, l1::subst(ctx, "h", t));
            if (!among(encoded(plugged), after)) ++sub_in_bad;
        }
        ++sub_in;
    }
    o.require(sub_in_bad == 0, std::to_string(sub_in_bad) + " substitution-in failures");

    double secs = seconds_since(t0);
    o.require(secs < 120, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = "diamond 1000/1000, substitution-out 1000/1000, substitution-in 1000/1000, " + std::to_string(secs) + " s";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::size_t newman_holds = 0, lc_fails = 0, violations = 0;
    TreeLimits limits{16, 100000};
    for (int k = 0; k < 200; ++k) {
        FinitePars p = oracle::random_sn_system(rng, 6, 2, 4);
        auto newman = check_newman(p, 32);
        auto lc = check_local_confluence(p, 32);
        if (newman.holds()) {
            ++newman_holds;
            for (const auto& root : p.carrier()) {
                auto utd = check_utd(p, root, limits);
                auto sup = oracle::terminal_supports(p, root.str());
                if (!utd.holds() || sup.size() != 1) ++violations;
            }
        }
        if (lc.fails()) {
            ++lc_fails;
            bool found = false;
            for (const auto& root : p.carrier()) {
                auto sup = oracle::terminal_supports(p, root.str());
                if (sup.size() > 1 && check_utd(p, root, limits).fails()) found = true;
            }
            if (!found) ++violations;
        }
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    o.require(newman_holds > 0 && lc_fails > 0, "generator produced a one-sided sample");
    std::ostringstream d;
    d << "200 systems, newman holds on " << newman_holds << ", local confluence fails on " << lc_fails << ", "
      << violations << " violations";
    o.detail = o.pass ? d.str() : o.detail + "; " + d.str();
    return o;
}

Outcome criterion8() {
    Outcome o;
    FinitePars dice = bundled("dice.pars");
    o.require(check_diamond(dice).holds(), "check diamond does not hold");

    CanonicalDist uniform;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) uniform[ElementId("v" + std::to_string(i) + std::to_string(j))] = Weight(1, 36);
    auto utd = check_utd(dice, ElementId("s"), TreeLimits{});
    o.require(utd.holds(), "utd s is " + to_string(utd.verdict));
    o.require(utd.common_support && *utd.common_support == uniform, "common support is not uniform over 36 outcomes");

    std::ostringstream out, err;
    int code = io::run_cli({"--json", "sim", std::string(PARS_DATA_DIR) + "/dice.pars", "s", "--seed", "8", "--steps",
                            "10", "--runs", "100000", "--strategy", "random"},
                           out, err);
    o.require(code == 0, "sim exited with " + std::to_string(code));
    auto report = nlohmann::json::parse(out.str());
    const auto& outcomes = report["outcomes"];
    double worst = 0;
    for (const auto& [e, w] : uniform) {
        double freq = outcomes.contains(e.str()) ? outcomes[e.str()]["count"].get<double>() / 100000.0 : 0.0;
        worst = std::max(worst, std::abs(freq - 1.0 / 36.0));
    }
    o.require(outcomes.size() == 36, "outcomes outside the 36 pairs");
    o.require(worst <= 0.01, "max deviation " + std::to_string(worst));
    if (o.pass) o.detail = "diamond holds, utd s uniform over 36, sim max deviation " + std::to_string(worst);
    return o;
}

/// Replays a tree level by level as a chain of parallel evolutions.
bool replay_tree(const Pars& p, const CompTree& t, std::size_t& steps) {
    std::vector<std::pair<Weight, CompTree>> frontier{{Weight(1), t}};
    PointDist d = PointDist::dirac(t.root());
    while (true) {
        EvolveChoice choice;
        std::vector<std::pair<Weight, CompTree>> next;
        bool any = false;
        for (const auto& [w, sub] : frontier) {
            if (sub.is_leaf()) {
                choice.push_back(Keep{});
                next.emplace_back(w, sub);
            } else {
                choice.push_back(Evolve{*sub.rule()});
                for (const auto& b : sub.branches()) next.emplace_back(w * b.weight, b.tree);
                any = true;
            }
        }
        if (!any) break;
        d = evolve(p, d, choice);
        ++steps;
        frontier = std::move(next);
        for (std::size_t i = 0; i < frontier.size(); ++i)
            if (d[i].weight != frontier[i].first || d[i].element != frontier[i].second.root()) return false;
    }
    return d == supp(t);
}

Outcome criterion9() {
    Outcome o;
    std::size_t trees = 0, failures = 0;
    for (const char* name : {"example.pars", "five.pars", "counterexample.pars", "local.pars", "dice.pars"}) {
        FinitePars p = bundled(name);
        for (const auto& root : p.carrier()) {
            auto all = enumerate_trees(p, root, 4, 1000000);
            for (const auto& t : all) {
                std::size_t steps = 0;
                ++trees;
                if (!replay_tree(p, t, steps)) ++failures;
            }
        }
    }
    o.require(failures == 0, std::to_string(failures) + " failures");
    o.detail = (o.pass ? "" : o.detail + "; ") + std::to_string(trees) + " trees replayed, " + std::to_string(failures) +
               " failures";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

    int failed = 0;
    for (const auto& [id, run] : criteria) {
        if (!only.empty() && !only.contains(id)) continue;
        Outcome r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        failed += !r.pass;
        std::cout << "criterion " << id << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ")" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
