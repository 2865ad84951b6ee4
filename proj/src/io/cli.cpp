#include "pars_io/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>

#include "lambda1/diamond.hpp"
#include "lambda1/generator.hpp"
#include "lambda1/parser.hpp"
#include "lambda1/semantics.hpp"
#include "pars/checkers.hpp"
#include "pars/limit.hpp"
#include "pars/simulate.hpp"
#include "pars/tree.hpp"
#include "pars_io/dot.hpp"
#include "pars_io/pars_format.hpp"
#include "pars_io/report.hpp"

#ifndef PARS_DATA_DIR
#define PARS_DATA_DIR "data"
#endif

namespace pars::io {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// What a command produces: an exit code, a report body and its text form.
struct Result {
    int code = kExitHolds;
    Json body = Json::object();
    std::string text;
};

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Holds: return kExitHolds;
        case Verdict::Fails: return kExitFails;
        case Verdict::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

std::size_t default_bound() {
    if (const char* env = std::getenv("PARS_DEFAULT_BOUND")) {
        try {
            std::size_t pos = 0;
            long v = std::stol(env, &pos);
            if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 32;
}

/// A path as given, or else relative to the bundled data directory.
FinitePars open_system(const std::string& file) {
    std::filesystem::path path(file);
    if (!std::filesystem::exists(path)) {
        std::filesystem::path bundled = std::filesystem::path(PARS_DATA_DIR) / file;
        if (!std::filesystem::exists(bundled)) throw UsageError("no such file: " + file);
        path = bundled;
    }
    return load_pars(path);
}

ElementId element_of(const FinitePars& p, const std::string& name) {
    if (!p.contains(ElementId(name))) throw UsageError("unknown element: " + name);
    return ElementId(name);
}

std::string describe(const CheckVerdict& v) {
    std::ostringstream out;
    out << to_string(v.verdict) << ": " << v.summary << '\n';
    if (v.common_support) out << "common support: " << to_string(*v.common_support) << '\n';
    if (const auto& cx = v.counterexample) {
        out << "counterexample";
        if (cx->root) out << " at " << cx->root->str();
        out << '\n';
        if (!cx->left.empty() || !cx->right.empty()) {
            out << "  left:  " << to_string(cx->left) << '\n';
            out << "  right: " << to_string(cx->right) << '\n';
        }
        if (!cx->cycle.empty()) {
            out << "  cycle:";
            for (std::size_t i = 0; i < cx->cycle.size(); ++i) out << (i ? " -> " : " ") << cx->cycle[i].str();
            out << '\n';
        }
        for (const auto& t : cx->trees) out << "  tree support: " << to_string(canonicalize(supp(t))) << '\n';
        for (const auto& [label, q] : cx->certificate) out << "  " << label << " = " << q.get_str() << '\n';
        if (!cx->explanation.empty()) out << "  " << cx->explanation << '\n';
    }
    return out.str();
}

Result from_verdict(const CheckVerdict& v) { return {exit_code(v.verdict), to_json(v), describe(v)}; }

std::string terminal_line(const CanonicalDist& d) {
    std::string s;
    for (const auto& [e, w] : d) s += (s.empty() ? "" : " ") + e.str() + ":" + w.str();
    return s;
}

std::string term_dist_str(const lambda1::TermDist& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? ", (" : "(") + d[i].first.str() + ", " + lambda1::print(d[i].second) + ")";
    return s + "]";
}

Json term_dist_json(const lambda1::TermDist& d) {
    Json out = Json::array();
    for (const auto& [w, m] : d) out.push_back({{"weight", rational_str(w)}, {"term", lambda1::print(m)}});
    return out;
}

std::uint64_t run_seed(std::uint64_t seed, std::size_t i) { return lambda1::corpus_seed(seed, i); }

void count_kinds(const lambda1::Term& m, std::map<std::string, std::size_t>& counts) {
    using lambda1::Kind;
    static const std::map<Kind, std::string> names{{Kind::Var, "var"},   {Kind::App, "app"},   {Kind::Lam, "lam"},
                                                   {Kind::BangLam, "bang_lam"}, {Kind::Bang, "bang"}, {Kind::Choice, "choice"}};
    ++counts[names.at(m.kind())];
    switch (m.kind()) {
        case Kind::Var: return;
        case Kind::App:
        case Kind::Choice:
            count_kinds(m.left(), counts);
            count_kinds(m.right(), counts);
            return;
        default: count_kinds(m.body(), counts); return;
    }
}

Result cmd_check(const std::string& kind, const std::string& file, std::size_t bound) {
    FinitePars p = open_system(file);
    if (kind == "diamond") return from_verdict(check_diamond(p));
    if (kind == "sn") return from_verdict(check_sn(p));
    if (kind == "local") return from_verdict(check_local_confluence(p, bound));
    if (kind == "newman") return from_verdict(check_newman(p, bound));
    SemiLimits limits;
    limits.bound = bound;
    return from_verdict(check_semi_confluence(p, limits));
}

Result cmd_utd(const std::string& file, const std::string& elem, const TreeLimits& limits) {
    FinitePars p = open_system(file);
    return from_verdict(check_utd(p, element_of(p, elem), limits));
}

Result cmd_trees(const std::string& file, const std::string& elem, std::size_t depth, std::size_t max_count,
                 bool dot) {
    FinitePars p = open_system(file);
    auto trees = enumerate_trees(p, element_of(p, elem), depth, max_count);
    Result r;
    r.body["count"] = trees.size();
    r.body["truncated"] = trees.size() >= max_count;
    Json list = Json::array();
    std::ostringstream text;
    text << trees.size() << " tree(s) of depth <= " << depth << '\n';
    for (std::size_t i = 0; i < trees.size(); ++i) {
        CanonicalDist s = canonicalize(supp(trees[i]));
        Json t = {{"tree", to_json(trees[i])}, {"support", to_json(s)}};
        if (dot) {
            std::string g = export_tree_dot(trees[i], "tree" + std::to_string(i));
            t["dot"] = g;
            text << g;
        } else {
            text << "tree " << i << ": depth " << trees[i].depth() << ", support " << to_string(s) << '\n';
        }
        list.push_back(std::move(t));
    }
    r.body["trees"] = std::move(list);
    r.text = text.str();
    return r;
}

Result cmd_limit(const std::string& file, const std::string& elem, const std::string& eps, std::size_t max_iters,
                 const std::string& strategy) {
    FinitePars p = open_system(file);
    Weight epsilon = Weight::parse(eps);
    if (!epsilon.is_positive()) throw UsageError("--eps must be positive");
    LimitStrategy s = strategy == "last" ? LimitStrategy::LastRule : LimitStrategy::FirstRule;
    LimitReport rep = limit_estimate(p, PointDist::dirac(element_of(p, elem)), epsilon, max_iters, s);
    std::ostringstream text;
    text << (rep.converged ? "converged" : "not converged") << " after " << rep.iterations << " iteration(s), strategy "
         << to_string(rep.strategy) << '\n'
         << "terminal_part " << terminal_line(rep.terminal_part) << '\n'
         << "residual_liveness " << rep.residual_liveness.str() << '\n'
         << "error_bound " << rep.error_bound.str() << '\n';
    return {rep.converged ? kExitHolds : kExitUnknown, to_json(rep), text.str()};
}

Result cmd_sim(const std::string& file, const std::string& elem, std::uint64_t seed, std::size_t steps,
               const std::string& strategy, std::size_t runs) {
    FinitePars p = open_system(file);
    ElementId root = element_of(p, elem);
    SchedulerStrategy s = strategy == "random" ? SchedulerStrategy::Random : SchedulerStrategy::First;
    Result r;
    std::ostringstream text;
    if (runs == 1) {
        auto trace = simulate(p, root, s, seed, steps);
        Json js = Json::array();
        text << root.str();
        for (const auto& st : trace) {
            text << " -[" << st.successor << "]-> " << st.element.str();
            js.push_back({{"successor", st.successor}, {"element", st.element.str()}});
        }
        text << '\n';
        const ElementId& last = trace.empty() ? root : trace.back().element;
        r.body["trace"] = std::move(js);
        r.body["final"] = last.str();
        r.body["terminal"] = p.is_terminal(last);
    } else {
        std::map<ElementId, std::size_t> hist;
        for (std::size_t i = 0; i < runs; ++i) {
            auto trace = simulate(p, root, s, run_seed(seed, i), steps);
            ++hist[trace.empty() ? root : trace.back().element];
        }
        Json js = Json::object();
        for (const auto& [e, n] : hist) {
            js[e.str()] = {{"count", n}, {"frequency", rational_str(Rational(n, runs))}};
            text << e.str() << ' ' << n << ' ' << static_cast<double>(n) / static_cast<double>(runs) << '\n';
        }
        r.body["runs"] = runs;
        r.body["outcomes"] = std::move(js);
    }
    r.text = text.str();
    return r;
}

lambda1::Term parse_term(const std::string& src) { return lambda1::parse(src); }

Result l1_check(const std::string& src) {
    auto m = parse_term(src);
    auto why = lambda1::ill_formedness(m);
    Result r;
    r.body["term"] = lambda1::print(m);
    r.body["well_formed"] = !why;
    if (why) r.body["reason"] = *why;
    r.code = why ? kExitFails : kExitHolds;
    r.text = why ? *why + "\n" : "well-formed\n";
    return r;
}

Result l1_step(const std::string& src) {
    auto m = parse_term(src);
    if (auto why = lambda1::ill_formedness(m)) return {kExitFails, {{"reason", *why}}, *why + "\n"};
    auto succ = lambda1::step_successors(m);
    Result r;
    Json list = Json::array();
    std::ostringstream text;
    if (succ.empty()) text << "terminal\n";
    for (std::size_t i = 0; i < succ.size(); ++i) {
        text << i << ": " << term_dist_str(succ[i]) << '\n';
        list.push_back(term_dist_json(succ[i]));
    }
    r.body["term"] = lambda1::print(m);
    r.body["successors"] = std::move(list);
    r.text = text.str();
    return r;
}

Result l1_diamond(const std::string& src) {
    auto m = parse_term(src);
    if (auto why = lambda1::ill_formedness(m)) return {kExitFails, {{"reason", *why}}, *why + "\n"};
    return from_verdict(lambda1::check_llin_diamond(m));
}

Result l1_corpus(std::size_t samples, std::size_t size, std::uint64_t seed) {
    std::size_t holds = 0;
    std::map<std::string, std::size_t> kinds;
    Json failures = Json::array();
    for (std::size_t i = 0; i < samples; ++i) {
        auto m = lambda1::gen_term(lambda1::corpus_seed(seed, i), size);
        count_kinds(m, kinds);
        if (!lambda1::well_formed(m)) {
            failures.push_back({{"sample", i}, {"term", lambda1::print(m)}, {"reason", "ill-formed"}});
            continue;
        }
        auto v = lambda1::check_llin_diamond(m);
        if (v.holds())
            ++holds;
        else
            failures.push_back({{"sample", i}, {"term", lambda1::print(m)}, {"reason", v.summary}});
    }
    Result r;
    r.code = holds == samples ? kExitHolds : kExitFails;
    r.body = {{"samples", samples}, {"size", size}, {"seed", seed}, {"holds", holds}};
    Json mix = Json::object();
    for (const auto& [k, n] : kinds) mix[k] = n;
    r.body["constructors"] = std::move(mix);
    std::ostringstream text;
    text << "diamond holds on " << holds << "/" << samples << " sample(s)\n";
    for (const auto& f : failures) text << "  sample " << f["sample"].get<std::size_t>() << ": " << f["term"].get<std::string>() << '\n';
    r.body["failures"] = std::move(failures);
    r.text = text.str();
    return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Probabilistic abstract rewriting systems: confluence checks, trees, limits and the lambda_1 calculus",
                 "parstool"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Print a machine-readable report");

    std::function<Result()> action;

    std::string kind, file, elem, eps = "1/1048576", strategy, term;
    std::size_t bound = default_bound(), depth = 0, max_iters = 1000, steps = 1000, runs = 1;
    std::size_t samples = 1000, size = 12;
    std::uint64_t seed = 0;
    TreeLimits limits;
    bool dot = false;

    auto* check = app.add_subcommand("check", "Run a confluence checker on a .pars file");
    check->add_option("kind", kind, "diamond | sn | local | newman | semi")
        ->required()
        ->check(CLI::IsMember({"diamond", "sn", "local", "newman", "semi"}));
    check->add_option("file", file)->required();
    check->add_option("--bound", bound, "Join search bound (steps per side)")->check(CLI::PositiveNumber);
    check->callback([&] { action = [&] { return cmd_check(kind, file, bound); }; });

    auto* utd = app.add_subcommand("utd", "Unique terminal distribution from an element");
    utd->add_option("file", file)->required();
    utd->add_option("elem", elem)->required();
    utd->add_option("--max-depth", limits.max_depth);
    utd->add_option("--max-count", limits.max_count);
    utd->callback([&] { action = [&] { return cmd_utd(file, elem, limits); }; });

    auto* trees = app.add_subcommand("trees", "Enumerate computation trees up to a depth");
    trees->add_option("file", file)->required();
    trees->add_option("elem", elem)->required();
    trees->add_option("--depth", depth)->required();
    trees->add_option("--max-count", limits.max_count);
    trees->add_flag("--dot", dot, "Print each tree as a Graphviz digraph");
    trees->callback([&] { action = [&] { return cmd_trees(file, elem, depth, limits.max_count, dot); }; });

    auto* limit = app.add_subcommand("limit", "Approximate the terminal limit by full evolution");
    limit->add_option("file", file)->required();
    limit->add_option("elem", elem)->required();
    limit->add_option("--eps", eps, "Liveness threshold p/q")->required();
    limit->add_option("--max-iters", max_iters);
    strategy = "first";
    limit->add_option("--strategy", strategy)->check(CLI::IsMember({"first", "last"}));
    limit->callback([&] { action = [&] { return cmd_limit(file, elem, eps, max_iters, strategy); }; });

    auto* sim = app.add_subcommand("sim", "Sample runs of the system");
    sim->add_option("file", file)->required();
    sim->add_option("elem", elem)->required();
    sim->add_option("--seed", seed)->required();
    sim->add_option("--steps", steps)->required();
    sim->add_option("--runs", runs, "Number of runs; more than one prints outcome frequencies")->check(CLI::PositiveNumber);
    auto* sim_strategy = sim->add_option("--strategy", strategy)->check(CLI::IsMember({"first", "random"}));
    sim->callback([&] {
        if (sim_strategy->count() == 0) strategy = "first";
        action = [&] { return cmd_sim(file, elem, seed, steps, strategy, runs); };
    });

    auto* l1 = app.add_subcommand("l1", "The lambda_1 calculus");
    l1->require_subcommand(1);
    auto* l1check = l1->add_subcommand("check", "Well-formedness");
    l1check->add_option("term", term)->required();
    l1check->callback([&] { action = [&] { return l1_check(term); }; });
    auto* l1step = l1->add_subcommand("step", "One-step successors");
    l1step->add_option("term", term)->required();
    l1step->callback([&] { action = [&] { return l1_step(term); }; });
    auto* l1diamond = l1->add_subcommand("diamond", "Diamond property at a term");
    l1diamond->add_option("term", term)->required();
    l1diamond->callback([&] { action = [&] { return l1_diamond(term); }; });
    auto* corpus = l1->add_subcommand("corpus", "Diamond property on generated terms");
    corpus->add_option("--samples", samples);
    corpus->add_option("--size", size)->check(CLI::PositiveNumber);
    corpus->add_option("--seed", seed);
    corpus->callback([&] { action = [&] { return l1_corpus(samples, size, seed); }; });

    std::vector<const char*> argv{"parstool"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    auto start = std::chrono::steady_clock::now();
    Result r;
    try {
        r = action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const lambda1::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const WeightError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (json) {
        Json report = {{"command", args}};
        for (auto& [k, v] : r.body.items()) report[k] = v;
        report["exit_code"] = r.code;
        report["elapsed_ms"] = ms;
        out << report.dump(2) << '\n';
    } else {
        out << r.text;
    }
    return r.code;
}

}  // namespace pars::io
