#include "pars_io/report.hpp"

namespace pars::io {

std::string rational_str(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Rational parse_rational(const std::string& s) {
    bool negative = !s.empty() && s[0] == '-';
    Weight w = Weight::parse(negative ? s.substr(1) : s);
    return negative ? Rational(-w.value()) : w.value();
}

Json to_json(const PointDist& d) {
    Json out = Json::array();
    for (const auto& pt : d) out.push_back({{"weight", rational_str(pt.weight)}, {"element", pt.element.str()}});
    return out;
}

Json to_json(const CanonicalDist& d) {
    Json out = Json::object();
    for (const auto& [e, w] : d) out[e.str()] = rational_str(w);
    return out;
}

Json to_json(const CompTree& t) {
    Json out = {{"element", t.root().str()}};
    if (t.is_leaf()) return out;
    out["rule"] = *t.rule();
    Json branches = Json::array();
    for (const auto& b : t.branches()) branches.push_back({{"weight", rational_str(b.weight)}, {"tree", to_json(b.tree)}});
    out["branches"] = std::move(branches);
    return out;
}

Json to_json(const CheckVerdict& v) {
    Json out = {{"verdict", to_string(v.verdict)}, {"summary", v.summary}, {"checked", v.checked}};
    Json ws = Json::array();
    for (const auto& w : v.witnesses) {
        ws.push_back({{"root", w.root.str()},
                      {"left", to_json(w.left)},
                      {"right", to_json(w.right)},
                      {"meet", to_json(w.meet)},
                      {"steps", w.steps}});
    }
    out["witnesses"] = std::move(ws);
    if (v.common_support) out["common_support"] = to_json(*v.common_support);
    if (const auto& cx = v.counterexample) {
        Json c = {{"explanation", cx->explanation}};
        if (cx->root) c["root"] = cx->root->str();
        if (!cx->left.empty() || !cx->right.empty()) {
            c["left"] = to_json(cx->left);
            c["right"] = to_json(cx->right);
        }
        if (!cx->cycle.empty()) {
            Json cyc = Json::array();
            for (const auto& e : cx->cycle) cyc.push_back(e.str());
            c["cycle"] = std::move(cyc);
        }
        if (!cx->trees.empty()) {
            Json ts = Json::array();
            for (const auto& t : cx->trees) ts.push_back({{"tree", to_json(t)}, {"support", to_json(canonicalize(supp(t)))}});
            c["trees"] = std::move(ts);
        }
        if (!cx->certificate.empty()) {
            Json cert = Json::array();
            for (const auto& [label, q] : cx->certificate) cert.push_back({{"label", label}, {"value", rational_str(q)}});
            c["certificate"] = std::move(cert);
        }
        out["counterexample"] = std::move(c);
    }
    return out;
}

Json to_json(const LimitReport& r) {
    return {{"converged", r.converged},
            {"strategy", to_string(r.strategy)},
            {"iterations", r.iterations},
            {"terminal_part", to_json(r.terminal_part)},
            {"residual_liveness", rational_str(r.residual_liveness)},
            {"error_bound", rational_str(r.error_bound)},
            {"final_distribution", to_json(r.final_distribution)}};
}

}  // namespace pars::io
