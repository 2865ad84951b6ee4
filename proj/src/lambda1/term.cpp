#include "lambda1/term.hpp"

#include <algorithm>
#include <vector>

namespace pars::lambda1 {

Term Term::var(std::string name) { return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, {}, {}})); }

Term Term::app(Term fun, Term arg) {
    return Term(std::make_shared<const Node>(Node{Kind::App, {}, {}, std::move(fun), std::move(arg)}));
}

Term Term::lam(std::string binder, Term body) {
    return Term(std::make_shared<const Node>(Node{Kind::Lam, std::move(binder), {}, std::move(body), {}}));
}

Term Term::bang_lam(std::string binder, Term body) {
    return Term(std::make_shared<const Node>(Node{Kind::BangLam, std::move(binder), {}, std::move(body), {}}));
}

Term Term::bang(Term body) { return Term(std::make_shared<const Node>(Node{Kind::Bang, {}, {}, std::move(body), {}})); }

Term Term::choice(Weight p, Term left, Term right) {
    if (!p.is_positive() || p >= Weight(1)) throw WeightError("choice probability " + p.str() + " is not in (0,1)");
    return Term(std::make_shared<const Node>(Node{Kind::Choice, {}, std::move(p), std::move(left), std::move(right)}));
}

std::size_t Term::size() const {
    switch (kind()) {
        case Kind::Var: return 1;
        case Kind::App:
        case Kind::Choice: return 1 + left().size() + right().size();
        default: return 1 + body().size();
    }
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Kind::Var: return a.name() == b.name();
        case Kind::App: return a.left() == b.left() && a.right() == b.right();
        case Kind::Choice: return a.prob() == b.prob() && a.left() == b.left() && a.right() == b.right();
        case Kind::Lam:
        case Kind::BangLam: return a.name() == b.name() && a.body() == b.body();
        case Kind::Bang: return a.body() == b.body();
    }
    return false;
}

std::size_t count_free(const std::string& x, const Term& m) {
    switch (m.kind()) {
        case Kind::Var: return m.name() == x ? 1 : 0;
        case Kind::App:
        case Kind::Choice: return count_free(x, m.left()) + count_free(x, m.right());
        case Kind::Lam:
        case Kind::BangLam: return m.name() == x ? 0 : count_free(x, m.body());
        case Kind::Bang: return count_free(x, m.body());
    }
    return 0;
}

namespace {

void collect_free(const Term& m, std::vector<std::string>& bound, std::set<std::string>& out) {
    switch (m.kind()) {
        case Kind::Var:
            if (std::find(bound.begin(), bound.end(), m.name()) == bound.end()) out.insert(m.name());
            return;
        case Kind::App:
        case Kind::Choice:
            collect_free(m.left(), bound, out);
            collect_free(m.right(), bound, out);
            return;
        case Kind::Lam:
        case Kind::BangLam:
            bound.push_back(m.name());
            collect_free(m.body(), bound, out);
            bound.pop_back();
            return;
        case Kind::Bang: collect_free(m.body(), bound, out); return;
    }
}

/// Free occurrences of x that sit under a thunk.
bool free_under_thunk(const std::string& x, const Term& m, bool in_thunk) {
    switch (m.kind()) {
        case Kind::Var: return in_thunk && m.name() == x;
        case Kind::App:
        case Kind::Choice: return free_under_thunk(x, m.left(), in_thunk) || free_under_thunk(x, m.right(), in_thunk);
        case Kind::Lam:
        case Kind::BangLam: return m.name() != x && free_under_thunk(x, m.body(), in_thunk);
        case Kind::Bang: return free_under_thunk(x, m.body(), true);
    }
    return false;
}

std::string fresh_name(std::string base, const std::set<std::string>& avoid) {
    do base += '\'';
    while (avoid.contains(base));
    return base;
}

Term rebuild_binder(const Term& m, std::string binder, Term body) {
    return m.kind() == Kind::Lam ? Term::lam(std::move(binder), std::move(body))
                                 : Term::bang_lam(std::move(binder), std::move(body));
}

Term normalize(const Term& m, std::vector<std::pair<std::string, std::string>>& env,
               const std::set<std::string>& avoid) {
    switch (m.kind()) {
        case Kind::Var:
            for (auto it = env.rbegin(); it != env.rend(); ++it)
                if (it->first == m.name()) return Term::var(it->second);
            return m;
        case Kind::App: return Term::app(normalize(m.left(), env, avoid), normalize(m.right(), env, avoid));
        case Kind::Choice:
            return Term::choice(m.prob(), normalize(m.left(), env, avoid), normalize(m.right(), env, avoid));
        case Kind::Bang: return Term::bang(normalize(m.body(), env, avoid));
        case Kind::Lam:
        case Kind::BangLam: {
            std::string name = "x" + std::to_string(env.size());
            while (avoid.contains(name)) name += '\'';
            env.emplace_back(m.name(), name);
            Term body = normalize(m.body(), env, avoid);
            env.pop_back();
            return rebuild_binder(m, name, std::move(body));
        }
    }
    return m;
}

}  // namespace

std::set<std::string> free_vars(const Term& m) {
    std::vector<std::string> bound;
    std::set<std::string> out;
    collect_free(m, bound, out);
    return out;
}

std::optional<std::string> ill_formedness(const Term& m) {
    switch (m.kind()) {
        case Kind::Var: return std::nullopt;
        case Kind::App:
        case Kind::Choice:
            if (auto r = ill_formedness(m.left())) return r;
            return ill_formedness(m.right());
        case Kind::Bang: return ill_formedness(m.body());
        case Kind::BangLam: return ill_formedness(m.body());
        case Kind::Lam:
            if (count_free(m.name(), m.body()) > 1) return "not affine: " + m.name();
            if (free_under_thunk(m.name(), m.body(), false)) return "affine variable inside a thunk: " + m.name();
            return ill_formedness(m.body());
    }
    return std::nullopt;
}

Term subst(const Term& m, const std::string& x, const Term& n) {
    switch (m.kind()) {
        case Kind::Var: return m.name() == x ? n : m;
        case Kind::App: return Term::app(subst(m.left(), x, n), subst(m.right(), x, n));
        case Kind::Choice: return Term::choice(m.prob(), subst(m.left(), x, n), subst(m.right(), x, n));
        case Kind::Bang: return Term::bang(subst(m.body(), x, n));
        case Kind::Lam:
        case Kind::BangLam: {
            if (m.name() == x || count_free(x, m.body()) == 0) return m;
            auto fv_n = free_vars(n);
            if (!fv_n.contains(m.name())) return rebuild_binder(m, m.name(), subst(m.body(), x, n));
            auto avoid = fv_n;
            avoid.merge(free_vars(m.body()));
            avoid.insert(x);
            std::string fresh = fresh_name(m.name(), avoid);
            Term renamed = subst(m.body(), m.name(), Term::var(fresh));
            return rebuild_binder(m, fresh, subst(renamed, x, n));
        }
    }
    return m;
}

Term alpha_normalize(const Term& m) {
    std::vector<std::pair<std::string, std::string>> env;
    return normalize(m, env, free_vars(m));
}

bool alpha_equal(const Term& a, const Term& b) { return alpha_normalize(a) == alpha_normalize(b); }

}  // namespace pars::lambda1
