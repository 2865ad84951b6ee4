#include "lambda1/semantics.hpp"

#include <stdexcept>

#include "lambda1/parser.hpp"

namespace pars::lambda1 {

namespace {

template <typename F>
void push_mapped(std::vector<TermDist>& out, const std::vector<TermDist>& inner, F&& wrap) {
    for (const auto& d : inner) {
        TermDist mapped;
        mapped.reserve(d.size());
        for (const auto& [w, t] : d) mapped.emplace_back(w, wrap(t));
        out.push_back(std::move(mapped));
    }
}

std::vector<TermDist> steps(const Term& m) {
    std::vector<TermDist> out;
    switch (m.kind()) {
        case Kind::Var:
        case Kind::Bang: break;
        case Kind::Lam:
            push_mapped(out, steps(m.body()), [&](const Term& t) { return Term::lam(m.name(), t); });
            break;
        case Kind::BangLam:
            push_mapped(out, steps(m.body()), [&](const Term& t) { return Term::bang_lam(m.name(), t); });
            break;
        case Kind::Choice:
            out.push_back({{m.prob(), m.left()}, {Weight(1) - m.prob(), m.right()}});
            push_mapped(out, steps(m.left()), [&](const Term& t) { return Term::choice(m.prob(), t, m.right()); });
            push_mapped(out, steps(m.right()), [&](const Term& t) { return Term::choice(m.prob(), m.left(), t); });
            break;
        case Kind::App: {
            const Term& f = m.left();
            const Term& a = m.right();
            if (f.kind() == Kind::Lam) out.push_back({{Weight(1), subst(f.body(), f.name(), a)}});
            if (f.kind() == Kind::BangLam && a.kind() == Kind::Bang)
                out.push_back({{Weight(1), subst(f.body(), f.name(), a.body())}});
            push_mapped(out, steps(f), [&](const Term& t) { return Term::app(t, a); });
            push_mapped(out, steps(a), [&](const Term& t) { return Term::app(f, t); });
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<TermDist> step_successors(const Term& m) {
    if (auto why = ill_formedness(m)) throw std::invalid_argument("ill-formed term: " + *why);
    return steps(m);
}

ElementId encode(const Term& m) { return ElementId(print(alpha_normalize(m))); }

Term decode(const ElementId& id) { return parse(id.str()); }

PointDist to_point_dist(const TermDist& d) {
    std::vector<Point> pts;
    pts.reserve(d.size());
    for (const auto& [w, t] : d) pts.push_back({w, encode(t)});
    return PointDist(std::move(pts));
}

std::vector<NormalDist> LambdaPars::successors(const ElementId& a) const {
    std::vector<NormalDist> out;
    for (const auto& d : step_successors(decode(a))) out.emplace_back(to_point_dist(d));
    return out;
}

}  // namespace pars::lambda1
