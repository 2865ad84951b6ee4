#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pars/lp.hpp"

using namespace pars;
using namespace pars::lp;

TEST_CASE("a feasible system yields a checked solution") {
    EqualitySystem s(3);
    s.add_row({{0, 1}, {1, 1}, {2, 1}}, 1);
    s.add_row({{0, 1}, {1, -1}}, Rational(1, 3));
    auto out = solve(s);
    REQUIRE(std::holds_alternative<Feasible>(out));
    CHECK(s.satisfied_by(std::get<Feasible>(out).x));
}

TEST_CASE("an infeasible system yields a Farkas certificate") {
    EqualitySystem s(2);
    s.add_row({{0, 1}, {1, 1}}, 1);
    s.add_row({{0, 1}, {1, 1}}, 2);
    auto out = solve(s);
    REQUIRE(std::holds_alternative<Infeasible>(out));
    CHECK(s.refuted_by(std::get<Infeasible>(out).y));

    EqualitySystem neg(1);
    neg.add_row({{0, 1}}, -1);
    auto o2 = solve(neg);
    REQUIRE(std::holds_alternative<Infeasible>(o2));
    CHECK(neg.refuted_by(std::get<Infeasible>(o2).y));
}

TEST_CASE("empty and degenerate systems") {
    EqualitySystem none(2);
    CHECK(std::holds_alternative<Feasible>(solve(none)));
    EqualitySystem zero(2);
    zero.add_row({}, 0);
    CHECK(std::holds_alternative<Feasible>(solve(zero)));
    EqualitySystem bad(2);
    bad.add_row({}, 1);
    auto out = solve(bad);
    REQUIRE(std::holds_alternative<Infeasible>(out));
    CHECK(bad.refuted_by(std::get<Infeasible>(out).y));
}

TEST_CASE("random systems: every answer carries a valid certificate") {
    std::mt19937_64 rng(11);
    std::size_t feasible = 0, infeasible = 0;
    for (int t = 0; t < 400; ++t) {
        std::size_t n = 1 + oracle::below(rng, 6), m = 1 + oracle::below(rng, 5);
        EqualitySystem s(n);
        // half the time plant a non-negative solution
        bool plant = oracle::below(rng, 2) == 0;
        std::vector<Rational> x0(n);
        for (auto& v : x0) v = Rational(static_cast<long>(oracle::below(rng, 4)), 1 + static_cast<long>(oracle::below(rng, 3)));
        for (std::size_t i = 0; i < m; ++i) {
            std::map<std::size_t, Rational> row;
            Rational rhs = 0;
            for (std::size_t j = 0; j < n; ++j) {
                long c = static_cast<long>(oracle::below(rng, 7)) - 3;
                if (c == 0) continue;
                row[j] = c;
                rhs += c * x0[j];
            }
            if (!plant) rhs = static_cast<long>(oracle::below(rng, 9)) - 4;
            s.add_row(row, rhs);
        }
        auto out = solve(s);
        if (auto* f = std::get_if<Feasible>(&out)) {
            ++feasible;
            CHECK(s.satisfied_by(f->x));
        } else {
            ++infeasible;
            CHECK_FALSE(plant);
            CHECK(s.refuted_by(std::get<Infeasible>(out).y));
        }
    }
    CHECK(feasible > 0);
    CHECK(infeasible > 0);
}
