#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pars/tree.hpp"
#include "pars_io/cli.hpp"
#include "pars_io/dot.hpp"
#include "pars_io/pars_format.hpp"
#include "pars_io/report.hpp"

using namespace pars;
using namespace pars::io;

namespace {

const char* kExample = "a -> 2/3 b | 1/3 c\na -> 2/5 a | 3/5 d\nb -> 1/2 c | 1/2 d\nc -> 1 d";

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* f) { return std::string(PARS_DATA_DIR) + "/" + f; }

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("parse_pars") {
    auto p = parse_pars(kExample);
    CHECK(p.successors("a").size() == 2);
    CHECK(p.successors("a")[0] == NormalDist{{Weight(2, 3), "b"}, {Weight(1, 3), "c"}});
    CHECK(p.is_terminal("d"));
    CHECK(p.carrier().size() == 4);

    auto five = parse_pars("a -> 1/2 a | 1/2 b");
    CHECK(five.successors("a") == std::vector<NormalDist>{NormalDist{{Weight(1, 2), "a"}, {Weight(1, 2), "b"}}});

    auto bare = parse_pars("# just one\n  x  \n");
    CHECK(bare.carrier() == std::set<ElementId>{"x"});
}

TEST_CASE("parse_pars errors carry line numbers") {
    auto line_of = [](const char* src) -> std::size_t {
        try {
            parse_pars(src);
        } catch (const FormatError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("a -> 1/2 b") == 1);
    CHECK(line_of("a -> 1 b\n# ok\nb -> 1/x c") == 3);
    CHECK(line_of("a -> 1 b\nb => 1 c") == 2);
    CHECK(line_of("a -> 1 b |") == 1);
    CHECK(line_of("1a -> 1 b") == 1);
    CHECK_THROWS_WITH_AS(parse_pars("a -> 1/2 b"), doctest::Contains("line 1"), FormatError);
}

TEST_CASE("print_pars round-trips") {
    auto ex = parse_pars(kExample);
    CHECK(parse_pars(print_pars(ex)) == ex);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        auto p = oracle::random_sn_system(rng, 6, 3, 7);
        CHECK(parse_pars(print_pars(p)) == p);
    }
    CHECK(valid_name("x_1'"));
    CHECK_FALSE(valid_name("1x"));
    CHECK_FALSE(valid_name(""));
}

TEST_CASE("export_tree_dot") {
    std::string leaf = export_tree_dot(CompTree::leaf("a"));
    CHECK(count(leaf, "[label=") == 1);
    CHECK(count(leaf, "->") == 0);

    CompTree b = CompTree::node("b", 0, {{Weight(1, 2), CompTree::leaf("c")}, {Weight(1, 2), CompTree::leaf("d")}});
    CompTree c = CompTree::node("c", 0, {{Weight(1), CompTree::leaf("d")}});
    CompTree fig = CompTree::node("a", 0, {{Weight(2, 3), b}, {Weight(1, 3), c}});
    std::string dot = export_tree_dot(fig);
    for (int i = 0; i < 6; ++i) CHECK(count(dot, "  n" + std::to_string(i) + " [label=") == 1);
    CHECK(count(dot, "  n6 ") == 0);
    CHECK(count(dot, "[label=\"c\"]") == 2);
    CHECK(count(dot, "->") == 5);
    CHECK(count(dot, "[label=\"2/3\"]") == 1);
    CHECK(count(dot, "[label=\"1/3\"]") == 1);
    CHECK(count(dot, "[label=\"1/2\"]") == 2);
    CHECK(count(dot, "[label=\"1\"]") == 1);
    CHECK(dot == export_tree_dot(fig));
}

TEST_CASE("rationals round-trip through reports") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        Rational q(static_cast<long>(oracle::below(rng, 1000)) - 500, 1 + static_cast<long>(oracle::below(rng, 999)));
        q.canonicalize();
        CHECK(parse_rational(rational_str(q)) == q);
    }
    CHECK(rational_str(Rational(3)) == "3/1");
    CHECK(to_json(CanonicalDist{{"a", Weight(1, 2)}}).dump() == "{\"a\":\"1/2\"}");
    CHECK_THROWS_AS(parse_rational("0.5"), WeightError);
}

TEST_CASE("cli exit codes") {
    auto d = cli({"check", "diamond", data("example.pars")});
    CHECK(d.code == kExitFails);
    CHECK(d.out.find("a") != std::string::npos);

    auto l = cli({"limit", data("five.pars"), "a", "--eps", "1/1048576"});
    CHECK(l.code == kExitHolds);
    CHECK(l.out.find("terminal_part b:1048575/1048576") != std::string::npos);

    auto c = cli({"l1", "check", "\\x. x x"});
    CHECK(c.code == kExitFails);
    CHECK(c.out.find("not affine: x") != std::string::npos);

    CHECK(cli({"check", "diamond", data("counterexample.pars")}).code == kExitHolds);
    CHECK(cli({"check", "diamond", data("dice.pars")}).code == kExitHolds);
    CHECK(cli({"check", "sn", data("example.pars")}).code == kExitFails);
    CHECK(cli({"check", "sn", data("five.pars")}).code == kExitFails);
    CHECK(cli({"check", "newman", data("example.pars")}).code == kExitUnknown);
    CHECK(cli({"utd", data("example.pars"), "a"}).code == kExitHolds);
    CHECK(cli({"utd", data("local.pars"), "a"}).code == kExitFails);
    CHECK(cli({"l1", "diamond", "(\\x. x) (y +{1/2} z)"}).code == kExitHolds);
    CHECK(cli({"sim", data("five.pars"), "a", "--seed", "3", "--steps", "50"}).code == kExitHolds);
    CHECK(cli({"trees", data("example.pars"), "c", "--depth", "2", "--dot"}).code == kExitHolds);
}

TEST_CASE("cli usage errors exit 3") {
    for (auto args : std::vector<std::vector<std::string>>{{},
                                                           {"frobnicate"},
                                                           {"check", "diamond"},
                                                           {"check", "nope", data("example.pars")},
                                                           {"check", "diamond", "/no/such/file.pars"},
                                                           {"limit", data("five.pars"), "a", "--eps", "x"},
                                                           {"l1", "check", "(x"}}) {
        auto r = cli(args);
        CHECK(r.code == kExitUsage);
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("cli default bound comes from the environment") {
    setenv("PARS_DEFAULT_BOUND", "1", 1);
    auto low = cli({"--json", "check", "local", data("example.pars")});
    unsetenv("PARS_DEFAULT_BOUND");
    auto dflt = cli({"--json", "check", "local", data("example.pars")});
    CHECK(dflt.code == kExitHolds);
    CHECK(low.code == kExitUnknown);
}

TEST_CASE("cli --json output parses") {
    auto r = cli({"--json", "check", "diamond", data("example.pars")});
    Json j = Json::parse(r.out);
    CHECK(j["exit_code"] == kExitFails);
    CHECK(j.contains("elapsed_ms"));
    CHECK(j["command"].is_array());

    auto l = cli({"--json", "limit", data("five.pars"), "a", "--eps", "1/1048576"});
    Json lj = Json::parse(l.out);
    CHECK(lj.dump().find("\"b\":\"1048575/1048576\"") != std::string::npos);
}
