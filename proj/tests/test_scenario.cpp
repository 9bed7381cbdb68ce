#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <motivic/scenario.hpp>

using namespace motivic;

namespace {

std::string slurp(const std::string& rel) {
    std::ifstream in(std::string(MOTIVIC_TEST_DATA_DIR) + "/" + rel);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("the bundled demo scenario parses and every check passes") {
    Scenario sc = parse_scenario(slurp("scenarios/sixops_demo.scn"));

    CHECK(sc.bases.size() == 4);
    CHECK(sc.maps.size() == 3);
    CHECK(sc.classes.size() == 7);
    REQUIRE(sc.checks.size() == 20);

    // The demo exercises every identity the checker knows.
    std::set<std::string> used;
    for (const CheckSpec& spec : sc.checks)
        used.insert(spec.identity);
    for (const std::string& name : known_identities()) {
        INFO(name);
        CHECK(used.count(name) == 1);
    }

    for (const CheckSpec& spec : sc.checks) {
        CheckResult r = run_check(sc, spec);
        INFO(r.label << ": " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("scenario structure is resolved correctly") {
    Scenario sc = parse_scenario(slurp("scenarios/sixops_demo.scn"));

    const BasePtr& p1 = sc.base("P1");
    CHECK(p1->strata().size() == 2);
    CHECK(p1->stratum("aff").local_dim == 1);
    CHECK(p1->stratum("aff").cls.as_laurent() == Laurent::lefschetz());

    const StratMap& f = sc.map_named("f");
    CHECK(f.source() == p1);
    CHECK(f.image_of("aff") == "o");
    CHECK(f.smooth_rel_dim() == 1);
    CHECK_FALSE(sc.map_named("fprop").smooth_rel_dim().has_value());

    const RelClass& a = sc.class_named("A");
    CHECK(a.at("aff").as_laurent() ==
          Laurent::constant(1) + Laurent::lefschetz());

    CHECK_THROWS_AS((void)sc.base("Nope"), DomainError);
    CHECK_THROWS_AS((void)sc.map_named("Nope"), DomainError);
    CHECK_THROWS_AS((void)sc.class_named("Nope"), DomainError);
}

TEST_CASE("a genuinely failing check reports both sides") {
    // An A^1-fibration is not proper: f_* and f_! disagree on it.
    Scenario sc = parse_scenario("base Pt {\n"
                                 "  stratum o dim 0 class pt\n"
                                 "}\n"
                                 "base S {\n"
                                 "  stratum s dim 1 class A(1)\n"
                                 "}\n"
                                 "map f : S -> Pt {\n"
                                 "  s -> o fiber A(1)\n"
                                 "}\n"
                                 "class A over S {\n"
                                 "  s = pt\n"
                                 "}\n"
                                 "check proper_pushforward f A\n");
    CheckResult r = run_check(sc, sc.checks.at(0));
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.detail.empty());
}

TEST_CASE("scenario parse and validation errors") {
    // Unknown identity names are domain errors at check time.
    Scenario sc = parse_scenario("base Pt {\n"
                                 "  stratum o dim 0 class pt\n"
                                 "}\n"
                                 "check no_such_identity Pt\n");
    CHECK_THROWS_AS((void)run_check(sc, sc.checks.at(0)), DomainError);

    // Syntax problems are parse errors with a line number.
    try {
        (void)parse_scenario("base Pt {\n"
                             "  stratum o dim 0\n"
                             "}\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS((void)parse_scenario("base Pt {\n"), ParseError);
    CHECK_THROWS_AS((void)parse_scenario("frobnicate\n"), ParseError);

    // References to undefined names are domain errors.
    CHECK_THROWS_AS((void)parse_scenario("map f : S -> T {\n"
                                         "  a -> b fiber pt\n"
                                         "}\n"),
                    DomainError);
    CHECK_THROWS_AS((void)parse_scenario("class A over S {\n"
                                         "  s = pt\n"
                                         "}\n"),
                    DomainError);

    // Piecewise-triviality violations surface when the map is built.
    CHECK_THROWS_AS((void)parse_scenario("base Pt {\n"
                                         "  stratum o dim 0 class pt\n"
                                         "}\n"
                                         "base S {\n"
                                         "  stratum s dim 1 class A(2)\n"
                                         "}\n"
                                         "map f : S -> Pt {\n"
                                         "  s -> o fiber A(1)\n"
                                         "}\n"),
                    DomainError);
}
