#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <motivic/duality.hpp>
#include <motivic/parser.hpp>

#include "random_gen.hpp"

using namespace motivic;
using testgen::Rng;

namespace {

Laurent L(int e = 1, int c = 1) { return Laurent::monomial(e, c); }
Laurent one() { return Laurent::constant(1); }

std::string slurp(const std::string& rel) {
    std::ifstream in(std::string(MOTIVIC_TEST_DATA_DIR) + "/" + rel);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SNCData load_snc(const std::string& stem) {
    return parse_snc_file(slurp("snc/" + stem + ".snc"));
}

SNCData complete_data(ExprPtr x) {
    SNCData d;
    d.interior = x;
    d.ambient = x;
    d.dimension = x->dimension();
    d.levels = {x};
    return d;
}

} // namespace

TEST_CASE("duals of the standard classes") {
    auto reg = make_registry();
    // D([P^2]) = L^-2 + L^-1 + 1.
    CHECK(dual_k(class_of(Expr::projective(2), reg)).as_laurent() ==
          L(-2) + L(-1) + one());
    // D(L) = L^-1, D(1) = 1.
    CHECK(dual_k(MotivicClass::scalar(reg, L())).as_laurent() == L(-1));
    CHECK(dual_k(MotivicClass::unit(reg)) == MotivicClass::unit(reg));
    // Symbolic: D([X]) = L^-dim * [X] for smooth complete connected X.
    GeneratorId x = reg->intern("X", 3, true, true, true);
    CHECK(dual_k(MotivicClass::generator(reg, x)) ==
          MotivicClass::generator(reg, x) * L(-3));
}

TEST_CASE("dual rejects non-dualizable supports") {
    auto reg = make_registry();
    GeneratorId open = reg->intern("Open", 2, true, false, true);
    try {
        (void)dual_k(MotivicClass::generator(reg, open));
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("Open") != std::string::npos);
    }
}

TEST_CASE("dual is an involutive ring homomorphism") {
    auto reg = make_registry();
    auto pool = testgen::symbolic_pool(reg, 4);
    Rng rng(67);
    for (int i = 0; i < 200; ++i) {
        MotivicClass a = testgen::random_dualizable_class(rng, reg, pool);
        MotivicClass b = testgen::random_dualizable_class(rng, reg, pool);
        CHECK(dual_k(dual_k(a)) == a);
        CHECK(dual_k(a * b) == dual_k(a) * dual_k(b));
        CHECK(dual_k(a + b) == dual_k(a) + dual_k(b));
    }
}

TEST_CASE("chi of the bundled boundary data") {
    auto reg = make_registry();
    // chi(A^n) = 1.
    for (const char* stem : {"a1_p1", "a2_p2", "a2_p1xp1", "a3_p3", "a4_p4"})
        CHECK(chi_ordinary(load_snc(stem), reg) == MotivicClass::unit(reg));
    // chi(T^n) = (1 - L)^n.
    CHECK(chi_ordinary(load_snc("t1_p1"), reg).as_laurent() == one() - L());
    CHECK(chi_ordinary(load_snc("t2_p1xp1"), reg).as_laurent() ==
          (one() - L()) * (one() - L()));
    CHECK(chi_ordinary(load_snc("t3_p1cube"), reg).as_laurent() ==
          (one() - L()) * (one() - L()) * (one() - L()));
    // chi(A^1 x T^1) = 1 - L.
    CHECK(chi_ordinary(load_snc("a1xt1_p1xp1"), reg).as_laurent() ==
          one() - L());
    // Complete interiors: chi is the class itself.
    CHECK(chi_ordinary(load_snc("p2_complete"), reg).as_laurent() ==
          one() + L() + L(2));
    CHECK(chi_ordinary(load_snc("gr24_complete"), reg).as_laurent() ==
          one() + L() + L(2, 2) + L(3) + L(4));
}

TEST_CASE("chi agrees with the dual side on every bundled file") {
    auto reg = make_registry();
    for (const char* stem :
         {"a1_p1", "a2_p2", "a2_p1xp1", "a3_p3", "a4_p4", "t1_p1",
          "t2_p1xp1", "t3_p1cube", "p2_minus_line", "a1xt1_p1xp1",
          "p2_complete", "gr24_complete"}) {
        SNCData d = load_snc(stem);
        PrespaarResult r = verify_prespaar(d, reg);
        INFO(stem << ": " << r.diagnostic());
        CHECK(r.ok);
        CHECK(r.chi_side == r.dual_side);
    }
}

TEST_CASE("Gysin: removing a smooth divisor costs L times its chi") {
    auto reg = make_registry();
    // P^2 minus a line: chi = chi(P^2) - L * chi(P^1) = 1.
    SNCData d = load_snc("p2_minus_line");
    MotivicClass chi_open = chi_ordinary(d, reg);
    MotivicClass chi_p2 = class_of(Expr::projective(2), reg);
    MotivicClass chi_p1 = class_of(Expr::projective(1), reg);
    CHECK(chi_open == chi_p2 - chi_p1 * L());
    CHECK(chi_open.as_laurent() == one());

    // Same pattern for A^1 = P^1 minus a point.
    CHECK(chi_ordinary(load_snc("a1_p1"), reg) ==
          class_of(Expr::projective(1), reg) - MotivicClass::unit(reg) * L());
}

TEST_CASE("chi of a complete variety is its class") {
    auto reg = make_registry();
    Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        ExprPtr x = Expr::symbolic("W" + std::to_string(i),
                                   rng.uniform(0, 4), true, true, true);
        SNCData d = complete_data(x);
        CHECK(chi_ordinary(d, reg) == class_of(x, reg));
        CHECK(verify_prespaar(d, reg).ok);
    }
    CHECK(verify_prespaar(complete_data(Expr::projective(3)), reg).ok);
}

TEST_CASE("pair classes") {
    auto reg = make_registry();
    SNCData p1 = complete_data(Expr::projective(1));
    SNCData pt = complete_data(Expr::point());

    // chi(X, X) = 0 and chi(X, empty-boundary analogue) via equal data.
    CHECK(pair_chi(p1, p1, reg).is_zero());
    // chi(P^1, pt) = (1 + L) - 1 = L.
    CHECK(pair_chi(p1, pt, reg).as_laurent() == L());
    // Mixed: chi(P^1, A^1) = (1 + L) - 1 = L as well.
    CHECK(pair_chi(p1, load_snc("a1_p1"), reg).as_laurent() == L());
}

TEST_CASE("malformed boundary data is rejected") {
    auto reg = make_registry();

    SNCData d;
    d.interior = Expr::affine(1);
    d.ambient = Expr::projective(1);
    d.dimension = 1;
    d.levels = {Expr::projective(1), Expr::point()};
    d.validate(); // the well-formed baseline

    // levels[0] must be the ambient space.
    SNCData bad = d;
    bad.levels[0] = Expr::projective(2);
    CHECK_THROWS_AS(bad.validate(), DomainError);

    // Level l must have pure dimension n - l.
    bad = d;
    bad.levels[1] = Expr::projective(1);
    CHECK_THROWS_AS(bad.validate(), DomainError);

    // The ambient space must be complete.
    bad = d;
    bad.ambient = Expr::affine(1);
    bad.levels[0] = Expr::affine(1);
    CHECK_THROWS_AS(bad.validate(), DomainError);

    // The interior must be connected.
    bad = d;
    bad.interior = Expr::disjoint_union(Expr::point(), Expr::point());
    bad.dimension = 0;
    bad.levels = {bad.interior};
    CHECK_THROWS_AS(bad.validate(), DomainError);

    // At most n + 1 levels.
    bad = d;
    bad.levels = {Expr::projective(1), Expr::point(), Expr::empty()};
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
