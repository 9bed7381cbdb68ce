#include <doctest.h>

#include <string>

#include <motivic/parser.hpp>

#include "random_gen.hpp"

using namespace motivic;
using testgen::Rng;

TEST_CASE("literals") {
    CHECK(*parse_expr("empty") == *Expr::empty());
    CHECK(*parse_expr("pt") == *Expr::point());
    CHECK(*parse_expr("A(2)") == *Expr::affine(2));
    CHECK(*parse_expr("P(2)") == *Expr::projective(2));
    CHECK(*parse_expr("T(3)") == *Expr::torus(3));
    CHECK(*parse_expr("Gr(2, 4)") == *Expr::grassmannian(2, 4));
    CHECK(*parse_expr("bl(P(2); pt; 2)") ==
          *Expr::blow_up(Expr::projective(2), Expr::point(), 2));
    CHECK(*parse_expr("vb(P(1), 2)") ==
          *Expr::vec_bundle(Expr::projective(1), 2));
    CHECK(*parse_expr("pb(pt, 3)") == *Expr::proj_bundle(Expr::point(), 3));
    CHECK(*parse_expr("sym(X, 2, scn)") ==
          *Expr::symbolic("X", 2, true, true, true));
    CHECK(*parse_expr("sym(U, 1, s)") ==
          *Expr::symbolic("U", 1, true, false, false));
    CHECK(*parse_expr("sym(Z, 0, -)") ==
          *Expr::symbolic("Z", 0, false, false, false));
}

TEST_CASE("precedence and associativity") {
    // \ binds loosest, then +, then *.
    ExprPtr e = parse_expr("P(1) * P(1) \\ A(2)");
    CHECK(*e == *Expr::complement(
                    Expr::product(Expr::projective(1), Expr::projective(1)),
                    Expr::affine(2)));

    CHECK(*parse_expr("pt + pt * pt") ==
          *Expr::disjoint_union(Expr::point(),
                                Expr::product(Expr::point(), Expr::point())));

    // Left associativity.
    CHECK(*parse_expr("pt + pt + pt") ==
          *Expr::disjoint_union(
              Expr::disjoint_union(Expr::point(), Expr::point()),
              Expr::point()));

    // Parentheses override.
    CHECK(*parse_expr("(P(1) \\ pt) * pt") ==
          *Expr::product(Expr::complement(Expr::projective(1), Expr::point()),
                         Expr::point()));
    CHECK(*parse_expr("((pt))") == *Expr::point());
}

TEST_CASE("whitespace and comments are tolerated") {
    CHECK(*parse_expr("  P( 2 )  # trailing comment") ==
          *Expr::projective(2));
    CHECK(*parse_expr("P(1)\n  * # comment\n P(1)") ==
          *Expr::product(Expr::projective(1), Expr::projective(1)));
}

TEST_CASE("syntax errors carry positions") {
    try {
        (void)parse_expr("P(1) *");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() >= 6);
    }
    CHECK_THROWS_AS((void)parse_expr(""), ParseError);
    CHECK_THROWS_AS((void)parse_expr("P(1"), ParseError);
    CHECK_THROWS_AS((void)parse_expr("frob(2)"), ParseError);
    CHECK_THROWS_AS((void)parse_expr("P(x)"), ParseError);
    CHECK_THROWS_AS((void)parse_expr("pt pt"), ParseError);
    CHECK_THROWS_AS((void)parse_expr("sym(X, 1, xyz)"), ParseError);

    try {
        (void)parse_expr("pt *\n  P(1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("semantic violations surface as domain errors") {
    CHECK_THROWS_AS((void)parse_expr("A(-1)"), DomainError);
    CHECK_THROWS_AS((void)parse_expr("bl(P(2); pt; 0)"), DomainError);
    CHECK_THROWS_AS((void)parse_expr("Gr(3, 2)"), DomainError);
    CHECK_THROWS_AS((void)parse_expr("pb(pt, 0)"), DomainError);
    CHECK_THROWS_AS((void)parse_expr("pt \\ P(1)"), DomainError);
}

TEST_CASE("render/parse round trip on fuzzed expressions") {
    Rng rng(83);
    for (int i = 0; i < 500; ++i) {
        ExprPtr e = testgen::random_expr(rng, 3);
        ExprPtr back = parse_expr(e->render());
        CHECK(*back == *e);
        // Rendering is a fixed point after one pass.
        CHECK(back->render() == e->render());
    }
}

TEST_CASE("boundary-data files") {
    SNCData d = parse_snc_file("# a punctured line\n"
                               "interior = A(1)\n"
                               "ambient  = P(1)\n"
                               "levels   = [ P(1), pt ]\n");
    CHECK(*d.interior == *Expr::affine(1));
    CHECK(*d.ambient == *Expr::projective(1));
    CHECK(d.dimension == 1);
    REQUIRE(d.levels.size() == 2);
    CHECK(*d.levels[1] == *Expr::point());

    // The level list may span multiple lines.
    SNCData multi = parse_snc_file("interior = T(1)\n"
                                   "ambient = P(1)\n"
                                   "levels = [\n"
                                   "  P(1),\n"
                                   "  pt + pt\n"
                                   "]\n");
    CHECK(multi.levels.size() == 2);

    // Missing keys and malformed syntax are parse errors...
    CHECK_THROWS_AS((void)parse_snc_file("interior = A(1)\n"), ParseError);
    CHECK_THROWS_AS((void)parse_snc_file("interior = A(1)\n"
                                         "ambient = P(1)\n"
                                         "levels = P(1)\n"),
                    ParseError);
    try {
        (void)parse_snc_file("interior = A(1)\n"
                             "ambient = P(1\n"
                             "levels = [ P(1), pt ]\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        // The unclosed paren is only detected at the next directive.
        CHECK(e.line() >= 2);
    }

    // ...while structurally inconsistent data is a domain error.
    CHECK_THROWS_AS((void)parse_snc_file("interior = A(1)\n"
                                         "ambient = P(2)\n"
                                         "levels = [ P(2), pt ]\n"),
                    DomainError);
}

TEST_CASE("laurent parsing") {
    CHECK(parse_laurent("0").is_zero());
    CHECK(parse_laurent("L^-2 + 3 + 2*L") ==
          Laurent::monomial(-2, 1) + Laurent::constant(3) +
              Laurent::monomial(1, 2));
    CHECK(parse_laurent("-1 + L") ==
          Laurent::monomial(1, 1) - Laurent::constant(1));
    CHECK_THROWS_AS((void)parse_laurent("L^"), ParseError);
    CHECK_THROWS_AS((void)parse_laurent("1 +"), ParseError);
}
