#include <doctest.h>

#include <motivic/motivic_class.hpp>

#include "random_gen.hpp"

using namespace motivic;
using testgen::Rng;

namespace {

Laurent L(int e = 1, int c = 1) { return Laurent::monomial(e, c); }

} // namespace

TEST_CASE("point is the unit and additive identities hold") {
    auto reg = make_registry();
    GeneratorId x = reg->intern("X", 2, true, true, true);
    MotivicClass cx = MotivicClass::generator(reg, x);

    CHECK(cx + MotivicClass::zero(reg) == cx);
    CHECK(cx * MotivicClass::unit(reg) == cx);
    CHECK((cx + (-cx)).is_zero());

    // L*point + 1*point merges like terms.
    MotivicClass sum = MotivicClass::scalar(reg, L()) +
                       MotivicClass::unit(reg);
    CHECK(sum == MotivicClass::scalar(reg, L() + Laurent::constant(1)));
}

TEST_CASE("multiplication of L-pure classes matches Laurent arithmetic") {
    auto reg = make_registry();
    Laurent a = Laurent::constant(1) + L();
    Laurent b = L() - Laurent::constant(1);
    MotivicClass prod =
        MotivicClass::scalar(reg, a) * MotivicClass::scalar(reg, b);
    CHECK(prod == MotivicClass::scalar(reg, a * b));
    CHECK(prod.as_laurent() == L(2) - Laurent::constant(1));
}

TEST_CASE("formal product generators") {
    auto reg = make_registry();
    GeneratorId g = reg->intern("G", 2, true, true, true);
    GeneratorId h = reg->intern("H", 3, true, false, true);
    MotivicClass prod =
        MotivicClass::generator(reg, g) * MotivicClass::generator(reg, h);

    REQUIRE(prod.coefficients().size() == 1);
    const GeneratorInfo& info =
        reg->info(prod.coefficients().begin()->first);
    CHECK(info.dimension == 5);
    CHECK(info.smooth);
    CHECK_FALSE(info.complete);
    CHECK(info.name == "G.H");

    // Order independent.
    CHECK(MotivicClass::generator(reg, h) * MotivicClass::generator(reg, g) ==
          prod);
}

TEST_CASE("declared product reductions are used") {
    auto reg = make_registry();
    GeneratorId c = reg->intern("Conic", 1, true, true, true);
    // Declare Conic * Conic = (1+L)^2 * point, say.
    Laurent sq = (Laurent::constant(1) + L()) * (Laurent::constant(1) + L());
    reg->declare_product(c, c, {{reg->point(), sq}});
    MotivicClass prod =
        MotivicClass::generator(reg, c) * MotivicClass::generator(reg, c);
    CHECK(prod == MotivicClass::scalar(reg, sq));
}

TEST_CASE("registry mismatch is rejected") {
    auto reg1 = make_registry();
    auto reg2 = make_registry();
    MotivicClass a = MotivicClass::unit(reg1);
    MotivicClass b = MotivicClass::unit(reg2);
    CHECK_THROWS_AS((void)(a + b), DomainError);
    CHECK_THROWS_AS((void)(a * b), DomainError);
}

TEST_CASE("L is invertible") {
    auto reg = make_registry();
    MotivicClass l = MotivicClass::scalar(reg, L());
    MotivicClass linv = MotivicClass::scalar(reg, L(-1));
    CHECK(l * linv == MotivicClass::unit(reg));
}

TEST_CASE("duplicate generator names need matching metadata") {
    auto reg = make_registry();
    GeneratorId x = reg->intern("X", 2, true, true, true);
    CHECK(reg->intern("X", 2, true, true, true) == x);
    CHECK_THROWS_AS(reg->intern("X", 3, true, true, true), DomainError);
}

TEST_CASE("realizations") {
    auto reg = make_registry();
    Laurent p2 = Laurent::constant(1) + L() + L(2);
    MotivicClass c = MotivicClass::scalar(reg, p2);
    CHECK(c.realize(Measure::Euler) == 3);
    CHECK(c.realize(Measure::PointCount, 4) == 21);
    CHECK(MotivicClass::scalar(reg, L() - Laurent::constant(1))
              .realize(Measure::Euler) == 0);
}

TEST_CASE("realizing a non-L-pure class names the offenders") {
    auto reg = make_registry();
    GeneratorId x = reg->intern("Mystery", 2, true, true, true);
    MotivicClass c = MotivicClass::generator(reg, x) + MotivicClass::unit(reg);
    CHECK_FALSE(c.is_L_pure());
    try {
        (void)c.realize(Measure::Euler);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("Mystery") != std::string::npos);
    }
}

TEST_CASE("commutative ring axioms on random mixed classes") {
    auto reg = make_registry();
    auto pool = testgen::symbolic_pool(reg, 4);
    Rng rng(23);
    MotivicClass one = MotivicClass::unit(reg);
    for (int i = 0; i < 300; ++i) {
        MotivicClass a = testgen::random_mixed_class(rng, reg, pool);
        MotivicClass b = testgen::random_mixed_class(rng, reg, pool);
        MotivicClass c = testgen::random_mixed_class(rng, reg, pool);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * one == a);
    }
}

TEST_CASE("realizations are ring homomorphisms on L-pure classes") {
    auto reg = make_registry();
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        MotivicClass a = testgen::random_pure_class(rng, reg);
        MotivicClass b = testgen::random_pure_class(rng, reg);
        CHECK((a * b).realize(Measure::Euler) ==
              a.realize(Measure::Euler) * b.realize(Measure::Euler));
        CHECK((a + b).realize(Measure::PointCount, 3) ==
              a.realize(Measure::PointCount, 3) +
                  b.realize(Measure::PointCount, 3));
    }
}

TEST_CASE("stable rendering") {
    auto reg = make_registry();
    GeneratorId x = reg->intern("X", 2, true, true, true);
    MotivicClass c = MotivicClass::scalar(reg, L() + Laurent::constant(1)) +
                     MotivicClass::generator(reg, x) * L(2);
    CHECK(c.to_string() == "(1 + L) + (L^2)*X");
    CHECK(MotivicClass::zero(reg).to_string() == "0");
    CHECK(MotivicClass::generator(reg, x).to_string() == "X");
}
