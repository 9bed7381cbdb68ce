#include <benchmark/benchmark.h>

#include <motivic/motivic.hpp>

using namespace motivic;

namespace {

Laurent dense_laurent(int lo, int hi) {
    Laurent p;
    for (int e = lo; e <= hi; ++e)
        p += Laurent::monomial(e, e * e + 1);
    return p;
}

void BM_laurent_mul(benchmark::State& state) {
    const int half = static_cast<int>(state.range(0));
    Laurent a = dense_laurent(-half, half);
    Laurent b = dense_laurent(-half, half);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_laurent_mul)->Arg(8)->Arg(32)->Arg(128);

void BM_gaussian_binomial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gaussian_binomial(n / 2, n));
}
BENCHMARK(BM_gaussian_binomial)->Arg(10)->Arg(20)->Arg(40);

void BM_nested_blow_up(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    // Iteratively blow up points of a growing symbolic ambient.
    ExprPtr x = Expr::symbolic("X", depth + 2, true, true, true);
    ExprPtr e = x;
    for (int i = 0; i < depth; ++i)
        e = Expr::blow_up(Expr::product(e, Expr::projective(1)),
                          Expr::point(), e->dimension() + 1);
    for (auto _ : state) {
        auto reg = make_registry();
        benchmark::DoNotOptimize(class_of(e, reg));
    }
}
BENCHMARK(BM_nested_blow_up)->Arg(2)->Arg(4)->Arg(8);

void BM_chi_torus(benchmark::State& state) {
    // chi of T^3 sitting in (P^1)^3, rebuilt each iteration.
    ExprPtr p1 = Expr::projective(1);
    ExprPtr cube = Expr::product(Expr::product(p1, p1), p1);
    SNCData d;
    d.interior = Expr::torus(3);
    d.ambient = cube;
    d.dimension = 3;
    ExprPtr face = Expr::product(p1, p1);
    ExprPtr face6 = Expr::disjoint_union(
        Expr::disjoint_union(Expr::disjoint_union(face, face),
                             Expr::disjoint_union(face, face)),
        Expr::disjoint_union(face, face));
    ExprPtr edge12 = p1;
    for (int i = 1; i < 12; ++i)
        edge12 = Expr::disjoint_union(edge12, p1);
    ExprPtr vert8 = Expr::point();
    for (int i = 1; i < 8; ++i)
        vert8 = Expr::disjoint_union(vert8, Expr::point());
    d.levels = {cube, face6, edge12, vert8};
    for (auto _ : state) {
        auto reg = make_registry();
        benchmark::DoNotOptimize(verify_prespaar(d, reg).ok);
    }
}
BENCHMARK(BM_chi_torus);

void BM_six_ops_round(benchmark::State& state) {
    auto reg = make_registry();
    auto pt = std::make_shared<Base>(
        "Pt", std::vector<Stratum>{{"o", 0, MotivicClass::unit(reg)}});
    std::vector<Stratum> strata;
    std::map<std::string, std::string> assign;
    std::map<std::string, MotivicClass> fibers;
    const int n = static_cast<int>(state.range(0));
    for (int i = 0; i < n; ++i) {
        const std::string id = "s" + std::to_string(i);
        MotivicClass fiber =
            MotivicClass::scalar(reg, Laurent::monomial(i % 3, i + 1));
        strata.push_back({id, i % 3, fiber});
        assign[id] = "o";
        fibers[id] = fiber;
    }
    auto src = std::make_shared<Base>("S", std::move(strata));
    StratMap f("f", src, pt, std::move(assign), std::move(fibers));
    RelClass a = RelClass::unit(src, reg);
    RelClass b(pt, {{"o", MotivicClass::scalar(reg, dense_laurent(-2, 2))}});
    for (auto _ : state) {
        RelClass lhs = push_shriek(f, tensor(pull_star(f, b), a));
        benchmark::DoNotOptimize(lhs == tensor(b, push_shriek(f, a)));
    }
}
BENCHMARK(BM_six_ops_round)->Arg(4)->Arg(16)->Arg(64);

} // namespace

BENCHMARK_MAIN();
