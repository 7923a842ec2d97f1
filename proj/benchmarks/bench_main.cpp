#include <benchmark/benchmark.h>

#include "weylcalc/hull_oracle.hpp"
#include "weylcalc/momentum.hpp"
#include "weylcalc/tensor.hpp"

using namespace weylcalc;

namespace {

void BM_NormHullMembership(benchmark::State& state) {
    Weight lambda = Weight::from_values({3, 1, -2});
    RationalWeight mu;
    mu.set(0, Rat(2));
    mu.set(1, Rat(1));
    mu.set(2, Rat(-1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(in_norm_hull(mu, lambda));
    }
}
BENCHMARK(BM_NormHullMembership);

void BM_HullOracleLP(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Weight lambda = Weight::from_values({3, 1, -2});
    AmbientVector lam = embed(lambda, n);
    AmbientVector mu(n, Rat(0));
    mu[0] = Rat(1);
    mu[1] = Rat(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hull_member_bruteforce(mu, lam));
    }
}
BENCHMARK(BM_HullOracleLP)->Arg(4)->Arg(5)->Arg(6);

void BM_PolytopeVertices(benchmark::State& state) {
    Weight lambda = Weight::from_values({2, 1, -1});
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(polytope_vertices(lambda, n));
    }
}
BENCHMARK(BM_PolytopeVertices)->Arg(3)->Arg(4);

void BM_SeparatingVector(benchmark::State& state) {
    Weight lambda = Weight::from_values({3, 2, -1, -1});
    Weight mu = Weight::from_values({3, 1, 1, -2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(separating_vector(lambda, mu));
    }
}
BENCHMARK(BM_SeparatingVector);

void BM_SchurWeylDecompose(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int k = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(schur_weyl_decompose(n, k));
    }
}
BENCHMARK(BM_SchurWeylDecompose)->Args({2, 3})->Args({3, 4})->Args({4, 4});

void BM_IsotypicProjector(benchmark::State& state) {
    Partition lambda({3, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(isotypic_projector(lambda, 5));
    }
}
BENCHMARK(BM_IsotypicProjector);

void BM_WeakstarDistance(benchmark::State& state) {
    Weight lambda = Weight::from_values({3, 2, 1});
    Weight mu = Weight::from_values({3, 2});
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(weakstar_distance(mu, lambda, n));
    }
}
BENCHMARK(BM_WeakstarDistance)->Arg(4)->Arg(6);

void BM_MomentumMembership(benchmark::State& state) {
    Weight lambda = Weight::from_values({2, 1, -1});
    Matrix u = Matrix::identity(4);
    u.at(0, 0) = GaussianRat(Rat(3, 5));
    u.at(0, 1) = GaussianRat(Rat(4, 5));
    u.at(1, 0) = GaussianRat(Rat(-4, 5));
    u.at(1, 1) = GaussianRat(Rat(3, 5));
    Matrix t = u * d_lambda(lambda, 4) * u.adjoint();
    for (auto _ : state) {
        benchmark::DoNotOptimize(in_norm_momentum_set_matrix(t, lambda));
    }
}
BENCHMARK(BM_MomentumMembership);

}  // namespace

BENCHMARK_MAIN();
