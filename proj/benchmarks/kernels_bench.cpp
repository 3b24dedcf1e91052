#include <benchmark/benchmark.h>

#include "corpus.hpp"
#include "recip/enumerator.hpp"
#include "recip/homology.hpp"
#include "recip/pl_lift.hpp"
#include "recip/reciprocity.hpp"
#include "recip/topology.hpp"

using namespace recip;

namespace {

void BM_DomainGF(benchmark::State& state) {
  const Cone c = corpus::hexagon_cone();
  const FacetSelection sel(c, {0, 2, 4});
  for (auto _ : state) benchmark::DoNotOptimize(domain_gf({sel, Side::remove_delta}));
}
BENCHMARK(BM_DomainGF);

void BM_LatticePoints(benchmark::State& state) {
  const Cone c = corpus::hexagon_cone();
  const FacetSelection sel(c, {0, 2, 4});
  const IntVector w = default_grading(c);
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points({sel, Side::remove_delta}, w, state.range(0)));
}
BENCHMARK(BM_LatticePoints)->Arg(8)->Arg(16)->Arg(32);

void BM_Expand(benchmark::State& state) {
  const Cone c = corpus::hexagon_cone();
  const RationalGF g = domain_gf({FacetSelection(c, {0, 2, 4}), Side::remove_delta});
  const IntVector w = default_grading(c);
  for (auto _ : state) benchmark::DoNotOptimize(expand(g, w, state.range(0)));
}
BENCHMARK(BM_Expand)->Arg(8)->Arg(16);

void BM_ReciprocityCheck(benchmark::State& state) {
  const FacetSelection sel(corpus::pentagon_cone(), {0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(reciprocity_check(sel));
}
BENCHMARK(BM_ReciprocityCheck);

void BM_Homology(benchmark::State& state) {
  const SimplicialComplex sc = state.range(0) == 0 ? corpus::solid_torus() : corpus::genus2_handlebody();
  const FieldSpec f = FieldSpec::rationals();
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(sc, f));
}
BENCHMARK(BM_Homology)->Arg(0)->Arg(1);

void BM_HomologyF2(benchmark::State& state) {
  const SimplicialComplex sc = corpus::genus2_handlebody();
  const FieldSpec f = FieldSpec::prime(2);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(sc, f));
}
BENCHMARK(BM_HomologyF2);

void BM_CohenMacaulay(benchmark::State& state) {
  const SimplicialComplex sc = corpus::projective_plane();
  for (auto _ : state) benchmark::DoNotOptimize(is_cohen_macaulay(sc, FieldSpec::prime(2)));
}
BENCHMARK(BM_CohenMacaulay);

void BM_Lift(benchmark::State& state) {
  const EmbeddedComplex k = corpus::two_triangles_plane();
  for (auto _ : state) benchmark::DoNotOptimize(lift(k));
}
BENCHMARK(BM_Lift);

}  // namespace

BENCHMARK_MAIN();
