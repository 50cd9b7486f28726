#include <benchmark/benchmark.h>

#include "isonet/generators.hpp"
#include "isonet/koenigs.hpp"
#include "isonet/spaceform.hpp"

using namespace isonet;

namespace {

constexpr double kAlpha = 0.5;

SpaceFormNet torus(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  return clifford_torus(TorusSpec::random_steps(kAlpha, size, size, 1));
}

void BM_FaceCurvatures(benchmark::State& state) {
  const SpaceFormNet t = torus(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(face_curvatures(t.s, t.normals, t.sf));
  }
  state.SetItemsProcessed(state.iterations() * t.s.m_faces() * t.s.n_faces());
}

void BM_KoenigsTest(benchmark::State& state) {
  const SpaceFormNet t = torus(state);
  for (auto _ : state) benchmark::DoNotOptimize(koenigs_test(t.s));
  state.SetItemsProcessed(state.iterations() * t.s.m_faces() * t.s.n_faces());
}

void BM_MoutardLift(benchmark::State& state) {
  const SpaceFormNet t = torus(state);
  for (auto _ : state) benchmark::DoNotOptimize(moutard_lift(t.s));
  state.SetItemsProcessed(state.iterations() * t.s.m_faces() * t.s.n_faces());
}

void BM_DualizeTwice(benchmark::State& state) {
  const SpaceFormNet t = torus(state);
  for (auto _ : state) benchmark::DoNotOptimize(dualize_twice(t.s));
}

void BM_SphereCongruence(benchmark::State& state) {
  const SpaceFormNet t = torus(state);
  for (auto _ : state) {
    const CurvatureReport c = face_curvatures(t.s, t.normals, t.sf);
    benchmark::DoNotOptimize(mean_curvature_sphere(t.s, t.normals, c, t.sf));
  }
}

}  // namespace

BENCHMARK(BM_FaceCurvatures)->Arg(12)->Arg(48)->Arg(192);
BENCHMARK(BM_KoenigsTest)->Arg(12)->Arg(48)->Arg(192);
BENCHMARK(BM_MoutardLift)->Arg(12)->Arg(48)->Arg(192);
BENCHMARK(BM_DualizeTwice)->Arg(12)->Arg(48);
BENCHMARK(BM_SphereCongruence)->Arg(12)->Arg(48);
BENCHMARK_MAIN();
