#include <benchmark/benchmark.h>

#include "skein/chebyshev.hpp"
#include "skein/invariants.hpp"
#include "skein/skein_expr.hpp"
#include "skein/sphere_rep.hpp"
#include "skein/torus_rep.hpp"
#include "skein/uniqueness.hpp"

namespace {

using namespace skein;

TorusParams<BigComplex> torus_params(const NumericRootSystem& rs) {
  const BigComplex x3(1.2, 0.3, rs.precision_bits());
  const BigComplex p(0.5, 0.1, rs.precision_bits());
  const BigComplex u(0.7, -0.4, rs.precision_bits());
  return torus_params_from_family(rs, x3, p, u);
}

SphereParams<BigComplex> sphere_params(const NumericRootSystem& rs) {
  const long prec = rs.precision_bits();
  const std::array<BigComplex, 4> p{BigComplex(0.5, 0.2, prec), BigComplex(-1.0, 0.7, prec),
                                    BigComplex(1.5, -0.3, prec), BigComplex(0.1, 0.4, prec)};
  return make_sphere_params(rs, p, BigComplex(1.1, 0.2, prec), rs.zero(), rs.zero());
}

void BM_ChebyshevMatrix(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto rs = make_numeric_root_system(N);
  const auto rep = build_torus_rep(rs, torus_params(rs));
  for (auto _ : state) benchmark::DoNotOptimize(chebyshev_eval(rs, N, rep.at("X1")));
}
BENCHMARK(BM_ChebyshevMatrix)->Arg(3)->Arg(7)->Arg(15)->Arg(31);

void BM_BuildTorus(benchmark::State& state) {
  const auto rs = make_numeric_root_system(static_cast<int>(state.range(0)));
  const auto params = torus_params(rs);
  for (auto _ : state) benchmark::DoNotOptimize(build_torus_rep(rs, params));
}
BENCHMARK(BM_BuildTorus)->Arg(3)->Arg(7)->Arg(15)->Arg(31);

void BM_BuildTorusExact(benchmark::State& state) {
  const auto rs = make_exact_root_system(static_cast<int>(state.range(0)));
  const auto params = torus_params_from_family(rs, rs.from_int(2) + rs.A(), rs.from_int(3), rs.from_int(5) - rs.A());
  for (auto _ : state) benchmark::DoNotOptimize(build_torus_rep(rs, params));
}
BENCHMARK(BM_BuildTorusExact)->Arg(3)->Arg(5)->Arg(7);

void BM_VerifyTorus(benchmark::State& state) {
  const auto rs = make_numeric_root_system(static_cast<int>(state.range(0)));
  const auto rep = build_torus_rep(rs, torus_params(rs));
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(rs, rep));
}
BENCHMARK(BM_VerifyTorus)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BuildSphere(benchmark::State& state) {
  const auto rs = make_numeric_root_system(static_cast<int>(state.range(0)));
  auto params = sphere_params(rs);
  const auto seed = build_sphere_rep_with_u(rs, params, BigComplex(0.8, -0.6, rs.precision_bits()));
  const auto inv = extract_invariants(rs, seed);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_sphere_rep(rs, params.p, inv.t.at("X1"), inv.t.at("X2"), inv.t.at("X3")));
  }
}
BENCHMARK(BM_BuildSphere)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SphereLadderScalars(benchmark::State& state) {
  const auto rs = make_numeric_root_system(static_cast<int>(state.range(0)));
  const auto params = sphere_params(rs);
  for (auto _ : state) benchmark::DoNotOptimize(ladder_scalars_sphere(rs, params));
}
BENCHMARK(BM_SphereLadderScalars)->Arg(3)->Arg(7)->Arg(15);

void BM_NormalizeWord(benchmark::State& state) {
  const LaurentRing ring;
  const RewriteSystem<LaurentRing> rw(ring, Surface::torus1());
  std::string text;
  for (int i = 0; i < state.range(0); ++i) text += i % 3 == 0 ? "X3 " : i % 3 == 1 ? "X2 " : "X1 ";
  const auto e = parse(text, Surface::torus1());
  for (auto _ : state) benchmark::DoNotOptimize(normalize(e, rw));
}
BENCHMARK(BM_NormalizeWord)->Arg(4)->Arg(8)->Arg(12);

void BM_IntertwinerSearch(benchmark::State& state) {
  const auto rs = make_numeric_root_system(static_cast<int>(state.range(0)));
  const auto params = torus_params(rs);
  const auto variants = gauge_orbit(rs, params);
  const auto a = build_torus_rep(rs, variants.front());
  const auto b = build_torus_rep(rs, variants.back());
  for (auto _ : state) benchmark::DoNotOptimize(intertwiner_search(rs, a, b));
}
BENCHMARK(BM_IntertwinerSearch)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
