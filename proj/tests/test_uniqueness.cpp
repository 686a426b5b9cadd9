#include <gtest/gtest.h>

#include <random>

#include "skein/linalg.hpp"
#include "skein/uniqueness.hpp"
#include "support.hpp"

namespace skein {
namespace {

struct Built {
  TorusParams<BigComplex> params;
  Representation<BigComplex> rep;
  test::TorusDraw draw;
};

Built torus(const NumericRootSystem& rs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Built b;
  b.draw = test::draw_torus(rs, rng);
  b.params = torus_params_from_shadow(rs, b.draw.t1, b.draw.t2, b.draw.t3, b.draw.p);
  b.rep = build_torus_rep(rs, b.params);
  return b;
}

TEST(Intertwiner, SelfIsIdentity) {
  const auto rs = make_numeric_root_system(3);
  const auto b = torus(rs, 1);
  const auto search = intertwiner_search(rs, b.rep, b.rep);
  ASSERT_TRUE(search.certificate.has_value());
  EXPECT_EQ(search.solution_dimension, 1u);
  const auto id = Matrix<BigComplex>::identity(3, rs.zero(), rs.one());
  EXPECT_LT(max_abs(search.certificate->intertwiner - id), 1e-50);
  EXPECT_LT(search.certificate->max_residual, 1e-50);
  EXPECT_TRUE(to_json(*search.certificate).contains("condition"));
}

TEST(Intertwiner, RecoversConjugator) {
  const auto rs = make_numeric_root_system(3);
  const auto b = torus(rs, 2);
  std::mt19937_64 rng(3);
  Matrix<BigComplex> g(3, 3, rs.zero());
  for (auto& x : g.data()) x = test::annulus_point(rng, 256, 0.2, 1.0);
  for (std::size_t i = 0; i < 3; ++i) g(i, i) += rs.from_int(3);
  const auto conj = conjugate(b.rep, g, *inverse(rs, g));
  const auto search = intertwiner_search(rs, b.rep, conj);
  ASSERT_TRUE(search.certificate.has_value());
  const auto& m = search.certificate->intertwiner;
  const BigComplex ratio = m(0, 0) / g(0, 0);
  EXPECT_LT(max_abs(m - g * ratio), 1e-50);
}

TEST(Intertwiner, DifferentPunctureHasNone) {
  const auto rs = make_numeric_root_system(3);
  const auto b = torus(rs, 4);
  for (const auto& other : b.draw.p_choices) {
    if (rs.approx_eq(other, b.draw.p)) continue;
    const auto rep2 = build_torus_rep(rs, torus_params_from_shadow(rs, b.draw.t1, b.draw.t2, b.draw.t3, other));
    const auto search = intertwiner_search(rs, b.rep, rep2);
    EXPECT_EQ(search.solution_dimension, 0u);
    EXPECT_FALSE(search.certificate.has_value());
  }
}

TEST(Intertwiner, MismatchedSurfaces) {
  const auto rs = make_numeric_root_system(3);
  const auto b = torus(rs, 5);
  std::mt19937_64 rng(6);
  const auto s = build_sphere_rep_with_u(rs, test::draw_sphere_params(rs, rng), rs.one());
  EXPECT_THROW(intertwiner_search(rs, b.rep, s), SkeinError);
}

TEST(GaugeOrbit, SizeAndInvariance) {
  const auto rs = make_numeric_root_system(3);
  const auto b = torus(rs, 7);
  const auto orbit = gauge_orbit(rs, b.params);
  ASSERT_EQ(orbit.size(), 6u);
  for (const auto& v : orbit) {
    EXPECT_LT(test::rel_diff(rs.pow(v.x3, 3) + rs.pow(v.x3, -3), b.params.t3), 1e-60);
    EXPECT_TRUE(rs.approx_eq(v.t1, b.params.t1));
  }
}

TEST(GaugeOrbit, VariantsAreIsomorphicAndCertificatesCompose) {
  const auto rs = make_numeric_root_system(3);
  const auto b = torus(rs, 8);
  std::vector<Representation<BigComplex>> reps;
  for (const auto& v : gauge_orbit(rs, b.params)) reps.push_back(build_torus_rep(rs, v));
  std::vector<Matrix<BigComplex>> from_first;
  for (const auto& r : reps) {
    const auto search = intertwiner_search(rs, reps[0], r);
    ASSERT_TRUE(search.certificate.has_value());
    EXPECT_LT(search.certificate->max_residual, 1e-40);
    from_first.push_back(search.certificate->intertwiner);
  }
  // M_{1->2} M_{0->1} intertwines 0 -> 2.
  const auto m12 = intertwiner_search(rs, reps[1], reps[2]).certificate->intertwiner;
  const auto composed = m12 * from_first[1];
  for (const auto& name : reps[0].surface.generator_names()) {
    const auto lhs = composed * reps[0].at(name);
    const auto rhs = reps[2].at(name) * composed;
    EXPECT_LT(max_abs(lhs - rhs), 1e-40 * std::max(1.0, max_abs(lhs)));
  }
  // Schur: the composed map is a multiple of the direct certificate.
  std::size_t at = 0;
  for (std::size_t i = 0; i < composed.data().size(); ++i) {
    if (composed.data()[i].magnitude() > composed.data()[at].magnitude()) at = i;
  }
  const BigComplex ratio = composed.data()[at] / from_first[2].data()[at];
  EXPECT_LT(max_abs(composed - from_first[2] * ratio), 1e-40 * max_abs(composed));
}

TEST(Genericity, TorusExceptionalPatterns) {
  const auto rs = make_numeric_root_system(3);
  const std::vector<BigComplex> none;
  const auto zero = genericity_check(rs, Surface::torus1(), {rs.zero(), rs.zero(), rs.zero()}, none);
  EXPECT_FALSE(zero.flag("t1 t2 t3 + t1^2 + t2^2 != 0"));
  EXPECT_TRUE(zero.flag("exceptional: all t_i = 0"));
  EXPECT_FALSE(zero.generic);
  const auto two = rs.from_int(2);
  const auto twos = genericity_check(rs, Surface::torus1(), {two, two, two}, none);
  EXPECT_TRUE(twos.flag("exceptional: all t_i = +-2"));
  EXPECT_FALSE(twos.flag("t3 != +-2"));
  EXPECT_FALSE(twos.generic_up_to_reindexing);
  std::mt19937_64 rng(9);
  const auto d = test::draw_torus(rs, rng);
  const auto gen = genericity_check(rs, Surface::torus1(), {d.t1, d.t2, d.t3}, none);
  EXPECT_TRUE(gen.generic);
  EXPECT_TRUE(gen.generic_up_to_reindexing);
  EXPECT_TRUE(gen.to_json().at("generic").get<bool>());
}

TEST(Genericity, SphereConventions) {
  const auto rs = make_numeric_root_system(3);
  std::mt19937_64 rng(10);
  const auto params = test::draw_sphere_params(rs, rng);
  const std::vector<BigComplex> p(params.p.begin(), params.p.end());
  const auto report = genericity_check(rs, Surface::sphere4(), {params.t1, params.t2, params.t3}, p);
  EXPECT_TRUE(report.flag("t3 != +-2"));
  EXPECT_TRUE(report.flag("t3 != T_N(r_i) for all i"));
  EXPECT_TRUE(report.generic);
}

TEST(Experiment, SmallRunsPassAndAreDeterministic) {
  for (const Surface& s : {Surface::torus1(), Surface::torus0(), Surface::sphere4()}) {
    ExperimentConfig cfg;
    cfg.surface = s;
    cfg.N = 3;
    cfg.samples = 2;
    cfg.seed = 77;
    const auto a = uniqueness_experiment(cfg);
    EXPECT_TRUE(a.pass) << to_string(s) << " " << to_json(a).dump();
    EXPECT_EQ(a.failures, 0);
    ASSERT_EQ(a.records.size(), 2u);
    EXPECT_EQ(a.records[0].variants, 6);
    const auto b = uniqueness_experiment(cfg);
    EXPECT_EQ(a, b);
    EXPECT_EQ(experiment_report_from_json(nlohmann::json::parse(to_json(a).dump())), a);
  }
}

}  // namespace
}  // namespace skein
