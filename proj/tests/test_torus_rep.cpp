#include <gtest/gtest.h>

#include <random>

#include "skein/torus_rep.hpp"
#include "support.hpp"

namespace skein {
namespace {

TEST(TorusParams, CanonicalX3SolvesT3) {
  std::mt19937_64 rng(1);
  for (int N : {3, 5}) {
    const auto rs = make_numeric_root_system(N);
    for (int i = 0; i < 5; ++i) {
      const BigComplex a = test::annulus_point(rng, 256, 1.1, 2.0);
      const BigComplex t3 = rs.pow(a, N) + rs.pow(a, -N);
      const BigComplex t1 = test::joukowski(rs, rng);
      const BigComplex t2 = test::joukowski(rs, rng);
      const BigComplex k = t1 * t2 * t3 + t1 * t1 + t2 * t2;
      const BigComplex p = solve_chebyshev(rs, rs.from_int(2) - k - t3 * t3).values.front();
      const auto params = torus_params_from_shadow(rs, t1, t2, t3, p);
      EXPECT_LT(test::rel_diff(rs.pow(params.x3, N) + rs.pow(params.x3, -N), t3), 1e-60);
      double best = 1.0;
      for (int l = 1; l <= N; ++l) best = std::min(best, test::rel_diff(params.x3, a * rs.a_pow(2L * l)));
      EXPECT_LT(best, 1e-60);
    }
  }
}

TEST(TorusParams, Errors) {
  const auto rs = make_numeric_root_system(3);
  const BigComplex t(0.3, 0.2, 256);
  try {
    torus_params_from_shadow(rs, t, t, rs.from_int(2), t);
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateShadow);
  }
  try {
    torus_params_from_shadow(rs, t, t, t, t);
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompatiblePuncture);
  }
  // t1 = t2 = 0 makes the up-cycle vanish.
  const BigComplex t3(0.5, 0.1, 256);
  const BigComplex p = solve_chebyshev(rs, rs.from_int(2) - t3 * t3).values.front();
  try {
    torus_params_from_shadow(rs, rs.zero(), rs.zero(), t3, p);
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::VanishingCycle);
  }
}

TEST(BuildTorus, NOneIsScalar) {
  const auto rs = make_numeric_root_system(1);
  const BigComplex t1(0.4, 0.3, 256), t2(-1.2, 0.5, 256), t3(0.7, -0.9, 256);
  const BigComplex p = rs.from_int(2) - t1 * t2 * t3 - t1 * t1 - t2 * t2 - t3 * t3;
  const auto rep = build_torus_rep(rs, torus_params_from_shadow(rs, t1, t2, t3, p));
  ASSERT_EQ(rep.dim, 1u);
  EXPECT_LT(test::rel_diff(rep.at("X1")(0, 0), t1), 1e-60);
  EXPECT_LT(test::rel_diff(rep.at("X2")(0, 0), t2), 1e-60);
  EXPECT_LT(test::rel_diff(rep.at("X3")(0, 0), t3), 1e-60);
  EXPECT_LT(test::rel_diff(rep.at("P")(0, 0), p), 1e-60);
}

TEST(BuildTorus, ShapeSpectrumAndRelations) {
  std::mt19937_64 rng(6);
  for (int N : {3, 5, 7}) {
    const auto rs = make_numeric_root_system(N);
    const auto d = test::draw_torus(rs, rng);
    const auto params = torus_params_from_shadow(rs, d.t1, d.t2, d.t3, d.p);
    const auto rep = build_torus_rep(rs, params);
    ASSERT_EQ(rep.dim, static_cast<std::size_t>(N));
    EXPECT_LT(test::max_relation_residual(rs, rep), 1e-60);
    const auto& x1 = rep.at("X1");
    for (std::size_t i = 0; i < rep.dim; ++i) {
      for (std::size_t j = 0; j < rep.dim; ++j) {
        const std::size_t n = rep.dim;
        const bool band = (i + 1) % n == j || (j + 1) % n == i;
        if (!band) EXPECT_TRUE(x1(i, j).is_zero()) << i << "," << j;
        if (i != j) EXPECT_TRUE(rep.at("X3")(i, j).is_zero());
      }
    }
    // rho(X3) spectrum is the solution set of T_N(x) = t3.
    const auto sol = solve_chebyshev(rs, d.t3).values;
    for (std::size_t k = 0; k < rep.dim; ++k) {
      double best = 1.0;
      for (const auto& x : sol) best = std::min(best, test::rel_diff(rep.at("X3")(k, k), x));
      EXPECT_LT(best, 1e-60);
    }
    for (const char* g : {"X1", "X2", "X3"}) {
      const auto sd = scalar_part(chebyshev_eval(rs, N, rep.at(g)));
      EXPECT_LT(sd.deviation, 1e-50);
    }
    EXPECT_LT(test::rel_diff(scalar_part(chebyshev_eval(rs, N, rep.at("X1"))).mean, d.t1), 1e-50);
  }
}

TEST(Ladder, DownUpAndCycle) {
  std::mt19937_64 rng(9);
  const auto rs = make_numeric_root_system(5);
  const auto d = test::draw_torus(rs, rng);
  const auto params = torus_params_from_shadow(rs, d.t1, d.t2, d.t3, d.p);
  const auto rep = build_torus_rep(rs, params);
  const auto ls = ladder_system_torus(rs, rep, params.x3);
  EXPECT_LT(ls.eigen_residual, 1e-50);
  EXPECT_LT(ls.ladder_residual, 1e-50);
  EXPECT_LT(ls.scalar_residual, 1e-50);
  for (int k = 1; k <= 5; ++k) {
    const BigComplex expect = -(params.p + params.x3 * params.x3 * rs.a_pow(4L * k + 2) +
                                rs.inverse(params.x3 * params.x3) * rs.a_pow(-4L * k - 2));
    EXPECT_LT(test::rel_diff(ls.down_up[static_cast<std::size_t>(k - 1)], expect), 1e-50);
  }
  const BigComplex k = d.t1 * d.t2 * d.t3 + d.t1 * d.t1 + d.t2 * d.t2;
  EXPECT_LT(test::rel_diff(ls.u, torus_u(rs, params)), 1e-50);
  EXPECT_LT(test::rel_diff(ls.cycle_product, k), 1e-50);
}

TEST(Ladder, WrongGaugeIsRejected) {
  std::mt19937_64 rng(10);
  const auto rs = make_numeric_root_system(3);
  const auto d = test::draw_torus(rs, rng);
  const auto params = torus_params_from_shadow(rs, d.t1, d.t2, d.t3, d.p);
  const auto rep = build_torus_rep(rs, params);
  try {
    ladder_system_torus(rs, rep, params.x3 * BigComplex(1.5, 0.0, 256));
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EigenstructureMismatch);
  }
}

TEST(ExactFamily, CycleSignAndRelations) {
  std::mt19937_64 rng(14);
  const auto rs = make_exact_root_system(3);
  for (int i = 0; i < 5; ++i) {
    const auto x3 = test::random_cyclotomic(rs, rng);
    const auto p = test::random_cyclotomic(rs, rng, false);
    const auto u = test::random_cyclotomic(rs, rng);
    TorusParams<CyclotomicNumber> params;
    try {
      params = torus_params_from_family(rs, x3, p, u);
    } catch (const SkeinError&) {
      continue;
    }
    const auto x3n = rs.pow(x3, 3);
    const auto k = -(chebyshev_eval(rs, 3, p) + x3n * x3n + rs.inverse(x3n * x3n));
    EXPECT_EQ(params.t1 * params.t2 * params.t3 + params.t1 * params.t1 + params.t2 * params.t2, k);
    EXPECT_EQ(torus_u(rs, params), u);
    const auto rep = build_torus_rep(rs, params);
    for (const auto& rel : relations(rep.surface)) {
      EXPECT_EQ(max_abs(evaluate(rel.defect, rep, rs)), 0.0) << rel.name;
    }
    const auto ls = ladder_system_torus(rs, rep, x3);
    EXPECT_EQ(ls.cycle_product, k);
    EXPECT_EQ(ls.u, u);
  }
}

TEST(ClosedTorus, PunctureIsFixed) {
  std::mt19937_64 rng(15);
  for (int N : {1, 3, 5}) {
    const auto rs = make_numeric_root_system(N);
    const BigComplex x3 = test::annulus_point(rng, 256, 1.1, 1.5);
    const auto fam = torus_params_from_family(rs, x3, closed_torus_puncture(rs), test::annulus_point(rng, 256));
    const auto rep = closed_torus_rep(rs, fam.t1, fam.t2, fam.t3);
    EXPECT_EQ(rep.surface, Surface::torus0());
    EXPECT_EQ(rep.generators.count("P"), 0u);
    EXPECT_TRUE(rs.approx_eq(rep.punctures.at("P"), -(rs.a_pow(2) + rs.a_pow(-2))));
    EXPECT_LT(test::max_relation_residual(rs, rep), 1e-60);
    if (N == 1) {
      const BigComplex c = fam.t1 * fam.t2 * fam.t3 + fam.t1 * fam.t1 + fam.t2 * fam.t2 + fam.t3 * fam.t3 - rs.from_int(4);
      EXPECT_LT(c.magnitude(), 1e-60);
    }
  }
}

TEST(ClosedTorus, RejectsOtherPunctures) {
  const auto rs = make_numeric_root_system(3);
  const auto fam = torus_params_from_family(rs, BigComplex(1.2, 0.1, 256), BigComplex(0.3, 0.0, 256),
                                            BigComplex(0.5, 0.5, 256));
  EXPECT_THROW(build_torus_rep(rs, fam, true), SkeinError);
  EXPECT_THROW(closed_torus_rep(rs, fam.t1, fam.t2, fam.t3), SkeinError);
}

}  // namespace
}  // namespace skein
