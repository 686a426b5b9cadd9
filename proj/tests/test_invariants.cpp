#include <gtest/gtest.h>

#include <random>

#include "skein/invariants.hpp"
#include "skein/linalg.hpp"
#include "support.hpp"

namespace skein {
namespace {

Representation<BigComplex> torus_rep(const NumericRootSystem& rs, std::uint64_t seed, test::TorusDraw* out = nullptr) {
  std::mt19937_64 rng(seed);
  const auto d = test::draw_torus(rs, rng);
  if (out) *out = d;
  return build_torus_rep(rs, torus_params_from_shadow(rs, d.t1, d.t2, d.t3, d.p));
}

Matrix<BigComplex> random_matrix(const NumericRootSystem& rs, std::size_t n, std::mt19937_64& rng) {
  Matrix<BigComplex> g(n, n, rs.zero());
  for (auto& x : g.data()) x = test::annulus_point(rng, rs.precision_bits(), 0.2, 1.0);
  for (std::size_t i = 0; i < n; ++i) g(i, i) += rs.from_int(3);
  return g;
}

TEST(VerifyRelations, ConstructedRepPasses) {
  const auto rs = make_numeric_root_system(5);
  const auto report = verify_relations(rs, torus_rep(rs, 1));
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.relations.size(), 4u);
  EXPECT_EQ(report.scalarity.size(), 4u);
  EXPECT_EQ(report.commutant_dimension, 1u);
  EXPECT_TRUE(report.irreducible);
  EXPECT_LT(report.worst_relation(), 1e-60);
  const auto j = report.to_json();
  EXPECT_TRUE(j.at("pass").get<bool>());
}

TEST(VerifyRelations, PerturbationFails) {
  const auto rs = make_numeric_root_system(3);
  auto rep = torus_rep(rs, 2);
  rep.generators["X1"](0, 1) += BigComplex(1e-3, 0.0, 256);
  const auto report = verify_relations(rs, rep);
  EXPECT_FALSE(report.pass);
  bool some = false;
  for (const auto& e : report.relations) some = some || !e.pass;
  EXPECT_TRUE(some);
}

TEST(VerifyRelations, SmallSphereIsVacuous) {
  const auto rs = make_exact_root_system(3);
  const auto report = verify_relations(rs, small_sphere_rep(rs, std::vector<CyclotomicNumber>{rs.from_int(2)}));
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.relations.empty());
  EXPECT_EQ(report.commutant_dimension, 1u);
}

TEST(VerifyRelations, ShapeErrors) {
  const auto rs = make_numeric_root_system(3);
  auto rep = torus_rep(rs, 3);
  rep.generators.erase("P");
  EXPECT_THROW(verify_relations(rs, rep), SkeinError);
}

TEST(ExtractInvariants, TorusRoundTrip) {
  for (int N : {3, 5, 7}) {
    const auto rs = make_numeric_root_system(N);
    test::TorusDraw d;
    const auto inv = extract_invariants(rs, torus_rep(rs, 10 + static_cast<std::uint64_t>(N), &d));
    EXPECT_LT(test::rel_diff(inv.t.at("X1"), d.t1), 1e-40);
    EXPECT_LT(test::rel_diff(inv.t.at("X2"), d.t2), 1e-40);
    EXPECT_LT(test::rel_diff(inv.t.at("X3"), d.t3), 1e-40);
    EXPECT_LT(test::rel_diff(inv.punctures.at("P"), d.p), 1e-60);
    EXPECT_TRUE(inv.compatibility_ok);
    EXPECT_LT(test::rel_diff(inv.trace("X1"), -d.t1), 1e-40);
    const auto j = to_json(inv);
    EXPECT_EQ(j.at("trace_convention"), "t_i = -Tr r(X_i)");
  }
}

TEST(ExtractInvariants, NOneScalars) {
  const auto rs = make_exact_root_system(1);
  Representation<CyclotomicNumber> rep;
  rep.surface = Surface::torus0();
  rep.N = 1;
  rep.dim = 1;
  for (int i = 1; i <= 3; ++i) rep.generators["X" + std::to_string(i)] = Matrix<CyclotomicNumber>(1, 1, rs.from_int(i));
  rep.punctures["P"] = rs.from_int(-2);
  const auto inv = extract_invariants(rs, rep);
  EXPECT_EQ(inv.t.at("X2"), rs.from_int(2));
  EXPECT_EQ(inv.trace("X3"), rs.from_int(-3));
  EXPECT_FALSE(inv.compatibility_ok);  // 1*2*3 + 1 + 4 + 9 - 4 != 0
}

TEST(ExtractInvariants, ReducibleRepIsNotScalar) {
  const auto rs = make_numeric_root_system(3);
  const auto a = torus_rep(rs, 20);
  const auto b = torus_rep(rs, 21);
  try {
    extract_invariants(rs, direct_sum(a, b));
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonScalarChebyshev);
  }
}

TEST(Commutant, DirectSumAndConjugation) {
  const auto rs = make_numeric_root_system(3);
  const auto rep = torus_rep(rs, 30);
  EXPECT_EQ(commutant_dimension(rs, rep), 1u);
  EXPECT_GE(commutant_dimension(rs, direct_sum(rep, rep)), 4u);
  std::mt19937_64 rng(31);
  const auto g = random_matrix(rs, 3, rng);
  const auto conj = conjugate(rep, g, *inverse(rs, g));
  EXPECT_EQ(commutant_dimension(rs, conj), 1u);
  const auto ers = make_exact_root_system(3);
  EXPECT_EQ(commutant_dimension(ers, small_sphere_rep(ers, std::vector<CyclotomicNumber>{})), 1u);
}

TEST(Commutant, ExactTorus) {
  std::mt19937_64 rng(32);
  const auto rs = make_exact_root_system(3);
  const auto params = torus_params_from_family(rs, test::random_cyclotomic(rs, rng), test::random_cyclotomic(rs, rng),
                                               test::random_cyclotomic(rs, rng));
  const auto report = verify_relations(rs, build_torus_rep(rs, params));
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.commutant_dimension, 1u);
  for (const auto& e : report.relations) EXPECT_EQ(e.residual, 0.0);
}

}  // namespace
}  // namespace skein
