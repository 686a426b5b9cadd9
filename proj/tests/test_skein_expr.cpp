#include <gtest/gtest.h>

#include <random>

#include "skein/serialization.hpp"
#include "skein/skein_expr.hpp"
#include "support.hpp"

namespace skein {
namespace {

std::string symbolic(const std::string& text, const Surface& s,
                     RewriteStrategy strategy = RewriteStrategy::Leftmost) {
  const LaurentRing ring;
  return to_string(normalize(parse(text, s), RewriteSystem<LaurentRing>(ring, s), strategy), ring);
}

TEST(Parse, Grammar) {
  const auto e = parse("A X1 X2 - A^-1 X2 X1", Surface::torus1());
  EXPECT_EQ(e.root()->kind, ExprNode::Kind::Sum);
  ASSERT_EQ(e.root()->children.size(), 2u);
  const auto s = parse("P0 P3 + P1 P2", Surface::sphere4());
  ASSERT_EQ(s.root()->kind, ExprNode::Kind::Sum);
  for (const auto& c : s.root()->children) EXPECT_EQ(c->kind, ExprNode::Kind::Product);
  EXPECT_NO_THROW(parse("1/2 X1^3 \xe2\x88\x92 2.5e-1 \xc2\xb7 X2", Surface::torus0()));
}

TEST(Parse, Errors) {
  try {
    parse("X1 + X4", Surface::torus1());
    FAIL() << "expected an error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownGenerator);
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse("P", Surface::torus0()), ParseError);
  EXPECT_THROW(parse("X1", Surface::sphere(2)), ParseError);
  EXPECT_THROW(parse("P3", Surface::sphere(2)), ParseError);
  EXPECT_NO_THROW(parse("P1 P2", Surface::sphere(2)));
  try {
    parse("X1 * (X2", Surface::torus1());
    FAIL() << "expected an error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  }
  EXPECT_THROW(parse("X1^70000", Surface::torus1()), SkeinError);
}

TEST(Normalize, QCommutatorCollapses) {
  EXPECT_EQ(symbolic("A X1 X2 - A^-1 X2 X1", Surface::torus1()), "(A^2 - A^-2)·X3");
  EXPECT_EQ(symbolic("X1", Surface::torus1()), "X1");
  EXPECT_EQ(symbolic("X2 X1 - X2 X1", Surface::torus1()), "0");
}

TEST(Normalize, SphereCentrality) {
  const LaurentRing ring;
  const RewriteSystem<LaurentRing> rw(ring, Surface::sphere4());
  for (int p = 0; p < 4; ++p) {
    for (int x = 1; x <= 3; ++x) {
      const std::string text = "P" + std::to_string(p) + " X" + std::to_string(x) + " - X" + std::to_string(x) +
                               " P" + std::to_string(p);
      EXPECT_TRUE(normalize(parse(text, Surface::sphere4()), rw).is_zero()) << text;
    }
  }
}

TEST(Normalize, NormalFormJson) {
  const LaurentRing ring;
  const auto nf = normalize(parse("X3 X1", Surface::torus1()), RewriteSystem<LaurentRing>(ring, Surface::torus1()));
  const auto j = to_json(nf);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  for (const auto& t : j) {
    EXPECT_TRUE(t.contains("monomial"));
    EXPECT_TRUE(t.contains("coeff"));
  }
}

TEST(Evaluate, GeneratorsAndPunctureLoop) {
  std::mt19937_64 rng(2);
  const auto rs = make_numeric_root_system(3);
  const auto d = test::draw_torus(rs, rng);
  const auto rep = build_torus_rep(rs, torus_params_from_shadow(rs, d.t1, d.t2, d.t3, d.p));
  EXPECT_EQ(max_abs(evaluate(parse("X3", rep.surface), rep, rs) - rep.at("X3")), 0.0);
  const auto p = evaluate(puncture_element(Surface::torus1()), rep, rs);
  EXPECT_LT(max_abs(p - Matrix<BigComplex>::scalar(3, d.p, rs.zero())), 1e-60);
}

TEST(Evaluate, PunctureElementAtNOne) {
  // A = -1 and scalar generators: the puncture loop is the classical trace polynomial.
  const auto rs = make_exact_root_system(1);
  Representation<CyclotomicNumber> rep;
  rep.surface = Surface::torus0();
  rep.N = 1;
  rep.dim = 1;
  const long t[3] = {3, -2, 5};
  for (int i = 0; i < 3; ++i) rep.generators["X" + std::to_string(i + 1)] = Matrix<CyclotomicNumber>(1, 1, rs.from_int(t[i]));
  const auto m = evaluate(puncture_element(Surface::torus0()), rep, rs);
  EXPECT_EQ(m(0, 0), rs.from_int(-t[0] * t[1] * t[2] - t[0] * t[0] - t[1] * t[1] - t[2] * t[2] + 2));
}

TEST(Evaluate, NormalFormMatchesEvaluationOnWord) {
  std::mt19937_64 rng(4);
  const auto rs = make_numeric_root_system(3);
  const auto d = test::draw_torus(rs, rng);
  const auto rep = build_torus_rep(rs, torus_params_from_shadow(rs, d.t1, d.t2, d.t3, d.p));
  const auto e = parse("X2 X1 X2 X1", rep.surface);
  const auto nf = normalize(e, RewriteSystem<NumericRootSystem>(rs, rep.surface));
  const auto direct = evaluate(e, rep, rs);
  EXPECT_LT(max_abs(direct - evaluate(nf, rep, rs)), 1e-60 * std::max(1.0, max_abs(direct)));
}

class RewriterProperties : public ::testing::TestWithParam<Surface> {};

TEST_P(RewriterProperties, ConfluentIdempotentAndSound) {
  const Surface s = GetParam();
  std::mt19937_64 rng(31);
  const LaurentRing ring;
  const RewriteSystem<LaurentRing> rw(ring, s);
  for (int i = 0; i < 40; ++i) {
    const auto e = test::random_expr(s, rng);
    const auto left = normalize(e, rw, RewriteStrategy::Leftmost);
    const auto right = normalize(e, rw, RewriteStrategy::Rightmost);
    EXPECT_TRUE(equal(left, right, ring)) << e.to_string();
    EXPECT_TRUE(equal(normalize(test::as_expr(left), rw), left, ring)) << e.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Surfaces, RewriterProperties,
                         ::testing::Values(Surface::torus1(), Surface::torus0(), Surface::sphere4()),
                         [](const auto& info) { return to_string(info.param); });

TEST(Rewriter, SoundOnSphereRepresentation) {
  std::mt19937_64 rng(12);
  const auto rs = make_numeric_root_system(3);
  const auto params = test::draw_sphere_params(rs, rng);
  const auto rep = build_sphere_rep_with_u(rs, params, test::annulus_point(rng, 256));
  const RewriteSystem<NumericRootSystem> rw(rs, rep.surface);
  for (int i = 0; i < 20; ++i) {
    const auto e = test::random_expr(rep.surface, rng);
    const auto direct = evaluate(e, rep, rs);
    const auto via_nf = evaluate(normalize(e, rw), rep, rs);
    EXPECT_LT(max_abs(direct - via_nf), 1e-50 * std::max(1.0, max_abs(direct))) << e.to_string();
  }
}

TEST(Rewriter, ExactBackendAgreesWithSymbolic) {
  const auto rs = make_exact_root_system(5);
  const RewriteSystem<ExactRootSystem> rw(rs, Surface::torus1());
  const auto nf = normalize(parse("X3 X2 X1", Surface::torus1()), rw);
  const LaurentRing ring;
  const auto sym = normalize(parse("X3 X2 X1", Surface::torus1()), RewriteSystem<LaurentRing>(ring, Surface::torus1()));
  ASSERT_EQ(nf.terms.size(), sym.terms.size());
  for (const auto& [m, c] : sym.terms) {
    CyclotomicNumber v = rs.zero();
    for (const auto& [k, q] : c.terms()) v += CyclotomicNumber(q) * rs.a_pow(k);
    ASSERT_TRUE(nf.terms.count(m));
    EXPECT_EQ(nf.terms.at(m), v);
  }
}

}  // namespace
}  // namespace skein
