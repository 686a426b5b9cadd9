#include <gtest/gtest.h>

#include <random>

#include "skein/chebyshev.hpp"
#include "support.hpp"

namespace skein {
namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

TEST(ChebyshevCoeffs, SmallDegrees) {
  EXPECT_EQ(chebyshev_coeffs(0).coeffs, ints({2}));
  EXPECT_EQ(chebyshev_coeffs(1).coeffs, ints({0, 1}));
  EXPECT_EQ(chebyshev_coeffs(3).coeffs, ints({0, -3, 0, 1}));
  EXPECT_EQ(chebyshev_coeffs(5).coeffs, ints({0, 5, 0, -5, 0, 1}));
  EXPECT_EQ(chebyshev_coeffs(7).coeffs, ints({0, -7, 0, 14, 0, -7, 0, 1}));
}

TEST(ChebyshevCoeffs, RecurrenceParityAndLeadingTerm) {
  for (long n = 2; n <= 20; ++n) {
    const auto c = chebyshev_coeffs(n).coeffs;
    const auto c1 = chebyshev_coeffs(n - 1).coeffs;
    const auto c2 = chebyshev_coeffs(n - 2).coeffs;
    ASSERT_EQ(c.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(c.back(), 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      mpz_class expect = j >= 1 && j - 1 < c1.size() ? c1[j - 1] : mpz_class(0);
      if (j < c2.size()) expect -= c2[j];
      EXPECT_EQ(c[j], expect) << n << " " << j;
      if ((static_cast<long>(j) - n) % 2 != 0) EXPECT_EQ(c[j], 0);
    }
  }
}

TEST(ChebyshevEval, TwoIsFixed) {
  const auto rs = make_exact_root_system(5);
  for (long n = 0; n < 12; ++n) EXPECT_EQ(chebyshev_eval(rs, n, rs.from_int(2)), rs.from_int(2));
}

TEST(ChebyshevEval, JoukowskiIdentityExact) {
  std::mt19937_64 rng(21);
  const auto rs = make_exact_root_system(7);
  for (int i = 0; i < 10; ++i) {
    const auto a = test::random_cyclotomic(rs, rng);
    for (long n : {1L, 2L, 5L, 8L}) {
      EXPECT_EQ(chebyshev_eval(rs, n, a + a.inverse()), pow(a, n) + pow(a, -n));
    }
  }
}

TEST(ChebyshevEval, MatrixScaledIdentity) {
  const auto rs = make_exact_root_system(3);
  const auto two_id = Matrix<CyclotomicNumber>::scalar(2, rs.from_int(2), rs.zero());
  const auto out = chebyshev_eval(rs, 3, two_id);
  EXPECT_EQ(out(0, 0), rs.from_int(2));
  EXPECT_EQ(out(1, 1), rs.from_int(2));
  EXPECT_EQ(out(0, 1), rs.zero());
  EXPECT_THROW(chebyshev_eval(rs, 3, Matrix<CyclotomicNumber>(2, 3, rs.zero())), SkeinError);
}

TEST(ChebyshevEval, TraceOfPowers) {
  std::mt19937_64 rng(8);
  const auto rs = make_numeric_root_system(3);
  for (int i = 0; i < 20; ++i) {
    Matrix<BigComplex> m(2, 2, rs.zero());
    m(0, 0) = test::annulus_point(rng, 256);
    m(0, 1) = test::annulus_point(rng, 256);
    m(1, 0) = test::annulus_point(rng, 256);
    m(1, 1) = (rs.one() + m(0, 1) * m(1, 0)) / m(0, 0);
    const BigComplex tr = m(0, 0) + m(1, 1);
    Matrix<BigComplex> power = m;
    for (long n = 2; n <= 7; ++n) {
      power = power * m;
      const BigComplex tr_n = power(0, 0) + power(1, 1);
      EXPECT_LT(test::rel_diff(tr_n, chebyshev_eval(rs, n, tr)), 1e-60);
    }
  }
}

TEST(SolveChebyshev, SolutionsAreRootsAndMatchTheFamily) {
  std::mt19937_64 rng(17);
  for (int N : {3, 5, 7}) {
    const auto rs = make_numeric_root_system(N);
    for (int i = 0; i < 5; ++i) {
      const BigComplex a = test::annulus_point(rng, 256, 1.05, 2.0);
      const BigComplex t = rs.pow(a, N) + rs.pow(a, -N);
      const auto sol = solve_chebyshev(rs, t);
      ASSERT_EQ(sol.values.size(), static_cast<std::size_t>(N));
      for (const auto& x : sol.values) {
        EXPECT_LT(test::rel_diff(chebyshev_eval(rs, N, x), t), 1e-60);
      }
      for (int k = 1; k <= N; ++k) {
        const BigComplex expect = a * rs.a_pow(2L * k) + rs.inverse(a) * rs.a_pow(-2L * k);
        double best = 1.0;
        for (const auto& x : sol.values) best = std::min(best, test::rel_diff(x, expect));
        EXPECT_LT(best, 1e-60) << "N=" << N << " k=" << k;
      }
    }
  }
}

TEST(SolveChebyshev, TwoIsAmongTheSolutionsOfTwo) {
  const auto rs = make_numeric_root_system(5);
  const auto sol = solve_chebyshev(rs, rs.from_int(2));
  bool found = false;
  for (const auto& x : sol.values) {
    EXPECT_LT(test::rel_diff(chebyshev_eval(rs, 5, x), rs.from_int(2)), 1e-60);
    found = found || (x - rs.from_int(2)).magnitude() < 1e-60;
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace skein
