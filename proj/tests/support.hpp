#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "skein/chebyshev.hpp"
#include "skein/cyclotomic.hpp"
#include "skein/invariants.hpp"
#include "skein/skein_expr.hpp"
#include "skein/sphere_rep.hpp"
#include "skein/torus_rep.hpp"

namespace skein::test {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Area-uniform point on the annulus rmin < |z| < rmax.
inline BigComplex annulus_point(std::mt19937_64& rng, long prec, double rmin = 0.5, double rmax = 2.0) {
  const double r = std::sqrt(uniform(rng, rmin * rmin, rmax * rmax));
  const double theta = uniform(rng, 0.0, 2.0 * M_PI);
  return BigComplex(r * std::cos(theta), r * std::sin(theta), prec);
}

inline BigComplex joukowski(const NumericRootSystem& rs, std::mt19937_64& rng) {
  const BigComplex a = annulus_point(rng, rs.precision_bits());
  return a + rs.inverse(a);
}

/// sum_j c_j A^j with small random rationals, j below the field degree.
inline CyclotomicNumber random_cyclotomic(const ExactRootSystem& rs, std::mt19937_64& rng, bool nonzero = true) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  for (;;) {
    CyclotomicNumber out = rs.zero();
    for (int j = 0; j < rs.field()->degree(); ++j) {
      out += CyclotomicNumber(mpq_class(num(rng), den(rng))) * rs.a_pow(j);
    }
    if (!nonzero || !out.is_zero()) return out;
  }
}

inline double rel_diff(const BigComplex& a, const BigComplex& b) {
  return (a - b).magnitude() / std::max({1.0, a.magnitude(), b.magnitude()});
}

template <class F>
double max_relation_residual(const RootSystem<F>& rs, const Representation<F>& rep) {
  double worst = 0.0;
  for (const auto& rel : relations(rep.surface)) worst = std::max(worst, max_abs(evaluate(rel.defect, rep, rs)));
  return worst;
}

/// A generic torus shadow with a compatible puncture invariant.
struct TorusDraw {
  BigComplex t1, t2, t3, p;
  std::vector<BigComplex> p_choices;
};

inline TorusDraw draw_torus(const NumericRootSystem& rs, std::mt19937_64& rng) {
  for (;;) {
    TorusDraw d{joukowski(rs, rng), joukowski(rs, rng), joukowski(rs, rng), BigComplex(rs.precision_bits()), {}};
    const BigComplex k = d.t1 * d.t2 * d.t3 + d.t1 * d.t1 + d.t2 * d.t2;
    if (k.magnitude() < 1e-3 || (d.t3 - rs.from_int(2)).magnitude() < 1e-3 ||
        (d.t3 + rs.from_int(2)).magnitude() < 1e-3) {
      continue;
    }
    d.p_choices = solve_chebyshev(rs, rs.from_int(2) - k - d.t3 * d.t3).values;
    d.p = d.p_choices[std::uniform_int_distribution<std::size_t>(0, d.p_choices.size() - 1)(rng)];
    return d;
  }
}

/// Sphere parameters from (p_i, x3) with the ladder product away from zero.
inline SphereParams<BigComplex> draw_sphere_params(const NumericRootSystem& rs, std::mt19937_64& rng) {
  for (;;) {
    std::array<BigComplex, 4> p;
    for (auto& x : p) x = joukowski(rs, rng);
    const BigComplex x3 = annulus_point(rng, rs.precision_bits(), 0.7, 1.4);
    const auto params = make_sphere_params(rs, p, x3, rs.zero(), rs.zero());
    const BigComplex t3 = params.t3;
    if ((t3 - rs.from_int(2)).magnitude() < 1e-3 || (t3 + rs.from_int(2)).magnitude() < 1e-3) continue;
    if (ladder_scalars_sphere(rs, params).product.magnitude() < 1e-6) continue;
    return params;
  }
}

inline ExprPtr laurent_expr(const LaurentPoly& c) {
  std::vector<ExprPtr> terms;
  for (const auto& [k, q] : c.terms()) {
    terms.push_back(SkeinExpr::product({SkeinExpr::rational(q), SkeinExpr::a_power(k)}));
  }
  if (terms.empty()) return SkeinExpr::rational(0);
  return SkeinExpr::sum(std::move(terms));
}

/// Writes a symbolic normal form back as an expression (monomials in
/// X1 X2 X3 order, punctures in front).
inline SkeinExpr as_expr(const NormalForm<LaurentRing>& nf) {
  std::vector<ExprPtr> terms;
  for (const auto& [m, c] : nf.terms) {
    std::vector<ExprPtr> factors{laurent_expr(c)};
    for (int j = 0; j < 4; ++j) {
      for (std::uint32_t e = 0; e < m.p[static_cast<std::size_t>(j)]; ++e) factors.push_back(SkeinExpr::generator(3 + j));
    }
    for (int i = 0; i < 3; ++i) {
      for (std::uint32_t e = 0; e < m.x[static_cast<std::size_t>(i)]; ++e) factors.push_back(SkeinExpr::generator(i));
    }
    terms.push_back(SkeinExpr::product(std::move(factors)));
  }
  if (terms.empty()) terms.push_back(SkeinExpr::rational(0));
  return SkeinExpr(nf.surface, SkeinExpr::sum(std::move(terms)));
}

/// Sum of up to three words, each of length at most `max_len`, over every
/// generator of the surface with coefficients +-A^k.
inline SkeinExpr random_expr(const Surface& surface, std::mt19937_64& rng, int max_len = 8) {
  const int symbols = static_cast<int>(surface.generator_names().size());
  std::uniform_int_distribution<int> sym(0, symbols - 1);
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<long> apow(-3, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<ExprPtr> terms;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<ExprPtr> factors{SkeinExpr::a_power(apow(rng))};
    if (coin(rng)) factors.push_back(SkeinExpr::rational(-1));
    const int l = len(rng);
    for (int i = 0; i < l; ++i) factors.push_back(SkeinExpr::generator(sym(rng)));
    terms.push_back(SkeinExpr::product(std::move(factors)));
  }
  return SkeinExpr(surface, SkeinExpr::sum(std::move(terms)));
}

}  // namespace skein::test
