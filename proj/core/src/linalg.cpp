#include "skein/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace skein {

Nullspace<CyclotomicNumber> nullspace(const Matrix<CyclotomicNumber>& a) {
  Nullspace<CyclotomicNumber> out;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n == 0) return out;
  Matrix<CyclotomicNumber> r = a;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t pivot = row;
    while (pivot < m && r(pivot, col).is_zero()) ++pivot;
    if (pivot == m) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r(row, j), r(pivot, j));
    }
    const CyclotomicNumber inv = r(row, col).inverse();
    for (std::size_t j = col; j < n; ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const CyclotomicNumber factor = r(i, col);
      for (std::size_t j = col; j < n; ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= factor * r(row, j);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  out.rank = pivot_cols.size();
  const CyclotomicNumber zero = zero_like(a(0, 0));
  const CyclotomicNumber one = integer_like(zero, 1);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CyclotomicNumber> v(n, zero);
    v[free] = one;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -r(k, free);
    out.basis.push_back(std::move(v));
  }
  return out;
}

namespace {

double column_norm2(const Matrix<BigComplex>& r, std::size_t col, std::size_t from) {
  double total = 0.0;
  for (std::size_t i = from; i < r.rows(); ++i) {
    const double x = r(i, col).magnitude();
    total += x * x;
  }
  return total;
}

}  // namespace

Nullspace<BigComplex> nullspace(const Matrix<BigComplex>& a, double rel_tol) {
  Nullspace<BigComplex> out;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n == 0) return out;
  const long prec = a(0, 0).precision();
  Matrix<BigComplex> r = a;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  BigFloat scratch[2] = {BigFloat(prec), BigFloat(prec)};
  std::vector<BigComplex> v(m, BigComplex(prec));
  const std::size_t steps = std::min(m, n);
  std::size_t rank = 0;
  double lead = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t best = k;
    double best_norm = -1.0;
    for (std::size_t j = k; j < n; ++j) {
      const double c = column_norm2(r, j, k);
      if (c > best_norm) {
        best_norm = c;
        best = j;
      }
    }
    if (best != k) {
      for (std::size_t i = 0; i < m; ++i) std::swap(r(i, k), r(i, best));
      std::swap(perm[k], perm[best]);
    }
    // Exact norm of the pivot column below the diagonal.
    BigFloat norm2(prec);
    for (std::size_t i = k; i < m; ++i) norm2 += r(i, k).norm();
    const BigFloat xnorm = sqrt(norm2);
    const double mag = xnorm.to_double();
    if (k == 0) lead = mag;
    out.pivot_magnitudes.push_back(mag);
    if (lead == 0.0 || mag <= rel_tol * lead) break;
    ++rank;

    // Householder vector v with ||v||^2 = 2 so that H = I - v v^*.
    const BigComplex& x0 = r(k, k);
    BigComplex phase(1L, prec);
    if (!x0.is_zero()) phase = x0 / BigComplex(x0.abs(), BigFloat(prec));
    const BigComplex alpha = -(phase * BigComplex(xnorm, BigFloat(prec)));
    for (std::size_t i = k; i < m; ++i) v[i] = r(i, k);
    v[k] -= alpha;
    BigFloat vnorm2(prec);
    for (std::size_t i = k; i < m; ++i) vnorm2 += v[i].norm();
    if (!vnorm2.is_zero()) {
      const BigComplex scale(sqrt(BigFloat(2L, prec) / vnorm2), BigFloat(prec));
      for (std::size_t i = k; i < m; ++i) v[i] *= scale;
      for (std::size_t j = k + 1; j < n; ++j) {
        BigComplex s(prec);
        for (std::size_t i = k; i < m; ++i) s.add_conj_product(v[i], r(i, j), scratch);
        if (s.is_zero()) continue;
        for (std::size_t i = k; i < m; ++i) r(i, j).sub_product(v[i], s, scratch);
      }
    }
    r(k, k) = alpha;
    for (std::size_t i = k + 1; i < m; ++i) r(i, k) = BigComplex(prec);
  }
  out.rank = rank;
  out.threshold = rel_tol * lead;
  if (lead == 0.0) {
    // Zero matrix: every unit vector is in the kernel.
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<BigComplex> e(n, BigComplex(prec));
      e[j] = BigComplex(1L, prec);
      out.basis.push_back(std::move(e));
    }
    return out;
  }
  // Kernel of [R11 R12]: for each free column f, solve R11 z = -R12 e_f.
  for (std::size_t f = rank; f < n; ++f) {
    std::vector<BigComplex> z(rank, BigComplex(prec));
    for (std::size_t ii = rank; ii-- > 0;) {
      BigComplex acc = -r(ii, f);
      for (std::size_t j = ii + 1; j < rank; ++j) acc.sub_product(r(ii, j), z[j], scratch);
      z[ii] = acc / r(ii, ii);
    }
    std::vector<BigComplex> x(n, BigComplex(prec));
    x[perm[f]] = BigComplex(1L, prec);
    for (std::size_t ii = 0; ii < rank; ++ii) x[perm[ii]] = z[ii];
    out.basis.push_back(std::move(x));
  }
  return out;
}

template <class F>
std::optional<Matrix<F>> inverse(const RootSystem<F>& rs, const Matrix<F>& m) {
  if (!m.is_square()) {
    throw SkeinError(ErrorCode::DimensionMismatch, "inverse needs a square matrix");
  }
  const std::size_t n = m.rows();
  Matrix<F> a = m;
  Matrix<F> inv = Matrix<F>::identity(n, rs.zero(), rs.one());
  const double scale = std::max(max_abs(m), 1e-300);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = -1.0;
    for (std::size_t i = col; i < n; ++i) {
      if constexpr (is_exact_v<F>) {
        if (!a(i, col).is_zero()) {
          pivot = i;
          best = 1.0;
          break;
        }
      } else {
        const double mag = a(i, col).magnitude();
        if (mag > best) {
          best = mag;
          pivot = i;
        }
      }
    }
    if constexpr (is_exact_v<F>) {
      if (best < 0.0) return std::nullopt;
    } else {
      if (best <= rs.tolerance().rel_eps * scale) return std::nullopt;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const F pinv = rs.inverse(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= pinv;
      inv(col, j) *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const F factor = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

template <class F>
double one_norm(const Matrix<F>& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, j).magnitude();
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

template <class F>
double condition_estimate(const RootSystem<F>& rs, const Matrix<F>& m) {
  const auto inv = inverse(rs, m);
  if (!inv) return std::numeric_limits<double>::infinity();
  return one_norm(m) * one_norm(*inv);
}

template std::optional<Matrix<CyclotomicNumber>> inverse(const ExactRootSystem&,
                                                         const Matrix<CyclotomicNumber>&);
template std::optional<Matrix<BigComplex>> inverse(const NumericRootSystem&, const Matrix<BigComplex>&);
template double condition_estimate(const ExactRootSystem&, const Matrix<CyclotomicNumber>&);
template double condition_estimate(const NumericRootSystem&, const Matrix<BigComplex>&);

}  // namespace skein
