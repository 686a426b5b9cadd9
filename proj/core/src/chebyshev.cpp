#include "skein/chebyshev.hpp"

namespace skein {

ChebyshevPoly chebyshev_coeffs(long n) {
  if (n < 0) throw SkeinError(ErrorCode::InvalidArgument, "Chebyshev degree must be >= 0");
  std::vector<mpz_class> prev{2};
  if (n == 0) return {0, prev};
  std::vector<mpz_class> cur{0, 1};
  for (long k = 2; k <= n; ++k) {
    std::vector<mpz_class> next(static_cast<std::size_t>(k) + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

ChebyshevSolutions solve_chebyshev(const NumericRootSystem& rs, const BigComplex& t) {
  const auto roots = solve_quadratic(rs, rs.one(), -t, rs.one());
  const bool first_larger = roots[0].abs() >= roots[1].abs();
  ChebyshevSolutions out{{}, first_larger ? roots[0] : roots[1], first_larger ? roots[1] : roots[0],
                         BigComplex(rs.precision_bits())};
  out.b = nth_root(rs, out.y_chosen, rs.N());
  const BigComplex b_inv = rs.inverse(out.b);
  out.values.reserve(static_cast<std::size_t>(rs.N()));
  for (long k = 1; k <= rs.N(); ++k) {
    out.values.push_back(out.b * rs.a_pow(2 * k) + b_inv * rs.a_pow(-2 * k));
  }
  return out;
}

}  // namespace skein
