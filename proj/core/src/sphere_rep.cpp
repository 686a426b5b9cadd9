#include "skein/sphere_rep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "skein/serialization.hpp"

namespace skein {

namespace {

template <class F>
Json sphere_params_json(const SphereParams<F>& s) {
  Json p = Json::array();
  for (const F& v : s.p) p.push_back(scalar_to_json(v));
  return Json{{"p", p},
              {"t1", scalar_to_json(s.t1)},
              {"t2", scalar_to_json(s.t2)},
              {"t3", scalar_to_json(s.t3)},
              {"x3", scalar_to_json(s.x3)}};
}

template <class F>
void require_nondegenerate(const RootSystem<F>& rs, const F& t3) {
  const F two = rs.from_int(2);
  const double m = t3.magnitude();
  if (rs.is_zero(t3 - two, m) || rs.is_zero(t3 + two, m)) {
    throw SkeinError(ErrorCode::DegenerateShadow, "t3 = +-2: the eigenvalues of rho(X3) collide");
  }
}

template <class F>
std::array<F, 4> punctures_of(const Representation<F>& rep) {
  return {rep.punctures.at("P0"), rep.punctures.at("P1"), rep.punctures.at("P2"), rep.punctures.at("P3")};
}

}  // namespace

template <class F>
SphereAux<F> sphere_aux_invariants(const std::array<F, 4>& p) {
  return {p[0] * p[1] + p[2] * p[3], p[0] * p[2] + p[1] * p[3], p[0] * p[3] + p[1] * p[2],
          p[0] * p[1] * p[2] * p[3] + p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]};
}

template <class F>
SphereParams<F> make_sphere_params(const RootSystem<F>& rs, const std::array<F, 4>& p, const F& x3,
                                   const F& t1, const F& t2) {
  const F x3n = rs.pow(x3, rs.N());
  return SphereParams<F>{p, t1, t2, x3n + rs.inverse(x3n), x3, sphere_aux_invariants(p)};
}

template <class F>
F chebyshev_pair_factor(const RootSystem<F>& rs, const F& t3, const F& b, const F& c) {
  Matrix<F> companion(2, 2, rs.zero());
  companion(0, 1) = -c;
  companion(1, 0) = rs.one();
  companion(1, 1) = -b;
  Matrix<F> m = Matrix<F>::scalar(2, t3, rs.zero());
  m -= chebyshev_eval(rs, rs.N(), companion);
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <class F>
LadderScalars<F> ladder_scalars_sphere(const RootSystem<F>& rs, const SphereParams<F>& params) {
  require_nondegenerate(rs, params.t3);
  const int N = rs.N();
  const F& x3 = params.x3;
  const F x3_inv = rs.inverse(x3);
  const auto& [q1, q2, q3, delta] = params.aux;
  const F two = rs.from_int(2);

  const auto beta_plus = [&](long k) {
    const F up = x3 * rs.a_pow(4 * k + 2);
    const F dn = x3_inv * rs.a_pow(-4 * k - 2);
    return rs.div(q2 + up * q1, up - dn);
  };
  const auto beta_minus = [&](long k) {
    return rs.div(-q2 - x3_inv * rs.a_pow(-4 * k + 2) * q1,
                  x3 * rs.a_pow(4 * k - 2) - x3_inv * rs.a_pow(-4 * k + 2));
  };

  LadderScalars<F> out;
  out.product = rs.one();
  for (long k = 1; k <= N; ++k) {
    out.beta_plus.push_back(beta_plus(k));
    out.beta_minus.push_back(beta_minus(k));
  }
  for (long k = 1; k <= N; ++k) {
    const F s = x3 * rs.a_pow(4 * k + 2) + x3_inv * rs.a_pow(-4 * k - 2);
    const F bm_next = out.beta_minus[static_cast<std::size_t>(k % N)];
    const F& bp = out.beta_plus[static_cast<std::size_t>(k - 1)];
    F r = -(delta - two + x3 * x3 * rs.a_pow(8 * k + 4) + x3_inv * x3_inv * rs.a_pow(-8 * k - 4) + s * q3 -
            bm_next * bp);
    out.product *= r;
    out.r.push_back(std::move(r));
  }
  const auto& p = params.p;
  const F four = rs.from_int(4);
  const F f03 = chebyshev_pair_factor(rs, params.t3, p[0] * p[3], p[0] * p[0] + p[3] * p[3] - four);
  const F f12 = chebyshev_pair_factor(rs, params.t3, p[1] * p[2], p[1] * p[1] + p[2] * p[2] - four);
  out.closed_form = -rs.div(f03 * f12, params.t3 * params.t3 - four);
  return out;
}

template <class F>
Representation<F> build_sphere_rep_with_u(const RootSystem<F>& rs, const SphereParams<F>& params, const F& u) {
  if (rs.is_zero(u, 0.0)) throw SkeinError(ErrorCode::InvalidArgument, "u must be nonzero");
  const LadderScalars<F> ls = ladder_scalars_sphere(rs, params);
  const int N = rs.N();
  const std::size_t n = static_cast<std::size_t>(N);
  const F& x3 = params.x3;
  const F x3_inv = rs.inverse(x3);

  Matrix<F> m1(n, n, rs.zero());
  Matrix<F> m2(n, n, rs.zero());
  Matrix<F> m3(n, n, rs.zero());
  for (int k = 1; k <= N; ++k) {
    const std::size_t col = static_cast<std::size_t>(k - 1);
    const std::size_t above = static_cast<std::size_t>(k % N);
    const std::size_t below = static_cast<std::size_t>((k - 2 + N) % N);
    const F& bp = ls.beta_plus[col];
    const F& bm = ls.beta_minus[col];
    const F e = x3 * rs.a_pow(4L * k) - x3_inv * rs.a_pow(-4L * k);
    const F e_inv = rs.inverse(e);
    const F up = k < N ? rs.one() : u;
    const F down = k >= 2 ? ls.r[below] : ls.r[n - 1] / u;
    const F cu = x3_inv * rs.a_pow(-4L * k - 2);
    const F cd = x3 * rs.a_pow(4L * k - 2);
    m1(above, col) += -(cu * e_inv) * up;
    m1(below, col) += cd * e_inv * down;
    m1(col, col) += (cu * bp - cd * bm) * e_inv;
    m2(above, col) += -e_inv * up;
    m2(below, col) += e_inv * down;
    m2(col, col) += (bp - bm) * e_inv;
    m3(col, col) = x3 * rs.a_pow(4L * k) + x3_inv * rs.a_pow(-4L * k);
  }

  Representation<F> rep;
  rep.surface = Surface::sphere4();
  rep.N = N;
  rep.dim = n;
  rep.generators["X1"] = std::move(m1);
  rep.generators["X2"] = std::move(m2);
  rep.generators["X3"] = std::move(m3);
  for (int i = 0; i < 4; ++i) {
    const std::string name = "P" + std::to_string(i);
    rep.generators[name] = Matrix<F>::scalar(n, params.p[static_cast<std::size_t>(i)], rs.zero());
    rep.punctures[name] = params.p[static_cast<std::size_t>(i)];
  }
  rep.provenance = Json{{"construction", "sphere"}, {"params", sphere_params_json(params)}, {"u", scalar_to_json(u)}};
  return rep;
}

namespace {

struct TrialTraces {
  BigComplex t1, t2;
};

std::optional<TrialTraces> trial_traces(const NumericRootSystem& rs, const SphereParams<BigComplex>& params,
                                        const BigComplex& u) {
  const auto rep = build_sphere_rep_with_u(rs, params, u);
  TrialTraces out;
  for (int i = 0; i < 2; ++i) {
    const Matrix<BigComplex>& x = rep.at(i == 0 ? "X1" : "X2");
    const auto sd = scalar_part(chebyshev_eval(rs, rs.N(), x));
    const double ctx = std::pow(std::max(1.0, max_abs(x)), rs.N());
    if (sd.deviation > rs.tolerance().rel_eps * (1.0 + ctx)) return std::nullopt;
    (i == 0 ? out.t1 : out.t2) = sd.mean;
  }
  return out;
}

}  // namespace

SolveUReport solve_u(const NumericRootSystem& rs, const SphereParams<BigComplex>& params) {
  const LadderScalars<BigComplex> ls = ladder_scalars_sphere(rs, params);
  if (rs.is_zero(ls.product, 0.0)) {
    throw SkeinError(ErrorCode::VanishingCycle, "the ladder product prod R_k vanishes");
  }
  const BigComplex x3n = rs.pow(params.x3, rs.N());
  const BigComplex x3n_inv = rs.inverse(x3n);
  const BigComplex d = x3n - x3n_inv;

  SolveUReport rep;
  rep.alpha = -x3n_inv / d;
  rep.beta = x3n * ls.product / d;
  rep.alpha2 = -rs.inverse(d);
  rep.beta2 = ls.product / d;

  std::optional<TrialTraces> trial;
  for (const BigComplex& candidate : {rs.one(), rs.A()}) {
    trial = trial_traces(rs, params, candidate);
    if (trial) {
      rep.trial_u = candidate;
      break;
    }
  }
  if (!trial) {
    throw SkeinError(ErrorCode::NonScalarChebyshev, "T_N(rho(X1)) is not scalar at the trial values of u");
  }
  const BigComplex tu_inv = rs.inverse(rep.trial_u);
  rep.f = trial->t1 - rep.alpha * rep.trial_u - rep.beta * tu_inv;
  rep.g = trial->t2 - rep.alpha2 * rep.trial_u - rep.beta2 * tu_inv;

  rep.roots = solve_quadratic(rs, rep.alpha, rep.f - params.t1, rep.beta);
  double best = std::numeric_limits<double>::infinity();
  for (const BigComplex& root : rep.roots) {
    if (rs.is_zero(root, 0.0)) continue;
    const BigComplex t2 = rep.alpha2 * root + rep.beta2 * rs.inverse(root) + rep.g;
    const double mismatch = (t2 - params.t2).magnitude();
    if (mismatch < best) {
      best = mismatch;
      rep.u = root;
    }
  }
  rep.t2_mismatch = best;
  const double ctx = std::max({params.t2.magnitude(), rep.g.magnitude(), (rep.alpha2 * rep.u).magnitude(), 1.0});
  if (!(best <= rs.tolerance().rel_eps * ctx)) {
    throw SkeinError(ErrorCode::NoConsistentRoot,
                     "no root of the t1 equation reproduces t2 (mismatch " + format_magnitude(best) + ")");
  }
  return rep;
}

Representation<BigComplex> build_sphere_rep_gauge(const NumericRootSystem& rs,
                                                  const SphereParams<BigComplex>& params) {
  const SolveUReport s = solve_u(rs, params);
  auto rep = build_sphere_rep_with_u(rs, params, s.u);
  rep.provenance["solve_u"] = Json{{"trial_u", scalar_to_json(s.trial_u)},
                                   {"t2_mismatch", s.t2_mismatch}};
  return rep;
}

Representation<BigComplex> build_sphere_rep(const NumericRootSystem& rs, const std::array<BigComplex, 4>& p,
                                            const BigComplex& t1, const BigComplex& t2, const BigComplex& t3) {
  require_nondegenerate(rs, t3);
  const BigComplex x3 = solve_chebyshev(rs, t3).b;
  auto params = make_sphere_params(rs, p, x3, t1, t2);
  params.t3 = t3;
  return build_sphere_rep_gauge(rs, params);
}

template <class F>
Representation<F> small_sphere_rep(const RootSystem<F>& rs, const std::vector<F>& p) {
  if (p.size() > 3) {
    throw SkeinError(ErrorCode::InvalidArgument,
                     "small spheres have at most 3 punctures, got " + std::to_string(p.size()));
  }
  Representation<F> rep;
  rep.surface = Surface::sphere(static_cast<int>(p.size()));
  rep.N = rs.N();
  rep.dim = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::string name = "P" + std::to_string(i + 1);
    rep.generators[name] = Matrix<F>::scalar(1, p[i], rs.zero());
    rep.punctures[name] = p[i];
  }
  rep.provenance = Json{{"construction", "small_sphere"}};
  return rep;
}

template <class F>
LadderSystem<F> ladder_system_sphere(const RootSystem<F>& rs, const Representation<F>& rep, const F& x3) {
  if (rep.surface.kind != SurfaceKind::Sphere4) {
    throw SkeinError(ErrorCode::SurfaceMismatch, "sphere ladder requested for " + to_string(rep.surface));
  }
  const auto params = make_sphere_params(rs, punctures_of(rep), x3, rs.zero(), rs.zero());
  const LadderScalars<F> ls = ladder_scalars_sphere(rs, params);
  LadderCoefficients<F> c;
  c.twist = 4;
  c.a = rs.a_pow(2);
  const F x3_inv = rs.inverse(x3);
  for (int k = 1; k <= rs.N(); ++k) {
    c.up_x2.push_back(-(x3 * rs.a_pow(4L * k)));
    c.down_x2.push_back(-(x3_inv * rs.a_pow(-4L * k)));
  }
  c.up_id = ls.beta_plus;
  c.down_id = ls.beta_minus;
  return ladder_system(rs, rep, x3, c);
}

#define SKEIN_INSTANTIATE_SPHERE(F, RS)                                                              \
  template SphereAux<F> sphere_aux_invariants(const std::array<F, 4>&);                              \
  template SphereParams<F> make_sphere_params(const RS&, const std::array<F, 4>&, const F&, const F&, \
                                              const F&);                                             \
  template F chebyshev_pair_factor(const RS&, const F&, const F&, const F&);                         \
  template LadderScalars<F> ladder_scalars_sphere(const RS&, const SphereParams<F>&);                \
  template Representation<F> build_sphere_rep_with_u(const RS&, const SphereParams<F>&, const F&);   \
  template Representation<F> small_sphere_rep(const RS&, const std::vector<F>&);                     \
  template LadderSystem<F> ladder_system_sphere(const RS&, const Representation<F>&, const F&);

SKEIN_INSTANTIATE_SPHERE(CyclotomicNumber, ExactRootSystem)
SKEIN_INSTANTIATE_SPHERE(BigComplex, NumericRootSystem)
#undef SKEIN_INSTANTIATE_SPHERE

}  // namespace skein
