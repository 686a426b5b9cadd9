#include "skein/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "skein/chebyshev.hpp"
#include "skein/linalg.hpp"
#include "skein/serialization.hpp"
#include "skein/skein_expr.hpp"
#include "skein/sphere_rep.hpp"

namespace skein {

namespace {

template <class F>
double generator_scale(const Representation<F>& rep) {
  double s = 1.0;
  for (const auto& [name, m] : rep.generators) s = std::max(s, max_abs(m));
  return s;
}

ResidualEntry entry(std::string name, double residual, double threshold) {
  return {std::move(name), residual, threshold, residual <= threshold};
}

Json entries_json(const std::vector<ResidualEntry>& v) {
  Json out = Json::array();
  for (const auto& e : v) {
    out.push_back(Json{{"name", e.name}, {"residual", e.residual}, {"threshold", e.threshold}, {"pass", e.pass}});
  }
  return out;
}

}  // namespace

double VerificationReport::worst_relation() const {
  double w = 0.0;
  for (const auto& e : relations) w = std::max(w, e.residual);
  return w;
}

nlohmann::json VerificationReport::to_json() const {
  return Json{{"surface", surface},
              {"dim", dim},
              {"tolerance", tolerance},
              {"relations", entries_json(relations)},
              {"scalarity", entries_json(scalarity)},
              {"commutant_dimension", commutant_dimension},
              {"irreducible", irreducible},
              {"pass", pass}};
}

template <class F>
Matrix<F> intertwiner_system(const RootSystem<F>& rs, const Representation<F>& a, const Representation<F>& b) {
  if (!(a.surface == b.surface)) {
    throw SkeinError(ErrorCode::SurfaceMismatch,
                     "representations on " + to_string(a.surface) + " and " + to_string(b.surface));
  }
  if (a.dim != b.dim) {
    throw SkeinError(ErrorCode::DimensionMismatch, "representations of dimension " + std::to_string(a.dim) +
                                                       " and " + std::to_string(b.dim));
  }
  const std::size_t n = a.dim;
  const auto names = a.surface.generator_names();
  Matrix<F> sys(names.size() * n * n, n * n, rs.zero());
  std::size_t row = 0;
  for (const auto& name : names) {
    const Matrix<F>& ga = a.at(name);
    const Matrix<F>& gb = b.at(name);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t l = 0; l < n; ++l) {
          sys(row, i * n + l) += ga(l, j);
          sys(row, l * n + j) -= gb(i, l);
        }
      }
    }
  }
  return sys;
}

template <class F>
std::size_t commutant_dimension(const RootSystem<F>& rs, const Representation<F>& rep) {
  if (rep.dim == 0) return 0;
  if (rep.surface.generator_names().empty()) return rep.dim * rep.dim;
  return nullspace(rs, intertwiner_system(rs, rep, rep)).basis.size();
}

template <class F>
VerificationReport verify_relations(const RootSystem<F>& rs, const Representation<F>& rep) {
  validate_shape(rep);
  VerificationReport out;
  out.surface = to_string(rep.surface);
  out.dim = rep.dim;
  out.tolerance = rs.tolerance().rel_eps;
  const double tol = out.tolerance;
  const double s = generator_scale(rep);
  const auto threshold = [&](double degree) {
    if constexpr (is_exact_v<F>) return 0.0 * degree;
    return tol * (1.0 + std::pow(s, degree));
  };

  if (rep.dim > 0) {
    for (const auto& rel : relations(rep.surface)) {
      const double degree = rel.name == "cubic" || rel.name.find("puncture") != std::string::npos ? 4.0 : 2.0;
      out.relations.push_back(entry(rel.name, max_abs(evaluate(rel.defect, rep, rs)), threshold(degree)));
    }
    for (const auto& name : rep.surface.generator_names()) {
      if (name[0] == 'X') {
        const auto sd = scalar_part(chebyshev_eval(rs, rs.N(), rep.at(name)));
        out.scalarity.push_back(entry("T_N(" + name + ")", sd.deviation, threshold(rs.N())));
      } else {
        const auto it = rep.punctures.find(name);
        if (it == rep.punctures.end()) {
          out.scalarity.push_back(entry(name + " = p Id", std::numeric_limits<double>::infinity(), 0.0));
          continue;
        }
        const Matrix<F> diff = rep.at(name) - Matrix<F>::scalar(rep.dim, it->second, rs.zero());
        out.scalarity.push_back(entry(name + " = p Id", max_abs(diff), threshold(1.0)));
      }
    }
    out.commutant_dimension = commutant_dimension(rs, rep);
  }
  out.irreducible = out.commutant_dimension == 1;
  for (const auto& e : out.relations) out.pass = out.pass && e.pass;
  for (const auto& e : out.scalarity) out.pass = out.pass && e.pass;
  return out;
}

template <class F>
ShadowInvariants<F> extract_invariants(const RootSystem<F>& rs, const Representation<F>& rep) {
  validate_shape(rep);
  if (rep.dim == 0) throw SkeinError(ErrorCode::DimensionMismatch, "empty representation");
  ShadowInvariants<F> out;
  out.surface = to_string(rep.surface);
  const double s = generator_scale(rep);
  const int N = rs.N();
  const auto scalar_tol = [&](double degree) {
    if constexpr (is_exact_v<F>) return 0.0 * degree;
    return rs.tolerance().rel_eps * (1.0 + std::pow(s, degree));
  };

  for (const auto& name : rep.surface.generator_names()) {
    if (name[0] == 'X') {
      const auto sd = scalar_part(chebyshev_eval(rs, N, rep.at(name)));
      if (sd.deviation > scalar_tol(N)) {
        throw SkeinError(ErrorCode::NonScalarChebyshev,
                         "T_N(rho(" + name + ")) is not scalar (deviation " + format_magnitude(sd.deviation) + ")");
      }
      out.t.emplace(name, sd.mean);
      out.chebyshev_deviation[name] = sd.deviation;
    } else {
      const auto sd = scalar_part(rep.at(name));
      if (sd.deviation > scalar_tol(1.0)) {
        throw SkeinError(ErrorCode::NonScalarChebyshev, "rho(" + name + ") is not scalar");
      }
      out.punctures.emplace(name, sd.mean);
    }
  }
  // Punctures with no generator (closed torus) are read from the stored scalars.
  for (const auto& [name, value] : rep.punctures) {
    if (!out.punctures.count(name)) out.punctures.emplace(name, value);
  }
  for (const auto& [name, value] : out.punctures) out.puncture_shadow.emplace(name, chebyshev_eval(rs, N, value));

  const F two = rs.from_int(2);
  const F four = rs.from_int(4);
  out.compatibility_residual = rs.zero();
  double ctx = 1.0;
  if (rep.surface.is_torus()) {
    const F& t1 = out.t.at("X1");
    const F& t2 = out.t.at("X2");
    const F& t3 = out.t.at("X3");
    const F& tp = out.puncture_shadow.at("P");
    out.compatibility_residual = tp + t1 * t2 * t3 + t1 * t1 + t2 * t2 + t3 * t3 - two;
    ctx = std::max({tp.magnitude(), (t1 * t2 * t3).magnitude(), (t1 * t1).magnitude(), (t2 * t2).magnitude(),
                    (t3 * t3).magnitude()});
  } else if (rep.surface.kind == SurfaceKind::Sphere4) {
    const F& t1 = out.t.at("X1");
    const F& t2 = out.t.at("X2");
    const F& t3 = out.t.at("X3");
    const std::array<F, 4> pi{out.puncture_shadow.at("P0"), out.puncture_shadow.at("P1"),
                              out.puncture_shadow.at("P2"), out.puncture_shadow.at("P3")};
    const SphereAux<F> aux = sphere_aux_invariants(pi);
    const std::array<F, 8> terms{t1 * t2 * t3, t1 * t1, t2 * t2, t3 * t3,
                                 aux.q1 * t1,  aux.q2 * t2, aux.q3 * t3, aux.delta};
    out.compatibility_residual = terms[0] - terms[1] - terms[2] - terms[3] - terms[4] - terms[5] - terms[6] + four -
                                 terms[7];
    for (const F& x : terms) ctx = std::max(ctx, x.magnitude());
  }
  if constexpr (is_exact_v<F>) {
    out.compatibility_ok = rs.is_zero(out.compatibility_residual, 0.0);
  } else {
    // T_N amplifies rounding by roughly the N-th power of the entry scale.
    out.compatibility_ok = out.compatibility_residual.magnitude() <= scalar_tol(N) * ctx;
  }
  return out;
}

template <class F>
nlohmann::json to_json(const ShadowInvariants<F>& inv) {
  Json t = Json::object();
  Json traces = Json::object();
  Json dev = Json::object();
  for (const auto& [name, v] : inv.t) {
    t[name] = scalar_to_json(v);
    traces[name] = scalar_to_json(inv.trace(name));
    dev[name] = inv.chebyshev_deviation.count(name) ? inv.chebyshev_deviation.at(name) : 0.0;
  }
  Json punct = Json::object();
  Json shadow = Json::object();
  for (const auto& [name, v] : inv.punctures) punct[name] = scalar_to_json(v);
  for (const auto& [name, v] : inv.puncture_shadow) shadow[name] = scalar_to_json(v);
  return Json{{"surface", inv.surface},
              {"t", t},
              {"traces", traces},
              {"trace_convention", "t_i = -Tr r(X_i)"},
              {"chebyshev_deviation", dev},
              {"punctures", punct},
              {"puncture_shadow", shadow},
              {"compatibility_residual", scalar_to_json(inv.compatibility_residual)},
              {"compatibility_ok", inv.compatibility_ok}};
}

#define SKEIN_INSTANTIATE_INV(F, RS)                                                                    \
  template VerificationReport verify_relations(const RS&, const Representation<F>&);                   \
  template ShadowInvariants<F> extract_invariants(const RS&, const Representation<F>&);                \
  template nlohmann::json to_json(const ShadowInvariants<F>&);                                          \
  template Matrix<F> intertwiner_system(const RS&, const Representation<F>&, const Representation<F>&); \
  template std::size_t commutant_dimension(const RS&, const Representation<F>&);

SKEIN_INSTANTIATE_INV(CyclotomicNumber, ExactRootSystem)
SKEIN_INSTANTIATE_INV(BigComplex, NumericRootSystem)
#undef SKEIN_INSTANTIATE_INV

}  // namespace skein
