#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skein/representation.hpp"
#include "skein/root_system.hpp"

namespace skein {

struct ResidualEntry {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = true;
};

struct VerificationReport {
  std::string surface;
  std::size_t dim = 0;
  double tolerance = 0.0;
  std::vector<ResidualEntry> relations;
  /// T_N(rho(X_i)) off-scalar deviation, and |rho(P_k) - p_k Id|.
  std::vector<ResidualEntry> scalarity;
  std::size_t commutant_dimension = 0;
  bool irreducible = false;
  /// Every relation and scalarity residual is below its threshold.
  bool pass = true;

  double worst_relation() const;
  nlohmann::json to_json() const;
};

/// Evaluates every defining relation of the surface on the representation
/// and records max-entry residuals; also scalarity of T_N(rho(X_i)) and of
/// the puncture generators, and the commutant dimension. Thresholds are
/// tol * (1 + s^d) with s the largest generator entry and d the degree.
template <class F>
VerificationReport verify_relations(const RootSystem<F>& rs, const Representation<F>& rep);

template <class F>
struct ShadowInvariants {
  std::string surface;
  /// t_i = -Tr r(X_i), read from T_N(rho(X_i)) = t_i Id.
  std::map<std::string, F> t;
  std::map<std::string, double> chebyshev_deviation;
  /// p_k from rho(P_k) = p_k Id.
  std::map<std::string, F> punctures;
  /// -Tr r(P_k) = T_N(p_k).
  std::map<std::string, F> puncture_shadow;
  /// Torus: T_N(p) + t1 t2 t3 + t1^2 + t2^2 + t3^2 - 2.
  /// Sphere4: t1 t2 t3 - t1^2 - t2^2 - t3^2 - Q1 t1 - Q2 t2 - Q3 t3 + 4 - D
  /// with Q_i, D the auxiliary invariants of the shadow puncture values.
  F compatibility_residual;
  bool compatibility_ok = true;

  /// Tr r(X_i), the stored convention flipped.
  F trace(const std::string& curve) const { return -t.at(curve); }
};

/// Reads the shadow and puncture invariants. Throws NonScalarChebyshev if some
/// T_N(rho(X_i)) or rho(P_k) is not scalar within tolerance.
template <class F>
ShadowInvariants<F> extract_invariants(const RootSystem<F>& rs, const Representation<F>& rep);

template <class F>
nlohmann::json to_json(const ShadowInvariants<F>& inv);

/// Rows (g, i, j) of M A(g) - B(g) M = 0 in the unknowns M(i, j), column
/// index i * dim + j.
template <class F>
Matrix<F> intertwiner_system(const RootSystem<F>& rs, const Representation<F>& a, const Representation<F>& b);

/// Dimension of {M : M rho(g) = rho(g) M for every generator g}.
template <class F>
std::size_t commutant_dimension(const RootSystem<F>& rs, const Representation<F>& rep);

}  // namespace skein
