#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skein/representation.hpp"
#include "skein/root_system.hpp"
#include "skein/sphere_rep.hpp"
#include "skein/torus_rep.hpp"

namespace skein {

template <class F>
struct IsomorphismCertificate {
  /// M with M rho_A(g) = rho_B(g) M, scaled so its largest entry is 1.
  Matrix<F> intertwiner;
  std::map<std::string, double> residuals;
  double max_residual = 0.0;
  double condition = 0.0;
  /// Dimension of the space of intertwiners (1 for irreducible pairs).
  std::size_t solution_dimension = 0;
};

template <class F>
struct IntertwinerSearch {
  std::size_t solution_dimension = 0;
  std::optional<IsomorphismCertificate<F>> certificate;
};

/// Solves M rho_A(g) = rho_B(g) M over all generators, puncture generators
/// included. A certificate is returned only for an invertible solution.
template <class F>
IntertwinerSearch<F> intertwiner_search(const RootSystem<F>& rs, const Representation<F>& a,
                                        const Representation<F>& b);

template <class F>
nlohmann::json to_json(const IsomorphismCertificate<F>& cert);

/// The 2N gauge choices x3 A^{2l} and x3^{-1} A^{2l}, l = 0..N-1.
template <class F>
std::vector<F> gauge_orbit(const RootSystem<F>& rs, const F& x3);

template <class F>
std::vector<TorusParams<F>> gauge_orbit(const RootSystem<F>& rs, const TorusParams<F>& params);

template <class F>
std::vector<SphereParams<F>> gauge_orbit(const RootSystem<F>& rs, const SphereParams<F>& params);

struct GenericityFlag {
  std::string name;
  bool holds = false;
};

struct GenericityReport {
  std::string surface;
  std::vector<GenericityFlag> flags;
  /// Hypotheses of the ladder reconstruction hold as stated (no reindexing).
  bool generic = false;
  /// Torus only: none of the three exceptional trace patterns occurs, so a
  /// cyclic reindexing of X1, X2, X3 makes the reconstruction apply.
  bool generic_up_to_reindexing = false;

  bool flag(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// Torus surfaces read t = (t1, t2, t3); Sphere4 additionally the four p_i.
GenericityReport genericity_check(const NumericRootSystem& rs, const Surface& surface,
                                  const std::array<BigComplex, 3>& t, const std::vector<BigComplex>& p = {});

struct ExperimentConfig {
  Surface surface = Surface::torus1();
  int N = 3;
  int samples = 25;
  std::uint64_t seed = 1;
  long precision_bits = kDefaultPrecisionBits;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct SampleRecord {
  int index = 0;
  nlohmann::json params;
  int variants = 0;
  int pairs_tested = 0;
  int pairs_matched = 0;
  double worst_residual = 0.0;
  double worst_condition = 0.0;
  double worst_roundtrip = 0.0;
  std::vector<std::string> failures;
  bool pass = false;

  bool operator==(const SampleRecord&) const = default;
};

struct ExperimentReport {
  std::uint64_t seed = 0;
  std::string surface;
  int N = 0;
  int samples = 0;
  long precision_bits = 0;
  double residual_threshold = 0.0;
  std::vector<SampleRecord> records;
  int failures = 0;
  double worst_residual = 0.0;
  bool pass = false;

  bool operator==(const ExperimentReport&) const = default;
};

nlohmann::json to_json(const ExperimentReport& report);
ExperimentReport experiment_report_from_json(const nlohmann::json& j);

/// Samples generic invariants, builds a representation from every gauge
/// variant and requires every pair to be intertwined (residual below
/// 1e-20 relative) and the invariants to round-trip.
ExperimentReport uniqueness_experiment(const ExperimentConfig& config);

/// Torus: t_i = a + a^{-1} with a area-uniform on 0.5 < |a| < 2, p one of the
/// N solutions of the compatibility relation.
struct TorusSample {
  BigComplex t1, t2, t3, p;
};
TorusSample sample_torus(const NumericRootSystem& rs, std::uint64_t seed);

/// Sphere: p_i, x3 and u drawn on the annulus; the representation built from
/// them fixes (t1, t2, t3).
struct SphereSample {
  std::array<BigComplex, 4> p;
  BigComplex x3, u, t1, t2, t3;
};
SphereSample sample_sphere(const NumericRootSystem& rs, std::uint64_t seed);

}  // namespace skein
