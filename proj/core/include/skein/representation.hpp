#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <string>

#include "skein/matrix.hpp"
#include "skein/surface.hpp"

namespace skein {

/// A finite-dimensional representation given on generators: one square
/// matrix per generator name (puncture generators included, as scalar
/// matrices) and the scalar by which each puncture acts.
template <class F>
struct Representation {
  Surface surface;
  int N = 1;
  std::size_t dim = 0;
  std::map<std::string, Matrix<F>> generators;
  std::map<std::string, F> punctures;
  /// Free-form record of how the representation was built (inputs, root
  /// choices); carried through serialization untouched.
  nlohmann::json provenance = nlohmann::json::object();

  const Matrix<F>& at(const std::string& name) const {
    auto it = generators.find(name);
    if (it == generators.end()) {
      throw SkeinError(ErrorCode::UnknownGenerator,
                       "representation on " + to_string(surface) + " has no generator " + name);
    }
    return it->second;
  }
};

/// Checks that every generator matrix is dim x dim and that the generator set
/// matches the surface; throws DimensionMismatch / SurfaceMismatch.
template <class F>
void validate_shape(const Representation<F>& rep) {
  for (const auto& name : rep.surface.generator_names()) {
    const auto it = rep.generators.find(name);
    if (it == rep.generators.end()) {
      throw SkeinError(ErrorCode::SurfaceMismatch,
                       "missing generator " + name + " for surface " + to_string(rep.surface));
    }
    if (it->second.rows() != rep.dim || it->second.cols() != rep.dim) {
      throw SkeinError(ErrorCode::DimensionMismatch,
                       "generator " + name + " is " + std::to_string(it->second.rows()) + "x" +
                           std::to_string(it->second.cols()) + ", expected " +
                           std::to_string(rep.dim) + "x" + std::to_string(rep.dim));
    }
  }
  if (rep.generators.size() != rep.surface.generator_names().size()) {
    throw SkeinError(ErrorCode::SurfaceMismatch,
                     "representation carries generators outside surface " + to_string(rep.surface));
  }
}

/// Conjugate every generator: g -> G g G^{-1}.
template <class F>
Representation<F> conjugate(const Representation<F>& rep, const Matrix<F>& g, const Matrix<F>& g_inv) {
  Representation<F> out = rep;
  for (auto& [name, m] : out.generators) m = g * m * g_inv;
  return out;
}

/// Direct sum of two representations of the same surface.
template <class F>
Representation<F> direct_sum(const Representation<F>& a, const Representation<F>& b) {
  if (!(a.surface == b.surface)) {
    throw SkeinError(ErrorCode::SurfaceMismatch, "direct sum of representations on different surfaces");
  }
  Representation<F> out = a;
  out.dim = a.dim + b.dim;
  for (auto& [name, m] : out.generators) m = direct_sum(m, b.at(name));
  out.provenance = nlohmann::json{{"direct_sum", {a.provenance, b.provenance}}};
  return out;
}

}  // namespace skein
