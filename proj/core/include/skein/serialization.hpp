#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "skein/laurent.hpp"
#include "skein/matrix.hpp"
#include "skein/representation.hpp"
#include "skein/root_system.hpp"
#include "skein/skein_expr.hpp"

namespace skein {

using Json = nlohmann::json;

/// {"coeffs": ["num/den", ...]} in the power basis of Q(A).
Json scalar_to_json(const CyclotomicNumber& x);
/// {"re": "<decimal>", "im": "<decimal>", "prec_bits": n}; decimals carry
/// enough digits to round-trip at prec_bits.
Json scalar_to_json(const BigComplex& x);
/// Symbolic coefficient: {"laurent": "A^2 - A^-2"}.
Json scalar_to_json(const LaurentPoly& x);

CyclotomicNumber scalar_from_json(const Json& j, const ExactRootSystem& rs);
BigComplex scalar_from_json(const Json& j, const NumericRootSystem& rs);

template <class F>
Json matrix_to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Matrix<F> matrix_from_json(const Json& j, const RootSystem<F>& rs);

/// {surface, N, backend, dim, generators: {name: [[scalar]]},
///  punctures: {name: scalar}, provenance}
template <class F>
Json to_json(const Representation<F>& rep, const RootSystem<F>& rs);

/// Reads the backend recorded in a representation document.
Backend backend_of(const Json& j);
/// N and precision recorded in a representation document (precision 0 for
/// exact).
std::pair<int, long> root_of(const Json& j);

template <class F>
Representation<F> representation_from_json(const Json& j, const RootSystem<F>& rs);

/// [{"monomial": "X1·X2", "coeff": scalar}, ...] in monomial order.
template <class Ring>
Json to_json(const NormalForm<Ring>& nf);

/// Canonical text: sorted keys (nlohmann's default object ordering), two
/// space indent, trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace skein
