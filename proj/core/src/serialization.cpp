#include "skein/serialization.hpp"

#include "skein/error.hpp"

namespace skein {

namespace {

[[noreturn]] void bad(const std::string& what) { throw SkeinError(ErrorCode::Serialization, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json scalar_to_json(const CyclotomicNumber& x) {
  Json coeffs = Json::array();
  for (const auto& q : x.coeffs()) coeffs.push_back(rational_to_string(q));
  return Json{{"coeffs", coeffs}};
}

Json scalar_to_json(const BigComplex& x) {
  return Json{{"re", x.re().to_string()}, {"im", x.im().to_string()}, {"prec_bits", x.precision()}};
}

Json scalar_to_json(const LaurentPoly& x) { return Json{{"laurent", x.to_string()}}; }

CyclotomicNumber scalar_from_json(const Json& j, const ExactRootSystem& rs) {
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) bad("'coeffs' must be a nonempty array");
  std::vector<mpq_class> qs;
  for (const auto& c : coeffs) {
    if (!c.is_string()) bad("coefficients must be strings 'num/den'");
    try {
      qs.push_back(parse_rational(c.get<std::string>()));
    } catch (const SkeinError& e) {
      bad(e.what());
    }
  }
  if (qs.size() != static_cast<std::size_t>(rs.field()->degree()) && qs.size() != 1) {
    bad("expected " + std::to_string(rs.field()->degree()) + " coefficients, got " +
        std::to_string(qs.size()));
  }
  return CyclotomicNumber(rs.field(), std::move(qs));
}

BigComplex scalar_from_json(const Json& j, const NumericRootSystem& rs) {
  const Json& re = field(j, "re");
  const Json& im = field(j, "im");
  if (!re.is_string() || !im.is_string()) bad("'re' and 'im' must be decimal strings");
  long prec = rs.precision_bits();
  if (j.contains("prec_bits")) prec = std::max(prec, j.at("prec_bits").get<long>());
  try {
    return BigComplex(BigFloat::parse(re.get<std::string>(), prec), BigFloat::parse(im.get<std::string>(), prec));
  } catch (const SkeinError& e) {
    bad(e.what());
  }
}

template <class F>
Matrix<F> matrix_from_json(const Json& j, const RootSystem<F>& rs) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  Matrix<F> m(rows, cols, rs.zero());
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != cols) bad("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(j.at(i).at(c), rs);
  }
  return m;
}

template <class F>
Json to_json(const Representation<F>& rep, const RootSystem<F>& rs) {
  Json gens = Json::object();
  for (const auto& [name, m] : rep.generators) gens[name] = matrix_to_json(m);
  Json punct = Json::object();
  for (const auto& [name, v] : rep.punctures) punct[name] = scalar_to_json(v);
  return Json{{"surface", to_string(rep.surface)},
              {"N", rep.N},
              {"backend", to_string(rs.backend())},
              {"precision_bits", rs.precision_bits()},
              {"dim", rep.dim},
              {"generators", gens},
              {"punctures", punct},
              {"provenance", rep.provenance}};
}

Backend backend_of(const Json& j) {
  const std::string b = field(j, "backend").get<std::string>();
  if (b == "exact") return Backend::ExactCyclotomic;
  if (b == "bigfloat") return Backend::BigComplex;
  bad("unknown backend '" + b + "'");
}

std::pair<int, long> root_of(const Json& j) {
  return {field(j, "N").get<int>(), j.value("precision_bits", 0L)};
}

template <class F>
Representation<F> representation_from_json(const Json& j, const RootSystem<F>& rs) {
  Representation<F> rep;
  try {
    rep.surface = parse_surface(field(j, "surface").get<std::string>());
    rep.N = field(j, "N").get<int>();
    rep.dim = field(j, "dim").get<std::size_t>();
  } catch (const Json::exception& e) {
    bad(e.what());
  }
  if (rep.N != rs.N()) {
    bad("representation has N = " + std::to_string(rep.N) + " but the root system has N = " +
        std::to_string(rs.N()));
  }
  for (const auto& [name, m] : field(j, "generators").items()) rep.generators[name] = matrix_from_json(m, rs);
  for (const auto& [name, v] : field(j, "punctures").items()) rep.punctures[name] = scalar_from_json(v, rs);
  rep.provenance = j.value("provenance", Json::object());
  validate_shape(rep);
  return rep;
}

template <class Ring>
Json to_json(const NormalForm<Ring>& nf) {
  Json out = Json::array();
  for (const auto& [m, c] : nf.terms) {
    out.push_back(Json{{"monomial", to_string(m, nf.surface)}, {"coeff", scalar_to_json(c)}});
  }
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

template Matrix<CyclotomicNumber> matrix_from_json(const Json&, const ExactRootSystem&);
template Matrix<BigComplex> matrix_from_json(const Json&, const NumericRootSystem&);
template Json to_json(const Representation<CyclotomicNumber>&, const ExactRootSystem&);
template Json to_json(const Representation<BigComplex>&, const NumericRootSystem&);
template Representation<CyclotomicNumber> representation_from_json(const Json&, const ExactRootSystem&);
template Representation<BigComplex> representation_from_json(const Json&, const NumericRootSystem&);
template Json to_json(const NormalForm<LaurentRing>&);
template Json to_json(const NormalForm<ExactRootSystem>&);
template Json to_json(const NormalForm<NumericRootSystem>&);

}  // namespace skein
