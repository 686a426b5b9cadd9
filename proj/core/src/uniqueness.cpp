#include "skein/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "skein/chebyshev.hpp"
#include "skein/invariants.hpp"
#include "skein/linalg.hpp"
#include "skein/serialization.hpp"

namespace skein {

template <class F>
IntertwinerSearch<F> intertwiner_search(const RootSystem<F>& rs, const Representation<F>& a,
                                        const Representation<F>& b) {
  const std::size_t n = a.dim;
  const Nullspace<F> ns = nullspace(rs, intertwiner_system(rs, a, b));
  IntertwinerSearch<F> out;
  out.solution_dimension = ns.basis.size();
  if (ns.basis.empty() || n == 0) return out;

  Matrix<F> m(n, n, rs.zero());
  for (std::size_t s = 0; s < ns.basis.size(); ++s) {
    const F weight = rs.from_int(static_cast<long>(s + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) += weight * ns.basis[s][i * n + j];
    }
  }
  std::size_t bi = 0, bj = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double mag = m(i, j).magnitude();
      if (mag > best) {
        best = mag;
        bi = i;
        bj = j;
      }
    }
  }
  m *= rs.inverse(m(bi, bj));

  IsomorphismCertificate<F> cert;
  cert.solution_dimension = out.solution_dimension;
  cert.condition = condition_estimate(rs, m);
  if (!std::isfinite(cert.condition) || cert.condition * rs.tolerance().rel_eps >= 1.0) return out;
  for (const auto& name : a.surface.generator_names()) {
    const Matrix<F>& ga = a.at(name);
    const Matrix<F>& gb = b.at(name);
    const double scale = std::max({1.0, max_abs(ga), max_abs(gb)});
    const double r = max_abs(m * ga - gb * m) / scale;
    cert.residuals[name] = r;
    cert.max_residual = std::max(cert.max_residual, r);
  }
  cert.intertwiner = std::move(m);
  out.certificate = std::move(cert);
  return out;
}

template <class F>
nlohmann::json to_json(const IsomorphismCertificate<F>& cert) {
  return Json{{"intertwiner", matrix_to_json(cert.intertwiner)},
              {"residuals", cert.residuals},
              {"max_residual", cert.max_residual},
              {"condition", cert.condition},
              {"solution_dimension", cert.solution_dimension}};
}

template <class F>
std::vector<F> gauge_orbit(const RootSystem<F>& rs, const F& x3) {
  std::vector<F> out;
  const F inv = rs.inverse(x3);
  for (int l = 0; l < rs.N(); ++l) out.push_back(x3 * rs.a_pow(2L * l));
  for (int l = 0; l < rs.N(); ++l) out.push_back(inv * rs.a_pow(2L * l));
  return out;
}

template <class F>
std::vector<TorusParams<F>> gauge_orbit(const RootSystem<F>& rs, const TorusParams<F>& params) {
  std::vector<TorusParams<F>> out;
  for (F& x : gauge_orbit(rs, params.x3)) {
    TorusParams<F> v = params;
    v.x3 = std::move(x);
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
std::vector<SphereParams<F>> gauge_orbit(const RootSystem<F>& rs, const SphereParams<F>& params) {
  std::vector<SphereParams<F>> out;
  for (F& x : gauge_orbit(rs, params.x3)) {
    SphereParams<F> v = params;
    v.x3 = std::move(x);
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Genericity

bool GenericityReport::flag(const std::string& name) const {
  for (const auto& f : flags) {
    if (f.name == name) return f.holds;
  }
  throw SkeinError(ErrorCode::InvalidArgument, "no genericity flag named '" + name + "'");
}

nlohmann::json GenericityReport::to_json() const {
  Json f = Json::object();
  for (const auto& g : flags) f[g.name] = g.holds;
  return Json{{"surface", surface}, {"flags", f}, {"generic", generic},
              {"generic_up_to_reindexing", generic_up_to_reindexing}};
}

GenericityReport genericity_check(const NumericRootSystem& rs, const Surface& surface,
                                  const std::array<BigComplex, 3>& t, const std::vector<BigComplex>& p) {
  GenericityReport out;
  out.surface = to_string(surface);
  const BigComplex two = rs.from_int(2);
  const auto near = [&](const BigComplex& x, const BigComplex& target) {
    return rs.is_zero(x - target, std::max(x.magnitude(), target.magnitude()));
  };
  const auto pm2 = [&](const BigComplex& x) { return near(x, two) || near(x, -two); };
  const bool t3_ok = !pm2(t[2]);
  out.flags.push_back({"t3 != +-2", t3_ok});

  if (surface.is_torus()) {
    const BigComplex k = t[0] * t[1] * t[2] + t[0] * t[0] + t[1] * t[1];
    const double kctx = std::max({(t[0] * t[1] * t[2]).magnitude(), (t[0] * t[0]).magnitude(),
                                  (t[1] * t[1]).magnitude()});
    const bool k_ok = !rs.is_zero(k, kctx);
    out.flags.push_back({"t1 t2 t3 + t1^2 + t2^2 != 0", k_ok});

    const bool all_pm2 = pm2(t[0]) && pm2(t[1]) && pm2(t[2]);
    const bool all_zero = rs.is_zero(t[0], 1.0) && rs.is_zero(t[1], 1.0) && rs.is_zero(t[2], 1.0);
    const BigComplex w = BigComplex(BigFloat(0L, rs.precision_bits()),
                                    BigFloat(2L, rs.precision_bits()) / sqrt(BigFloat(3L, rs.precision_bits())));
    const auto pm_w = [&](const BigComplex& x) { return near(x, w) || near(x, -w); };
    bool mixed = false;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, l = (i + 2) % 3;
      mixed = mixed || (pm2(t[static_cast<std::size_t>(i)]) && pm_w(t[static_cast<std::size_t>(j)]) &&
                        pm_w(t[static_cast<std::size_t>(l)]));
    }
    const BigComplex target = rs.from_rational(mpq_class(-8, 3));
    mixed = mixed && near(t[0] * t[1] * t[2], target);
    out.flags.push_back({"exceptional: all t_i = +-2", all_pm2});
    out.flags.push_back({"exceptional: all t_i = 0", all_zero});
    out.flags.push_back({"exceptional: one t_i = +-2, others +-(2/sqrt3) i, product -8/3", mixed});
    out.generic = t3_ok && k_ok;
    out.generic_up_to_reindexing = !(all_pm2 || all_zero || mixed);
    return out;
  }
  if (surface.kind == SurfaceKind::Sphere4) {
    if (p.size() != 4) throw SkeinError(ErrorCode::InvalidArgument, "Sphere4 genericity needs four puncture values");
    const BigComplex four = rs.from_int(4);
    const auto product_at = [&](const BigComplex& s) {
      return chebyshev_pair_factor(rs, s, p[0] * p[3], p[0] * p[0] + p[3] * p[3] - four) *
             chebyshev_pair_factor(rs, s, p[1] * p[2], p[1] * p[1] + p[2] * p[2] - four);
    };
    const double ctx = std::pow(std::max(1.0, t[2].magnitude()), 4);
    const bool lemma_ok = !rs.is_zero(product_at(t[2]), ctx);
    const bool statement_ok = !rs.is_zero(product_at(-t[2]), ctx);
    out.flags.push_back({"t3 != T_N(r_i) for all i", lemma_ok});
    out.flags.push_back({"-t3 != T_N(r_i) for all i", statement_ok});
    out.generic = t3_ok && lemma_ok;
    out.generic_up_to_reindexing = out.generic;
    return out;
  }
  out.generic = true;
  out.generic_up_to_reindexing = true;
  return out;
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

BigComplex annulus(std::mt19937_64& rng, long prec) {
  std::uniform_real_distribution<double> r2(0.25, 4.0);
  std::uniform_real_distribution<double> theta(0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(r2(rng));
  const double th = theta(rng);
  return BigComplex(r * std::cos(th), r * std::sin(th), prec);
}

BigComplex joukowski(const NumericRootSystem& rs, std::mt19937_64& rng) {
  const BigComplex a = annulus(rng, rs.precision_bits());
  return a + rs.inverse(a);
}

}  // namespace

TorusSample sample_torus(const NumericRootSystem& rs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    TorusSample s{joukowski(rs, rng), joukowski(rs, rng), joukowski(rs, rng), rs.zero()};
    const BigComplex c = rs.from_int(2) - s.t1 * s.t2 * s.t3 - s.t1 * s.t1 - s.t2 * s.t2 - s.t3 * s.t3;
    const auto roots = solve_chebyshev(rs, c).values;
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    s.p = roots[pick(rng)];
    if (genericity_check(rs, Surface::torus1(), {s.t1, s.t2, s.t3}).generic) return s;
  }
}

SphereSample sample_sphere(const NumericRootSystem& rs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    SphereSample s;
    for (auto& v : s.p) v = joukowski(rs, rng);
    s.x3 = annulus(rng, rs.precision_bits());
    s.u = annulus(rng, rs.precision_bits());
    const BigComplex x3n = rs.pow(s.x3, rs.N());
    s.t3 = x3n + rs.inverse(x3n);
    const std::vector<BigComplex> pv(s.p.begin(), s.p.end());
    if (!genericity_check(rs, Surface::sphere4(), {rs.zero(), rs.zero(), s.t3}, pv).generic) continue;
    const auto params = make_sphere_params(rs, s.p, s.x3, rs.zero(), rs.zero());
    const auto rep = build_sphere_rep_with_u(rs, params, s.u);
    s.t1 = scalar_part(chebyshev_eval(rs, rs.N(), rep.at("X1"))).mean;
    s.t2 = scalar_part(chebyshev_eval(rs, rs.N(), rep.at("X2"))).mean;
    return s;
  }
}

// ---------------------------------------------------------------------------
// Experiment

namespace {

constexpr double kIntertwinerThreshold = 1e-20;

double rel_err(const BigComplex& got, const BigComplex& want) {
  return (got - want).magnitude() / std::max(1.0, want.magnitude());
}

void compare_all(const NumericRootSystem& rs, const std::vector<Representation<BigComplex>>& reps,
                 SampleRecord& rec) {
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      ++rec.pairs_tested;
      const auto search = intertwiner_search(rs, reps[i], reps[j]);
      if (!search.certificate) {
        rec.failures.push_back("no invertible intertwiner between variants " + std::to_string(i) + " and " +
                               std::to_string(j) + " (solution dimension " +
                               std::to_string(search.solution_dimension) + ")");
        continue;
      }
      const auto& cert = *search.certificate;
      rec.worst_residual = std::max(rec.worst_residual, cert.max_residual);
      rec.worst_condition = std::max(rec.worst_condition, cert.condition);
      if (cert.max_residual < kIntertwinerThreshold) {
        ++rec.pairs_matched;
      } else {
        rec.failures.push_back("intertwiner residual " + format_magnitude(cert.max_residual) + " between variants " +
                               std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

template <class Check>
void roundtrip(const NumericRootSystem& rs, const Representation<BigComplex>& rep, std::size_t variant,
               SampleRecord& rec, Check&& check) {
  try {
    const auto inv = extract_invariants(rs, rep);
    const double err = check(inv);
    rec.worst_roundtrip = std::max(rec.worst_roundtrip, err);
    if (!(err < kIntertwinerThreshold)) {
      rec.failures.push_back("variant " + std::to_string(variant) + " invariant round-trip error " +
                             format_magnitude(err));
    }
    if (!inv.compatibility_ok) rec.failures.push_back("variant " + std::to_string(variant) + " fails compatibility");
  } catch (const SkeinError& e) {
    rec.failures.push_back("variant " + std::to_string(variant) + ": " + e.what());
  }
}

SampleRecord run_torus_sample(const NumericRootSystem& rs, int index, std::uint64_t seed) {
  SampleRecord rec;
  rec.index = index;
  const TorusSample s = sample_torus(rs, seed);
  rec.params = Json{{"seed", seed}, {"t1", scalar_to_json(s.t1)}, {"t2", scalar_to_json(s.t2)},
                    {"t3", scalar_to_json(s.t3)}, {"p", scalar_to_json(s.p)}};
  std::vector<Representation<BigComplex>> reps;
  try {
    const auto base = torus_params_from_shadow(rs, s.t1, s.t2, s.t3, s.p);
    for (const auto& v : gauge_orbit(rs, base)) reps.push_back(build_torus_rep(rs, v));
  } catch (const SkeinError& e) {
    rec.failures.push_back(std::string("construction: ") + e.what());
    return rec;
  }
  rec.variants = static_cast<int>(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    roundtrip(rs, reps[i], i, rec, [&](const ShadowInvariants<BigComplex>& inv) {
      return std::max({rel_err(inv.t.at("X1"), s.t1), rel_err(inv.t.at("X2"), s.t2), rel_err(inv.t.at("X3"), s.t3),
                       rel_err(inv.punctures.at("P"), s.p)});
    });
  }
  compare_all(rs, reps, rec);
  rec.pass = rec.failures.empty();
  return rec;
}

/// Closed-torus shadows come from the (x3, u) family with p = -A^2 - A^-2,
/// since random traces are almost never compatible with that p.
SampleRecord run_closed_torus_sample(const NumericRootSystem& rs, int index, std::uint64_t seed) {
  SampleRecord rec;
  rec.index = index;
  std::mt19937_64 rng(seed);
  const BigComplex x3 = annulus(rng, rs.precision_bits());
  const BigComplex u = annulus(rng, rs.precision_bits());
  const auto s = torus_params_from_family(rs, x3, closed_torus_puncture(rs), u);
  rec.params = Json{{"seed", seed}, {"t1", scalar_to_json(s.t1)}, {"t2", scalar_to_json(s.t2)},
                    {"t3", scalar_to_json(s.t3)}};
  std::vector<Representation<BigComplex>> reps;
  try {
    const auto base = torus_params_from_shadow(rs, s.t1, s.t2, s.t3, s.p);
    for (const auto& v : gauge_orbit(rs, base)) reps.push_back(build_torus_rep(rs, v, true));
  } catch (const SkeinError& e) {
    rec.failures.push_back(std::string("construction: ") + e.what());
    return rec;
  }
  rec.variants = static_cast<int>(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    roundtrip(rs, reps[i], i, rec, [&](const ShadowInvariants<BigComplex>& inv) {
      return std::max({rel_err(inv.t.at("X1"), s.t1), rel_err(inv.t.at("X2"), s.t2), rel_err(inv.t.at("X3"), s.t3)});
    });
  }
  compare_all(rs, reps, rec);
  rec.pass = rec.failures.empty();
  return rec;
}

SampleRecord run_sphere_sample(const NumericRootSystem& rs, int index, std::uint64_t seed) {
  SampleRecord rec;
  rec.index = index;
  const SphereSample s = sample_sphere(rs, seed);
  Json pj = Json::array();
  for (const auto& v : s.p) pj.push_back(scalar_to_json(v));
  rec.params = Json{{"seed", seed}, {"p", pj}, {"t1", scalar_to_json(s.t1)}, {"t2", scalar_to_json(s.t2)},
                    {"t3", scalar_to_json(s.t3)}, {"x3_source", scalar_to_json(s.x3)},
                    {"u_source", scalar_to_json(s.u)}};
  std::vector<Representation<BigComplex>> reps;
  try {
    auto base = make_sphere_params(rs, s.p, solve_chebyshev(rs, s.t3).b, s.t1, s.t2);
    for (const auto& v : gauge_orbit(rs, base)) reps.push_back(build_sphere_rep_gauge(rs, v));
  } catch (const SkeinError& e) {
    rec.failures.push_back(std::string("construction: ") + e.what());
    return rec;
  }
  rec.variants = static_cast<int>(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    roundtrip(rs, reps[i], i, rec, [&](const ShadowInvariants<BigComplex>& inv) {
      double err = std::max({rel_err(inv.t.at("X1"), s.t1), rel_err(inv.t.at("X2"), s.t2),
                             rel_err(inv.t.at("X3"), s.t3)});
      for (std::size_t k = 0; k < 4; ++k) {
        err = std::max(err, rel_err(inv.punctures.at("P" + std::to_string(k)), s.p[k]));
      }
      return err;
    });
  }
  compare_all(rs, reps, rec);
  rec.pass = rec.failures.empty();
  return rec;
}

}  // namespace

ExperimentReport uniqueness_experiment(const ExperimentConfig& config) {
  if (!config.surface.is_torus() && config.surface.kind != SurfaceKind::Sphere4) {
    throw SkeinError(ErrorCode::Unsupported, "experiments run on Torus1, Torus0 or Sphere4");
  }
  if (config.samples < 0) throw SkeinError(ErrorCode::InvalidArgument, "sample count must be nonnegative");
  const NumericRootSystem rs = make_numeric_root_system(config.N, config.precision_bits);

  std::mt19937_64 master(config.seed);
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(config.samples));
  for (auto& s : seeds) s = master();

  ExperimentReport report;
  report.seed = config.seed;
  report.surface = to_string(config.surface);
  report.N = config.N;
  report.samples = config.samples;
  report.precision_bits = config.precision_bits;
  report.residual_threshold = kIntertwinerThreshold;
  report.records.resize(seeds.size());

  const bool closed = config.surface.kind == SurfaceKind::Torus0;
  const auto run = [&](std::size_t i) {
    const int index = static_cast<int>(i);
    if (config.surface.kind == SurfaceKind::Sphere4) {
      report.records[i] = run_sphere_sample(rs, index, seeds[i]);
    } else if (closed) {
      report.records[i] = run_closed_torus_sample(rs, index, seeds[i]);
    } else {
      report.records[i] = run_torus_sample(rs, index, seeds[i]);
    }
  };

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, seeds.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < seeds.size(); ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < seeds.size(); i += threads) run(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  for (const auto& r : report.records) {
    if (!r.pass) ++report.failures;
    report.worst_residual = std::max(report.worst_residual, r.worst_residual);
  }
  report.pass = report.failures == 0;
  return report;
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SampleRecord, index, params, variants, pairs_tested, pairs_matched, worst_residual,
                                   worst_condition, worst_roundtrip, failures, pass)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ExperimentReport, seed, surface, N, samples, precision_bits, residual_threshold,
                                   records, failures, worst_residual, pass)

nlohmann::json to_json(const ExperimentReport& report) { return Json(report); }

ExperimentReport experiment_report_from_json(const nlohmann::json& j) {
  try {
    return j.get<ExperimentReport>();
  } catch (const Json::exception& e) {
    throw SkeinError(ErrorCode::Serialization, e.what());
  }
}

#define SKEIN_INSTANTIATE_UNIQ(F, RS)                                                                        \
  template IntertwinerSearch<F> intertwiner_search(const RS&, const Representation<F>&, const Representation<F>&); \
  template nlohmann::json to_json(const IsomorphismCertificate<F>&);                                         \
  template std::vector<F> gauge_orbit(const RS&, const F&);                                                   \
  template std::vector<TorusParams<F>> gauge_orbit(const RS&, const TorusParams<F>&);                         \
  template std::vector<SphereParams<F>> gauge_orbit(const RS&, const SphereParams<F>&);

SKEIN_INSTANTIATE_UNIQ(CyclotomicNumber, ExactRootSystem)
SKEIN_INSTANTIATE_UNIQ(BigComplex, NumericRootSystem)
#undef SKEIN_INSTANTIATE_UNIQ

}  // namespace skein
