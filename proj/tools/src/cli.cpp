#include "skein/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "skein/invariants.hpp"
#include "skein/serialization.hpp"
#include "skein/skein_expr.hpp"
#include "skein/sphere_rep.hpp"
#include "skein/torus_rep.hpp"
#include "skein/uniqueness.hpp"

namespace skein::cli {

namespace {

struct Common {
  int N = 3;
  std::string backend = "bigfloat";
  long precision = kDefaultPrecisionBits;
  double tol = 0.0;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool with_root = true) {
  if (with_root) {
    cmd->add_option("--N", c.N, "odd order of the root of unity (A^N = -1)")
        ->check(CLI::Validator(
            [](const std::string& v) {
              const long n = std::stol(v);
              return n >= 1 && n % 2 == 1 && n <= 499 ? std::string() : "N must be odd and in 1..499";
            },
            "ODD"))
        ->capture_default_str();
    cmd->add_option("--backend", c.backend, "scalar backend")
        ->check(CLI::IsMember({"exact", "bigfloat"}))
        ->capture_default_str();
    cmd->add_option("--precision", c.precision, "working precision in bits (bigfloat)")
        ->check(CLI::Range(64L, 1L << 20))
        ->capture_default_str();
  }
  cmd->add_option("--tol", c.tol, "override the relative tolerance (default 2^-precision/2)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "write the JSON artifact here instead of stdout");
}

template <class F>
RootSystem<F> apply_tol(RootSystem<F> rs, const Common& c) {
  if (c.tol > 0.0) return rs.with_tolerance(Tolerance{c.tol});
  return rs;
}

NumericRootSystem numeric_rs(const Common& c, long precision = 0) {
  return apply_tol(make_numeric_root_system(c.N, precision > 0 ? precision : c.precision), c);
}

ExactRootSystem exact_rs(const Common& c) { return apply_tol(make_exact_root_system(c.N), c); }

/// Scalars use the expression grammar with no generators: integers, decimals,
/// p/q, A, i and arithmetic.
template <class F>
F parse_scalar(const RootSystem<F>& rs, const std::string& text, const std::string& flag) {
  try {
    const Surface none = Surface::sphere(0);
    const SkeinExpr e = parse(text, none);
    return evaluate(e, small_sphere_rep(rs, std::vector<F>{}), rs)(0, 0);
  } catch (const SkeinError& err) {
    throw SkeinError(err.code(), flag + ": " + err.what());
  }
}

void write_json(const Json& j, const Common& c, std::ostream& out) {
  const std::string text = canonical_dump(j);
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw SkeinError(ErrorCode::InvalidArgument, "cannot write " + c.out);
  f << text;
  if (!f) throw SkeinError(ErrorCode::InvalidArgument, "failed writing " + c.out);
}

Json read_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw SkeinError(ErrorCode::InvalidArgument, "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw SkeinError(ErrorCode::Serialization, path + ": " + e.what());
  }
}

void summarize(const VerificationReport& r, std::ostream& err) {
  std::ostringstream s;
  s << std::setprecision(3) << "verification: " << (r.pass ? "pass" : "FAIL") << " (" << r.surface << ", dim "
    << r.dim << ", worst relation residual " << r.worst_relation() << ", commutant dimension "
    << r.commutant_dimension << ")\n";
  for (const auto& e : r.relations) {
    if (!e.pass) s << "  relation " << e.name << ": residual " << e.residual << " > " << e.threshold << "\n";
  }
  for (const auto& e : r.scalarity) {
    if (!e.pass) s << "  " << e.name << ": deviation " << e.residual << " > " << e.threshold << "\n";
  }
  err << s.str();
}

template <class F>
int emit_built(const RootSystem<F>& rs, const Representation<F>& rep, const Common& c, std::ostream& out,
               std::ostream& err) {
  const VerificationReport report = verify_relations(rs, rep);
  write_json(to_json(rep, rs), c, out);
  summarize(report, err);
  return report.pass ? kExitPass : kExitVerificationFailure;
}

/// Calls fn(rs, rep) with the backend recorded in the document.
template <class Fn>
int with_rep(const Json& doc, const Common& c, Fn&& fn) {
  const auto [N, precision] = root_of(doc);
  Common local = c;
  local.N = N;
  if (backend_of(doc) == Backend::ExactCyclotomic) {
    const ExactRootSystem rs = exact_rs(local);
    return fn(rs, representation_from_json(doc, rs));
  }
  const NumericRootSystem rs = numeric_rs(local, precision);
  return fn(rs, representation_from_json(doc, rs));
}

struct Inputs {
  std::string t1, t2, t3, p, x3, u;
  std::array<std::string, 4> ps;
};

bool has_family(const Inputs& in) { return !in.x3.empty() || !in.u.empty(); }

void require(const std::string& value, const char* flag, const char* context) {
  if (value.empty()) throw CLI::RequiredError(std::string(flag) + " (" + context + ")");
}

int cmd_build_torus(const Common& c, const Inputs& in, bool closed, std::ostream& out, std::ostream& err) {
  const auto family = [&](const auto& rs) {
    require(in.x3, "--x3", "family construction");
    require(in.u, "--u", "family construction");
    using F = typename std::decay_t<decltype(rs)>::value_type;
    const F p = closed ? closed_torus_puncture(rs) : parse_scalar(rs, in.p, "--p");
    const auto params = torus_params_from_family(rs, parse_scalar(rs, in.x3, "--x3"), p, parse_scalar(rs, in.u, "--u"));
    return emit_built(rs, build_torus_rep(rs, params, closed), c, out, err);
  };
  if (!closed) require(in.p, "--p", "puncture invariant");
  if (has_family(in)) {
    if (c.backend == "exact") return family(exact_rs(c));
    return family(numeric_rs(c));
  }
  if (c.backend == "exact") {
    throw SkeinError(ErrorCode::Unsupported,
                     "the exact backend builds from --x3 and --u (recovering x3 from t3 needs root extraction)");
  }
  require(in.t1, "--t1", "shadow construction");
  require(in.t2, "--t2", "shadow construction");
  require(in.t3, "--t3", "shadow construction");
  const NumericRootSystem rs = numeric_rs(c);
  const BigComplex t1 = parse_scalar(rs, in.t1, "--t1");
  const BigComplex t2 = parse_scalar(rs, in.t2, "--t2");
  const BigComplex t3 = parse_scalar(rs, in.t3, "--t3");
  if (closed) return emit_built(rs, closed_torus_rep(rs, t1, t2, t3), c, out, err);
  const auto params = torus_params_from_shadow(rs, t1, t2, t3, parse_scalar(rs, in.p, "--p"));
  return emit_built(rs, build_torus_rep(rs, params), c, out, err);
}

int cmd_build_sphere(const Common& c, const Inputs& in, std::ostream& out, std::ostream& err) {
  const char* names[4] = {"--p0", "--p1", "--p2", "--p3"};
  for (int i = 0; i < 4; ++i) require(in.ps[static_cast<std::size_t>(i)], names[i], "puncture invariants");
  const auto punctures = [&](const auto& rs) {
    using F = typename std::decay_t<decltype(rs)>::value_type;
    std::array<F, 4> p{rs.zero(), rs.zero(), rs.zero(), rs.zero()};
    for (std::size_t i = 0; i < 4; ++i) p[i] = parse_scalar(rs, in.ps[i], names[i]);
    return p;
  };
  const auto family = [&](const auto& rs) {
    require(in.x3, "--x3", "family construction");
    require(in.u, "--u", "family construction");
    const auto params = make_sphere_params(rs, punctures(rs), parse_scalar(rs, in.x3, "--x3"), rs.zero(), rs.zero());
    return emit_built(rs, build_sphere_rep_with_u(rs, params, parse_scalar(rs, in.u, "--u")), c, out, err);
  };
  if (has_family(in)) {
    if (c.backend == "exact") return family(exact_rs(c));
    return family(numeric_rs(c));
  }
  if (c.backend == "exact") {
    throw SkeinError(ErrorCode::Unsupported, "the exact backend builds spheres from --x3 and --u");
  }
  require(in.t1, "--t1", "shadow construction");
  require(in.t2, "--t2", "shadow construction");
  require(in.t3, "--t3", "shadow construction");
  const NumericRootSystem rs = numeric_rs(c);
  const auto rep = build_sphere_rep(rs, punctures(rs), parse_scalar(rs, in.t1, "--t1"),
                                    parse_scalar(rs, in.t2, "--t2"), parse_scalar(rs, in.t3, "--t3"));
  return emit_built(rs, rep, c, out, err);
}

int cmd_verify(const Common& c, const std::string& path, std::ostream& out, std::ostream& err) {
  return with_rep(read_json(path), c, [&](const auto& rs, const auto& rep) {
    const VerificationReport report = verify_relations(rs, rep);
    write_json(report.to_json(), c, out);
    summarize(report, err);
    return report.pass ? kExitPass : kExitVerificationFailure;
  });
}

int cmd_invariants(const Common& c, const std::string& path, std::ostream& out, std::ostream& err) {
  return with_rep(read_json(path), c, [&](const auto& rs, const auto& rep) {
    try {
      const auto inv = extract_invariants(rs, rep);
      write_json(to_json(inv), c, out);
      err << "invariants: compatibility " << (inv.compatibility_ok ? "ok" : "FAILS") << "\n";
      return inv.compatibility_ok ? kExitPass : kExitVerificationFailure;
    } catch (const SkeinError& e) {
      if (e.code() != ErrorCode::NonScalarChebyshev) throw;
      err << "invariants: " << e.what() << "\n";
      return kExitVerificationFailure;
    }
  });
}

int cmd_isomorphic(const Common& c, const std::string& a_path, const std::string& b_path, std::ostream& out,
                   std::ostream& err) {
  const Json a = read_json(a_path);
  const Json b = read_json(b_path);
  if (backend_of(a) != backend_of(b) || root_of(a).first != root_of(b).first) {
    throw SkeinError(ErrorCode::InvalidArgument, "representations use different backends or N");
  }
  return with_rep(a, c, [&](const auto& rs, const auto& rep_a) {
    const auto rep_b = representation_from_json(b, rs);
    const auto search = intertwiner_search(rs, rep_a, rep_b);
    Json j{{"isomorphic", search.certificate.has_value()}, {"solution_dimension", search.solution_dimension}};
    if (search.certificate) j["certificate"] = to_json(*search.certificate);
    write_json(j, c, out);
    err << "isomorphic: " << (search.certificate ? "yes" : "no") << " (intertwiner space dimension "
        << search.solution_dimension << ")\n";
    return search.certificate ? kExitPass : kExitVerificationFailure;
  });
}

template <class Ring>
int emit_normal_form(const Ring& ring, const SkeinExpr& expr, const std::string& text, RewriteStrategy strategy,
                     bool json, const Common& c, std::ostream& out) {
  const RewriteSystem<Ring> system(ring, expr.surface());
  const auto nf = normalize(expr, system, strategy);
  const std::string s = to_string(nf, ring);
  if (json || !c.out.empty()) {
    write_json(Json{{"surface", to_string(expr.surface())}, {"expr", text}, {"normal_form", s}, {"terms", to_json(nf)}},
               c, out);
  } else {
    out << s << "\n";
  }
  return kExitPass;
}

int cmd_normalize(const Common& c, bool n_given, const std::string& surface, const std::string& text,
                  const std::string& strategy_name, bool json, std::ostream& out) {
  const Surface s = parse_surface(surface);
  const SkeinExpr expr = parse(text, s);
  const RewriteStrategy strategy =
      strategy_name == "rightmost" ? RewriteStrategy::Rightmost : RewriteStrategy::Leftmost;
  if (!n_given) return emit_normal_form(LaurentRing{}, expr, text, strategy, json, c, out);
  if (c.backend == "exact") return emit_normal_form(exact_rs(c), expr, text, strategy, json, c, out);
  return emit_normal_form(numeric_rs(c), expr, text, strategy, json, c, out);
}

int cmd_experiment(const Common& c, const std::string& surface, int samples, std::uint64_t seed, unsigned threads,
                   std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  cfg.surface = parse_surface(surface);
  cfg.N = c.N;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.precision_bits = c.precision;
  cfg.threads = threads;
  const ExperimentReport report = uniqueness_experiment(cfg);
  write_json(to_json(report), c, out);
  std::ostringstream s;
  s << std::setprecision(3) << "experiment: " << (report.pass ? "pass" : "FAIL") << " (" << report.surface << ", N "
    << report.N << ", " << report.samples << " samples, " << report.failures << " failures, worst residual "
    << report.worst_residual << ")\n";
  err << s.str();
  return report.pass ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representations of Kauffman bracket skein algebras at odd roots of unity", "skein"};
  app.require_subcommand(1);

  Common common;
  Inputs in;
  std::string file_a, file_b, surface = "torus1", expr, strategy = "leftmost";
  bool json = false;
  int samples = 25;
  std::uint64_t seed = 1;
  unsigned threads = 0;

  const auto add_shadow = [&](CLI::App* cmd, bool with_p) {
    cmd->add_option("--t1", in.t1, "t1 = -Tr r(X1)");
    cmd->add_option("--t2", in.t2, "t2 = -Tr r(X2)");
    cmd->add_option("--t3", in.t3, "t3 = -Tr r(X3)");
    if (with_p) cmd->add_option("--p", in.p, "puncture invariant");
    cmd->add_option("--x3", in.x3, "gauge x3 (family construction, with --u)");
    cmd->add_option("--u", in.u, "up-cycle constant u (family construction, with --x3)");
  };

  auto* bt = app.add_subcommand("build-torus", "representation of the one-punctured torus algebra");
  add_common(bt, common);
  add_shadow(bt, true);
  auto* bct = app.add_subcommand("build-closed-torus", "representation of the closed torus algebra");
  add_common(bct, common);
  add_shadow(bct, false);
  auto* bs = app.add_subcommand("build-sphere", "representation of the four-punctured sphere algebra");
  add_common(bs, common);
  add_shadow(bs, false);
  for (std::size_t i = 0; i < 4; ++i) {
    bs->add_option("--p" + std::to_string(i), in.ps[i], "puncture invariant p" + std::to_string(i));
  }

  auto* vf = app.add_subcommand("verify", "check the defining relations of a representation file");
  add_common(vf, common, false);
  vf->add_option("file", file_a, "representation JSON")->required();
  auto* iv = app.add_subcommand("invariants", "extract classical shadow and puncture invariants");
  add_common(iv, common, false);
  iv->add_option("file", file_a, "representation JSON")->required();
  auto* iso = app.add_subcommand("isomorphic", "search for an intertwiner between two representations");
  add_common(iso, common, false);
  iso->add_option("a", file_a, "first representation JSON")->required();
  iso->add_option("b", file_b, "second representation JSON")->required();

  auto* nm = app.add_subcommand("normalize", "normal form of a skein expression");
  add_common(nm, common);
  nm->add_option("--surface", surface, "torus1, torus0, sphere4 or sphere<k>")->required();
  nm->add_option("--expr", expr, "expression, e.g. \"A X1 X2 - A^-1 X2 X1\"")->required();
  nm->add_option("--strategy", strategy, "rewrite order")->check(CLI::IsMember({"leftmost", "rightmost"}));
  nm->add_flag("--json", json, "print the normal form as JSON");

  auto* ex = app.add_subcommand("experiment", "gauge-orbit uniqueness experiment");
  add_common(ex, common);
  ex->add_option("--surface", surface, "torus1, torus0 or sphere4")->capture_default_str();
  ex->add_option("--samples", samples, "number of sampled shadows")->check(CLI::NonNegativeNumber)->capture_default_str();
  ex->add_option("--seed", seed, "random seed")->capture_default_str();
  ex->add_option("--threads", threads, "worker threads (0: hardware concurrency)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << "skein 0.1.0\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (bt->parsed()) return cmd_build_torus(common, in, false, out, err);
    if (bct->parsed()) return cmd_build_torus(common, in, true, out, err);
    if (bs->parsed()) return cmd_build_sphere(common, in, out, err);
    if (vf->parsed()) return cmd_verify(common, file_a, out, err);
    if (iv->parsed()) return cmd_invariants(common, file_a, out, err);
    if (iso->parsed()) return cmd_isomorphic(common, file_a, file_b, out, err);
    if (nm->parsed()) return cmd_normalize(common, nm->count("--N") > 0, surface, expr, strategy, json, out);
    if (ex->parsed()) return cmd_experiment(common, surface, samples, seed, threads, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SkeinError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace skein::cli
