// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "skein/uniqueness.hpp"
#include "support.hpp"

using namespace skein;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

/// Coefficients (lowest first) of prod_k (x - r_k).
std::vector<CyclotomicNumber> expand_roots(const ExactRootSystem& rs, const std::vector<CyclotomicNumber>& roots) {
  std::vector<CyclotomicNumber> poly{rs.one()};
  for (const auto& r : roots) {
    std::vector<CyclotomicNumber> next(poly.size() + 1, rs.zero());
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= r * poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

Outcome chebyshev_identities() {
  std::mt19937_64 rng(101);
  const int Ns[3] = {3, 5, 7};
  for (int i = 0; i < 50; ++i) {
    const int N = Ns[i % 3];
    const auto rs = make_exact_root_system(N);
    const auto a = test::random_cyclotomic(rs, rng);
    for (long n : {1L, 2L, 3L, static_cast<long>(N), 2L * N + 1}) {
      if (chebyshev_eval(rs, n, a + a.inverse()) != pow(a, n) + pow(a, -n)) {
        return fail("T_" + std::to_string(n) + "(a + 1/a) != a^n + a^-n for a = " + a.to_string());
      }
    }
  }
  int identities = 0;
  for (int N : Ns) {
    const auto rs = make_exact_root_system(N);
    const auto t = chebyshev_coeffs(N).coeffs;
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = test::random_cyclotomic(rs, rng);
      std::vector<CyclotomicNumber> roots;
      for (int k = 1; k <= N; ++k) roots.push_back(a * rs.a_pow(2L * k) + a.inverse() * rs.a_pow(-2L * k));
      const auto prod = expand_roots(rs, roots);
      if (prod.size() != t.size()) return fail("degree mismatch at N = " + std::to_string(N));
      for (std::size_t j = 0; j < t.size(); ++j) {
        CyclotomicNumber want = CyclotomicNumber(mpq_class(t[j]));
        if (j == 0) want -= pow(a, N) + pow(a, -N);
        if (prod[j] != want) return fail("coefficient x^" + std::to_string(j) + " differs at N = " + std::to_string(N));
      }
      ++identities;
    }
  }
  return {true, "50 exact Joukowski identities, " + std::to_string(identities) + " exact factorizations (N = 3, 5, 7)"};
}

Outcome torus_construction() {
  std::mt19937_64 rng(202);
  double worst_rel = 0.0, worst_dev = 0.0;
  int built = 0;
  for (int N : {3, 5, 7}) {
    const auto rs = make_numeric_root_system(N, 256);
    for (int i = 0; i < 100; ++i) {
      const auto d = test::draw_torus(rs, rng);
      const auto rep = build_torus_rep(rs, torus_params_from_shadow(rs, d.t1, d.t2, d.t3, d.p));
      const auto report = verify_relations(rs, rep);
      if (!report.pass) return fail("verify_relations failed: " + report.to_json().dump());
      if (rep.dim != static_cast<std::size_t>(N)) return fail("dimension " + std::to_string(rep.dim));
      if (report.commutant_dimension != 1) return fail("commutant dimension " + std::to_string(report.commutant_dimension));
      for (const auto& e : report.relations) worst_rel = std::max(worst_rel, e.residual);
      for (const auto& e : report.scalarity) worst_dev = std::max(worst_dev, e.residual);
      const auto p_dev = max_abs(rep.at("P") - Matrix<BigComplex>::scalar(rep.dim, d.p, rs.zero()));
      if (p_dev != 0.0) return fail("rho(P) differs from p Id by " + sci(p_dev));
      ++built;
    }
  }
  if (worst_rel >= 1e-30 || worst_dev >= 1e-30) {
    return fail("worst relation " + sci(worst_rel) + ", worst scalar deviation " + sci(worst_dev));
  }
  return {true, std::to_string(built) + " reps, worst relation " + sci(worst_rel) + ", worst T_N deviation " +
                    sci(worst_dev) + ", commutant 1"};
}

Outcome exact_torus_family() {
  std::mt19937_64 rng(303);
  const auto rs = make_exact_root_system(3);
  int done = 0, skipped = 0;
  while (done < 20) {
    const auto x3 = test::random_cyclotomic(rs, rng);
    const auto p = test::random_cyclotomic(rs, rng, false);
    const auto u = test::random_cyclotomic(rs, rng);
    Representation<CyclotomicNumber> rep;
    try {
      rep = build_torus_rep(rs, torus_params_from_family(rs, x3, p, u));
    } catch (const SkeinError&) {
      ++skipped;
      continue;
    }
    for (const auto& rel : relations(rep.surface)) {
      const auto m = evaluate(rel.defect, rep, rs);
      for (const auto& x : m.data()) {
        if (!x.is_zero()) return fail(rel.name + " nonzero: " + x.to_string());
      }
    }
    ++done;
  }
  return {true, "20 exact draws, every relation identically zero (" + std::to_string(skipped) + " degenerate draws skipped)"};
}

Outcome closed_torus() {
  std::mt19937_64 rng(404);
  double worst = 0.0;
  int skipped = 0;
  const int Ns[3] = {3, 5, 7};
  const auto ers = make_exact_root_system(3);
  for (int i = 0; i < 50; ++i) {
    const int N = Ns[i % 3];
    const auto rs = make_numeric_root_system(N);
    const auto fam = torus_params_from_family(rs, test::annulus_point(rng, 256, 1.05, 1.6), closed_torus_puncture(rs),
                                              test::annulus_point(rng, 256));
    const auto rep = closed_torus_rep(rs, fam.t1, fam.t2, fam.t3);
    const BigComplex& stored = rep.punctures.at("P");
    const BigComplex canonical = closed_torus_puncture(rs);
    if (!(stored.re() == canonical.re() && stored.im() == canonical.im())) {
      return fail("stored puncture scalar differs from -A^2 - A^-2 by " + sci((stored - canonical).magnitude()));
    }
    worst = std::max(worst, test::max_relation_residual(rs, rep));

    Representation<CyclotomicNumber> exact;
    for (;;) {
      try {
        exact = build_torus_rep(ers,
                                torus_params_from_family(ers, test::random_cyclotomic(ers, rng) + ers.from_int(3),
                                                         closed_torus_puncture(ers), test::random_cyclotomic(ers, rng)),
                                true);
        break;
      } catch (const SkeinError&) {
        ++skipped;
      }
    }
    for (const auto& rel : relations(exact.surface)) {
      if (max_abs(evaluate(rel.defect, exact, ers)) != 0.0) return fail("exact closed torus: " + rel.name);
    }
  }
  if (worst >= 1e-30) return fail("worst relation residual " + sci(worst));
  return {true, "50 shadows, stored p bitwise equal to -A^2 - A^-2 (plus 50 exact N = 3 checks, " +
                    std::to_string(skipped) + " degenerate draws skipped), worst relation " + sci(worst)};
}

Outcome sphere_ladder_identity() {
  std::mt19937_64 rng(505);
  double worst = 0.0;
  for (int N : {3, 5, 7}) {
    const auto rs = make_numeric_root_system(N);
    for (int i = 0; i < 100; ++i) {
      const auto ls = ladder_scalars_sphere(rs, test::draw_sphere_params(rs, rng));
      worst = std::max(worst, test::rel_diff(ls.product, ls.closed_form));
    }
  }
  if (worst >= 1e-25) return fail("worst relative mismatch " + sci(worst));
  return {true, "300 draws (N = 3, 5, 7), worst relative mismatch " + sci(worst)};
}

Outcome sphere_round_trip() {
  std::mt19937_64 rng(606);
  double worst_rel = 0.0, worst_inv = 0.0;
  for (int N : {3, 5}) {
    const auto rs = make_numeric_root_system(N);
    for (int i = 0; i < 50; ++i) {
      const auto params = test::draw_sphere_params(rs, rng);
      const auto source = build_sphere_rep_with_u(rs, params, test::annulus_point(rng, 256));
      const auto t = extract_invariants(rs, source).t;
      const auto rep = build_sphere_rep(rs, params.p, t.at("X1"), t.at("X2"), t.at("X3"));
      worst_rel = std::max(worst_rel, test::max_relation_residual(rs, rep));
      const auto back = extract_invariants(rs, rep);
      for (const char* g : {"X1", "X2", "X3"}) worst_inv = std::max(worst_inv, test::rel_diff(back.t.at(g), t.at(g)));
      for (std::size_t k = 0; k < 4; ++k) {
        worst_inv = std::max(worst_inv, test::rel_diff(back.punctures.at("P" + std::to_string(k)), params.p[k]));
      }
    }
  }
  if (worst_rel >= 1e-25 || worst_inv >= 1e-20) {
    return fail("worst relation " + sci(worst_rel) + ", worst invariant error " + sci(worst_inv));
  }
  return {true, "100 reps (N = 3, 5), worst relation " + sci(worst_rel) + ", worst invariant error " + sci(worst_inv)};
}

Outcome uniqueness() {
  std::ostringstream detail;
  bool pass = true;
  for (const Surface& s : {Surface::torus1(), Surface::sphere4()}) {
    for (int N : {3, 5}) {
      ExperimentConfig cfg;
      cfg.surface = s;
      cfg.N = N;
      cfg.samples = 25;
      cfg.seed = 2024;
      const auto report = uniqueness_experiment(cfg);
      int pairs = 0;
      bool variants_ok = true;
      for (const auto& r : report.records) {
        pairs += r.pairs_matched;
        variants_ok = variants_ok && r.variants == 2 * N && r.pairs_matched == r.pairs_tested;
      }
      pass = pass && report.pass && report.failures == 0 && variants_ok && report.worst_residual < 1e-20;
      detail << to_string(s) << "/N" << N << ": " << report.failures << " failures, " << pairs << " pairs, worst "
             << sci(report.worst_residual) << "; ";
    }
  }
  return {pass, detail.str()};
}

Outcome negative_control() {
  std::mt19937_64 rng(808);
  const auto rs = make_numeric_root_system(3);
  int empty = 0;
  for (int i = 0; i < 20; ++i) {
    const auto d = test::draw_torus(rs, rng);
    BigComplex other = d.p_choices[0];
    for (const auto& c : d.p_choices) {
      if (!rs.approx_eq(c, d.p)) {
        other = c;
        break;
      }
    }
    const auto a = build_torus_rep(rs, torus_params_from_shadow(rs, d.t1, d.t2, d.t3, d.p));
    const auto b = build_torus_rep(rs, torus_params_from_shadow(rs, d.t1, d.t2, d.t3, other));
    const auto search = intertwiner_search(rs, a, b);
    if (search.solution_dimension == 0 && !search.certificate) ++empty;
  }
  if (empty != 20) return fail(std::to_string(empty) + "/20 without intertwiner");
  return {true, "20/20 pairs with distinct p have intertwiner space of dimension 0"};
}

Outcome rewriter_soundness() {
  std::mt19937_64 rng(909);
  const auto rs = make_numeric_root_system(3);
  const LaurentRing ring;
  double worst = 0.0;
  std::ostringstream detail;
  for (const Surface& s : {Surface::torus1(), Surface::torus0(), Surface::sphere4()}) {
    Representation<BigComplex> rep;
    if (s.kind == SurfaceKind::Sphere4) {
      rep = build_sphere_rep_with_u(rs, test::draw_sphere_params(rs, rng), test::annulus_point(rng, 256));
    } else if (s.kind == SurfaceKind::Torus0) {
      const auto fam = torus_params_from_family(rs, test::annulus_point(rng, 256, 1.05, 1.6), closed_torus_puncture(rs),
                                                test::annulus_point(rng, 256));
      rep = closed_torus_rep(rs, fam.t1, fam.t2, fam.t3);
    } else {
      const auto d = test::draw_torus(rs, rng);
      rep = build_torus_rep(rs, torus_params_from_shadow(rs, d.t1, d.t2, d.t3, d.p));
    }
    const RewriteSystem<NumericRootSystem> numeric(rs, s);
    const RewriteSystem<LaurentRing> symbolic(ring, s);
    int idempotent = 0, confluent = 0;
    for (int i = 0; i < 200; ++i) {
      const auto e = test::random_expr(s, rng);
      const auto direct = evaluate(e, rep, rs);
      const auto via = evaluate(normalize(e, numeric), rep, rs);
      worst = std::max(worst, max_abs(direct - via) / std::max(1.0, max_abs(direct)));
      const auto left = normalize(e, symbolic, RewriteStrategy::Leftmost);
      const auto right = normalize(e, symbolic, RewriteStrategy::Rightmost);
      if (equal(left, right, ring)) ++confluent;
      if (equal(normalize(test::as_expr(left), symbolic), left, ring)) ++idempotent;
    }
    if (confluent != 200 || idempotent != 200) {
      return fail(to_string(s) + ": " + std::to_string(confluent) + "/200 order-independent, " +
                  std::to_string(idempotent) + "/200 idempotent");
    }
    detail << to_string(s) << " 200/200; ";
  }
  if (worst >= 1e-25) return fail("worst soundness residual " + sci(worst));
  detail << "worst relative residual " << sci(worst);
  return {true, detail.str()};
}

Outcome small_sphere() {
  std::mt19937_64 rng(1010);
  for (int i = 0; i < 20; ++i) {
    const int N = i % 2 == 0 ? 3 : 5;
    const auto rs = make_exact_root_system(N);
    const std::size_t k = static_cast<std::size_t>(i % 4);
    std::vector<CyclotomicNumber> p;
    for (std::size_t j = 0; j < k; ++j) p.push_back(test::random_cyclotomic(rs, rng, false));
    const auto inv = extract_invariants(rs, small_sphere_rep(rs, p));
    if (inv.punctures.size() != k) return fail("puncture count " + std::to_string(inv.punctures.size()));
    for (std::size_t j = 0; j < k; ++j) {
      if (inv.punctures.at("P" + std::to_string(j + 1)) != p[j]) return fail("puncture P" + std::to_string(j + 1));
      if (inv.puncture_shadow.at("P" + std::to_string(j + 1)) != chebyshev_eval(rs, N, p[j])) {
        return fail("shadow of P" + std::to_string(j + 1));
      }
    }
  }
  return {true, "20 exact tuples of 0 to 3 punctures recovered identically"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0: no runtime bound
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "chebyshev identities", 5.0, chebyshev_identities},
      {2, "torus construction", 60.0, torus_construction},
      {3, "exact torus family", 0.0, exact_torus_family},
      {4, "closed torus", 0.0, closed_torus},
      {5, "sphere ladder identity", 30.0, sphere_ladder_identity},
      {6, "sphere construction round-trip", 0.0, sphere_round_trip},
      {7, "uniqueness experiment", 300.0, uniqueness},
      {8, "negative control", 0.0, negative_control},
      {9, "rewriter soundness", 0.0, rewriter_soundness},
      {10, "small-sphere triviality", 0.0, small_sphere},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const Clock clock;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double t = clock.seconds();
    if (c.budget_s > 0.0 && t >= c.budget_s) {
      o.pass = false;
      o.detail += " [over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget]";
    }
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2f s", t);
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << ": " << o.detail << " ("
              << time_buf << ")" << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
