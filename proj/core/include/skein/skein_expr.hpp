#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/matrix.hpp"
#include "skein/representation.hpp"
#include "skein/root_system.hpp"
#include "skein/surface.hpp"

namespace skein {

inline constexpr long kMaxExponent = 1L << 16;

/// Syntax tree of a noncommutative polynomial in the generators of a surface.
/// Symbols 0, 1, 2 are X1, X2, X3; symbol 3 + j is the j-th puncture name of
/// the surface.
struct ExprNode {
  enum class Kind { Rational, APower, ImaginaryUnit, Generator, Sum, Product, Power, Negate };

  Kind kind = Kind::Rational;
  mpq_class rational;
  long exponent = 0;  // APower and Power
  int symbol = 0;     // Generator
  std::vector<std::shared_ptr<const ExprNode>> children;
  std::size_t position = 0;
};
using ExprPtr = std::shared_ptr<const ExprNode>;

class SkeinExpr {
 public:
  SkeinExpr(Surface surface, ExprPtr root) : surface_(surface), root_(std::move(root)) {}

  const Surface& surface() const { return surface_; }
  const ExprPtr& root() const { return root_; }
  std::string to_string() const;

  // Builders used by tests and relation tables.
  static ExprPtr rational(mpq_class q);
  static ExprPtr a_power(long k);
  static ExprPtr generator(int symbol);
  static ExprPtr sum(std::vector<ExprPtr> terms);
  static ExprPtr product(std::vector<ExprPtr> factors);
  static ExprPtr power(ExprPtr base, long exponent);
  static ExprPtr negate(ExprPtr x);

 private:
  Surface surface_;
  ExprPtr root_;
};

/// Grammar (precedence power > product > sum):
///   sum     := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (['*'] factor)*          juxtaposition multiplies
///   factor  := primary ['^' ['+'|'-'] integer]
///   primary := number | 'A' | 'i' | generator | '(' sum ')'
/// Numbers are integers, decimals with optional exponent, or p/q. The
/// characters U+2212 (minus) and U+00B7 (middle dot) are accepted as '-' and
/// '*'. Errors are ParseError with the byte offset of the offending token.
SkeinExpr parse(std::string_view text, const Surface& surface);

struct Monomial {
  std::array<std::uint32_t, 3> x{};
  std::array<std::uint32_t, 4> p{};

  bool is_unit() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// "1", "X1^2·X3", "P0·P3·X2" (punctures named for the surface).
std::string to_string(const Monomial& m, const Surface& surface);

template <class Ring>
struct NormalForm {
  using Coeff = typename Ring::value_type;
  Surface surface;
  std::map<Monomial, Coeff> terms;

  bool is_zero() const { return terms.empty(); }
};

enum class RewriteStrategy { Leftmost, Rightmost };

/// The presentation relations of a surface oriented as rewrite rules
///   X2 X1 -> ..., X3 X2 -> ..., X3 X1 -> ...
/// that sort X-words into the order X1 < X2 < X3. Puncture symbols are
/// central and ride along as exponents. Ring is a RootSystem or LaurentRing.
template <class Ring>
class RewriteSystem {
 public:
  using Coeff = typename Ring::value_type;

  RewriteSystem(const Ring& ring, const Surface& surface);

  const Ring& ring() const { return ring_; }
  const Surface& surface() const { return surface_; }

  struct RuleTerm {
    Coeff coeff;
    std::vector<int> letters;         // replacement X-letters (0..2)
    std::array<std::uint32_t, 4> p{}; // puncture exponents contributed
  };
  /// Rule for the out-of-order pair (hi, lo) with hi > lo.
  const std::vector<RuleTerm>& rule(int hi, int lo) const;

 private:
  Ring ring_;
  Surface surface_;
  std::array<std::vector<RuleTerm>, 3> rules_;  // index: (2,1)->0, (3,2)->1, (3,1)->2
};

template <class Ring>
NormalForm<Ring> normalize(const SkeinExpr& expr, const RewriteSystem<Ring>& rs,
                           RewriteStrategy strategy = RewriteStrategy::Leftmost);

template <class Ring>
std::string to_string(const NormalForm<Ring>& nf, const Ring& ring);

template <class Ring>
bool equal(const NormalForm<Ring>& a, const NormalForm<Ring>& b, const Ring& ring);

/// Homomorphic evaluation: generators to their matrices, scalars to scalar
/// matrices.
template <class F>
Matrix<F> evaluate(const SkeinExpr& expr, const Representation<F>& rep, const RootSystem<F>& rs);
template <class F>
Matrix<F> evaluate(const NormalForm<RootSystem<F>>& nf, const Representation<F>& rep,
                   const RootSystem<F>& rs);

/// Torus1: the polynomial in X1, X2, X3 that equals P.
/// Sphere4: the cubic relation written as LHS - RHS (evaluates to zero).
SkeinExpr puncture_element(const Surface& surface);

struct NamedRelation {
  std::string name;
  SkeinExpr defect;  // evaluates to zero in every representation
};

/// Every defining relation of the presentation as a defect expression.
std::vector<NamedRelation> relations(const Surface& surface);

}  // namespace skein
