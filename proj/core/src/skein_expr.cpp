#include "skein/skein_expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

// ---------------------------------------------------------------------------
// AST builders and printing

ExprPtr SkeinExpr::rational(mpq_class q) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Rational;
  n->rational = std::move(q);
  return n;
}

ExprPtr SkeinExpr::a_power(long k) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::APower;
  n->exponent = k;
  return n;
}

ExprPtr SkeinExpr::generator(int symbol) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Generator;
  n->symbol = symbol;
  return n;
}

ExprPtr SkeinExpr::sum(std::vector<ExprPtr> terms) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Sum;
  n->children = std::move(terms);
  return n;
}

ExprPtr SkeinExpr::product(std::vector<ExprPtr> factors) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Product;
  n->children = std::move(factors);
  return n;
}

ExprPtr SkeinExpr::power(ExprPtr base, long exponent) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Power;
  n->exponent = exponent;
  n->children = {std::move(base)};
  return n;
}

ExprPtr SkeinExpr::negate(ExprPtr x) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Negate;
  n->children = {std::move(x)};
  return n;
}

namespace {

std::string symbol_name(const Surface& surface, int symbol) {
  if (symbol < 3) return "X" + std::to_string(symbol + 1);
  return surface.puncture_names().at(static_cast<std::size_t>(symbol - 3));
}

bool is_atomic(const ExprNode& n) {
  return n.kind == ExprNode::Kind::Generator || n.kind == ExprNode::Kind::ImaginaryUnit ||
         (n.kind == ExprNode::Kind::Rational && n.rational >= 0 && n.rational.get_den() == 1) ||
         (n.kind == ExprNode::Kind::APower && n.exponent >= 0);
}

void print(const Surface& s, const ExprNode& n, std::ostringstream& out) {
  switch (n.kind) {
    case ExprNode::Kind::Rational:
      if (n.rational.get_den() == 1) {
        out << n.rational.get_num().get_str();
      } else {
        out << n.rational.get_num().get_str() << "/" << n.rational.get_den().get_str();
      }
      return;
    case ExprNode::Kind::APower:
      if (n.exponent == 1) {
        out << "A";
      } else {
        out << "A^" << n.exponent;
      }
      return;
    case ExprNode::Kind::ImaginaryUnit: out << "i"; return;
    case ExprNode::Kind::Generator: out << symbol_name(s, n.symbol); return;
    case ExprNode::Kind::Sum:
      out << "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out << " + ";
        print(s, *n.children[i], out);
      }
      out << ")";
      return;
    case ExprNode::Kind::Product:
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out << " ";
        const bool wrap = n.children[i]->kind == ExprNode::Kind::Negate ||
                          (n.children[i]->kind == ExprNode::Kind::Rational && !is_atomic(*n.children[i]));
        if (wrap) out << "(";
        print(s, *n.children[i], out);
        if (wrap) out << ")";
      }
      return;
    case ExprNode::Kind::Power: {
      const bool wrap = !is_atomic(*n.children[0]) || n.children[0]->kind == ExprNode::Kind::APower;
      if (wrap) out << "(";
      print(s, *n.children[0], out);
      if (wrap) out << ")";
      out << "^" << n.exponent;
      return;
    }
    case ExprNode::Kind::Negate:
      out << "-(";
      print(s, *n.children[0], out);
      out << ")";
      return;
  }
}

bool has_generator(const ExprNode& n) {
  if (n.kind == ExprNode::Kind::Generator) return true;
  return std::any_of(n.children.begin(), n.children.end(),
                     [](const ExprPtr& c) { return has_generator(*c); });
}

// ---------------------------------------------------------------------------
// Lexer and parser

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, i_, ""});
        return out;
      }
      const std::size_t start = i_;
      const unsigned char c = static_cast<unsigned char>(src_[i_]);
      if (match("\xE2\x88\x92")) {
        out.push_back({Tok::Minus, start, "-"});
      } else if (match("\xC2\xB7")) {
        out.push_back({Tok::Star, start, "*"});
      } else if (c == '+') {
        ++i_;
        out.push_back({Tok::Plus, start, "+"});
      } else if (c == '-') {
        ++i_;
        out.push_back({Tok::Minus, start, "-"});
      } else if (c == '*') {
        ++i_;
        out.push_back({Tok::Star, start, "*"});
      } else if (c == '^') {
        ++i_;
        out.push_back({Tok::Caret, start, "^"});
      } else if (c == '(') {
        ++i_;
        out.push_back({Tok::LParen, start, "("});
      } else if (c == ')') {
        ++i_;
        out.push_back({Tok::RParen, start, ")"});
      } else if (std::isdigit(c) || (c == '.' && i_ + 1 < src_.size() && std::isdigit(src_[i_ + 1]))) {
        out.push_back({Tok::Number, start, number()});
      } else if (std::isalpha(c)) {
        // A letter followed by digits only, so "X1X2" lexes as two tokens.
        ++i_;
        while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
        out.push_back({Tok::Ident, start, std::string(src_.substr(start, i_ - start))});
      } else {
        throw ParseError(ErrorCode::SyntaxError, start,
                         "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
      }
    }
  }

 private:
  void skip_space() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  }
  bool match(std::string_view s) {
    if (src_.substr(i_, s.size()) == s) {
      i_ += s.size();
      return true;
    }
    return false;
  }
  bool digit_at(std::size_t k) const {
    return k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]));
  }
  std::string number() {
    const std::size_t start = i_;
    while (digit_at(i_)) ++i_;
    bool integer = true;
    if (i_ < src_.size() && src_[i_] == '.') {
      integer = false;
      ++i_;
      while (digit_at(i_)) ++i_;
    }
    if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
      std::size_t k = i_ + 1;
      if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
      if (digit_at(k)) {
        integer = false;
        i_ = k;
        while (digit_at(i_)) ++i_;
      }
    }
    if (integer && i_ < src_.size() && src_[i_] == '/' && digit_at(i_ + 1)) {
      ++i_;
      while (digit_at(i_)) ++i_;
    }
    return std::string(src_.substr(start, i_ - start));
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const Surface& surface) : toks_(std::move(toks)), surface_(surface) {}

  ExprPtr parse_all() {
    ExprPtr e = sum();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(ErrorCode::SyntaxError, t.pos, msg);
  }

  ExprPtr sum() {
    std::vector<ExprPtr> terms;
    const std::size_t pos = peek().pos;
    bool negative = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negative = next().kind == Tok::Minus;
    while (true) {
      ExprPtr t = term();
      terms.push_back(negative ? SkeinExpr::negate(std::move(t)) : std::move(t));
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        negative = next().kind == Tok::Minus;
      } else {
        break;
      }
    }
    if (terms.size() == 1) return terms.front();
    auto n = std::make_shared<ExprNode>(*SkeinExpr::sum(std::move(terms)));
    n->position = pos;
    return n;
  }

  bool starts_factor(Tok k) const { return k == Tok::Number || k == Tok::Ident || k == Tok::LParen; }

  ExprPtr term() {
    const std::size_t pos = peek().pos;
    std::vector<ExprPtr> factors{factor()};
    while (true) {
      if (peek().kind == Tok::Star) {
        next();
        if (!starts_factor(peek().kind)) fail(peek(), "expected a factor after '*'");
        factors.push_back(factor());
      } else if (starts_factor(peek().kind)) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return factors.front();
    auto n = std::make_shared<ExprNode>(*SkeinExpr::product(std::move(factors)));
    n->position = pos;
    return n;
  }

  ExprPtr factor() {
    const Token& start = peek();
    ExprPtr base = primary();
    if (peek().kind != Tok::Caret) return base;
    next();
    bool negative = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negative = next().kind == Tok::Minus;
    const Token& num = peek();
    if (num.kind != Tok::Number ||
        !std::all_of(num.text.begin(), num.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail(num, "expected an integer exponent");
    }
    next();
    if (num.text.size() > 7 || std::stol(num.text) > kMaxExponent) {
      throw ParseError(ErrorCode::ExponentCap, num.pos,
                       "exponent " + num.text + " exceeds the cap " + std::to_string(kMaxExponent));
    }
    long e = std::stol(num.text);
    if (negative) e = -e;
    if (e < 0 && has_generator(*base)) {
      throw ParseError(ErrorCode::SyntaxError, num.pos,
                       "negative exponent on an expression containing generators");
    }
    if (base->kind == ExprNode::Kind::APower) {
      auto n = std::make_shared<ExprNode>(*SkeinExpr::a_power(base->exponent * e));
      n->position = start.pos;
      return n;
    }
    auto n = std::make_shared<ExprNode>(*SkeinExpr::power(std::move(base), e));
    n->position = start.pos;
    return n;
  }

  ExprPtr primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number: {
        mpq_class q;
        try {
          q = parse_rational(t.text);
        } catch (const SkeinError&) {
          fail(t, "malformed number '" + t.text + "'");
        }
        auto n = std::make_shared<ExprNode>(*SkeinExpr::rational(q));
        n->position = t.pos;
        return n;
      }
      case Tok::Ident: {
        auto n = std::make_shared<ExprNode>();
        n->position = t.pos;
        if (t.text == "A") {
          n->kind = ExprNode::Kind::APower;
          n->exponent = 1;
          return n;
        }
        if (t.text == "i") {
          n->kind = ExprNode::Kind::ImaginaryUnit;
          return n;
        }
        n->kind = ExprNode::Kind::Generator;
        n->symbol = lookup(t);
        return n;
      }
      case Tok::LParen: {
        ExprPtr inner = sum();
        if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
        next();
        return inner;
      }
      case Tok::End: fail(t, "unexpected end of input");
      default: fail(t, "unexpected '" + t.text + "'");
    }
  }

  int lookup(const Token& t) const {
    if (surface_.has_x_generators()) {
      if (t.text == "X1") return 0;
      if (t.text == "X2") return 1;
      if (t.text == "X3") return 2;
    }
    const auto names = surface_.puncture_names();
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (names[j] == t.text) return 3 + static_cast<int>(j);
    }
    throw ParseError(ErrorCode::UnknownGenerator, t.pos,
                     "unknown generator '" + t.text + "' for surface " + to_string(surface_));
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Surface surface_;
};

}  // namespace

std::string SkeinExpr::to_string() const {
  std::ostringstream out;
  print(surface_, *root_, out);
  return out.str();
}

SkeinExpr parse(std::string_view text, const Surface& surface) {
  Lexer lexer(text);
  Parser parser(lexer.run(), surface);
  return SkeinExpr(surface, parser.parse_all());
}

// ---------------------------------------------------------------------------
// Monomials and normal forms

bool Monomial::is_unit() const {
  return std::all_of(x.begin(), x.end(), [](auto e) { return e == 0; }) &&
         std::all_of(p.begin(), p.end(), [](auto e) { return e == 0; });
}

std::string to_string(const Monomial& m, const Surface& surface) {
  std::vector<std::string> parts;
  const auto names = surface.puncture_names();
  for (std::size_t j = 0; j < names.size() && j < 4; ++j) {
    if (m.p[j] == 0) continue;
    parts.push_back(names[j] + (m.p[j] == 1 ? "" : "^" + std::to_string(m.p[j])));
  }
  for (int s = 0; s < 3; ++s) {
    if (m.x[static_cast<std::size_t>(s)] == 0) continue;
    const auto e = m.x[static_cast<std::size_t>(s)];
    parts.push_back("X" + std::to_string(s + 1) + (e == 1 ? "" : "^" + std::to_string(e)));
  }
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "\xC2\xB7" + parts[i];
  return out;
}

template <class Ring>
RewriteSystem<Ring>::RewriteSystem(const Ring& ring, const Surface& surface)
    : ring_(ring), surface_(surface) {
  const auto a = [&](long k) { return ring_.a_pow(k); };
  using P = std::array<std::uint32_t, 4>;
  if (surface.is_torus()) {
    const Coeff c = a(3) - a(-1);   // A (A^2 - A^-2)
    const Coeff d = a(1) - a(-3);   // A^-1 (A^2 - A^-2)
    rules_[0] = {{a(2), {0, 1}, {}}, {-c, {2}, {}}};
    rules_[1] = {{a(2), {1, 2}, {}}, {-c, {0}, {}}};
    rules_[2] = {{a(-2), {0, 2}, {}}, {d, {1}, {}}};
  } else if (surface.kind == SurfaceKind::Sphere4) {
    const Coeff c = a(6) - a(-2);   // A^2 (A^4 - A^-4)
    const Coeff e = a(4) - ring_.one();  // A^2 (A^2 - A^-2)
    const Coeff d = a(2) - a(-6);   // A^-2 (A^4 - A^-4)
    const Coeff f = ring_.one() - a(-4);  // A^-2 (A^2 - A^-2)
    rules_[0] = {{a(4), {0, 1}, {}}, {-c, {2}, {}}, {-e, {}, P{1, 0, 0, 1}}, {-e, {}, P{0, 1, 1, 0}}};
    rules_[1] = {{a(4), {1, 2}, {}}, {-c, {0}, {}}, {-e, {}, P{1, 1, 0, 0}}, {-e, {}, P{0, 0, 1, 1}}};
    rules_[2] = {{a(-4), {0, 2}, {}}, {d, {1}, {}}, {f, {}, P{1, 0, 1, 0}}, {f, {}, P{0, 1, 0, 1}}};
  }
}

template <class Ring>
const std::vector<typename RewriteSystem<Ring>::RuleTerm>& RewriteSystem<Ring>::rule(int hi, int lo) const {
  if (hi == 1 && lo == 0) return rules_[0];
  if (hi == 2 && lo == 1) return rules_[1];
  if (hi == 2 && lo == 0) return rules_[2];
  throw SkeinError(ErrorCode::InvalidArgument, "no rewrite rule for an ordered pair");
}

namespace {

using Run = std::pair<int, std::uint64_t>;

/// A word X_{i1}^{e1} ... X_{ik}^{ek} with adjacent letters distinct, plus
/// the central puncture exponents. Ordered so that larger (length,
/// inversions) come last; rewriting always strictly lowers that pair.
struct WordKey {
  std::uint64_t length = 0;
  std::uint64_t inversions = 0;
  std::vector<Run> runs;
  std::array<std::uint64_t, 4> p{};

  friend auto operator<=>(const WordKey&, const WordKey&) = default;
};

void push_run(std::vector<Run>& runs, int letter, std::uint64_t count) {
  if (count == 0) return;
  if (!runs.empty() && runs.back().first == letter) {
    runs.back().second += count;
  } else {
    runs.emplace_back(letter, count);
  }
}

WordKey make_key(std::vector<Run> runs, const std::array<std::uint64_t, 4>& p) {
  WordKey k;
  k.runs = std::move(runs);
  k.p = p;
  std::array<std::uint64_t, 3> seen{};  // counts of letters to the left
  for (const auto& [letter, count] : k.runs) {
    k.length += count;
    for (int hi = letter + 1; hi < 3; ++hi) k.inversions += seen[static_cast<std::size_t>(hi)] * count;
    seen[static_cast<std::size_t>(letter)] += count;
  }
  return k;
}

void check_cap(std::uint64_t e) {
  if (e > static_cast<std::uint64_t>(kMaxExponent)) {
    throw SkeinError(ErrorCode::ExponentCap,
                     "monomial exponent " + std::to_string(e) + " exceeds the cap " +
                         std::to_string(kMaxExponent));
  }
}

template <class Ring, class Coeff>
void accumulate(const Ring& ring, std::map<Monomial, Coeff>& terms, const Monomial& m, const Coeff& c) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (inserted) {
    if (c.is_zero()) terms.erase(it);
    return;
  }
  const double ctx = std::max(ring.magnitude(it->second), ring.magnitude(c));
  it->second += c;
  if (ring.is_zero(it->second, ctx)) terms.erase(it);
}

template <class Ring>
class Reducer {
 public:
  using Coeff = typename Ring::value_type;

  Reducer(const RewriteSystem<Ring>& rs, RewriteStrategy strategy) : rs_(rs), strategy_(strategy) {}

  void add(const WordKey& key, const Coeff& c) {
    auto [it, inserted] = work_.try_emplace(key, c);
    if (!inserted) it->second += c;
  }

  std::map<Monomial, Coeff> run() {
    std::map<Monomial, Coeff> out;
    const Ring& ring = rs_.ring();
    while (!work_.empty()) {
      auto last = std::prev(work_.end());
      WordKey key = last->first;
      Coeff coeff = std::move(last->second);
      work_.erase(last);
      if (coeff.is_zero()) continue;
      if (key.inversions == 0) {
        Monomial m;
        for (const auto& [letter, count] : key.runs) {
          check_cap(count);
          m.x[static_cast<std::size_t>(letter)] = static_cast<std::uint32_t>(count);
        }
        for (std::size_t j = 0; j < 4; ++j) {
          check_cap(key.p[j]);
          m.p[j] = static_cast<std::uint32_t>(key.p[j]);
        }
        accumulate(ring, out, m, coeff);
        continue;
      }
      // Pick the boundary between two runs whose letters are out of order.
      std::size_t b = key.runs.size();
      for (std::size_t i = 0; i + 1 < key.runs.size(); ++i) {
        if (key.runs[i].first > key.runs[i + 1].first) {
          b = i;
          if (strategy_ == RewriteStrategy::Leftmost) break;
        }
      }
      const int hi = key.runs[b].first;
      const int lo = key.runs[b + 1].first;
      for (const auto& term : rs_.rule(hi, lo)) {
        std::vector<Run> runs;
        for (std::size_t i = 0; i < b; ++i) push_run(runs, key.runs[i].first, key.runs[i].second);
        push_run(runs, hi, key.runs[b].second - 1);
        for (int letter : term.letters) push_run(runs, letter, 1);
        push_run(runs, lo, key.runs[b + 1].second - 1);
        for (std::size_t i = b + 2; i < key.runs.size(); ++i) push_run(runs, key.runs[i].first, key.runs[i].second);
        auto p = key.p;
        for (std::size_t j = 0; j < 4; ++j) p[j] += term.p[j];
        add(make_key(std::move(runs), p), coeff * term.coeff);
      }
    }
    return out;
  }

 private:
  const RewriteSystem<Ring>& rs_;
  RewriteStrategy strategy_;
  std::map<WordKey, Coeff> work_;
};

template <class Ring>
using Terms = std::map<Monomial, typename Ring::value_type>;

template <class Ring>
Terms<Ring> multiply(const Terms<Ring>& a, const Terms<Ring>& b, const RewriteSystem<Ring>& rs,
                     RewriteStrategy strategy) {
  Reducer<Ring> reducer(rs, strategy);
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::vector<Run> runs;
      for (int s = 0; s < 3; ++s) push_run(runs, s, ma.x[static_cast<std::size_t>(s)]);
      for (int s = 0; s < 3; ++s) push_run(runs, s, mb.x[static_cast<std::size_t>(s)]);
      std::array<std::uint64_t, 4> p{};
      for (std::size_t j = 0; j < 4; ++j) p[j] = std::uint64_t{ma.p[j]} + mb.p[j];
      reducer.add(make_key(std::move(runs), p), ca * cb);
    }
  }
  return reducer.run();
}

template <class Ring>
Terms<Ring> constant(const Ring&, typename Ring::value_type c) {
  Terms<Ring> out;
  if (!c.is_zero()) out.emplace(Monomial{}, std::move(c));
  return out;
}

template <class Ring>
typename Ring::value_type scalar_value(const Terms<Ring>& t, const Ring& ring) {
  if (t.empty()) return ring.zero();
  if (t.size() != 1 || !t.begin()->first.is_unit()) {
    throw SkeinError(ErrorCode::Unsupported, "negative exponent on a non-scalar expression");
  }
  return t.begin()->second;
}

template <class Ring>
typename Ring::value_type ring_pow(const Ring& ring, typename Ring::value_type x, long e) {
  if (e < 0) {
    x = ring.inverse(x);
    e = -e;
  }
  auto result = ring.one();
  while (e != 0) {
    if (e & 1L) result = result * x;
    e >>= 1;
    if (e != 0) x = x * x;
  }
  return result;
}

template <class Ring>
Terms<Ring> reduce_node(const ExprNode& n, const RewriteSystem<Ring>& rs, RewriteStrategy strategy) {
  const Ring& ring = rs.ring();
  switch (n.kind) {
    case ExprNode::Kind::Rational: return constant(ring, ring.from_rational(n.rational));
    case ExprNode::Kind::APower: return constant(ring, ring.a_pow(n.exponent));
    case ExprNode::Kind::ImaginaryUnit: return constant(ring, ring.imaginary_unit());
    case ExprNode::Kind::Generator: {
      Monomial m;
      if (n.symbol < 3) {
        m.x[static_cast<std::size_t>(n.symbol)] = 1;
      } else {
        m.p[static_cast<std::size_t>(n.symbol - 3)] = 1;
      }
      Terms<Ring> out;
      out.emplace(m, ring.one());
      return out;
    }
    case ExprNode::Kind::Sum: {
      Terms<Ring> out;
      for (const auto& c : n.children) {
        for (const auto& [m, v] : reduce_node(*c, rs, strategy)) accumulate(ring, out, m, v);
      }
      return out;
    }
    case ExprNode::Kind::Negate: {
      Terms<Ring> out = reduce_node(*n.children[0], rs, strategy);
      for (auto& [m, v] : out) v = -v;
      return out;
    }
    case ExprNode::Kind::Product: {
      Terms<Ring> out = reduce_node(*n.children[0], rs, strategy);
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        out = multiply(out, reduce_node(*n.children[i], rs, strategy), rs, strategy);
      }
      return out;
    }
    case ExprNode::Kind::Power: {
      Terms<Ring> base = reduce_node(*n.children[0], rs, strategy);
      if (n.exponent < 0) return constant(ring, ring_pow(ring, scalar_value(base, ring), n.exponent));
      Terms<Ring> result = constant(ring, ring.one());
      long e = n.exponent;
      while (e != 0) {
        if (e & 1L) result = multiply(result, base, rs, strategy);
        e >>= 1;
        if (e != 0) base = multiply(base, base, rs, strategy);
      }
      return result;
    }
  }
  return {};
}

}  // namespace

template <class Ring>
NormalForm<Ring> normalize(const SkeinExpr& expr, const RewriteSystem<Ring>& rs, RewriteStrategy strategy) {
  if (!(expr.surface() == rs.surface())) {
    throw SkeinError(ErrorCode::SurfaceMismatch, "expression is on " + to_string(expr.surface()) +
                                                     " but the rewrite system is for " +
                                                     to_string(rs.surface()));
  }
  return {expr.surface(), reduce_node(*expr.root(), rs, strategy)};
}

template <class Ring>
std::string to_string(const NormalForm<Ring>& nf, const Ring& ring) {
  if (nf.terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : nf.terms) {
    std::string cs = ring.to_string(c);
    bool negative = false;
    const bool compound = cs.find(' ') != std::string::npos;
    if (!compound && !cs.empty() && cs.front() == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    std::string term;
    if (m.is_unit()) {
      term = compound ? "(" + cs + ")" : cs;
    } else if (!compound && cs == "1") {
      term = to_string(m, nf.surface);
    } else {
      term = (compound ? "(" + cs + ")" : cs) + "\xC2\xB7" + to_string(m, nf.surface);
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

template <class Ring>
bool equal(const NormalForm<Ring>& a, const NormalForm<Ring>& b, const Ring& ring) {
  if (!(a.surface == b.surface)) return false;
  auto ia = a.terms.begin();
  auto ib = b.terms.begin();
  // Monomials present on one side only must have negligible coefficients.
  while (ia != a.terms.end() || ib != b.terms.end()) {
    if (ib == b.terms.end() || (ia != a.terms.end() && ia->first < ib->first)) {
      if (!ring.is_zero(ia->second)) return false;
      ++ia;
    } else if (ia == a.terms.end() || ib->first < ia->first) {
      if (!ring.is_zero(ib->second)) return false;
      ++ib;
    } else {
      const double ctx = std::max(ring.magnitude(ia->second), ring.magnitude(ib->second));
      if (!ring.is_zero(ia->second - ib->second, ctx)) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

template <class F>
const Matrix<F>& symbol_matrix(const Representation<F>& rep, int symbol) {
  return rep.at(symbol_name(rep.surface, symbol));
}

template <class F>
Matrix<F> matrix_pow(const RootSystem<F>& rs, Matrix<F> base, long e, std::size_t dim) {
  Matrix<F> result = Matrix<F>::identity(dim, rs.zero(), rs.one());
  while (e != 0) {
    if (e & 1L) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

template <class F>
F eval_scalar(const ExprNode& n, const RootSystem<F>& rs) {
  switch (n.kind) {
    case ExprNode::Kind::Rational: return rs.from_rational(n.rational);
    case ExprNode::Kind::APower: return rs.a_pow(n.exponent);
    case ExprNode::Kind::ImaginaryUnit: return rs.imaginary_unit();
    case ExprNode::Kind::Sum: {
      F out = rs.zero();
      for (const auto& c : n.children) out += eval_scalar(*c, rs);
      return out;
    }
    case ExprNode::Kind::Negate: return -eval_scalar(*n.children[0], rs);
    case ExprNode::Kind::Product: {
      F out = rs.one();
      for (const auto& c : n.children) out = out * eval_scalar(*c, rs);
      return out;
    }
    case ExprNode::Kind::Power: return rs.pow(eval_scalar(*n.children[0], rs), n.exponent);
    case ExprNode::Kind::Generator: break;
  }
  throw SkeinError(ErrorCode::Unsupported, "generator inside a scalar subexpression");
}

template <class F>
Matrix<F> eval_node(const ExprNode& n, const Representation<F>& rep, const RootSystem<F>& rs) {
  if (!has_generator(n)) return Matrix<F>::scalar(rep.dim, eval_scalar(n, rs), rs.zero());
  switch (n.kind) {
    case ExprNode::Kind::Generator: return symbol_matrix(rep, n.symbol);
    case ExprNode::Kind::Sum: {
      Matrix<F> out(rep.dim, rep.dim, rs.zero());
      for (const auto& c : n.children) out += eval_node(*c, rep, rs);
      return out;
    }
    case ExprNode::Kind::Negate: return -eval_node(*n.children[0], rep, rs);
    case ExprNode::Kind::Product: {
      Matrix<F> out = eval_node(*n.children[0], rep, rs);
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        const ExprNode& c = *n.children[i];
        if (!has_generator(c)) {
          out *= eval_scalar(c, rs);
        } else {
          out = out * eval_node(c, rep, rs);
        }
      }
      return out;
    }
    case ExprNode::Kind::Power:
      return matrix_pow(rs, eval_node(*n.children[0], rep, rs), n.exponent, rep.dim);
    default: break;
  }
  throw SkeinError(ErrorCode::InvalidArgument, "malformed expression tree");
}

}  // namespace

template <class F>
Matrix<F> evaluate(const SkeinExpr& expr, const Representation<F>& rep, const RootSystem<F>& rs) {
  if (!(expr.surface() == rep.surface)) {
    throw SkeinError(ErrorCode::SurfaceMismatch, "expression is on " + to_string(expr.surface()) +
                                                     " but the representation is on " +
                                                     to_string(rep.surface));
  }
  return eval_node(*expr.root(), rep, rs);
}

template <class F>
Matrix<F> evaluate(const NormalForm<RootSystem<F>>& nf, const Representation<F>& rep, const RootSystem<F>& rs) {
  if (!(nf.surface == rep.surface)) {
    throw SkeinError(ErrorCode::SurfaceMismatch, "normal form and representation are on different surfaces");
  }
  Matrix<F> out(rep.dim, rep.dim, rs.zero());
  std::map<std::pair<int, std::uint32_t>, Matrix<F>> powers;
  const auto power_of = [&](int symbol, std::uint32_t e) -> const Matrix<F>& {
    auto key = std::make_pair(symbol, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      it = powers.emplace(key, matrix_pow(rs, symbol_matrix(rep, symbol), e, rep.dim)).first;
    }
    return it->second;
  };
  for (const auto& [m, c] : nf.terms) {
    Matrix<F> term = Matrix<F>::scalar(rep.dim, c, rs.zero());
    for (std::size_t j = 0; j < 4; ++j)
      if (m.p[j] != 0) term = term * power_of(3 + static_cast<int>(j), m.p[j]);
    for (int s = 0; s < 3; ++s)
      if (m.x[static_cast<std::size_t>(s)] != 0) term = term * power_of(s, m.x[static_cast<std::size_t>(s)]);
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presentation tables

SkeinExpr puncture_element(const Surface& surface) {
  switch (surface.kind) {
    case SurfaceKind::Torus1:
    case SurfaceKind::Torus0:
      return parse("A X1 X2 X3 - A^2 X1^2 - A^-2 X2^2 - A^2 X3^2 + A^2 + A^-2", surface);
    case SurfaceKind::Sphere4:
      return parse(
          "A^2 X1 X2 X3 - A^4 X1^2 - A^-4 X2^2 - A^4 X3^2"
          " - A^2 (P0 P1 + P2 P3) X1 - A^-2 (P0 P2 + P1 P3) X2 - A^2 (P0 P3 + P1 P2) X3"
          " + (A^2 + A^-2)^2 - (P0 P1 P2 P3 + P0^2 + P1^2 + P2^2 + P3^2)",
          surface);
    case SurfaceKind::SphereK: break;
  }
  throw SkeinError(ErrorCode::Unsupported, "no puncture element for surface " + to_string(surface));
}

std::vector<NamedRelation> relations(const Surface& surface) {
  std::vector<NamedRelation> out;
  const auto add = [&](std::string name, const std::string& text) {
    out.push_back({std::move(name), parse(text, surface)});
  };
  switch (surface.kind) {
    case SurfaceKind::Torus1:
    case SurfaceKind::Torus0:
      add("X1X2 q-commutator", "A X1 X2 - A^-1 X2 X1 - (A^2 - A^-2) X3");
      add("X2X3 q-commutator", "A X2 X3 - A^-1 X3 X2 - (A^2 - A^-2) X1");
      add("X3X1 q-commutator", "A X3 X1 - A^-1 X1 X3 - (A^2 - A^-2) X2");
      if (surface.kind == SurfaceKind::Torus1) {
        out.push_back({"puncture loop", SkeinExpr(surface, SkeinExpr::sum({SkeinExpr::generator(3),
                                                                          SkeinExpr::negate(puncture_element(surface).root())}))});
      } else {
        out.push_back({"closed puncture", SkeinExpr(surface, SkeinExpr::sum({puncture_element(surface).root(),
                                                                            SkeinExpr::a_power(2),
                                                                            SkeinExpr::a_power(-2)}))});
      }
      break;
    case SurfaceKind::Sphere4:
      for (const char* p : {"P0", "P1", "P2", "P3"}) {
        for (const char* x : {"X1", "X2", "X3"}) {
          add(std::string(p) + " central with " + x, std::string(p) + " " + x + " - " + x + " " + p);
        }
      }
      add("X1X2 q-commutator", "A^2 X1 X2 - A^-2 X2 X1 - (A^4 - A^-4) X3 - (A^2 - A^-2)(P0 P3 + P1 P2)");
      add("X2X3 q-commutator", "A^2 X2 X3 - A^-2 X3 X2 - (A^4 - A^-4) X1 - (A^2 - A^-2)(P0 P1 + P2 P3)");
      add("X3X1 q-commutator", "A^2 X3 X1 - A^-2 X1 X3 - (A^4 - A^-4) X2 - (A^2 - A^-2)(P0 P2 + P1 P3)");
      out.push_back({"cubic", puncture_element(surface)});
      break;
    case SurfaceKind::SphereK: break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Instantiations

#define SKEIN_INSTANTIATE_RING(R)                                                              \
  template class RewriteSystem<R>;                                                             \
  template NormalForm<R> normalize(const SkeinExpr&, const RewriteSystem<R>&, RewriteStrategy); \
  template std::string to_string(const NormalForm<R>&, const R&);                              \
  template bool equal(const NormalForm<R>&, const NormalForm<R>&, const R&);

SKEIN_INSTANTIATE_RING(LaurentRing)
SKEIN_INSTANTIATE_RING(ExactRootSystem)
SKEIN_INSTANTIATE_RING(NumericRootSystem)
#undef SKEIN_INSTANTIATE_RING

template Matrix<CyclotomicNumber> evaluate(const SkeinExpr&, const Representation<CyclotomicNumber>&,
                                           const ExactRootSystem&);
template Matrix<BigComplex> evaluate(const SkeinExpr&, const Representation<BigComplex>&,
                                     const NumericRootSystem&);
template Matrix<CyclotomicNumber> evaluate(const NormalForm<ExactRootSystem>&,
                                           const Representation<CyclotomicNumber>&, const ExactRootSystem&);
template Matrix<BigComplex> evaluate(const NormalForm<NumericRootSystem>&, const Representation<BigComplex>&,
                                     const NumericRootSystem&);

}  // namespace skein
