#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyring/embedding.hpp"
#include "polyring/ring.hpp"

namespace polyring {

/// A polynomial a_0 + a_1 X + ... + a_n X^n with coefficients (element
/// indices) in a fixed coefficient ring. Trailing zero coefficients are
/// allowed and ignored by comparisons.
class Polynomial {
 public:
  Polynomial(const FiniteRing& ring, std::vector<Elem> coeffs) : ring_id_(ring.id()), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_)
      if (!ring.contains(c))
        throw Error(ErrorKind::invalid_parameter,
                    "coefficient " + std::to_string(c) + " is not an element of " + ring.label());
  }

  static Polynomial zero(const FiniteRing& ring) { return Polynomial(ring, {}); }
  static Polynomial constant(const FiniteRing& ring, Elem c) { return Polynomial(ring, {c}); }
  static Polynomial monomial(const FiniteRing& ring, Elem c, std::size_t degree) {
    std::vector<Elem> coeffs(degree + 1, FiniteRing::zero());
    coeffs[degree] = c;
    return Polynomial(ring, std::move(coeffs));
  }
  /// The indeterminate X; needs a unity.
  static Polynomial x(const FiniteRing& ring) { return monomial(ring, ring.one(), 1); }

  std::uint64_t ring_id() const noexcept { return ring_id_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FiniteRing::zero(); }

  /// Largest i with a_i != 0; empty for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    for (std::size_t i = coeffs_.size(); i > 0; --i)
      if (coeffs_[i - 1] != FiniteRing::zero()) return i - 1;
    return std::nullopt;
  }
  bool is_zero() const noexcept { return !degree().has_value(); }

  Polynomial trimmed() const {
    Polynomial p = *this;
    const auto d = degree();
    p.coeffs_.resize(d ? *d + 1 : 0);
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    if (a.ring_id_ != b.ring_id_) return false;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a.coeff(i) != b.coeff(i)) return false;
    return true;
  }

 private:
  std::uint64_t ring_id_;
  std::vector<Elem> coeffs_;
};

/// A total function domain -> codomain stored as a dense vector of indices.
struct FunctionTable {
  std::uint64_t domain_id = 0;
  std::uint64_t codomain_id = 0;
  std::vector<Elem> values;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
};

inline FunctionTable make_table(const FiniteRing& ring, std::vector<Elem> values) {
  if (values.size() != ring.order())
    throw Error(ErrorKind::invalid_parameter, "table must have one value per element of " + ring.label());
  for (Elem v : values)
    if (!ring.contains(v)) throw Error(ErrorKind::invalid_parameter, "table value out of range");
  return FunctionTable{ring.id(), ring.id(), std::move(values)};
}

/// 0/1-valued table of a subset (needs a unity for the value 1).
inline FunctionTable characteristic_table(const FiniteRing& ring, const SubsetMask& s) {
  if (s.ring_id() != ring.id()) throw Error(ErrorKind::ring_mismatch, "subset belongs to another ring");
  const Elem one = ring.one();
  std::vector<Elem> values(ring.order(), FiniteRing::zero());
  for (Elem x = 0; x < ring.order(); ++x)
    if (s.contains(x)) values[x] = one;
  return FunctionTable{ring.id(), ring.id(), std::move(values)};
}

namespace detail {

inline void require_ring(const FiniteRing& ring, const Polynomial& f) {
  if (f.ring_id() != ring.id())
    throw Error(ErrorKind::ring_mismatch, "polynomial coefficients do not belong to " + ring.label());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Arithmetic in R[X]. Products use the monoid-ring convolution with
// coefficients multiplied in order, so they are correct for non-commutative R.

inline Polynomial add(const FiniteRing& ring, const Polynomial& f, const Polynomial& g) {
  detail::require_ring(ring, f);
  detail::require_ring(ring, g);
  std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring.add(f.coeff(i), g.coeff(i));
  return Polynomial(ring, std::move(out)).trimmed();
}

inline Polynomial negate(const FiniteRing& ring, const Polynomial& f) {
  detail::require_ring(ring, f);
  std::vector<Elem> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring.neg(f.coeff(i));
  return Polynomial(ring, std::move(out)).trimmed();
}

inline Polynomial sub(const FiniteRing& ring, const Polynomial& f, const Polynomial& g) {
  return add(ring, f, negate(ring, g));
}

inline Polynomial mul(const FiniteRing& ring, const Polynomial& f, const Polynomial& g) {
  detail::require_ring(ring, f);
  detail::require_ring(ring, g);
  const auto df = f.degree(), dg = g.degree();
  if (!df || !dg) return Polynomial::zero(ring);
  std::vector<Elem> out(*df + *dg + 1, FiniteRing::zero());
  for (std::size_t i = 0; i <= *df; ++i) {
    if (f.coeff(i) == FiniteRing::zero()) continue;
    for (std::size_t j = 0; j <= *dg; ++j)
      out[i + j] = ring.add(out[i + j], ring.mul(f.coeff(i), g.coeff(j)));
  }
  return Polynomial(ring, std::move(out)).trimmed();
}

/// Left scalar multiple c * f.
inline Polynomial scale(const FiniteRing& ring, Elem c, const Polynomial& f) {
  detail::require_ring(ring, f);
  std::vector<Elem> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring.mul(c, f.coeff(i));
  return Polynomial(ring, std::move(out)).trimmed();
}

/// f^k in R[X]; k = 0 gives the constant unity.
inline Polynomial pow(const FiniteRing& ring, const Polynomial& f, std::uint64_t k) {
  detail::require_ring(ring, f);
  if (k == 0) return Polynomial::constant(ring, ring.one());
  Polynomial result = f.trimmed();
  Polynomial base = result;
  --k;
  while (k > 0) {
    if (k & 1U) result = mul(ring, result, base);
    k >>= 1U;
    if (k > 0) base = mul(ring, base, base);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Evaluation: f(r) = a_0 + sum_{i>=1} a_i r^i. The constant term is added as
// an element, never multiplied by r^0, so rings without unity are fine.

inline Elem eval(const Polynomial& f, const FiniteRing& ring, Elem r) {
  detail::require_ring(ring, f);
  if (!ring.contains(r)) throw Error(ErrorKind::ring_mismatch, "evaluation point is not in " + ring.label());
  Elem acc = f.coeff(0);
  Elem power = r;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    if (f.coeff(i) != FiniteRing::zero()) acc = ring.add(acc, ring.mul(f.coeff(i), power));
    power = ring.mul(power, r);
  }
  return acc;
}

/// Evaluates f (coefficients in the big ring) at an element of the small ring.
inline Elem eval(const Polynomial& f, const Embedding& via, Elem a) {
  if (!via.small().contains(a))
    throw Error(ErrorKind::ring_mismatch, "evaluation point is not in " + via.small().label());
  return eval(f, via.big(), via(a));
}

inline FunctionTable function_table(const Polynomial& f, const FiniteRing& ring) {
  detail::require_ring(ring, f);
  FunctionTable t{ring.id(), ring.id(), std::vector<Elem>(ring.order())};
  for (Elem r = 0; r < ring.order(); ++r) t.values[r] = eval(f, ring, r);
  return t;
}

inline FunctionTable function_table(const Polynomial& f, const Embedding& via) {
  detail::require_ring(via.big(), f);
  FunctionTable t{via.small().id(), via.big().id(), std::vector<Elem>(via.small().order())};
  for (Elem a = 0; a < via.small().order(); ++a) t.values[a] = eval(f, via, a);
  return t;
}

inline SubsetMask image(const Polynomial& f, const FiniteRing& ring) {
  SubsetMask out(ring);
  for (Elem v : function_table(f, ring).values) out.insert(v);
  return out;
}

inline SubsetMask image(const Polynomial& f, const Embedding& via) {
  SubsetMask out(via.big());
  for (Elem v : function_table(f, via).values) out.insert(v);
  return out;
}

// ---------------------------------------------------------------------------
// Text form. Coefficients are element indices; a monomial written without a
// coefficient ("x^2") carries the ring's unity. Example: "3x^2 + x + 1".

struct PolyTerm {
  std::optional<std::uint64_t> coeff;  // empty: implicit unity
  std::uint64_t degree = 0;
};

inline constexpr std::uint64_t kMaxParsedDegree = 1u << 16;

namespace detail {

/// Character cursor shared by the polynomial and ring-spec parsers.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t base = 0;  // offset of text inside the caller's input, for messages

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  bool accept(std::string_view s) {
    skip_ws();
    if (text.substr(pos, s.size()) != s) return false;
    pos += s.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::uint64_t integer() {
    if (!at_digit()) fail("expected an integer");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (UINT64_MAX - digit) / 10) fail("integer too large");
      v = v * 10 + digit;
      ++pos;
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(base + pos, message); }
};

inline bool at_variable(Cursor& c) {
  const char ch = c.peek();
  return ch == 'x' || ch == 'X';
}

inline std::uint64_t parse_monomial_degree(Cursor& c) {
  ++c.pos;  // the variable
  if (!c.accept('^')) return 1;
  const std::uint64_t d = c.integer();
  if (d > kMaxParsedDegree) c.fail("exponent too large");
  return d;
}

/// poly := term ('+' term)* ; term := INT ['*'] [mono] | mono ; mono := x ['^' INT]
inline std::vector<PolyTerm> parse_poly_terms(Cursor& c) {
  std::vector<PolyTerm> terms;
  do {
    PolyTerm t;
    if (c.at_digit()) {
      t.coeff = c.integer();
      const bool star = c.accept('*');
      if (at_variable(c)) {
        t.degree = parse_monomial_degree(c);
      } else if (star) {
        c.fail("expected 'x' after '*'");
      }
    } else if (at_variable(c)) {
      t.degree = parse_monomial_degree(c);
    } else {
      c.fail("expected a polynomial term");
    }
    for (const PolyTerm& other : terms)
      if (other.degree == t.degree) c.fail("degree " + std::to_string(t.degree) + " appears twice");
    terms.push_back(t);
  } while (c.accept('+'));
  return terms;
}

}  // namespace detail

inline std::vector<PolyTerm> parse_poly_terms(std::string_view text) {
  detail::Cursor c{text};
  auto terms = detail::parse_poly_terms(c);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return terms;
}

inline Polynomial polynomial_from_terms(const FiniteRing& ring, const std::vector<PolyTerm>& terms) {
  std::uint64_t max_degree = 0;
  for (const PolyTerm& t : terms) max_degree = std::max(max_degree, t.degree);
  std::vector<Elem> coeffs(max_degree + 1, FiniteRing::zero());
  for (const PolyTerm& t : terms) {
    Elem c = 0;
    if (t.coeff) {
      if (*t.coeff >= ring.order())
        throw Error(ErrorKind::invalid_parameter,
                    "coefficient " + std::to_string(*t.coeff) + " is not an element of " + ring.label());
      c = static_cast<Elem>(*t.coeff);
    } else {
      c = ring.one();
    }
    coeffs[t.degree] = c;
  }
  return Polynomial(ring, std::move(coeffs)).trimmed();
}

inline Polynomial parse_polynomial(std::string_view text, const FiniteRing& ring) {
  return polynomial_from_terms(ring, parse_poly_terms(text));
}

/// Renders in the same syntax parse_polynomial reads, highest degree first.
inline std::string to_string(const Polynomial& f, const FiniteRing& ring) {
  detail::require_ring(ring, f);
  const auto d = f.degree();
  if (!d) return "0";
  std::string out;
  for (std::size_t i = *d + 1; i > 0; --i) {
    const std::size_t k = i - 1;
    const Elem c = f.coeff(k);
    if (c == FiniteRing::zero()) continue;
    if (!out.empty()) out += " + ";
    const bool implicit = k > 0 && ring.unity() && c == *ring.unity();
    if (!implicit) out += std::to_string(c);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace polyring
