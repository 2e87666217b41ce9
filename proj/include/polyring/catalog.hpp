#pragma once

// Ring-spec mini-language and the standard catalog of test rings.
//
//   spec   := term (("x" | "×") term)*
//   term   := atom ("[x]/(" poly ")")*
//   atom   := "Z/" INT | "GF(" INT ")" | NAME | "(" spec ")"
//   NAME   := "zero-ring-" INT | "row-matrices-2" | "upper-triangular-2"
//
// Modulus coefficients are element indices of the base ring; a monomial
// without a coefficient means coefficient 1, which must be the base unity.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "polyring/constructions.hpp"
#include "polyring/error.hpp"
#include "polyring/polynomial.hpp"
#include "polyring/ring.hpp"

namespace polyring {

struct RingSpecAst;
using RingSpecPtr = std::shared_ptr<const RingSpecAst>;

struct ZnNode {
  std::uint64_t n = 0;
  /// Set when written as GF(p).
  bool field_alias = false;
  friend bool operator==(const ZnNode&, const ZnNode&) = default;
};

struct QuotientNode {
  RingSpecPtr base;
  /// Modulus coefficients, constant term first.
  std::vector<std::uint64_t> modulus;
  /// Set to q when written as GF(q).
  std::optional<std::uint64_t> field_alias;
};

struct ProductNode {
  std::vector<RingSpecPtr> parts;
};

struct TableRefNode {
  std::string name;
  friend bool operator==(const TableRefNode&, const TableRefNode&) = default;
};

struct RingSpecAst {
  std::variant<ZnNode, QuotientNode, ProductNode, TableRefNode> node;
};

bool operator==(const RingSpecAst& a, const RingSpecAst& b);

namespace detail {

inline bool same_ptr(const RingSpecPtr& a, const RingSpecPtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

}  // namespace detail

inline bool operator==(const QuotientNode& a, const QuotientNode& b) {
  return detail::same_ptr(a.base, b.base) && a.modulus == b.modulus && a.field_alias == b.field_alias;
}

inline bool operator==(const ProductNode& a, const ProductNode& b) {
  return std::equal(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(), detail::same_ptr);
}

inline bool operator==(const RingSpecAst& a, const RingSpecAst& b) { return a.node == b.node; }

/// Irreducible moduli used for GF(q), q a prime power that is not prime.
struct GaloisModulus {
  std::uint64_t q;
  std::uint64_t p;
  std::vector<std::uint64_t> modulus;
};

inline const std::vector<GaloisModulus>& galois_moduli() {
  static const std::vector<GaloisModulus> table = {
      {4, 2, {1, 1, 1}},     // x^2 + x + 1
      {8, 2, {1, 1, 0, 1}},  // x^3 + x + 1
      {9, 3, {1, 0, 1}},     // x^2 + 1
      {16, 2, {1, 1, 0, 0, 1}},  // x^4 + x + 1
      {25, 5, {2, 0, 1}},    // x^2 + 2
      {27, 3, {1, 2, 0, 1}},  // x^3 + 2x + 1
  };
  return table;
}

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline RingSpecPtr make_node(auto node) { return std::make_shared<const RingSpecAst>(RingSpecAst{std::move(node)}); }

inline constexpr std::array<std::string_view, 2> kFixedNames = {"row-matrices-2", "upper-triangular-2"};
inline constexpr std::string_view kZeroRingPrefix = "zero-ring-";

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : c_{text} {}

  RingSpecPtr parse() {
    RingSpecPtr out = spec();
    if (!c_.at_end()) c_.fail("unexpected trailing input");
    return out;
  }

 private:
  bool accept_times() { return c_.accept('x') || c_.accept("×"); }

  RingSpecPtr spec() {
    std::vector<RingSpecPtr> parts{term()};
    while (accept_times()) parts.push_back(term());
    if (parts.size() == 1) return parts.front();
    return make_node(ProductNode{std::move(parts)});
  }

  RingSpecPtr term() {
    RingSpecPtr base = atom();
    while (c_.accept('[')) {
      c_.expect('x');
      c_.expect(']');
      c_.expect('/');
      c_.expect('(');
      const std::size_t at = c_.pos;
      const std::vector<PolyTerm> terms = parse_poly_terms(c_);
      c_.expect(')');
      std::uint64_t degree = 0;
      for (const PolyTerm& t : terms) degree = std::max(degree, t.degree);
      std::vector<std::uint64_t> modulus(degree + 1, 0);
      for (const PolyTerm& t : terms) modulus[t.degree] = t.coeff.value_or(1);
      if (degree == 0) throw SyntaxError(at, "modulus must have degree >= 1");
      if (modulus[degree] != 1) throw SyntaxError(at, "modulus must be monic");
      base = make_node(QuotientNode{base, std::move(modulus), std::nullopt});
    }
    return base;
  }

  RingSpecPtr atom() {
    if (c_.accept('(')) {
      RingSpecPtr inner = spec();
      c_.expect(')');
      return inner;
    }
    const std::size_t at = (c_.skip_ws(), c_.pos);
    if (c_.accept("Z/")) {
      const std::uint64_t n = c_.integer();
      if (n < 2) throw Error(ErrorKind::invalid_parameter, "at position " + std::to_string(at) + ": Z/n needs n >= 2");
      return make_node(ZnNode{n, false});
    }
    if (c_.accept("GF(")) {
      const std::uint64_t q = c_.integer();
      c_.expect(')');
      if (is_prime(q)) return make_node(ZnNode{q, true});
      for (const GaloisModulus& g : galois_moduli())
        if (g.q == q) return make_node(QuotientNode{make_node(ZnNode{g.p, false}), g.modulus, q});
      throw Error(ErrorKind::unsupported_field_order, "GF(" + std::to_string(q) + ") is not supported");
    }
    if (c_.accept(kZeroRingPrefix)) {
      const std::uint64_t n = c_.integer();
      if (n < 2) throw Error(ErrorKind::invalid_parameter, "zero-ring-n needs n >= 2");
      return make_node(TableRefNode{std::string(kZeroRingPrefix) + std::to_string(n)});
    }
    for (std::string_view name : kFixedNames)
      if (c_.accept(name)) return make_node(TableRefNode{std::string(name)});
    c_.fail("expected a ring");
  }

  Cursor c_;
};

inline std::string modulus_text(const std::vector<std::uint64_t>& m) {
  std::string out;
  for (std::size_t i = m.size(); i > 0; --i) {
    const std::size_t k = i - 1;
    if (m[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0 || m[k] != 1) out += std::to_string(m[k]);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// Throws SyntaxError (with position), invalid-parameter for Z/n with
/// n < 2, or unsupported-field-order.
inline RingSpecPtr parse_ring_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

/// Canonical text; parse_ring_spec(to_string(ast)) equals ast.
inline std::string to_string(const RingSpecAst& ast) {
  struct Printer {
    std::string operator()(const ZnNode& z) const {
      return (z.field_alias ? "GF(" + std::to_string(z.n) + ")" : "Z/" + std::to_string(z.n));
    }
    std::string operator()(const QuotientNode& q) const {
      if (q.field_alias) return "GF(" + std::to_string(*q.field_alias) + ")";
      std::string base = to_string(*q.base);
      if (std::holds_alternative<ProductNode>(q.base->node)) base = "(" + base + ")";
      return base + "[x]/(" + detail::modulus_text(q.modulus) + ")";
    }
    std::string operator()(const ProductNode& p) const {
      std::string out;
      for (const RingSpecPtr& part : p.parts) {
        if (!out.empty()) out += " x ";
        const bool wrap = std::holds_alternative<ProductNode>(part->node);
        out += wrap ? "(" + to_string(*part) + ")" : to_string(*part);
      }
      return out;
    }
    std::string operator()(const TableRefNode& t) const { return t.name; }
  };
  return std::visit(Printer{}, ast.node);
}

/// [[a, b], [0, 0]] over F_2 with (a, b)(c, d) = (ac, ad); index a + 2b.
/// Non-commutative, no unity.
inline FiniteRing make_row_matrices_2() {
  std::vector<Elem> add(16), mul(16);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) {
      const Elem a = x & 1U, c = y & 1U, d = y >> 1U;
      add[x * 4 + y] = x ^ y;
      mul[x * 4 + y] = (a & c) | ((a & d) << 1U);
    }
  return FiniteRing::from_tables(4, std::move(add), std::move(mul), "row-matrices-2");
}

/// Upper triangular 2x2 matrices over F_2; [[a, b], [0, c]] has index
/// a + 2b + 4c. Non-commutative, unital, not local.
inline FiniteRing make_upper_triangular_2() {
  std::vector<Elem> add(64), mul(64);
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      const Elem a = x & 1U, b = (x >> 1U) & 1U, c = x >> 2U;
      const Elem a2 = y & 1U, b2 = (y >> 1U) & 1U, c2 = y >> 2U;
      add[x * 8 + y] = x ^ y;
      mul[x * 8 + y] = (a & a2) | ((((a & b2) ^ (b & c2)) & 1U) << 1U) | ((c & c2) << 2U);
    }
  return FiniteRing::from_tables(8, std::move(add), std::move(mul), "upper-triangular-2");
}

namespace detail {

inline FiniteRing realize_node(const RingSpecAst& ast) {
  struct Realizer {
    FiniteRing operator()(const ZnNode& z) const {
      if (z.n > kMaxRingOrder) throw Error(ErrorKind::invalid_parameter, "Z/n is too large");
      return make_zn(z.n);
    }
    FiniteRing operator()(const QuotientNode& q) const {
      const FiniteRing base = realize_node(*q.base);
      // A literal 1 is the unity (so monic means what it says); every other
      // integer is an element index of the base.
      std::vector<Elem> coeffs;
      for (std::uint64_t c : q.modulus) {
        if (c == 1 && base.is_unital()) {
          coeffs.push_back(*base.unity());
          continue;
        }
        if (c >= base.order())
          throw Error(ErrorKind::invalid_parameter, "coefficient " + std::to_string(c) + " is not an element of " + base.label());
        coeffs.push_back(static_cast<Elem>(c));
      }
      return make_quotient(base, Polynomial(base, std::move(coeffs)));
    }
    FiniteRing operator()(const ProductNode& p) const {
      FiniteRing out = realize_node(*p.parts.front());
      for (std::size_t i = 1; i < p.parts.size(); ++i) {
        const FiniteRing next = realize_node(*p.parts[i]);
        if (out.order() * next.order() > kMaxRingOrder) throw Error(ErrorKind::invalid_parameter, "product is too large");
        out = make_product(out, next);
      }
      return out;
    }
    FiniteRing operator()(const TableRefNode& t) const {
      if (t.name == "row-matrices-2") return make_row_matrices_2();
      if (t.name == "upper-triangular-2") return make_upper_triangular_2();
      if (t.name.starts_with(kZeroRingPrefix)) {
        const std::uint64_t n = std::stoull(t.name.substr(kZeroRingPrefix.size()));
        if (n > kMaxRingOrder) throw Error(ErrorKind::invalid_parameter, "zero ring is too large");
        return make_zero_multiplication(n);
      }
      throw Error(ErrorKind::invalid_parameter, "unknown ring name " + t.name);
    }
  };
  return std::visit(Realizer{}, ast.node);
}

}  // namespace detail

/// Builds the ring, labeled with the canonical spec text.
inline FiniteRing realize(const RingSpecAst& ast) { return detail::realize_node(ast).relabeled(to_string(ast)); }

inline FiniteRing ring_from_spec(std::string_view text) { return realize(*parse_ring_spec(text)); }

struct CatalogEntry {
  std::string name;
  FiniteRing ring;
};

inline constexpr std::size_t kMaxCatalogOrder = 32;

/// Named test rings of order <= max_order, deduplicated by name, in a fixed
/// order: Z/n, GF(q), quotients, products, non-unital and non-commutative
/// table rings.
inline std::vector<CatalogEntry> standard_catalog(std::size_t max_order) {
  if (max_order > kMaxCatalogOrder)
    throw Error(ErrorKind::invalid_parameter, "catalog order is limited to " + std::to_string(kMaxCatalogOrder));
  std::vector<std::pair<std::string, std::size_t>> specs;
  for (std::size_t n = 2; n <= max_order; ++n) specs.emplace_back("Z/" + std::to_string(n), n);
  for (const GaloisModulus& g : galois_moduli()) specs.emplace_back("GF(" + std::to_string(g.q) + ")", g.q);
  const std::vector<std::pair<std::string, std::size_t>> extra = {
      {"Z/2[x]/(x^2)", 4},         {"Z/2[x]/(x^3)", 8},     {"Z/3[x]/(x^2)", 9},
      {"Z/4[x]/(x^2 + 2)", 16},    {"Z/2[x]/(x^2 + x + 1)", 4}, {"Z/2[x]/(x^4)", 16},
      {"Z/4[x]/(x^2)", 16},        {"Z/2 x Z/2", 4},        {"Z/2 x Z/3", 6},
      {"Z/2 x Z/4", 8},            {"Z/4 x Z/3", 12},       {"Z/3 x Z/3", 9},
      {"Z/2 x Z/2 x Z/2", 8},      {"zero-ring-2", 2},      {"zero-ring-4", 4},
      {"row-matrices-2", 4},       {"upper-triangular-2", 8},
  };
  specs.insert(specs.end(), extra.begin(), extra.end());

  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  for (const auto& [text, order] : specs) {
    if (order > max_order) continue;
    FiniteRing ring = ring_from_spec(text);
    if (!seen.insert(ring.label()).second) continue;
    out.push_back(CatalogEntry{ring.label(), std::move(ring)});
  }
  return out;
}

}  // namespace polyring
