#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "polyring/constructions.hpp"
#include "polyring/ring.hpp"

namespace polyring {

/// Least k >= 1 with a^k = 0, if any.
inline std::optional<std::uint64_t> nilpotency_index_of(const FiniteRing& r, Elem a) {
  Elem p = a;
  // the powers before reaching 0 are distinct, so order + 1 steps suffice
  for (std::uint64_t k = 1; k <= r.order() + 1; ++k) {
    if (p == FiniteRing::zero()) return k;
    p = r.mul(p, a);
  }
  return std::nullopt;
}

/// Least k >= 1 with u^k = 1, if any (u a unit of a unital ring).
inline std::optional<std::uint64_t> multiplicative_order(const FiniteRing& r, Elem u) {
  const Elem one = r.one();
  Elem p = u;
  for (std::uint64_t k = 1; k <= r.order(); ++k) {
    if (p == one) return k;
    p = r.mul(p, u);
  }
  return std::nullopt;
}

/// Two-sided units; needs a unity.
inline SubsetMask units(const FiniteRing& r) {
  const Elem one = r.one();
  SubsetMask out(r);
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b)
      if (r.mul(a, b) == one && r.mul(b, a) == one) {
        out.insert(a);
        break;
      }
  return out;
}

inline SubsetMask nilpotents(const FiniteRing& r) {
  SubsetMask out(r);
  for (Elem a = 0; a < r.order(); ++a)
    if (nilpotency_index_of(r, a)) out.insert(a);
  return out;
}

inline SubsetMask idempotents(const FiniteRing& r) {
  SubsetMask out(r);
  for (Elem a = 0; a < r.order(); ++a)
    if (r.mul(a, a) == a) out.insert(a);
  return out;
}

/// {x : 1 + yx is a unit for every y}; needs a unity.
inline SubsetMask jacobson_radical(const FiniteRing& r, const SubsetMask& unit_set) {
  const Elem one = r.one();
  SubsetMask out(r);
  for (Elem x = 0; x < r.order(); ++x) {
    bool in = true;
    for (Elem y = 0; y < r.order() && in; ++y) in = unit_set.contains(r.add(one, r.mul(y, x)));
    if (in) out.insert(x);
  }
  return out;
}

/// Structural invariants of a finite ring, all found by exhaustive scans.
/// Fields that only make sense with a unity are empty for non-unital rings.
struct RingInvariants {
  std::size_t order = 0;
  bool is_commutative = false;
  bool is_unital = false;
  bool is_field = false;
  bool is_local = false;
  /// Every prime ideal of a finite ring is maximal; kept for reports.
  bool zero_dimensional = true;
  std::uint64_t characteristic = 0;
  std::optional<SubsetMask> units;
  SubsetMask nilpotents;
  SubsetMask idempotents;
  std::optional<SubsetMask> jacobson_radical;
  std::uint64_t nilpotency_index = 1;
  std::optional<std::uint64_t> unit_group_exponent;
  std::optional<std::uint64_t> residue_field_order;
  /// Number of maximal ideals (commutative unital rings only).
  std::optional<std::size_t> spec_size;
};

namespace detail {

inline std::vector<Elem> primitive_idempotents(const FiniteRing& r, const SubsetMask& idem) {
  std::vector<Elem> out;
  const auto all = idem.elements();
  for (Elem e : all) {
    if (e == FiniteRing::zero()) continue;
    bool primitive = true;
    for (Elem f : all)
      if (f != FiniteRing::zero() && f != e && r.mul(f, e) == f) {
        primitive = false;
        break;
      }
    if (primitive) out.push_back(e);
  }
  return out;
}

}  // namespace detail

inline RingInvariants analyze(const FiniteRing& r) {
  RingInvariants inv{.order = r.order(),
                     .is_commutative = r.is_commutative(),
                     .is_unital = r.is_unital(),
                     .characteristic = characteristic(r),
                     .nilpotents = nilpotents(r),
                     .idempotents = idempotents(r)};
  for (Elem a : inv.nilpotents.elements())
    inv.nilpotency_index = std::max(inv.nilpotency_index, *nilpotency_index_of(r, a));
  if (!r.is_unital()) return inv;

  inv.units = units(r);
  inv.jacobson_radical = jacobson_radical(r, *inv.units);
  std::uint64_t exponent = 1;
  for (Elem u : inv.units->elements()) exponent = checked_lcm(exponent, *multiplicative_order(r, u));
  inv.unit_group_exponent = exponent;

  inv.is_field = r.order() >= 2 && inv.is_commutative && inv.units->count() == r.order() - 1;

  const auto non_units = inv.units->complement();
  bool closed = !non_units.empty();
  for (Elem a : non_units.elements()) {
    for (Elem b : non_units.elements())
      if (!non_units.contains(r.add(a, b))) {
        closed = false;
        break;
      }
    if (!closed) break;
  }
  inv.is_local = closed && r.order() >= 2;
  if (inv.is_local) inv.residue_field_order = r.order() / inv.jacobson_radical->count();
  if (inv.is_commutative) inv.spec_size = detail::primitive_idempotents(r, inv.idempotents).size();
  return inv;
}

/// A local factor eR of a commutative unital ring, with unity e.
struct LocalFactor {
  Elem idempotent = 0;
  FiniteRing ring;
  std::vector<Elem> elements;  // factor index -> element of R
  std::vector<Elem> project;   // element x of R -> factor index of e*x
};

/// Splits a commutative unital ring into local rings via its primitive
/// idempotents, ordered by idempotent index.
inline std::vector<LocalFactor> local_decomposition(const FiniteRing& r) {
  if (!r.is_unital() || !r.is_commutative())
    throw Error(ErrorKind::unsupported_structure, "local decomposition needs a commutative ring with unity");
  std::vector<LocalFactor> out;
  for (Elem e : detail::primitive_idempotents(r, idempotents(r))) {
    std::vector<Elem> elements;
    std::vector<bool> seen(r.order(), false);
    for (Elem x = 0; x < r.order(); ++x) seen[r.mul(e, x)] = true;
    for (Elem x = 0; x < r.order(); ++x)
      if (seen[x]) elements.push_back(x);
    std::vector<Elem> index_of(r.order(), 0);
    for (std::size_t i = 0; i < elements.size(); ++i) index_of[elements[i]] = static_cast<Elem>(i);
    const std::size_t m = elements.size();
    std::vector<Elem> add(m * m), mul(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        add[i * m + j] = index_of[r.add(elements[i], elements[j])];
        mul[i * m + j] = index_of[r.mul(elements[i], elements[j])];
      }
    std::vector<Elem> project(r.order());
    for (Elem x = 0; x < r.order(); ++x) project[x] = index_of[r.mul(e, x)];
    out.push_back(LocalFactor{
        e,
        FiniteRing::from_tables(m, std::move(add), std::move(mul), r.label() + "*e" + std::to_string(e)),
        std::move(elements), std::move(project)});
  }
  return out;
}

/// R/m for a local unital ring.
inline QuotientRing residue_field(const FiniteRing& r) {
  if (!r.is_unital()) throw Error(ErrorKind::unsupported_structure, r.label() + " has no unity");
  const auto unit_set = units(r);
  const auto radical = jacobson_radical(r, unit_set);
  if (radical.count() + unit_set.count() != r.order())
    throw Error(ErrorKind::unsupported_structure, r.label() + " is not local");
  return quotient_by_ideal(r, radical, "res(" + r.label() + ")");
}

/// One maximal ideal m of a commutative unital ring, seen through the map
/// R -> R/m.
struct ResidueProjection {
  Elem idempotent = 0;
  FiniteRing field;
  std::vector<Elem> project;
};

inline std::vector<ResidueProjection> residue_projections(const FiniteRing& r) {
  std::vector<ResidueProjection> out;
  for (const LocalFactor& factor : local_decomposition(r)) {
    QuotientRing k = residue_field(factor.ring);
    std::vector<Elem> project(r.order());
    for (Elem x = 0; x < r.order(); ++x) project[x] = k.project[factor.project[x]];
    out.push_back(ResidueProjection{factor.idempotent, k.ring, std::move(project)});
  }
  return out;
}

/// Invariant vector used as an isomorphism heuristic.
struct InvariantSignature {
  std::size_t order = 0;
  std::uint64_t characteristic = 0;
  bool commutative = false;
  bool unital = false;
  std::size_t units = 0;
  std::size_t nilpotents = 0;
  std::size_t idempotents = 0;
  std::uint64_t nilpotency_index = 0;
  std::uint64_t unit_group_exponent = 0;
  std::size_t spec_size = 0;
  std::vector<std::size_t> factor_orders;

  friend bool operator==(const InvariantSignature&, const InvariantSignature&) = default;
};

inline InvariantSignature invariant_signature(const FiniteRing& r) {
  const RingInvariants inv = analyze(r);
  InvariantSignature s{.order = inv.order,
                       .characteristic = inv.characteristic,
                       .commutative = inv.is_commutative,
                       .unital = inv.is_unital,
                       .units = inv.units ? inv.units->count() : 0,
                       .nilpotents = inv.nilpotents.count(),
                       .idempotents = inv.idempotents.count(),
                       .nilpotency_index = inv.nilpotency_index,
                       .unit_group_exponent = inv.unit_group_exponent.value_or(0),
                       .spec_size = inv.spec_size.value_or(0)};
  if (inv.is_unital && inv.is_commutative)
    for (const LocalFactor& f : local_decomposition(r)) s.factor_orders.push_back(f.ring.order());
  std::sort(s.factor_orders.begin(), s.factor_orders.end());
  return s;
}

inline constexpr std::size_t kMaxIsomorphismSearchOrder = 8;

/// Exhaustive search for a ring isomorphism a -> b (orders up to 8).
/// Returns the element map when one exists.
inline std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > kMaxIsomorphismSearchOrder)
    throw Error(ErrorKind::invalid_parameter, "isomorphism search is limited to order 8");
  const std::size_t n = a.order();
  std::vector<Elem> image(n);
  for (Elem i = 0; i < n; ++i) image[i] = i;
  do {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y)
        ok = image[a.add(x, y)] == b.add(image[x], image[y]) && image[a.mul(x, y)] == b.mul(image[x], image[y]);
    if (ok) return image;
  } while (std::next_permutation(image.begin() + 1, image.end()));
  return std::nullopt;
}

}  // namespace polyring
