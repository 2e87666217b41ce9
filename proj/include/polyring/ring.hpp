#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyring/error.hpp"

namespace polyring {

/// Elements of a finite ring are addressed by their index 0..order-1.
/// Index 0 is always the additive identity.
using Elem = std::uint32_t;

/// Largest ring the constructors accept; tables are dense order x order.
inline constexpr std::size_t kMaxRingOrder = 1024;

/// A finite ring (not necessarily commutative or unital) given by its Cayley
/// tables. Instances are immutable and cheap to copy. Two rings built from
/// identical tables share the same id(), whatever their labels.
class FiniteRing {
 public:
  /// Validates every ring axiom exhaustively; throws AxiomViolation naming
  /// the first failing axiom and a witness triple.
  static FiniteRing from_tables(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul,
                                std::string label) {
    if (order == 0) throw Error(ErrorKind::invalid_parameter, "ring order must be positive");
    if (order > kMaxRingOrder)
      throw Error(ErrorKind::invalid_parameter,
                  "ring order " + std::to_string(order) + " exceeds " + std::to_string(kMaxRingOrder));
    if (add.size() != order * order || mul.size() != order * order)
      throw Error(ErrorKind::invalid_parameter, "tables must be order x order");
    auto data = std::make_shared<Data>();
    data->order = order;
    data->add = std::move(add);
    data->mul = std::move(mul);
    data->label = std::move(label);
    validate(*data);
    finish(*data);
    FiniteRing ring;
    ring.d_ = std::move(data);
    return ring;
  }

  std::size_t order() const noexcept { return d_->order; }
  const std::string& label() const noexcept { return d_->label; }
  std::uint64_t id() const noexcept { return d_->id; }

  static constexpr Elem zero() noexcept { return 0; }
  const std::optional<Elem>& unity() const noexcept { return d_->unity; }
  bool is_unital() const noexcept { return d_->unity.has_value(); }
  bool is_commutative() const noexcept { return d_->commutative; }

  Elem add(Elem a, Elem b) const noexcept { return d_->add[a * d_->order + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return d_->mul[a * d_->order + b]; }
  Elem neg(Elem a) const noexcept { return d_->neg[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  /// Unity, or throws unsupported-structure for a non-unital ring.
  Elem one() const {
    if (!d_->unity) throw Error(ErrorKind::unsupported_structure, label() + " has no unity");
    return *d_->unity;
  }

  /// a^k by repeated squaring. k = 0 needs a unity.
  Elem pow(Elem a, std::uint64_t k) const {
    if (k == 0) return one();
    Elem result = a;
    Elem base = a;
    --k;
    while (k > 0) {
      if (k & 1U) result = mul(result, base);
      base = mul(base, base);
      k >>= 1U;
    }
    return result;
  }

  /// n-fold sum a + a + ... + a (0 for n = 0).
  Elem multiple(Elem a, std::uint64_t n) const noexcept {
    Elem result = zero();
    Elem base = a;
    while (n > 0) {
      if (n & 1U) result = add(result, base);
      base = add(base, base);
      n >>= 1U;
    }
    return result;
  }

  std::span<const Elem> add_table() const noexcept { return d_->add; }
  std::span<const Elem> mul_table() const noexcept { return d_->mul; }
  std::span<const Elem> neg_table() const noexcept { return d_->neg; }

  /// Same ring under a different display name.
  FiniteRing relabeled(std::string label) const {
    auto data = std::make_shared<Data>(*d_);
    data->label = std::move(label);
    FiniteRing ring;
    ring.d_ = std::move(data);
    return ring;
  }

  bool contains(Elem a) const noexcept { return a < d_->order; }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) noexcept {
    return a.d_ == b.d_ || (a.d_->id == b.d_->id && a.d_->add == b.d_->add && a.d_->mul == b.d_->mul);
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    std::optional<Elem> unity;
    bool commutative = false;
    std::uint64_t id = 0;
    std::string label;
  };

  FiniteRing() = default;

  static void validate(Data& d) {
    const std::size_t n = d.order;
    auto A = [&](std::size_t a, std::size_t b) -> std::size_t { return d.add[a * n + b]; };
    auto M = [&](std::size_t a, std::size_t b) -> std::size_t { return d.mul[a * n + b]; };
    for (std::size_t i = 0; i < n * n; ++i) {
      if (d.add[i] >= n) throw AxiomViolation("closure of addition", {i / n, i % n, i / n});
      if (d.mul[i] >= n) throw AxiomViolation("closure of multiplication", {i / n, i % n, i / n});
    }
    for (std::size_t a = 0; a < n; ++a)
      if (A(0, a) != a || A(a, 0) != a) throw AxiomViolation("additive identity", {0, a, a});
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (A(a, b) != A(b, a)) throw AxiomViolation("commutativity of addition", {a, b, b});
    d.neg.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n && !found; ++b)
        if (A(a, b) == 0) {
          d.neg[a] = static_cast<Elem>(b);
          found = true;
        }
      if (!found) throw AxiomViolation("additive inverse", {a, a, a});
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          if (A(A(a, b), c) != A(a, A(b, c))) throw AxiomViolation("associativity of addition", {a, b, c});
          if (M(M(a, b), c) != M(a, M(b, c))) throw AxiomViolation("associativity", {a, b, c});
          if (M(a, A(b, c)) != A(M(a, b), M(a, c))) throw AxiomViolation("left distributivity", {a, b, c});
          if (M(A(a, b), c) != A(M(a, c), M(b, c))) throw AxiomViolation("right distributivity", {a, b, c});
        }
  }

  static void finish(Data& d) {
    const std::size_t n = d.order;
    d.commutative = true;
    for (std::size_t a = 0; a < n && d.commutative; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (d.mul[a * n + b] != d.mul[b * n + a]) {
          d.commutative = false;
          break;
        }
    for (std::size_t e = 0; e < n && !d.unity; ++e) {
      bool identity = true;
      for (std::size_t a = 0; a < n && identity; ++a)
        identity = d.mul[e * n + a] == a && d.mul[a * n + e] == a;
      if (identity) d.unity = static_cast<Elem>(e);
    }
    // FNV-1a over the tables gives a structural identity.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xFFU;
        h *= 1099511628211ULL;
      }
    };
    mix(n);
    for (Elem v : d.add) mix(v);
    for (Elem v : d.mul) mix(v);
    d.id = h;
  }

  std::shared_ptr<const Data> d_;
};

/// A subset of a ring's elements.
class SubsetMask {
 public:
  explicit SubsetMask(const FiniteRing& ring) : bits_(ring.order(), false), ring_id_(ring.id()) {}
  SubsetMask(const FiniteRing& ring, const std::vector<Elem>& members) : SubsetMask(ring) {
    for (Elem e : members) {
      if (!ring.contains(e))
        throw Error(ErrorKind::invalid_parameter, "element " + std::to_string(e) + " not in " + ring.label());
      bits_[e] = true;
    }
  }

  static SubsetMask all(const FiniteRing& ring) {
    SubsetMask m(ring);
    m.bits_.assign(ring.order(), true);
    return m;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint64_t ring_id() const noexcept { return ring_id_; }
  bool contains(Elem e) const noexcept { return e < bits_.size() && bits_[e]; }
  void insert(Elem e) { bits_.at(e) = true; }
  void erase(Elem e) { bits_.at(e) = false; }

  std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
  }
  bool empty() const noexcept { return count() == 0; }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<Elem>(i));
    return out;
  }

  SubsetMask complement() const {
    SubsetMask m = *this;
    m.bits_.flip();
    return m;
  }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) noexcept {
    return a.ring_id_ == b.ring_id_ && a.bits_ == b.bits_;
  }

 private:
  std::vector<bool> bits_;
  std::uint64_t ring_id_;
};

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

/// lcm that throws instead of wrapping.
inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = std::gcd(a, b);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) throw Error(ErrorKind::invalid_parameter, "integer overflow in lcm");
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::invalid_parameter, "integer overflow");
  return out;
}

/// Z/n with element index equal to the residue.
inline FiniteRing make_zn(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::invalid_parameter, "Z/n needs n >= 2, got " + std::to_string(n));
  if (n > kMaxRingOrder) throw Error(ErrorKind::invalid_parameter, "Z/" + std::to_string(n) + " is too large");
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), "Z/" + std::to_string(n));
}

/// Componentwise product; element (a, b) has index a + |r1| * b.
inline FiniteRing make_product(const FiniteRing& r1, const FiniteRing& r2) {
  const std::size_t n1 = r1.order(), n2 = r2.order(), n = n1 * n2;
  if (n > kMaxRingOrder) throw Error(ErrorKind::invalid_parameter, "product ring is too large");
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a1 = static_cast<Elem>(x % n1), a2 = static_cast<Elem>(x / n1);
      const auto b1 = static_cast<Elem>(y % n1), b2 = static_cast<Elem>(y / n1);
      add[x * n + y] = static_cast<Elem>(r1.add(a1, b1) + n1 * r2.add(a2, b2));
      mul[x * n + y] = static_cast<Elem>(r1.mul(a1, b1) + n1 * r2.mul(a2, b2));
    }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), r1.label() + " x " + r2.label());
}

/// Ring from explicit tables given as rows; unity is detected.
inline FiniteRing make_table_ring(const std::vector<std::vector<Elem>>& add,
                                  const std::vector<std::vector<Elem>>& mul, std::string label = "table") {
  const std::size_t n = add.size();
  if (mul.size() != n) throw Error(ErrorKind::invalid_parameter, "tables differ in size");
  std::vector<Elem> a, m;
  a.reserve(n * n);
  m.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n)
      throw Error(ErrorKind::invalid_parameter, "tables must be square");
    a.insert(a.end(), add[i].begin(), add[i].end());
    m.insert(m.end(), mul[i].begin(), mul[i].end());
  }
  return FiniteRing::from_tables(n, std::move(a), std::move(m), std::move(label));
}

/// The additive group Z/n with identically zero multiplication.
inline FiniteRing make_zero_multiplication(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::invalid_parameter, "zero-multiplication ring needs n >= 2");
  const FiniteRing zn = make_zn(n);
  std::vector<Elem> add(zn.add_table().begin(), zn.add_table().end());
  return FiniteRing::from_tables(n, std::move(add), std::vector<Elem>(n * n, 0),
                                 "zero-ring-" + std::to_string(n));
}

/// Additive order of a (least k >= 1 with k.a = 0).
inline std::uint64_t additive_order(const FiniteRing& r, Elem a) {
  std::uint64_t k = 1;
  for (Elem x = a; x != FiniteRing::zero(); x = r.add(x, a)) ++k;
  return k;
}

/// Additive order of unity, or the exponent of the additive group when
/// the ring has no unity.
inline std::uint64_t characteristic(const FiniteRing& r) {
  if (r.is_unital()) return additive_order(r, *r.unity());
  std::uint64_t e = 1;
  for (Elem a = 0; a < r.order(); ++a) e = checked_lcm(e, additive_order(r, a));
  return e;
}

}  // namespace polyring
