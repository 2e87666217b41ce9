#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyring/analysis.hpp"
#include "polyring/polynomial.hpp"

namespace polyring {

/// Least t >= 1 and p >= 1 with x^(k+p) = x^k for every x and every k >= t.
struct Stabilization {
  std::uint64_t preperiod = 1;
  std::uint64_t period = 1;

  /// Powers X^1 .. X^(t+p-1) already produce every power function.
  std::uint64_t degree_bound() const noexcept { return preperiod + period - 1; }
  friend bool operator==(const Stabilization&, const Stabilization&) = default;
};

inline Stabilization power_stabilization(const FiniteRing& r) {
  Stabilization s;
  std::vector<std::uint64_t> first_seen(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    std::fill(first_seen.begin(), first_seen.end(), 0);
    Elem p = x;
    for (std::uint64_t k = 1;; ++k) {
      if (first_seen[p] != 0) {
        s.preperiod = std::max(s.preperiod, first_seen[p]);
        s.period = checked_lcm(s.period, k - first_seen[p]);
        break;
      }
      first_seen[p] = k;
      p = r.mul(p, x);
    }
  }
  return s;
}

/// Unique polynomial of degree < |F| with the given table, built as
/// sum_a table[a] * (1 - (X - a)^(q-1)).
inline Polynomial interpolate_field(const FiniteRing& f, const FunctionTable& table) {
  const RingInvariants inv = analyze(f);
  if (!inv.is_field) throw Error(ErrorKind::not_a_field, f.label() + " is not a field");
  if (table.domain_id != f.id() || table.codomain_id != f.id() || table.values.size() != f.order())
    throw Error(ErrorKind::ring_mismatch, "table is not a function on " + f.label());
  const std::uint64_t q = f.order();
  const Polynomial one = Polynomial::constant(f, f.one());
  Polynomial result = Polynomial::zero(f);
  for (Elem a = 0; a < q; ++a) {
    const Elem value = table.values[a];
    if (value == FiniteRing::zero()) continue;
    const Polynomial shifted = sub(f, Polynomial::x(f), Polynomial::constant(f, a));
    const Polynomial delta = sub(f, one, pow(f, shifted, q - 1));
    result = add(f, result, scale(f, value, delta));
  }
  return result;
}

enum class Membership { present, absent, unknown };

inline std::string_view to_string(Membership m) noexcept {
  switch (m) {
    case Membership::present: return "present";
    case Membership::absent: return "absent";
    case Membership::unknown: return "unknown-capped";
  }
  return "unknown-capped";
}

struct MembershipResult {
  Membership status = Membership::absent;
  std::optional<Polynomial> witness;
};

inline constexpr std::uint64_t kDefaultFunctionCap = std::uint64_t{1} << 24;

struct PolyFunctionSetOptions {
  std::uint64_t cap = kDefaultFunctionCap;
  /// Run the closure even for fields instead of answering "every function".
  bool enumerate_fields = false;
};

/// The set {r -> a_0 + sum_{k>=1} a_k r^k} of polynomial functions on a ring.
///
/// Built as the Minkowski sum of the constants and the subgroups
/// {a * x^k : a in R} for k = 1..t+p-1, one degree per stage. Each stored
/// table remembers the table it came from plus the term that was added, so
/// a witness polynomial can be read back. Fields skip the closure: every
/// function is polynomial and witnesses come from interpolation.
class PolyFunctionSet {
 public:
  static PolyFunctionSet compute(const FiniteRing& r, const PolyFunctionSetOptions& options = {}) {
    PolyFunctionSet set(r);
    set.stabilization_ = power_stabilization(r);
    if (!options.enumerate_fields && analyze(r).is_field) {
      set.all_functions_ = true;
      return set;
    }
    set.build(options.cap);
    return set;
  }

  // keys_ points into index_, so copies would dangle; moves keep the nodes.
  PolyFunctionSet(const PolyFunctionSet&) = delete;
  PolyFunctionSet& operator=(const PolyFunctionSet&) = delete;
  PolyFunctionSet(PolyFunctionSet&&) noexcept = default;
  PolyFunctionSet& operator=(PolyFunctionSet&&) noexcept = default;

  const FiniteRing& ring() const noexcept { return ring_; }
  std::uint64_t ring_id() const noexcept { return ring_.id(); }
  bool complete() const noexcept { return complete_; }
  /// True when the ring is a field and the closure was skipped.
  bool all_functions() const noexcept { return all_functions_; }
  const Stabilization& stabilization() const noexcept { return stabilization_; }

  /// Number of polynomial functions; empty when it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const {
    if (!all_functions_) return entries_.size();
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < ring_.order(); ++i)
      if (__builtin_mul_overflow(n, ring_.order(), &n)) return std::nullopt;
    return n;
  }

  MembershipResult lookup(const FunctionTable& table) const {
    if (table.domain_id != ring_.id() || table.codomain_id != ring_.id() || table.values.size() != ring_.order())
      throw Error(ErrorKind::ring_mismatch, "table is not a function on " + ring_.label());
    if (all_functions_) return {Membership::present, interpolate_field(ring_, table)};
    const auto it = index_.find(encode(table.values));
    if (it != index_.end()) return {Membership::present, witness_of(it->second)};
    return {complete_ ? Membership::absent : Membership::unknown, std::nullopt};
  }

  /// Like lookup() but without building a witness.
  Membership status(const FunctionTable& table) const {
    if (table.domain_id != ring_.id() || table.codomain_id != ring_.id() || table.values.size() != ring_.order())
      throw Error(ErrorKind::ring_mismatch, "table is not a function on " + ring_.label());
    if (all_functions_) return Membership::present;
    if (index_.count(encode(table.values)) != 0) return Membership::present;
    return complete_ ? Membership::absent : Membership::unknown;
  }

  /// Every stored table, sorted. Not available for the field short-cut.
  std::vector<FunctionTable> tables() const {
    if (all_functions_)
      throw Error(ErrorKind::unsupported_structure, "field function sets are not materialized");
    std::vector<FunctionTable> out;
    out.reserve(entries_.size());
    for (const std::string* key : keys_) out.push_back(FunctionTable{ring_.id(), ring_.id(), decode(*key)});
    std::sort(out.begin(), out.end(), [](const FunctionTable& a, const FunctionTable& b) { return a.values < b.values; });
    return out;
  }

  /// Witness polynomial for the i-th stored table (insertion order).
  Polynomial witness_of(std::size_t i) const {
    std::vector<Elem> coeffs;
    for (std::size_t at = i;;) {
      const Entry& e = entries_[at];
      if (coeffs.size() <= e.degree) coeffs.resize(e.degree + 1, FiniteRing::zero());
      coeffs[e.degree] = e.coeff;
      if (e.parent == kRoot) break;
      at = e.parent;
    }
    return Polynomial(ring_, std::move(coeffs)).trimmed();
  }

  std::size_t stored() const noexcept { return entries_.size(); }

  /// Values of the i-th stored table (insertion order).
  std::vector<Elem> values_at(std::size_t i) const { return decode(*keys_.at(i)); }

  /// First stored table, in insertion order, satisfying pred(values).
  template <class Pred>
  std::optional<std::size_t> find_first(Pred pred) const {
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (pred(decode(*keys_[i]))) return i;
    return std::nullopt;
  }

 private:
  static constexpr std::uint32_t kRoot = ~std::uint32_t{0};

  struct Entry {
    std::uint32_t parent;
    std::uint32_t degree;
    Elem coeff;
  };

  explicit PolyFunctionSet(FiniteRing r) : ring_(std::move(r)), wide_(ring_.order() > 256) {}

  std::string encode(const std::vector<Elem>& values) const {
    std::string key(values.size() * (wide_ ? 2 : 1), '\0');
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (wide_) {
        key[2 * i] = static_cast<char>(values[i] & 0xFFU);
        key[2 * i + 1] = static_cast<char>(values[i] >> 8U);
      } else {
        key[i] = static_cast<char>(values[i]);
      }
    }
    return key;
  }

  std::vector<Elem> decode(const std::string& key) const {
    std::vector<Elem> values(ring_.order());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (wide_)
        values[i] = static_cast<Elem>(static_cast<unsigned char>(key[2 * i])) |
                    (static_cast<Elem>(static_cast<unsigned char>(key[2 * i + 1])) << 8U);
      else
        values[i] = static_cast<unsigned char>(key[i]);
    }
    return values;
  }

  // false once the cap is reached
  bool insert(std::vector<Elem> values, Entry entry, std::uint64_t cap) {
    std::string key = encode(values);
    if (index_.count(key) != 0) return true;
    if (entries_.size() >= cap) {
      complete_ = false;
      return false;
    }
    const auto [it, inserted] = index_.emplace(std::move(key), static_cast<std::uint32_t>(entries_.size()));
    entries_.push_back(entry);
    keys_.push_back(&it->first);
    return true;
  }

  void build(std::uint64_t cap) {
    const std::size_t n = ring_.order();
    complete_ = true;
    for (Elem c = 0; c < n; ++c)
      if (!insert(std::vector<Elem>(n, c), Entry{kRoot, 0, c}, cap)) return;

    std::vector<Elem> power(n);
    for (Elem x = 0; x < n; ++x) power[x] = x;
    for (std::uint64_t k = 1; k <= stabilization_.degree_bound(); ++k) {
      if (k > 1)
        for (Elem x = 0; x < n; ++x) power[x] = ring_.mul(power[x], x);
      // distinct nonzero multiples a * x^k
      std::vector<std::pair<Elem, std::vector<Elem>>> terms;
      std::unordered_map<std::string, bool> seen;
      for (Elem a = 1; a < n; ++a) {
        std::vector<Elem> t(n);
        bool nonzero = false;
        for (Elem x = 0; x < n; ++x) {
          t[x] = ring_.mul(a, power[x]);
          nonzero = nonzero || t[x] != FiniteRing::zero();
        }
        if (nonzero && seen.emplace(encode(t), true).second) terms.emplace_back(a, std::move(t));
      }
      const std::size_t snapshot = entries_.size();
      std::vector<Elem> sum(n);
      for (std::size_t i = 0; i < snapshot; ++i) {
        const std::vector<Elem> base = decode(*keys_[i]);
        for (const auto& [a, t] : terms) {
          for (Elem x = 0; x < n; ++x) sum[x] = ring_.add(base[x], t[x]);
          if (!insert(sum, Entry{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k), a}, cap)) return;
        }
      }
    }
  }

  FiniteRing ring_;
  bool wide_ = false;
  bool complete_ = true;
  bool all_functions_ = false;
  Stabilization stabilization_;
  std::vector<Entry> entries_;
  std::vector<const std::string*> keys_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

inline PolyFunctionSet polynomial_function_set(const FiniteRing& r, std::uint64_t cap = kDefaultFunctionCap) {
  return PolyFunctionSet::compute(r, PolyFunctionSetOptions{.cap = cap});
}

/// Witness polynomial for the table, definitive absence, or unknown when
/// the function set was truncated by its cap.
inline MembershipResult is_polynomial_function(const PolyFunctionSet& set, const FunctionTable& table) {
  return set.lookup(table);
}

inline MembershipResult is_polynomial_function(const FiniteRing& r, const FunctionTable& table,
                                               std::uint64_t cap = kDefaultFunctionCap) {
  return polynomial_function_set(r, cap).lookup(table);
}

/// Polynomial whose function is the characteristic function of s.
inline MembershipResult char_poly_for_subset(const PolyFunctionSet& set, const SubsetMask& s) {
  return set.lookup(characteristic_table(set.ring(), s));
}

inline MembershipResult char_poly_for_subset(const FiniteRing& r, const SubsetMask& s,
                                             std::uint64_t cap = kDefaultFunctionCap) {
  return char_poly_for_subset(polynomial_function_set(r, cap), s);
}

}  // namespace polyring
