#pragma once

// Checkers for the finite-field characterizations: the zero-divisor
// criterion, "every bijection is polynomial", "every characteristic function
// is polynomial", and the extension-ring criterion for the characteristic
// function of the nonzero elements.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "polyring/analysis.hpp"
#include "polyring/polyfun.hpp"
#include "polyring/verdict.hpp"

namespace polyring {

inline constexpr std::size_t kDefaultMaxBijectionOrder = 6;
inline constexpr std::size_t kDefaultMaxSubsetOrder = 16;

struct CheckOptions {
  std::uint64_t function_cap = kDefaultFunctionCap;
  std::size_t max_bijection_order = kDefaultMaxBijectionOrder;
  std::size_t max_subset_order = kDefaultMaxSubsetOrder;
  /// Largest s tried in a^(sN) = b^(sN).
  std::uint64_t s_max = 5;
  /// Degree bound for the residue-field and Spec bound sweeps.
  std::size_t sweep_degree = 3;
  /// Degree bound for the construction and lifting sweeps.
  std::size_t lift_degree = 2;
};

namespace detail {

inline Verdict make_verdict(ResultId id, Outcome outcome, std::string details) {
  Verdict v;
  v.id = id;
  v.outcome = outcome;
  v.details = std::move(details);
  return v;
}

inline void attach_polynomial(Witness& w, const Polynomial& f, const FiniteRing& ring) {
  w.polynomial = f;
  w.polynomial_text = to_string(f, ring);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string list_elements(const std::vector<Elem>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

}  // namespace detail

/// Everything f(u) can be for polynomials with f(0) = 0, i.e. the additive
/// closure of {a * u^k : a in R, k >= 1}.
inline SubsetMask zero_constant_reach(const FiniteRing& r, Elem u) {
  std::vector<Elem> powers;
  std::vector<bool> seen_power(r.order(), false);
  for (Elem p = u; !seen_power[p]; p = r.mul(p, u)) {
    seen_power[p] = true;
    powers.push_back(p);
  }
  std::vector<Elem> generators;
  for (Elem p : powers)
    for (Elem a = 0; a < r.order(); ++a) generators.push_back(r.mul(a, p));
  SubsetMask reach(r);
  reach.insert(FiniteRing::zero());
  std::vector<Elem> frontier{FiniteRing::zero()};
  while (!frontier.empty()) {
    const Elem x = frontier.back();
    frontier.pop_back();
    for (Elem g : generators) {
      const Elem y = r.add(x, g);
      if (!reach.contains(y)) {
        reach.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return reach;
}

/// "For all nonzero u, s some f with f(0) = 0 sends u to s" versus "R is a
/// field"; holds when the two agree.
inline Verdict check_lemma_1_1(const FiniteRing& r) {
  if (r.order() < 2) return detail::make_verdict(ResultId::L1_1, Outcome::precondition_failed, "ring has no nonzero element");
  const bool field = analyze(r).is_field;
  bool condition = true;
  Witness w;
  for (Elem u = 1; u < r.order() && condition; ++u) {
    const SubsetMask reach = zero_constant_reach(r, u);
    for (Elem s = 1; s < r.order(); ++s)
      if (!reach.contains(s)) {
        condition = false;
        w.kind = WitnessKind::pair;
        w.elements = {u, s};
        break;
      }
  }
  const bool agree = condition == field;
  Verdict v = detail::make_verdict(
      ResultId::L1_1, agree ? Outcome::holds : Outcome::violated,
      "every nonzero u reaches every nonzero s with f(0)=0: " + detail::yes_no(condition) +
          "; field: " + detail::yes_no(field) +
          (w.kind == WitnessKind::pair
               ? "; s=" + std::to_string(w.elements[1]) + " is unreachable from u=" + std::to_string(w.elements[0])
               : ""));
  v.witness = std::move(w);
  return v;
}

/// Re-checks a single pair: if s is unreachable from u the ring must not be a field.
inline Verdict check_lemma_1_1_pair(const FiniteRing& r, Elem u, Elem s) {
  if (u == 0 || s == 0 || !r.contains(u) || !r.contains(s))
    throw Error(ErrorKind::invalid_parameter, "pair must consist of nonzero elements of " + r.label());
  const bool reachable = zero_constant_reach(r, u).contains(s);
  const bool field = analyze(r).is_field;
  Verdict v;
  v.id = ResultId::L1_1;
  v.witness.kind = WitnessKind::pair;
  v.witness.elements = {u, s};
  if (reachable) {
    v.outcome = Outcome::vacuous;
    v.details = "s=" + std::to_string(s) + " is reachable from u=" + std::to_string(u) + "; pair carries no information";
  } else {
    v.outcome = field ? Outcome::violated : Outcome::holds;
    v.details = "s=" + std::to_string(s) + " is unreachable from u=" + std::to_string(u) +
                "; field: " + detail::yes_no(field);
  }
  return v;
}

/// "Every bijection is a polynomial function" versus "R is a field", by
/// exhausting all |R|! permutations. Transpositions are tried first so a
/// failing witness is a transposition whenever one exists.
inline Verdict check_prop_1_2(const FiniteRing& r, const PolyFunctionSet& set, const CheckOptions& opts = {}) {
  if (set.ring_id() != r.id()) throw Error(ErrorKind::ring_mismatch, "function set belongs to another ring");
  if (r.order() > opts.max_bijection_order)
    return detail::make_verdict(ResultId::P1_2, Outcome::skipped,
                                "order " + std::to_string(r.order()) + " exceeds the bijection limit " +
                                    std::to_string(opts.max_bijection_order));
  if (r.order() < 2) return detail::make_verdict(ResultId::P1_2, Outcome::precondition_failed, "ring has no nonzero element");
  const bool field = analyze(r).is_field;
  const std::size_t n = r.order();

  Witness w;
  bool capped = false;
  auto examine = [&](const std::vector<Elem>& perm) {
    const Membership m = set.status(FunctionTable{r.id(), r.id(), perm});
    if (m == Membership::unknown) capped = true;
    if (m == Membership::absent && w.kind == WitnessKind::none) {
      w.kind = WitnessKind::table;
      w.elements = perm;
    }
    return m == Membership::present;
  };

  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  for (Elem i = 0; i < n && w.kind == WitnessKind::none; ++i)
    for (Elem j = i + 1; j < n && w.kind == WitnessKind::none; ++j) {
      std::swap(perm[i], perm[j]);
      examine(perm);
      std::swap(perm[i], perm[j]);
    }
  std::uint64_t total = 0, representable = 0;
  do {
    ++total;
    if (examine(perm)) ++representable;
  } while (std::next_permutation(perm.begin(), perm.end()));
  w.values = {{"bijections", total}, {"representable", representable}};

  const bool all = representable == total;
  Verdict v;
  v.id = ResultId::P1_2;
  v.witness = std::move(w);
  // Only a definitely absent table settles "not every bijection"; capped
  // lookups alone leave it open.
  const bool decided = all || v.witness.kind != WitnessKind::none;
  v.outcome = decided ? (all == field ? Outcome::holds : Outcome::violated) : Outcome::unknown;
  v.details = std::to_string(representable) + " of " + std::to_string(total) +
              " bijections are polynomial; field: " + detail::yes_no(field) +
              (capped ? "; function set truncated by cap" : "");
  return v;
}

inline Verdict check_prop_1_2(const FiniteRing& r, const CheckOptions& opts = {}) {
  if (r.order() > opts.max_bijection_order)
    return detail::make_verdict(ResultId::P1_2, Outcome::skipped,
                                "order " + std::to_string(r.order()) + " exceeds the bijection limit " +
                                    std::to_string(opts.max_bijection_order));
  return check_prop_1_2(r, polynomial_function_set(r, opts.function_cap), opts);
}

/// Re-checks one bijection: if it is not polynomial the ring must not be a field.
inline Verdict check_prop_1_2_table(const FiniteRing& r, const PolyFunctionSet& set, const std::vector<Elem>& table) {
  std::vector<Elem> sorted = table;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted.size() != r.order() || sorted[i] != i)
      throw Error(ErrorKind::invalid_parameter, "table is not a bijection of " + r.label());
  const bool field = analyze(r).is_field;
  const Membership m = set.status(FunctionTable{r.id(), r.id(), table});
  Verdict v;
  v.id = ResultId::P1_2;
  v.witness.kind = WitnessKind::table;
  v.witness.elements = table;
  switch (m) {
    case Membership::present:
      v.outcome = Outcome::vacuous;
      v.details = "bijection is polynomial; carries no information";
      break;
    case Membership::absent:
      v.outcome = field ? Outcome::violated : Outcome::holds;
      v.details = "bijection is not polynomial; field: " + detail::yes_no(field);
      break;
    case Membership::unknown:
      v.outcome = Outcome::unknown;
      v.details = "function set truncated by cap";
      break;
  }
  return v;
}

namespace detail {

inline SubsetMask mask_from_bits(const FiniteRing& r, std::uint64_t bits) {
  SubsetMask s(r);
  for (Elem x = 0; x < r.order(); ++x)
    if ((bits >> x) & 1U) s.insert(x);
  return s;
}

}  // namespace detail

/// "Every characteristic function is polynomial" versus "R is a field", by
/// exhausting all 2^|R| subsets (unital rings). Singletons {u}, u != 0, are
/// tried first.
inline Verdict check_prop_1_3(const FiniteRing& r, const PolyFunctionSet& set, const CheckOptions& opts = {}) {
  if (set.ring_id() != r.id()) throw Error(ErrorKind::ring_mismatch, "function set belongs to another ring");
  if (!r.is_unital()) return detail::make_verdict(ResultId::P1_3, Outcome::skipped, "requires a ring with unity");
  if (r.order() > opts.max_subset_order || r.order() > 63)
    return detail::make_verdict(ResultId::P1_3, Outcome::skipped,
                                "order " + std::to_string(r.order()) + " exceeds the subset limit " +
                                    std::to_string(opts.max_subset_order));
  if (r.order() < 2) return detail::make_verdict(ResultId::P1_3, Outcome::precondition_failed, "ring has no nonzero element");
  const bool field = analyze(r).is_field;

  Witness w;
  bool capped = false;
  auto examine = [&](const SubsetMask& s) {
    const Membership m = set.status(characteristic_table(r, s));
    if (m == Membership::unknown) capped = true;
    if (m == Membership::absent && w.kind == WitnessKind::none) {
      w.kind = WitnessKind::subset;
      w.elements = s.elements();
    }
    return m == Membership::present;
  };
  for (Elem u = 1; u < r.order() && w.kind == WitnessKind::none; ++u) examine(SubsetMask(r, {u}));

  const std::uint64_t total = std::uint64_t{1} << r.order();
  std::uint64_t representable = 0;
  for (std::uint64_t bits = 0; bits < total; ++bits)
    if (examine(detail::mask_from_bits(r, bits))) ++representable;
  w.values = {{"subsets", total}, {"representable", representable}};

  const bool all = representable == total;
  Verdict v;
  v.id = ResultId::P1_3;
  v.witness = std::move(w);
  const bool decided = all || v.witness.kind != WitnessKind::none;
  v.outcome = decided ? (all == field ? Outcome::holds : Outcome::violated) : Outcome::unknown;
  v.details = std::to_string(representable) + " of " + std::to_string(total) +
              " characteristic functions are polynomial; field: " + detail::yes_no(field) +
              (capped ? "; function set truncated by cap" : "");
  return v;
}

inline Verdict check_prop_1_3(const FiniteRing& r, const CheckOptions& opts = {}) {
  if (!r.is_unital()) return detail::make_verdict(ResultId::P1_3, Outcome::skipped, "requires a ring with unity");
  if (r.order() > opts.max_subset_order || r.order() > 63)
    return detail::make_verdict(ResultId::P1_3, Outcome::skipped,
                                "order " + std::to_string(r.order()) + " exceeds the subset limit " +
                                    std::to_string(opts.max_subset_order));
  return check_prop_1_3(r, polynomial_function_set(r, opts.function_cap), opts);
}

/// Re-checks one subset: if its characteristic function is not polynomial
/// the ring must not be a field.
inline Verdict check_prop_1_3_subset(const FiniteRing& r, const PolyFunctionSet& set, const SubsetMask& s) {
  if (!r.is_unital()) return detail::make_verdict(ResultId::P1_3, Outcome::skipped, "requires a ring with unity");
  const bool field = analyze(r).is_field;
  const Membership m = set.status(characteristic_table(r, s));
  Verdict v;
  v.id = ResultId::P1_3;
  v.witness.kind = WitnessKind::subset;
  v.witness.elements = s.elements();
  switch (m) {
    case Membership::present:
      v.outcome = Outcome::vacuous;
      v.details = "characteristic function is polynomial; carries no information";
      break;
    case Membership::absent:
      v.outcome = field ? Outcome::violated : Outcome::holds;
      v.details = "characteristic function of " + detail::list_elements(s.elements()) +
                  " is not polynomial; field: " + detail::yes_no(field);
      break;
    case Membership::unknown:
      v.outcome = Outcome::unknown;
      v.details = "function set truncated by cap";
      break;
  }
  return v;
}

/// With A ⊆ B commutative and unital: if f over B sends 0 to 0 and every
/// nonzero a in A to 1, then A must be a field. Vacuous when f does not
/// satisfy the hypothesis.
inline Verdict verify_prop_2_1(const Embedding& emb, const Polynomial& f) {
  const FiniteRing& a = emb.small();
  const FiniteRing& b = emb.big();
  if (!a.is_unital() || !b.is_unital() || !a.is_commutative() || !b.is_commutative())
    return detail::make_verdict(ResultId::P2_1, Outcome::skipped, "requires commutative rings with unity");
  detail::require_ring(b, f);
  Verdict v;
  v.id = ResultId::P2_1;
  detail::attach_polynomial(v.witness, f, b);
  v.witness.kind = WitnessKind::polynomial;
  const Elem one = b.one();
  for (Elem x = 0; x < a.order(); ++x) {
    const Elem value = eval(f, emb, x);
    const Elem expected = x == FiniteRing::zero() ? FiniteRing::zero() : one;
    if (value != expected) {
      v.outcome = Outcome::vacuous;
      v.witness.kind = WitnessKind::element;
      v.witness.elements = {x};
      v.witness.values = {{"value", value}};
      v.details = "hypothesis fails: f(" + std::to_string(x) + ") = " + std::to_string(value);
      return v;
    }
  }
  const bool field = analyze(a).is_field;
  v.outcome = field ? Outcome::holds : Outcome::violated;
  v.details = "f gives the characteristic function of the nonzero elements; " + a.label() +
              " is a field: " + detail::yes_no(field);
  return v;
}

/// Default form over A = B = R: looks for a polynomial over R giving the
/// characteristic function of R \ {0} and verifies it, or reports that the
/// hypothesis is unsatisfiable over R itself.
inline Verdict verify_prop_2_1(const FiniteRing& r, const PolyFunctionSet& set) {
  if (!r.is_unital() || !r.is_commutative())
    return detail::make_verdict(ResultId::P2_1, Outcome::skipped, "requires a commutative ring with unity");
  SubsetMask nonzero = SubsetMask::all(r);
  nonzero.erase(FiniteRing::zero());
  const MembershipResult m = char_poly_for_subset(set, nonzero);
  if (m.status == Membership::present) return verify_prop_2_1(identity_embedding(r), *m.witness);
  Verdict v = detail::make_verdict(
      ResultId::P2_1, m.status == Membership::absent ? Outcome::vacuous : Outcome::unknown,
      m.status == Membership::absent ? "no polynomial over " + r.label() + " gives the characteristic function of the nonzero elements"
                                     : "function set truncated by cap");
  return v;
}

}  // namespace polyring
