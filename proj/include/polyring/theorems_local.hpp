#pragma once

// Checkers for the local-ring results: the binomial exponent N with
// (b+c)^(sN) = b^(sN), unit-order and nilpotency bounds, the residue-field
// and Spec bounds, construction and lifting of characteristic polynomials,
// and the classification of rings admitting one.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyring/analysis.hpp"
#include "polyring/embedding.hpp"
#include "polyring/polyfun.hpp"
#include "polyring/theorems_fields.hpp"
#include "polyring/verdict.hpp"

namespace polyring {

// ---------------------------------------------------------------------------
// Integer helpers

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Number of prime factors of n counted with multiplicity.
inline std::uint64_t big_omega(std::uint64_t n) {
  std::uint64_t count = 0;
  for (const auto& [p, e] : factorize(n)) count += e;
  return count;
}

/// Exponent of p in m! (Legendre).
inline std::uint64_t factorial_valuation(std::uint64_t p, std::uint64_t m) {
  std::uint64_t v = 0;
  for (std::uint64_t q = p; q <= m; q *= p) {
    v += m / q;
    if (q > m / p) break;
  }
  return v;
}

inline std::uint64_t checked_factorial(std::uint64_t m) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= m; ++i) f = checked_mul(f, i);
  return f;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) out = checked_mul(out, base);
  return out;
}

namespace detail {

/// Calls fn on every polynomial over r of degree at most max_degree
/// (coefficient tuples in odometer order, constant term fastest).
inline void for_each_polynomial(const FiniteRing& r, std::size_t max_degree,
                                const std::function<void(const Polynomial&)>& fn) {
  std::vector<Elem> coeffs(max_degree + 1, FiniteRing::zero());
  for (;;) {
    fn(Polynomial(r, coeffs));
    std::size_t i = 0;
    while (i < coeffs.size() && ++coeffs[i] == r.order()) coeffs[i++] = FiniteRing::zero();
    if (i == coeffs.size()) return;
  }
}

inline bool is_local_commutative(const RingInvariants& inv) {
  return inv.is_unital && inv.is_commutative && inv.is_local;
}

inline Verdict not_local(ResultId id, const FiniteRing& r) {
  return make_verdict(id, Outcome::precondition_failed, r.label() + " is not a commutative local ring with unity");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// (b + c)^(sN) = b^(sN)

struct Lemma22Params {
  std::uint64_t char_n = 0;
  std::uint64_t nilp_index_r = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> factorization;
  std::vector<std::uint64_t> betas;
  std::uint64_t exponent_N = 0;
};

/// N = prod p_i^(e_i + beta_i) where n = prod p_i^e_i and p_i^beta_i is the
/// exact power of p_i dividing (r-1)!.
inline Lemma22Params lemma_2_2_exponent(std::uint64_t char_n, std::uint64_t nilp_index_r) {
  if (char_n < 2) throw Error(ErrorKind::invalid_parameter, "characteristic must be at least 2");
  if (nilp_index_r < 1) throw Error(ErrorKind::invalid_parameter, "nilpotency index must be at least 1");
  Lemma22Params out{.char_n = char_n, .nilp_index_r = nilp_index_r, .factorization = factorize(char_n)};
  out.exponent_N = 1;
  for (const auto& [p, e] : out.factorization) {
    const std::uint64_t beta = factorial_valuation(p, nilp_index_r - 1);
    out.betas.push_back(beta);
    out.exponent_N = checked_mul(out.exponent_N, checked_pow(p, e + beta));
  }
  return out;
}

/// Checks (b+c)^(sN) = b^(sN) for s = 1..s_max, with N taken from the
/// characteristic and the nilpotency index of c.
inline Verdict verify_lemma_2_2(const FiniteRing& r, Elem b, Elem c, std::uint64_t s_max = 5) {
  if (!r.contains(b) || !r.contains(c)) throw Error(ErrorKind::invalid_parameter, "element out of range");
  Verdict v;
  v.id = ResultId::L2_2;
  v.witness.kind = WitnessKind::pair;
  v.witness.elements = {b, c};
  const auto index = nilpotency_index_of(r, c);
  if (!index) {
    v.outcome = Outcome::precondition_failed;
    v.details = "c=" + std::to_string(c) + " is not nilpotent";
    return v;
  }
  if (r.mul(b, c) != r.mul(c, b)) {
    v.outcome = Outcome::precondition_failed;
    v.details = "b and c do not commute";
    return v;
  }
  const std::uint64_t n = characteristic(r);
  if (n < 2) return detail::make_verdict(ResultId::L2_2, Outcome::precondition_failed, "zero ring");
  const Lemma22Params params = lemma_2_2_exponent(n, *index);
  const Elem a = r.add(b, c);
  v.witness.values = {{"N", params.exponent_N}, {"r", *index}, {"s_max", s_max}};
  for (std::uint64_t s = 1; s <= s_max; ++s) {
    const std::uint64_t k = checked_mul(s, params.exponent_N);
    if (r.pow(a, k) != r.pow(b, k)) {
      v.outcome = Outcome::violated;
      v.witness.values.emplace_back("s", s);
      v.details = "(b+c)^(" + std::to_string(k) + ") differs from b^(" + std::to_string(k) + ")";
      return v;
    }
  }
  v.outcome = Outcome::holds;
  v.details = "N=" + std::to_string(params.exponent_N) + " (n=" + std::to_string(n) + ", r=" + std::to_string(*index) +
              "); equal for s=1.." + std::to_string(s_max);
  return v;
}

/// verify_lemma_2_2 over every b and every nilpotent c commuting with b.
inline Verdict check_lemma_2_2(const FiniteRing& r, const CheckOptions& opts = {}) {
  std::uint64_t pairs = 0;
  const auto nil = nilpotents(r).elements();
  for (Elem b = 0; b < r.order(); ++b)
    for (Elem c : nil) {
      if (r.mul(b, c) != r.mul(c, b)) continue;
      Verdict one = verify_lemma_2_2(r, b, c, opts.s_max);
      if (one.outcome == Outcome::violated) return one;
      ++pairs;
    }
  Verdict v = detail::make_verdict(ResultId::L2_2, Outcome::holds,
                                   std::to_string(pairs) + " pairs (b, nilpotent c) agree for s=1.." +
                                       std::to_string(opts.s_max));
  v.witness.values = {{"pairs", pairs}};
  return v;
}

// ---------------------------------------------------------------------------
// Units and nilpotents of a local ring

/// With n = |R/m|, N = char(R) * (r-1)!: every unit satisfies u^(N(n-1)) = 1,
/// u^(n-1) - 1 is nilpotent, and the unit exponent divides N(n-1).
inline Verdict unit_order_bound(const FiniteRing& r) {
  const RingInvariants inv = analyze(r);
  if (!detail::is_local_commutative(inv)) return detail::not_local(ResultId::P2_3i, r);
  const std::uint64_t n = *inv.residue_field_order;
  const std::uint64_t N = checked_mul(inv.characteristic, checked_factorial(inv.nilpotency_index - 1));
  const std::uint64_t bound = checked_mul(N, n - 1);
  Verdict v;
  v.id = ResultId::P2_3i;
  v.witness.values = {{"residue_order", n},      {"characteristic", inv.characteristic},
                      {"nilpotency_index", inv.nilpotency_index}, {"N", N},
                      {"bound", bound},          {"unit_exponent", *inv.unit_group_exponent}};
  const Elem one = r.one();
  for (Elem u : inv.units->elements()) {
    if (!inv.nilpotents.contains(r.sub(r.pow(u, n - 1), one))) {
      v.outcome = Outcome::violated;
      v.witness.kind = WitnessKind::element;
      v.witness.elements = {u};
      v.details = "u^(n-1) - 1 is not nilpotent for u=" + std::to_string(u);
      return v;
    }
    if (r.pow(u, bound) != one) {
      v.outcome = Outcome::violated;
      v.witness.kind = WitnessKind::element;
      v.witness.elements = {u};
      v.details = "u^" + std::to_string(bound) + " != 1 for u=" + std::to_string(u);
      return v;
    }
  }
  const bool divides = bound % *inv.unit_group_exponent == 0;
  v.outcome = divides ? Outcome::holds : Outcome::violated;
  v.details = "u^" + std::to_string(bound) + " = 1 for all " + std::to_string(inv.units->count()) +
              " units; unit exponent " + std::to_string(*inv.unit_group_exponent) +
              (divides ? " divides " : " does not divide ") + std::to_string(bound);
  return v;
}

/// f = g + h with the unit coefficients in g and the rest in h. Throws
/// unsupported-structure if some coefficient is neither unit nor nilpotent.
inline std::pair<Polynomial, Polynomial> split_unit_nilpotent(const FiniteRing& r, const Polynomial& f) {
  detail::require_ring(r, f);
  const SubsetMask unit_set = units(r);
  const std::size_t len = f.coeffs().size();
  std::vector<Elem> g(len, FiniteRing::zero()), h(len, FiniteRing::zero());
  for (std::size_t i = 0; i < len; ++i) {
    const Elem a = f.coeff(i);
    if (unit_set.contains(a)) {
      g[i] = a;
    } else {
      if (!nilpotency_index_of(r, a))
        throw Error(ErrorKind::unsupported_structure,
                    "coefficient " + std::to_string(a) + " is neither a unit nor nilpotent");
      h[i] = a;
    }
  }
  return {Polynomial(r, std::move(g)).trimmed(), Polynomial(r, std::move(h)).trimmed()};
}

/// Least k >= 1 with h^k = 0 in R[X].
inline std::uint64_t polynomial_nilpotency_index(const FiniteRing& r, const Polynomial& h) {
  Polynomial p = h.trimmed();
  for (std::uint64_t k = 1; k <= r.order() + 1; ++k) {
    if (p.is_zero()) return k;
    p = mul(r, p, h);
  }
  throw Error(ErrorKind::invalid_parameter, "polynomial is not nilpotent");
}

/// The unit-exponent-to-nilpotency construction: with m the unit exponent,
/// f = (X+1)^m - 1 vanishes on nilpotents; splitting f = g + h, the least
/// degree s of g and N from the binomial lemma applied to h in R[X] give
/// f^N = g^N and c^(sN) = 0 for every nilpotent c. Also requires the unit
/// bound to hold.
inline Verdict check_prop_2_3(const FiniteRing& r) {
  const RingInvariants inv = analyze(r);
  if (!detail::is_local_commutative(inv)) return detail::not_local(ResultId::P2_3ii, r);
  const Verdict bound = unit_order_bound(r);
  if (!bound.holds()) {
    Verdict v = bound;
    v.id = ResultId::P2_3ii;
    return v;
  }
  const std::uint64_t m = *inv.unit_group_exponent;
  const Polynomial one = Polynomial::constant(r, r.one());
  const Polynomial f = sub(r, pow(r, add(r, Polynomial::x(r), one), m), one);
  const auto [g, h] = split_unit_nilpotent(r, f);

  Verdict v;
  v.id = ResultId::P2_3ii;
  detail::attach_polynomial(v.witness, f, r);
  v.witness.kind = WitnessKind::polynomial;
  std::uint64_t s = 0;
  for (std::size_t i = 1; i < g.coeffs().size(); ++i)
    if (g.coeff(i) != FiniteRing::zero()) {
      s = i;
      break;
    }
  if (s == 0) {
    v.outcome = Outcome::violated;
    v.details = "g has no nonconstant term";
    return v;
  }
  const std::uint64_t h_index = polynomial_nilpotency_index(r, h);
  const std::uint64_t N = lemma_2_2_exponent(inv.characteristic, h_index).exponent_N;
  v.witness.values = {{"m", m}, {"s", s}, {"h_index", h_index}, {"N", N}};
  if (pow(r, f, N) != pow(r, g, N)) {
    v.outcome = Outcome::violated;
    v.details = "f^N != g^N in R[X]";
    return v;
  }
  const std::uint64_t sN = checked_mul(s, N);
  for (Elem c : inv.nilpotents.elements()) {
    const bool ok = eval(f, r, c) == FiniteRing::zero() && r.pow(eval(g, r, c), N) == FiniteRing::zero() &&
                    r.pow(c, sN) == FiniteRing::zero();
    if (!ok) {
      v.outcome = Outcome::violated;
      v.witness.kind = WitnessKind::element;
      v.witness.elements = {c};
      v.details = "construction fails at nilpotent c=" + std::to_string(c);
      return v;
    }
  }
  v.outcome = Outcome::holds;
  v.details = "f=" + v.witness.polynomial_text + ", g=" + to_string(g, r) + ", h=" + to_string(h, r) +
              "; s=" + std::to_string(s) + ", N=" + std::to_string(N) + "; c^" + std::to_string(sN) +
              " = 0 for all " + std::to_string(inv.nilpotents.count()) + " nilpotents";
  return v;
}

// ---------------------------------------------------------------------------
// Residue-field and Spec bounds

namespace detail {

/// Index of the first residue projection on which `values` (elements of the
/// ring the projections belong to) is constant.
inline std::optional<std::size_t> constant_modulo(const std::vector<ResidueProjection>& projections,
                                                  const std::vector<Elem>& values) {
  for (std::size_t i = 0; i < projections.size(); ++i) {
    bool constant = true;
    for (Elem v : values)
      if (projections[i].project[v] != projections[i].project[values.front()]) {
        constant = false;
        break;
      }
    if (constant) return i;
  }
  return std::nullopt;
}

inline Verdict lemma_2_4_with(const Embedding& emb, const Polynomial& f, const std::vector<ResidueProjection>& big,
                              const std::vector<ResidueProjection>& small) {
  Verdict v;
  v.id = ResultId::L2_4;
  attach_polynomial(v.witness, f, emb.big());
  v.witness.kind = WitnessKind::polynomial;
  const std::vector<Elem> values = function_table(f, emb).values;
  const auto deg = f.degree();
  if (const auto at = constant_modulo(big, values); at || !deg || *deg == 0) {
    v.outcome = Outcome::precondition_failed;
    if (at) {
      v.witness.kind = WitnessKind::idempotents;
      v.witness.elements = {big[*at].idempotent};
    }
    v.details = at ? "f is constant on A modulo the maximal ideal of " + emb.big().label() + " split off by idempotent " +
                         std::to_string(big[*at].idempotent)
                   : "f is constant";
    return v;
  }
  SubsetMask img(emb.big());
  for (Elem x : values) img.insert(x);
  const std::uint64_t bound = checked_mul(img.count(), *deg);
  std::uint64_t largest = 0;
  for (const ResidueProjection& p : small) largest = std::max<std::uint64_t>(largest, p.field.order());
  v.witness.values = {{"image_size", img.count()}, {"degree", *deg}, {"largest_residue_order", largest}};
  v.outcome = largest <= bound ? Outcome::holds : Outcome::violated;
  v.details = "largest |A/m| = " + std::to_string(largest) + (largest <= bound ? " <= " : " > ") +
              std::to_string(img.count()) + " * " + std::to_string(*deg);
  return v;
}

inline Verdict lemma_2_5_with(const FiniteRing& r, const Polynomial& f, const std::vector<ResidueProjection>& projections) {
  Verdict v;
  v.id = ResultId::L2_5;
  attach_polynomial(v.witness, f, r);
  v.witness.kind = WitnessKind::polynomial;
  const std::vector<Elem> values = function_table(f, r).values;
  SubsetMask img(r);
  for (Elem x : values) img.insert(x);
  const std::uint64_t spec = projections.size();
  const std::uint64_t omega = big_omega(img.count());
  v.witness.values = {{"spec_size", spec}, {"image_size", img.count()}, {"omega", omega}};
  if (const auto at = constant_modulo(projections, values)) {
    v.outcome = Outcome::precondition_failed;
    v.witness.kind = WitnessKind::idempotents;
    v.witness.elements = {projections[*at].idempotent};
    v.details = "f is constant modulo the maximal ideal split off by idempotent " +
                std::to_string(projections[*at].idempotent) + "; the bound needs non-constancy" +
                (spec > omega ? " and fails without it here: |Spec| = " + std::to_string(spec) +
                                    " > Omega(" + std::to_string(img.count()) + ") = " + std::to_string(omega)
                              : "");
    return v;
  }
  v.outcome = spec <= omega ? Outcome::holds : Outcome::violated;
  v.details = "|Spec| = " + std::to_string(spec) + (spec <= omega ? " <= " : " > ") + "Omega(" +
              std::to_string(img.count()) + ") = " + std::to_string(omega);
  return v;
}

template <class One>
Verdict sweep_polynomials(ResultId id, const FiniteRing& r, std::size_t degree, One&& one) {
  std::uint64_t total = 0, met = 0;
  std::optional<Verdict> bad;
  for_each_polynomial(r, degree, [&](const Polynomial& f) {
    if (bad) return;
    ++total;
    Verdict v = one(f);
    if (v.outcome == Outcome::violated) bad = std::move(v);
    else if (v.outcome == Outcome::holds) ++met;
  });
  if (bad) return *bad;
  Verdict v = make_verdict(id, Outcome::holds,
                           std::to_string(met) + " of " + std::to_string(total) + " polynomials of degree <= " +
                               std::to_string(degree) + " meet the hypothesis; no violation");
  v.witness.values = {{"polynomials", total}, {"hypothesis_met", met}};
  return v;
}

}  // namespace detail

/// |A/m| <= |f(A)| * deg f for every maximal ideal m of A, provided f is
/// non-constant on A modulo every maximal ideal of B.
inline Verdict check_lemma_2_4_bound(const Embedding& emb, const Polynomial& f) {
  for (const FiniteRing* r : {&emb.small(), &emb.big()})
    if (!r->is_unital() || !r->is_commutative())
      return detail::make_verdict(ResultId::L2_4, Outcome::skipped, "requires commutative rings with unity");
  detail::require_ring(emb.big(), f);
  return detail::lemma_2_4_with(emb, f, residue_projections(emb.big()), residue_projections(emb.small()));
}

/// Residue-field bound with A = B = R over every polynomial of degree <= opts.sweep_degree.
inline Verdict check_lemma_2_4_bound(const FiniteRing& r, const CheckOptions& opts = {}) {
  if (!r.is_unital() || !r.is_commutative())
    return detail::make_verdict(ResultId::L2_4, Outcome::skipped, "requires a commutative ring with unity");
  const Embedding id = identity_embedding(r);
  const auto projections = residue_projections(r);
  return detail::sweep_polynomials(ResultId::L2_4, r, opts.sweep_degree,
                                   [&](const Polynomial& f) { return detail::lemma_2_4_with(id, f, projections, projections); });
}

/// |Spec R| <= Omega(|f(R)|), provided f is non-constant modulo every
/// maximal ideal.
inline Verdict check_lemma_2_5_bound(const FiniteRing& r, const Polynomial& f) {
  if (!r.is_unital() || !r.is_commutative())
    return detail::make_verdict(ResultId::L2_5, Outcome::skipped, "requires a commutative ring with unity");
  detail::require_ring(r, f);
  return detail::lemma_2_5_with(r, f, residue_projections(r));
}

inline Verdict check_lemma_2_5_bound(const FiniteRing& r, const CheckOptions& opts = {}) {
  if (!r.is_unital() || !r.is_commutative())
    return detail::make_verdict(ResultId::L2_5, Outcome::skipped, "requires a commutative ring with unity");
  const auto projections = residue_projections(r);
  return detail::sweep_polynomials(ResultId::L2_5, r, opts.sweep_degree,
                                   [&](const Polynomial& f) { return detail::lemma_2_5_with(r, f, projections); });
}

// ---------------------------------------------------------------------------
// Characteristic polynomials on local rings

struct CharConstruction {
  /// The polynomial actually raised to the power: f, or f - f(0) when every
  /// value of f is a unit.
  Polynomial base;
  bool shifted = false;
  std::uint64_t exponent = 1;
  Polynomial result;
  SubsetMask support;
};

/// f^N as a nontrivial characteristic function, with N = lcm of the orders
/// of the unit values times the least power killing every non-unit value.
/// Throws no-nontrivial-output when f is constant modulo m.
inline CharConstruction construct_char_from_finite_image(const FiniteRing& r, const Polynomial& f) {
  detail::require_ring(r, f);
  const RingInvariants inv = analyze(r);
  if (!detail::is_local_commutative(inv))
    throw Error(ErrorKind::unsupported_structure, r.label() + " is not a commutative local ring with unity");
  const QuotientRing k = residue_field(r);
  std::vector<Elem> values = function_table(f, r).values;
  if (std::all_of(values.begin(), values.end(), [&](Elem v) { return k.project[v] == k.project[values[0]]; }))
    throw Error(ErrorKind::no_nontrivial_output, "f is constant modulo the maximal ideal");

  Polynomial base = f.trimmed();
  bool shifted = false;
  if (std::all_of(values.begin(), values.end(), [&](Elem v) { return inv.units->contains(v); })) {
    base = sub(r, base, Polynomial::constant(r, values[FiniteRing::zero()]));
    shifted = true;
    values = function_table(base, r).values;
  }
  std::uint64_t unit_lcm = 1, kill = 1;
  SubsetMask seen(r);
  for (Elem v : values) {
    if (seen.contains(v)) continue;
    seen.insert(v);
    if (inv.units->contains(v))
      unit_lcm = checked_lcm(unit_lcm, *multiplicative_order(r, v));
    else
      kill = std::max(kill, *nilpotency_index_of(r, v));
  }
  const std::uint64_t N = checked_mul(unit_lcm, kill);
  Polynomial result = pow(r, base, N);
  SubsetMask support(r);
  const Elem one = r.one();
  for (Elem x = 0; x < r.order(); ++x)
    if (eval(result, r, x) == one) support.insert(x);
  return CharConstruction{std::move(base), shifted, N, std::move(result), std::move(support)};
}

/// Runs the construction and checks by evaluation that the output is
/// 0/1-valued and takes both values.
inline Verdict check_prop_2_6_forward(const FiniteRing& r, const Polynomial& f) {
  const RingInvariants inv = analyze(r);
  if (!detail::is_local_commutative(inv)) return detail::not_local(ResultId::P2_6fwd, r);
  Verdict v;
  v.id = ResultId::P2_6fwd;
  detail::attach_polynomial(v.witness, f, r);
  v.witness.kind = WitnessKind::polynomial;
  std::optional<CharConstruction> built;
  try {
    built = construct_char_from_finite_image(r, f);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::no_nontrivial_output) throw;
    v.outcome = Outcome::precondition_failed;
    v.details = "f is constant modulo the maximal ideal";
    return v;
  }
  const FunctionTable t = function_table(built->result, r);
  const Elem one = r.one();
  bool zero_one = true, has0 = false, has1 = false;
  for (Elem x : t.values) {
    zero_one = zero_one && (x == FiniteRing::zero() || x == one);
    has0 = has0 || x == FiniteRing::zero();
    has1 = has1 || x == one;
  }
  v.witness.values = {{"N", built->exponent}, {"shifted", built->shifted ? 1U : 0U}};
  v.witness.elements = built->support.elements();
  v.outcome = zero_one && has0 && has1 ? Outcome::holds : Outcome::violated;
  v.details = std::string(built->shifted ? "(f - f(0))^" : "f^") + std::to_string(built->exponent) +
              (v.outcome == Outcome::holds ? " is the characteristic function of " + detail::list_elements(v.witness.elements)
                                           : " is not a nontrivial characteristic function");
  return v;
}

inline Verdict check_prop_2_6_forward(const FiniteRing& r, const CheckOptions& opts = {}) {
  const RingInvariants inv = analyze(r);
  if (!detail::is_local_commutative(inv)) return detail::not_local(ResultId::P2_6fwd, r);
  return detail::sweep_polynomials(ResultId::P2_6fwd, r, opts.lift_degree,
                                   [&](const Polynomial& f) { return check_prop_2_6_forward(r, f); });
}

struct LiftData {
  std::vector<Elem> reps_alpha;
  std::vector<Elem> values_beta;
  /// Nilpotency index e, unit exponent e', least N with N * e' > e.
  std::uint64_t e = 1;
  std::uint64_t e_prime = 1;
  std::uint64_t N = 1;
  std::uint64_t exponent = 1;
};

struct Lift {
  Polynomial polynomial;
  LiftData data;
};

/// The ring-dependent part of the lift: residue field, representatives
/// alpha_i and the polynomials (prod_{j != i} (X - alpha_j))^(N e').
struct LiftBasis {
  FiniteRing ring;
  QuotientRing residue;
  LiftData data;
  std::vector<Polynomial> basis;
};

inline LiftBasis make_lift_basis(const FiniteRing& r) {
  const RingInvariants inv = analyze(r);
  if (!detail::is_local_commutative(inv))
    throw Error(ErrorKind::unsupported_structure, r.label() + " is not a commutative local ring with unity");
  QuotientRing k = residue_field(r);
  LiftData data;
  data.reps_alpha = k.representatives;
  data.e = inv.nilpotency_index;
  data.e_prime = *inv.unit_group_exponent;
  data.N = data.e / data.e_prime + 1;
  data.exponent = checked_mul(data.N, data.e_prime);
  std::vector<Polynomial> basis;
  const Polynomial x = Polynomial::x(r);
  for (std::size_t i = 0; i < data.reps_alpha.size(); ++i) {
    Polynomial p = Polynomial::constant(r, r.one());
    for (std::size_t j = 0; j < data.reps_alpha.size(); ++j)
      if (j != i) p = mul(r, p, sub(r, x, Polynomial::constant(r, data.reps_alpha[j])));
    basis.push_back(pow(r, p, data.exponent));
  }
  return LiftBasis{r, std::move(k), std::move(data), std::move(basis)};
}

/// f~ = sum_i beta_i (prod_{j != i} (X - alpha_j))^(N e'), where beta_i is
/// the smallest element in the class f(alpha_i mod m). f is over the
/// residue field basis.residue.ring.
inline Lift lift_residue_poly(const LiftBasis& basis, const Polynomial& f) {
  const FiniteRing& k = basis.residue.ring;
  detail::require_ring(k, f);
  Lift out{Polynomial::zero(basis.ring), basis.data};
  for (std::size_t i = 0; i < basis.basis.size(); ++i) {
    const Elem beta = basis.residue.representatives[eval(f, k, static_cast<Elem>(i))];
    out.data.values_beta.push_back(beta);
    out.polynomial = add(basis.ring, out.polynomial, scale(basis.ring, beta, basis.basis[i]));
  }
  return out;
}

inline Lift lift_residue_poly(const FiniteRing& r, const Polynomial& f) {
  return lift_residue_poly(make_lift_basis(r), f);
}

/// Lifts f and checks by evaluation that the lift reduces to f's table
/// modulo m and has an image of the same size.
inline Verdict check_prop_2_6_lift(const LiftBasis& basis, const Polynomial& f) {
  const FiniteRing& r = basis.ring;
  const FiniteRing& k = basis.residue.ring;
  const Lift lift = lift_residue_poly(basis, f);
  Verdict v;
  v.id = ResultId::P2_6lift;
  detail::attach_polynomial(v.witness, f, k);
  v.witness.kind = WitnessKind::polynomial;
  const FunctionTable fk = function_table(f, k);
  const FunctionTable lifted = function_table(lift.polynomial, r);
  SubsetMask image_k(k), image_r(r);
  for (Elem y : fk.values) image_k.insert(y);
  for (Elem y : lifted.values) image_r.insert(y);
  v.witness.values = {{"exponent", lift.data.exponent}, {"image_size", image_r.count()}, {"residue_image_size", image_k.count()}};
  for (Elem x = 0; x < r.order(); ++x)
    if (basis.residue.project[lifted.values[x]] != fk.values[basis.residue.project[x]]) {
      v.outcome = Outcome::violated;
      v.witness.elements = {x};
      v.details = "lift does not reduce to f at x=" + std::to_string(x);
      return v;
    }
  v.outcome = image_r.count() == image_k.count() ? Outcome::holds : Outcome::violated;
  v.details = "lift with exponent " + std::to_string(lift.data.exponent) + " has " + std::to_string(image_r.count()) +
              " values; f has " + std::to_string(image_k.count());
  return v;
}

inline Verdict check_prop_2_6_lift(const FiniteRing& r, const Polynomial& f) {
  const RingInvariants inv = analyze(r);
  if (!detail::is_local_commutative(inv)) return detail::not_local(ResultId::P2_6lift, r);
  return check_prop_2_6_lift(make_lift_basis(r), f);
}

inline Verdict check_prop_2_6_lift(const FiniteRing& r, const CheckOptions& opts = {}) {
  const RingInvariants inv = analyze(r);
  if (!detail::is_local_commutative(inv)) return detail::not_local(ResultId::P2_6lift, r);
  const LiftBasis basis = make_lift_basis(r);
  return detail::sweep_polynomials(ResultId::P2_6lift, basis.residue.ring, opts.lift_degree,
                                   [&](const Polynomial& f) { return check_prop_2_6_lift(basis, f); });
}

// ---------------------------------------------------------------------------
// Classification and factoring through R/m

namespace detail {

inline bool nontrivial_zero_one(const std::vector<Elem>& values, Elem one) {
  bool has0 = false, has1 = false;
  for (Elem v : values) {
    if (v == FiniteRing::zero()) has0 = true;
    else if (v == one) has1 = true;
    else return false;
  }
  return has0 && has1;
}

}  // namespace detail

/// "Some nonempty proper subset has a polynomial characteristic function"
/// versus "R is local". The left side is decided by scanning the complete
/// function set for a non-constant 0/1-valued table, trying the units first.
inline Verdict classify_prop_2_7(const FiniteRing& r, const PolyFunctionSet& set) {
  if (!r.is_unital() || !r.is_commutative())
    return detail::make_verdict(ResultId::P2_7, Outcome::skipped, "requires a commutative ring with unity");
  if (set.ring_id() != r.id()) throw Error(ErrorKind::ring_mismatch, "function set belongs to another ring");
  const RingInvariants inv = analyze(r);
  const Elem one = r.one();
  Verdict v;
  v.id = ResultId::P2_7;

  std::optional<Polynomial> found;
  const FunctionTable chi_units = characteristic_table(r, *inv.units);
  if (detail::nontrivial_zero_one(chi_units.values, one)) {
    MembershipResult m = set.lookup(chi_units);
    if (m.status == Membership::present) found = m.witness;
  }
  if (!found && !set.all_functions())
    if (const auto i = set.find_first([&](const std::vector<Elem>& t) { return detail::nontrivial_zero_one(t, one); }))
      found = set.witness_of(*i);
  if (!found && !set.complete()) {
    v.outcome = Outcome::unknown;
    v.details = "no characteristic polynomial among the stored functions; function set truncated by cap";
    return v;
  }
  const bool lhs = found.has_value();
  v.outcome = lhs == inv.is_local ? Outcome::holds : Outcome::violated;
  if (found) {
    detail::attach_polynomial(v.witness, *found, r);
    v.witness.kind = WitnessKind::polynomial;
    SubsetMask support(r);
    for (Elem x = 0; x < r.order(); ++x)
      if (eval(*found, r, x) == one) support.insert(x);
    v.witness.elements = support.elements();
    v.details = "characteristic function of " + detail::list_elements(v.witness.elements) + " is polynomial; local: " +
                detail::yes_no(inv.is_local);
  } else {
    v.witness.kind = WitnessKind::idempotents;
    v.witness.elements = detail::primitive_idempotents(r, inv.idempotents);
    v.details = "no nonempty proper subset has a polynomial characteristic function; " +
                std::to_string(v.witness.elements.size()) + " local factors; local: " + detail::yes_no(inv.is_local);
  }
  return v;
}

/// Re-checks one polynomial: if it gives a nontrivial characteristic
/// function the ring must be local.
inline Verdict classify_prop_2_7_poly(const FiniteRing& r, const Polynomial& f) {
  if (!r.is_unital() || !r.is_commutative())
    return detail::make_verdict(ResultId::P2_7, Outcome::skipped, "requires a commutative ring with unity");
  const RingInvariants inv = analyze(r);
  Verdict v;
  v.id = ResultId::P2_7;
  detail::attach_polynomial(v.witness, f, r);
  v.witness.kind = WitnessKind::polynomial;
  if (!detail::nontrivial_zero_one(function_table(f, r).values, r.one())) {
    v.outcome = Outcome::vacuous;
    v.details = "f is not a nontrivial characteristic function";
    return v;
  }
  v.outcome = inv.is_local ? Outcome::holds : Outcome::violated;
  v.details = "f is a nontrivial characteristic function; local: " + detail::yes_no(inv.is_local);
  return v;
}

/// Whether s is a union of cosets x + m of the maximal ideal.
inline bool is_coset_union(const FiniteRing& r, const SubsetMask& maximal, const SubsetMask& s) {
  for (Elem x : s.elements())
    for (Elem a : maximal.elements())
      if (!s.contains(r.add(x, a))) return false;
  return true;
}

/// For one subset: polynomial characteristic function implies union of cosets of m.
inline Verdict check_remark_2_8_subset(const FiniteRing& r, const PolyFunctionSet& set, const SubsetMask& s) {
  const RingInvariants inv = analyze(r);
  if (!detail::is_local_commutative(inv)) return detail::not_local(ResultId::R2_8, r);
  Verdict v;
  v.id = ResultId::R2_8;
  v.witness.kind = WitnessKind::subset;
  v.witness.elements = s.elements();
  const bool coset = is_coset_union(r, *inv.jacobson_radical, s);
  switch (set.status(characteristic_table(r, s))) {
    case Membership::present:
      v.outcome = coset ? Outcome::holds : Outcome::violated;
      v.details = std::string("characteristic function is polynomial; union of cosets of m: ") + detail::yes_no(coset);
      break;
    case Membership::absent:
      v.outcome = Outcome::vacuous;
      v.details = std::string("characteristic function is not polynomial; union of cosets of m: ") + detail::yes_no(coset);
      break;
    case Membership::unknown:
      v.outcome = Outcome::unknown;
      v.details = "function set truncated by cap";
      break;
  }
  return v;
}

/// Every subset with a polynomial characteristic function is a union of
/// cosets of m, checked over all 2^|R| subsets.
inline Verdict check_remark_2_8(const FiniteRing& r, const PolyFunctionSet& set, const CheckOptions& opts = {}) {
  const RingInvariants inv = analyze(r);
  if (!detail::is_local_commutative(inv)) return detail::not_local(ResultId::R2_8, r);
  if (set.ring_id() != r.id()) throw Error(ErrorKind::ring_mismatch, "function set belongs to another ring");
  if (r.order() > opts.max_subset_order || r.order() > 63)
    return detail::make_verdict(ResultId::R2_8, Outcome::skipped,
                                "order " + std::to_string(r.order()) + " exceeds the subset limit " +
                                    std::to_string(opts.max_subset_order));
  const SubsetMask& maximal = *inv.jacobson_radical;
  std::uint64_t representable = 0, cosets = 0;
  bool capped = false;
  const std::uint64_t total = std::uint64_t{1} << r.order();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const SubsetMask s = detail::mask_from_bits(r, bits);
    const bool coset = is_coset_union(r, maximal, s);
    cosets += coset ? 1 : 0;
    const Membership m = set.status(characteristic_table(r, s));
    if (m == Membership::unknown) capped = true;
    if (m != Membership::present) continue;
    ++representable;
    if (!coset) {
      Verdict v = detail::make_verdict(ResultId::R2_8, Outcome::violated,
                                       "characteristic function of " + detail::list_elements(s.elements()) +
                                           " is polynomial but the subset is not a union of cosets of m");
      v.witness.kind = WitnessKind::subset;
      v.witness.elements = s.elements();
      return v;
    }
  }
  Verdict v = detail::make_verdict(
      ResultId::R2_8, capped ? Outcome::unknown : Outcome::holds,
      std::to_string(representable) + " of " + std::to_string(total) + " characteristic functions are polynomial, all unions of cosets of m (" +
          std::to_string(cosets) + " such unions)" + (capped ? "; function set truncated by cap" : ""));
  v.witness.values = {{"subsets", total}, {"representable", representable}, {"coset_unions", cosets}};
  return v;
}

}  // namespace polyring
