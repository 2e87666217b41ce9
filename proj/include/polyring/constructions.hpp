#pragma once

#include <string>
#include <vector>

#include "polyring/polynomial.hpp"
#include "polyring/ring.hpp"

namespace polyring {

/// base[x]/(modulus) for a monic modulus of degree d >= 1 over a commutative
/// unital base. The element c_0 + c_1 x + ... + c_{d-1} x^{d-1} has index
/// sum c_i * |base|^i, so constants keep their base index.
inline FiniteRing make_quotient(const FiniteRing& base, const Polynomial& modulus) {
  detail::require_ring(base, modulus);
  if (!base.is_unital() || !base.is_commutative())
    throw Error(ErrorKind::unsupported_structure, "quotient base must be commutative with unity");
  const auto deg = modulus.degree();
  if (!deg || *deg == 0) throw Error(ErrorKind::invalid_parameter, "modulus must have degree >= 1");
  if (modulus.coeff(*deg) != base.one()) throw Error(ErrorKind::invalid_parameter, "modulus must be monic");

  const std::size_t d = *deg, q = base.order();
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= q;
    if (n > kMaxRingOrder) throw Error(ErrorKind::invalid_parameter, "quotient ring is too large");
  }
  auto digits = [&](std::size_t idx) {
    std::vector<Elem> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = static_cast<Elem>(idx % q);
      idx /= q;
    }
    return c;
  };
  auto index = [&](const std::vector<Elem>& c) {
    std::size_t idx = 0;
    for (std::size_t i = d; i > 0; --i) idx = idx * q + c[i - 1];
    return static_cast<Elem>(idx);
  };

  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<Elem> prod(2 * d - 1);
  for (std::size_t x = 0; x < n; ++x) {
    const auto a = digits(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto b = digits(y);
      std::vector<Elem> s(d);
      for (std::size_t i = 0; i < d; ++i) s[i] = base.add(a[i], b[i]);
      add[x * n + y] = index(s);

      std::fill(prod.begin(), prod.end(), FiniteRing::zero());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = base.add(prod[i + j], base.mul(a[i], b[j]));
      // x^k = -(m_0 + ... + m_{d-1} x^{d-1}) x^{k-d} for k >= d
      for (std::size_t k = prod.size(); k-- > d;) {
        const Elem top = prod[k];
        if (top == FiniteRing::zero()) continue;
        prod[k] = FiniteRing::zero();
        for (std::size_t i = 0; i < d; ++i)
          prod[k - d + i] = base.sub(prod[k - d + i], base.mul(top, modulus.coeff(i)));
      }
      mul[x * n + y] = index(std::vector<Elem>(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d)));
    }
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul),
                                 base.label() + "[x]/(" + to_string(modulus, base) + ")");
}

/// R/I together with the projection and the smallest representative of
/// every coset. Cosets are numbered by their smallest element, so the zero
/// coset is index 0.
struct QuotientRing {
  FiniteRing ring;
  std::uint64_t parent_id = 0;
  std::vector<Elem> project;          // R -> R/I
  std::vector<Elem> representatives;  // R/I -> smallest element of R in the coset
};

/// Throws invalid-parameter unless ideal is a two-sided ideal of r.
inline QuotientRing quotient_by_ideal(const FiniteRing& r, const SubsetMask& ideal, std::string label) {
  if (ideal.ring_id() != r.id()) throw Error(ErrorKind::ring_mismatch, "ideal belongs to another ring");
  if (!ideal.contains(FiniteRing::zero())) throw Error(ErrorKind::invalid_parameter, "ideal must contain zero");
  const auto members = ideal.elements();
  for (Elem a : members) {
    for (Elem b : members)
      if (!ideal.contains(r.sub(a, b))) throw Error(ErrorKind::invalid_parameter, "not an additive subgroup");
    for (Elem x = 0; x < r.order(); ++x)
      if (!ideal.contains(r.mul(x, a)) || !ideal.contains(r.mul(a, x)))
        throw Error(ErrorKind::invalid_parameter, "not a two-sided ideal");
  }

  const std::size_t n = r.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> project(n, kUnset), reps;
  for (Elem x = 0; x < n; ++x) {
    if (project[x] != kUnset) continue;
    const auto coset = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem a : members) project[r.add(x, a)] = coset;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = project[r.add(reps[i], reps[j])];
      mul[i * m + j] = project[r.mul(reps[i], reps[j])];
    }
  return QuotientRing{FiniteRing::from_tables(m, std::move(add), std::move(mul), std::move(label)), r.id(),
                      std::move(project), std::move(reps)};
}

}  // namespace polyring
