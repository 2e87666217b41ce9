// Randomized properties over hand-rolled generators. Seeds are fixed per
// test, so a failure reproduces on rerun.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "polyring/polyring.hpp"

using namespace polyring;

namespace {

constexpr int kTrials = 300;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 1; }

  Elem element(const FiniteRing& r) { return static_cast<Elem>(below(r.order())); }

  Polynomial polynomial(const FiniteRing& r, std::size_t max_degree) {
    std::vector<Elem> coeffs(below(max_degree + 1) + 1);
    for (Elem& c : coeffs) c = element(r);
    return Polynomial(r, std::move(coeffs)).trimmed();
  }

  SubsetMask subset(const FiniteRing& r) {
    SubsetMask s(r);
    for (Elem x = 0; x < r.order(); ++x)
      if (coin()) s.insert(x);
    return s;
  }

  std::vector<Elem> permutation(std::size_t n) {
    std::vector<Elem> p(n);
    std::iota(p.begin(), p.end(), Elem{0});
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  /// A random ring spec of order <= max_order built from Z/n, GF(q),
  /// quotients of Z/n by monic polynomials and products.
  std::string ring_spec(std::size_t max_order) {
    std::string out;
    std::size_t order = 1;
    for (int parts = 0; parts < 3; ++parts) {
      const auto [text, n] = atom(max_order / order);
      if (n == 0) break;
      out += (out.empty() ? "" : " x ") + text;
      order *= n;
      if (coin()) break;
    }
    return out.empty() ? "Z/2" : out;
  }

 private:
  std::pair<std::string, std::size_t> atom(std::size_t budget) {
    if (budget < 2) return {"", 0};
    switch (below(3)) {
      case 0: {
        const std::size_t n = 2 + below(budget - 1);
        return {"Z/" + std::to_string(n), n};
      }
      case 1: {
        std::vector<std::size_t> qs;
        for (const GaloisModulus& g : galois_moduli())
          if (g.q <= budget) qs.push_back(g.q);
        if (qs.empty()) return {"Z/2", 2};
        const std::size_t q = qs[below(qs.size())];
        return {"GF(" + std::to_string(q) + ")", q};
      }
      default: {
        // Z/n[x]/(x^d + lower terms) with n^d <= budget.
        const std::size_t n = 2 + below(std::min<std::size_t>(budget, 4) - 1);
        std::size_t d = 1;
        while (std::pow(n, d + 1) <= budget && coin()) ++d;
        if (std::pow(n, d) > budget) return {"Z/" + std::to_string(n), n};
        std::string mod = d == 1 ? "x" : "x^" + std::to_string(d);
        for (std::size_t k = d; k > 0; --k) {
          const std::size_t c = below(n);
          if (c == 0) continue;
          // A literal 1 is the unity; any other value is the element with that index.
          const std::string coeff = c == 1 && k - 1 > 0 ? "" : std::to_string(c);
          mod += " + " + coeff + (k - 1 >= 1 ? "x" : "") + (k - 1 >= 2 ? "^" + std::to_string(k - 1) : "");
        }
        return {"Z/" + std::to_string(n) + "[x]/(" + mod + ")", static_cast<std::size_t>(std::pow(n, d))};
      }
    }
  }

  std::mt19937_64 rng_;
};

std::vector<Elem> naive_table(const FiniteRing& r, const Polynomial& f) {
  std::vector<Elem> t(r.order());
  for (Elem x = 0; x < r.order(); ++x) t[x] = oracle::naive_eval(r, f.coeffs(), x);
  return t;
}

const std::vector<CatalogEntry>& small_catalog() {
  static const std::vector<CatalogEntry> c = standard_catalog(12);
  return c;
}

}  // namespace

TEST(Properties, EvalAgreesWithNaiveEvaluation) {
  Gen g(1);
  for (int i = 0; i < kTrials; ++i) {
    const FiniteRing& r = small_catalog()[g.below(small_catalog().size())].ring;
    const Polynomial f = g.polynomial(r, 8);
    EXPECT_EQ(function_table(f, r).values, naive_table(r, f)) << r.label() << " trial " << i;
  }
}

TEST(Properties, EveryPolynomialTableIsInTheSet) {
  Gen g(2);
  for (const CatalogEntry& e : small_catalog()) {
    const auto set = polynomial_function_set(e.ring);
    for (int i = 0; i < 40; ++i) {
      // Degrees well past t + p - 1 must still land in the set.
      const Polynomial f = g.polynomial(e.ring, 3 * e.ring.order());
      const FunctionTable t = function_table(f, e.ring);
      const MembershipResult m = set.lookup(t);
      ASSERT_EQ(m.status, Membership::present) << e.name << " f=" << to_string(f, e.ring);
      EXPECT_EQ(naive_table(e.ring, *m.witness), t.values) << e.name;
      EXPECT_LE(m.witness->degree().value_or(0), set.stabilization().degree_bound()) << e.name;
    }
  }
}

TEST(Properties, PointwiseOperationsMatchPolynomialOperations) {
  Gen g(3);
  for (int i = 0; i < kTrials; ++i) {
    const FiniteRing& r = small_catalog()[g.below(small_catalog().size())].ring;
    if (!r.is_commutative()) continue;
    const Polynomial f = g.polynomial(r, 4), h = g.polynomial(r, 4);
    const Elem x = g.element(r);
    const Elem fx = eval(f, r, x), hx = eval(h, r, x);
    EXPECT_EQ(eval(add(r, f, h), r, x), r.add(fx, hx)) << r.label();
    EXPECT_EQ(eval(mul(r, f, h), r, x), r.mul(fx, hx)) << r.label();
    EXPECT_EQ(eval(negate(r, f), r, x), r.neg(fx)) << r.label();
  }
}

TEST(Properties, PolynomialTextRoundTrips) {
  Gen g(4);
  for (int i = 0; i < kTrials; ++i) {
    const FiniteRing& r = small_catalog()[g.below(small_catalog().size())].ring;
    if (!r.is_unital()) continue;
    const Polynomial f = g.polynomial(r, 6);
    EXPECT_EQ(parse_polynomial(to_string(f, r), r), f) << r.label() << " " << to_string(f, r);
  }
}

TEST(Properties, RingSpecsRoundTripAndRealize) {
  Gen g(5);
  for (int i = 0; i < kTrials; ++i) {
    const std::string text = g.ring_spec(32);
    const RingSpecPtr ast = parse_ring_spec(text);
    EXPECT_EQ(*parse_ring_spec(to_string(*ast)), *ast) << text;
    FiniteRing r = make_zn(2);
    try {
      r = realize(*ast);
    } catch (const Error& e) {
      // A random modulus may hit a coefficient outside the base; nothing else may fail.
      EXPECT_EQ(e.kind(), ErrorKind::invalid_parameter) << text << ": " << e.what();
      continue;
    }
    EXPECT_LE(r.order(), 32u) << text;
    // Every generated ring is commutative with unity; a rebuild from its tables passes the axioms.
    EXPECT_TRUE(r.is_commutative()) << text;
    EXPECT_TRUE(r.is_unital()) << text;
    std::size_t product = 1;
    for (const LocalFactor& f : local_decomposition(r)) product *= f.ring.order();
    EXPECT_EQ(product, r.order()) << text;
  }
}

TEST(Properties, UnitsObeyTheExponent) {
  Gen g(6);
  for (int i = 0; i < 60; ++i) {
    const FiniteRing r = ring_from_spec(g.ring_spec(27));
    const RingInvariants inv = analyze(r);
    for (Elem u : inv.units->elements()) EXPECT_EQ(r.pow(u, *inv.unit_group_exponent), r.one()) << r.label();
    for (Elem a : inv.nilpotents.elements()) EXPECT_EQ(r.pow(a, inv.nilpotency_index), 0u) << r.label();
    EXPECT_EQ(inv.is_local, local_decomposition(r).size() == 1) << r.label();
  }
}

TEST(Properties, BijectionsOnSmallFieldsAreRepresentable) {
  Gen g(7);
  for (const char* spec : {"Z/5", "GF(4)", "Z/7", "GF(8)", "GF(9)"}) {
    const FiniteRing r = ring_from_spec(spec);
    const auto set = polynomial_function_set(r);
    for (int i = 0; i < 30; ++i) {
      const std::vector<Elem> p = g.permutation(r.order());
      const MembershipResult m = set.lookup(make_table(r, p));
      ASSERT_EQ(m.status, Membership::present) << spec;
      EXPECT_EQ(function_table(*m.witness, r).values, p) << spec;
    }
  }
}

TEST(Properties, RepresentableCharacteristicFunctionsFactorThroughResidues) {
  Gen g(8);
  for (const CatalogEntry& e : standard_catalog(16)) {
    const RingInvariants inv = analyze(e.ring);
    if (!inv.is_local || !inv.is_commutative) continue;
    const auto set = polynomial_function_set(e.ring);
    for (int i = 0; i < 50; ++i) {
      const SubsetMask s = g.subset(e.ring);
      const Verdict v = check_remark_2_8_subset(e.ring, set, s);
      EXPECT_TRUE(v.holds()) << e.name << " " << v.details;
    }
  }
}

TEST(Properties, NilpotentShiftOnRandomCommutingPairs) {
  Gen g(9);
  const std::vector<CatalogEntry> rings = standard_catalog(16);
  for (int i = 0; i < kTrials; ++i) {
    const FiniteRing& r = rings[g.below(rings.size())].ring;
    const auto nil = nilpotents(r).elements();
    const Elem b = g.element(r), c = nil[g.below(nil.size())];
    const Verdict v = verify_lemma_2_2(r, b, c, 1 + g.below(5));
    if (r.mul(b, c) != r.mul(c, b)) {
      EXPECT_EQ(v.outcome, Outcome::precondition_failed) << r.label();
      continue;
    }
    EXPECT_EQ(v.outcome, Outcome::holds) << r.label() << " b=" << b << " c=" << c;
  }
}

TEST(Properties, ForwardConstructionGivesCharacteristicFunctions) {
  Gen g(10);
  for (const CatalogEntry& e : standard_catalog(16)) {
    if (!analyze(e.ring).is_local || !e.ring.is_commutative()) continue;
    for (int i = 0; i < 40; ++i) {
      const Polynomial f = g.polynomial(e.ring, 4);
      const Verdict v = check_prop_2_6_forward(e.ring, f);
      EXPECT_TRUE(v.holds() || v.outcome == Outcome::precondition_failed) << e.name << " " << v.details;
    }
  }
}

TEST(Properties, LiftsPreserveImageSize) {
  Gen g(11);
  for (const CatalogEntry& e : standard_catalog(16)) {
    if (!analyze(e.ring).is_local || !e.ring.is_commutative()) continue;
    const LiftBasis basis = make_lift_basis(e.ring);
    for (int i = 0; i < 30; ++i) {
      const Polynomial f = g.polynomial(basis.residue.ring, 4);
      EXPECT_EQ(check_prop_2_6_lift(basis, f).outcome, Outcome::holds) << e.name;
    }
  }
}

TEST(Properties, BoundsOnRandomPolynomials) {
  Gen g(12);
  for (const CatalogEntry& e : standard_catalog(16)) {
    if (!e.ring.is_unital() || !e.ring.is_commutative()) continue;
    for (int i = 0; i < 40; ++i) {
      const Polynomial f = g.polynomial(e.ring, 5);
      const Verdict a = check_lemma_2_4_bound(identity_embedding(e.ring), f);
      const Verdict b = check_lemma_2_5_bound(e.ring, f);
      EXPECT_NE(a.outcome, Outcome::violated) << e.name << " " << to_string(f, e.ring);
      EXPECT_NE(b.outcome, Outcome::violated) << e.name << " " << to_string(f, e.ring);
    }
  }
}

TEST(Properties, IsomorphicProductsShareSignatures) {
  Gen g(13);
  for (int i = 0; i < 40; ++i) {
    const std::size_t a = 2 + g.below(4), b = 2 + g.below(4);
    if (std::gcd(a, b) != 1 || a * b > 12) continue;
    const FiniteRing p = make_product(make_zn(a), make_zn(b)), z = make_zn(a * b);
    EXPECT_EQ(invariant_signature(p), invariant_signature(z));
    EXPECT_EQ(polynomial_function_set(p).size(), polynomial_function_set(z).size());
  }
}
