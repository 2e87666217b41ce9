#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polyring/polyring.hpp"

using namespace polyring;

namespace {

FiniteRing ring(const char* spec) { return ring_from_spec(spec); }

Polynomial poly(const char* text, const FiniteRing& r) { return parse_polynomial(text, r); }

std::uint64_t value(const Verdict& v, const char* name) {
  const auto x = v.witness.value(name);
  EXPECT_TRUE(x.has_value()) << "missing witness value " << name;
  return x.value_or(0);
}

}  // namespace

// Reaching values with f(0) = 0

TEST(ZeroFixingReach, FieldReachesEverything) {
  const Verdict v = check_lemma_1_1(ring("GF(4)"));
  EXPECT_EQ(v.outcome, Outcome::holds);
  EXPECT_EQ(v.witness.kind, WitnessKind::none);
}

TEST(ZeroFixingReach, ZeroMultiplicationRing) {
  const FiniteRing z = make_zero_multiplication(2);
  EXPECT_EQ(zero_constant_reach(z, 1).elements(), (std::vector<Elem>{0}));
  const Verdict v = check_lemma_1_1(z);
  EXPECT_EQ(v.outcome, Outcome::holds);
  EXPECT_EQ(v.witness.kind, WitnessKind::pair);
}

TEST(ZeroFixingReach, Z4FromTwo) {
  const FiniteRing z4 = make_zn(4);
  EXPECT_EQ(zero_constant_reach(z4, 2).elements(), (std::vector<Elem>{0, 2}));
  EXPECT_EQ(check_lemma_1_1(z4).outcome, Outcome::holds);
  EXPECT_EQ(check_lemma_1_1_pair(z4, 2, 1).outcome, Outcome::holds);
  EXPECT_EQ(check_lemma_1_1_pair(z4, 1, 2).outcome, Outcome::vacuous);
}

TEST(ZeroFixingReach, PairRejectsZero) {
  EXPECT_THROW(check_lemma_1_1_pair(make_zn(4), 0, 1), Error);
}

// Bijections

TEST(Bijections, F3AllBijections) {
  const Verdict v = check_prop_1_2(make_zn(3));
  EXPECT_EQ(v.outcome, Outcome::holds);
  EXPECT_EQ(value(v, "bijections"), 6u);
  EXPECT_EQ(value(v, "representable"), 6u);
}

TEST(Bijections, Z4HasUnrepresentableTransposition) {
  const FiniteRing z4 = make_zn(4);
  const Verdict v = check_prop_1_2(z4);
  EXPECT_EQ(v.outcome, Outcome::holds);
  ASSERT_EQ(v.witness.kind, WitnessKind::table);
  // The witness is a transposition, and no polynomial of the oracle set has its table.
  int moved = 0;
  for (Elem x = 0; x < 4; ++x) moved += v.witness.elements[x] != x;
  EXPECT_EQ(moved, 2);
  EXPECT_FALSE(oracle::all_polynomial_tables(z4, 3).contains(v.witness.elements));
  const auto set = polynomial_function_set(z4);
  EXPECT_EQ(check_prop_1_2_table(z4, set, {0, 2, 1, 3}).outcome, Outcome::holds);
}

TEST(Bijections, ZeroRingSwapIsUnrepresentable) {
  const FiniteRing z = make_zero_multiplication(2);
  const Verdict v = check_prop_1_2(z);
  EXPECT_EQ(v.outcome, Outcome::holds);
  EXPECT_EQ(v.witness.elements, (std::vector<Elem>{1, 0}));
}

TEST(Bijections, LargeOrderIsSkipped) {
  EXPECT_EQ(check_prop_1_2(ring("GF(8)")).outcome, Outcome::skipped);
  EXPECT_EQ(check_prop_1_2(make_zn(7), {.max_bijection_order = 7}).outcome, Outcome::holds);
}

TEST(Bijections, CapGivesUnknownForFieldlessAnswer) {
  // Z/4 with a tiny cap: an absent table is only "unknown", but a missing
  // transposition is still never claimed representable.
  const Verdict v = check_prop_1_2(make_zn(4), {.function_cap = 8});
  EXPECT_NE(v.outcome, Outcome::violated);
}

// Subset indicators

TEST(SubsetIndicators, GF4AllSubsets) {
  const Verdict v = check_prop_1_3(ring("GF(4)"));
  EXPECT_EQ(v.outcome, Outcome::holds);
  EXPECT_EQ(value(v, "subsets"), 16u);
  EXPECT_EQ(value(v, "representable"), 16u);
}

TEST(SubsetIndicators, Z4NonzeroSubset) {
  const FiniteRing z4 = make_zn(4);
  EXPECT_EQ(check_prop_1_3(z4).outcome, Outcome::holds);
  const auto set = polynomial_function_set(z4);
  const Verdict v = check_prop_1_3_subset(z4, set, SubsetMask(z4, {1, 2, 3}));
  EXPECT_EQ(v.outcome, Outcome::holds);
  EXPECT_EQ(v.witness.kind, WitnessKind::subset);
}

TEST(SubsetIndicators, Z6SingletonOne) {
  const FiniteRing z6 = make_zn(6);
  EXPECT_EQ(check_prop_1_3(z6).outcome, Outcome::holds);
  const auto set = polynomial_function_set(z6);
  EXPECT_EQ(check_prop_1_3_subset(z6, set, SubsetMask(z6, {1})).outcome, Outcome::holds);
}

TEST(SubsetIndicators, NonUnitalIsSkippedByDispatcher) {
  EXPECT_FALSE(applicable(ResultId::P1_3, analyze(make_zero_multiplication(4)), {}));
}

// Indicator of the nonzero elements of a subring

TEST(NonzeroIndicatorSubring, F2InsideGF4) {
  const FiniteRing gf4 = ring("GF(4)");
  const Embedding e = embed(make_zn(2), gf4, {0, 1});
  EXPECT_EQ(verify_prop_2_1(e, Polynomial::x(gf4)).outcome, Outcome::holds);
}

TEST(NonzeroIndicatorSubring, GF4CubeIsUnitIndicator) {
  const FiniteRing gf4 = ring("GF(4)");
  EXPECT_EQ(verify_prop_2_1(identity_embedding(gf4), poly("x^3", gf4)).outcome, Outcome::holds);
}

TEST(NonzeroIndicatorSubring, Z4IsVacuous) {
  const FiniteRing z4 = make_zn(4);
  const auto set = polynomial_function_set(z4);
  EXPECT_EQ(verify_prop_2_1(z4, set).outcome, Outcome::vacuous);
  // Every polynomial with f(0) = 0 fails the hypothesis at 2.
  for (const auto& t : oracle::all_polynomial_tables(z4, 3))
    if (t[0] == 0) {
      EXPECT_NE(t[2], 1u);
    }
  const Verdict x2 = verify_prop_2_1(identity_embedding(z4), poly("x^2", z4));
  EXPECT_EQ(x2.outcome, Outcome::vacuous);
  EXPECT_EQ(x2.witness.elements, (std::vector<Elem>{2}));
}

// Nilpotent shifts

TEST(NilpotentShift, ExponentFormula) {
  const Lemma22Params a = lemma_2_2_exponent(4, 2);
  EXPECT_EQ(a.exponent_N, 4u);
  EXPECT_EQ(a.betas, (std::vector<std::uint64_t>{0}));
  const Lemma22Params b = lemma_2_2_exponent(8, 3);
  EXPECT_EQ(b.exponent_N, 16u);
  EXPECT_EQ(b.betas, (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(lemma_2_2_exponent(9, 2).exponent_N, 9u);
  // 12 = 2^2 * 3, r = 4: 3! = 6 has beta = (1, 1), N = 2^3 * 3^2 = 72.
  EXPECT_EQ(lemma_2_2_exponent(12, 4).exponent_N, 72u);
}

TEST(NilpotentShift, BetaIsExactValuation) {
  for (std::uint64_t n : {4u, 6u, 8u, 12u, 27u, 30u})
    for (std::uint64_t r = 1; r <= 8; ++r) {
      const Lemma22Params p = lemma_2_2_exponent(n, r);
      const std::uint64_t fact = checked_factorial(r - 1);
      std::uint64_t N = 1;
      for (std::size_t i = 0; i < p.factorization.size(); ++i) {
        const auto [prime, e] = p.factorization[i];
        const std::uint64_t pb = checked_pow(prime, p.betas[i]);
        EXPECT_EQ(fact % pb, 0u);
        EXPECT_NE(fact % (pb * prime), 0u);
        N *= checked_pow(prime, e + p.betas[i]);
      }
      EXPECT_EQ(p.exponent_N, N);
    }
}

TEST(NilpotentShift, Examples) {
  const Verdict z4 = verify_lemma_2_2(make_zn(4), 1, 2);
  EXPECT_EQ(z4.outcome, Outcome::holds);
  EXPECT_EQ(value(z4, "N"), 4u);
  const Verdict z8 = verify_lemma_2_2(make_zn(8), 1, 2);
  EXPECT_EQ(z8.outcome, Outcome::holds);
  EXPECT_EQ(value(z8, "N"), 16u);
  for (Elem b = 0; b < 9; ++b) EXPECT_EQ(verify_lemma_2_2(make_zn(9), b, 0).outcome, Outcome::holds);
}

TEST(NilpotentShift, NonNilpotentIsPrecondition) {
  EXPECT_EQ(verify_lemma_2_2(make_zn(4), 1, 1).outcome, Outcome::precondition_failed);
}

TEST(NilpotentShift, WholeRing) {
  for (const char* spec : {"Z/8", "Z/27", "Z/4[x]/(x^2 + 2)", "Z/2 x Z/4", "upper-triangular-2"})
    EXPECT_EQ(check_lemma_2_2(ring(spec)).outcome, Outcome::holds) << spec;
}

// Unit exponent and nilpotents

TEST(UnitExponent, UnitBoundExamples) {
  const Verdict z4 = unit_order_bound(make_zn(4));
  EXPECT_EQ(z4.outcome, Outcome::holds);
  EXPECT_EQ(value(z4, "N"), 4u);
  EXPECT_EQ(value(z4, "bound"), 4u);
  const Verdict z9 = unit_order_bound(make_zn(9));
  EXPECT_EQ(z9.outcome, Outcome::holds);
  EXPECT_EQ(value(z9, "N"), 9u);
  EXPECT_EQ(value(z9, "bound"), 18u);
  // F_4: characteristic 2, nilpotency index 1, so N = 2 and the bound is 6.
  const Verdict f4 = unit_order_bound(ring("GF(4)"));
  EXPECT_EQ(f4.outcome, Outcome::holds);
  EXPECT_EQ(value(f4, "N"), 2u);
  EXPECT_EQ(value(f4, "bound"), 6u);
}

TEST(UnitExponent, NotLocal) {
  EXPECT_EQ(unit_order_bound(make_zn(6)).outcome, Outcome::precondition_failed);
  EXPECT_EQ(check_prop_2_3(make_zn(6)).outcome, Outcome::precondition_failed);
}

TEST(UnitExponent, SplitUnitNilpotent) {
  const FiniteRing z4 = make_zn(4);
  const auto [g, h] = split_unit_nilpotent(z4, poly("3x^2 + 2x", z4));
  EXPECT_EQ(g, poly("3x^2", z4));
  EXPECT_EQ(h, poly("2x", z4));
  const auto [g1, h1] = split_unit_nilpotent(z4, poly("x^3 + 3", z4));
  EXPECT_EQ(g1, poly("x^3 + 3", z4));
  EXPECT_TRUE(h1.is_zero());
  const auto [g0, h0] = split_unit_nilpotent(z4, Polynomial::zero(z4));
  EXPECT_TRUE(g0.is_zero());
  EXPECT_TRUE(h0.is_zero());
}

TEST(UnitExponent, ConverseConstruction) {
  const Verdict z4 = check_prop_2_3(make_zn(4));
  EXPECT_EQ(z4.outcome, Outcome::holds);
  EXPECT_EQ(value(z4, "m"), 2u);
  EXPECT_EQ(value(z4, "s"), 2u);
  EXPECT_EQ(z4.witness.polynomial_text, "x^2 + 2x");
  const Verdict z9 = check_prop_2_3(make_zn(9));
  EXPECT_EQ(z9.outcome, Outcome::holds);
  EXPECT_EQ(value(z9, "m"), 6u);
  EXPECT_EQ(value(z9, "s"), 3u);
  EXPECT_EQ(z9.witness.polynomial_text, "x^6 + 6x^5 + 6x^4 + 2x^3 + 6x^2 + 6x");
  const Verdict f2 = check_prop_2_3(make_zn(2));
  EXPECT_EQ(f2.outcome, Outcome::holds);
  EXPECT_EQ(value(f2, "s"), 1u);
}

TEST(UnitExponent, HoldsOnLocalCatalog) {
  for (const CatalogEntry& e : standard_catalog(27)) {
    if (!analyze(e.ring).is_local) continue;
    EXPECT_EQ(unit_order_bound(e.ring).outcome, Outcome::holds) << e.name;
    EXPECT_EQ(check_prop_2_3(e.ring).outcome, Outcome::holds) << e.name;
  }
}

// Image-size bounds

TEST(ResidueFieldBound, Examples) {
  const FiniteRing z4 = make_zn(4), f3 = make_zn(3), z6 = make_zn(6);
  const Verdict a = check_lemma_2_4_bound(identity_embedding(z4), poly("x^2", z4));
  EXPECT_EQ(a.outcome, Outcome::holds);
  EXPECT_EQ(value(a, "image_size"), 2u);
  const Verdict b = check_lemma_2_4_bound(identity_embedding(f3), Polynomial::x(f3));
  EXPECT_EQ(b.outcome, Outcome::holds);
  EXPECT_EQ(value(b, "image_size") * value(b, "degree"), value(b, "largest_residue_order"));
  EXPECT_EQ(check_lemma_2_4_bound(identity_embedding(z6), poly("x^2 + x", z6)).outcome,
            Outcome::precondition_failed);
}

TEST(SpecBound, Examples) {
  const FiniteRing z4 = make_zn(4), z6 = make_zn(6);
  const Verdict caveat = check_lemma_2_5_bound(z6, poly("x^2 + x", z6));
  EXPECT_EQ(caveat.outcome, Outcome::precondition_failed);
  EXPECT_EQ(value(caveat, "spec_size"), 2u);
  EXPECT_EQ(value(caveat, "omega"), 1u);
  const Verdict id = check_lemma_2_5_bound(z6, Polynomial::x(z6));
  EXPECT_EQ(id.outcome, Outcome::holds);
  EXPECT_EQ(value(id, "image_size"), 6u);
  EXPECT_EQ(value(id, "omega"), 2u);
  const Verdict sq = check_lemma_2_5_bound(z4, poly("x^2", z4));
  EXPECT_EQ(sq.outcome, Outcome::holds);
  EXPECT_EQ(value(sq, "omega"), 1u);
}

TEST(SpecBound, IntegerHelpers) {
  EXPECT_EQ(big_omega(1), 0u);
  EXPECT_EQ(big_omega(12), 3u);
  EXPECT_EQ(big_omega(27), 3u);
  EXPECT_EQ(factorial_valuation(2, 10), 8u);
  EXPECT_EQ(factorial_valuation(3, 10), 4u);
  EXPECT_EQ(factorize(360), (std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {3, 2}, {5, 1}}));
}

TEST(ImageBounds, SweepsHoldOnSmallCatalog) {
  for (const CatalogEntry& e : standard_catalog(8)) {
    const RingInvariants inv = analyze(e.ring);
    if (!inv.is_unital || !inv.is_commutative) continue;
    EXPECT_TRUE(check_lemma_2_4_bound(e.ring).holds()) << e.name;
    EXPECT_TRUE(check_lemma_2_5_bound(e.ring).holds()) << e.name;
  }
}

// Indicator construction and lifting

TEST(ForwardConstruction, Examples) {
  const FiniteRing z4 = make_zn(4), z9 = make_zn(9), f2 = make_zn(2);
  const CharConstruction a = construct_char_from_finite_image(z4, Polynomial::x(z4));
  EXPECT_EQ(a.exponent, 4u);
  EXPECT_EQ(function_table(a.result, z4).values, (std::vector<Elem>{0, 1, 0, 1}));
  const CharConstruction b = construct_char_from_finite_image(z9, Polynomial::x(z9));
  EXPECT_EQ(b.exponent, 12u);
  EXPECT_EQ(function_table(b.result, z9).values, (std::vector<Elem>{0, 1, 1, 0, 1, 1, 0, 1, 1}));
  // X^6 already works on Z/9, as the smaller exponent shows.
  EXPECT_EQ(function_table(poly("x^6", z9), z9).values, function_table(b.result, z9).values);
  const CharConstruction c = construct_char_from_finite_image(f2, Polynomial::x(f2));
  EXPECT_EQ(c.exponent, 1u);
  EXPECT_EQ(c.result, Polynomial::x(f2));
}

TEST(ForwardConstruction, AllUnitValuesAreShifted) {
  const FiniteRing f3 = make_zn(3);
  const CharConstruction c = construct_char_from_finite_image(f3, poly("x^2 + 1", f3));
  EXPECT_TRUE(c.shifted);
  const auto t = function_table(c.result, f3).values;
  EXPECT_EQ(t, (std::vector<Elem>{0, 1, 1}));
}

TEST(ForwardConstruction, ResidueConstantIsRefused) {
  const FiniteRing z4 = make_zn(4);
  try {
    construct_char_from_finite_image(z4, poly("2x + 1", z4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_nontrivial_output);
  }
  EXPECT_EQ(check_prop_2_6_forward(z4, poly("2x + 1", z4)).outcome, Outcome::precondition_failed);
}

TEST(ResidueLift, Z4Identity) {
  const FiniteRing z4 = make_zn(4);
  const LiftBasis basis = make_lift_basis(z4);
  const Lift l = lift_residue_poly(basis, Polynomial::x(basis.residue.ring));
  EXPECT_EQ(l.data.reps_alpha, (std::vector<Elem>{0, 1}));
  EXPECT_EQ(l.data.values_beta, (std::vector<Elem>{0, 1}));
  EXPECT_EQ(l.data.e, 2u);
  EXPECT_EQ(l.data.e_prime, 2u);
  EXPECT_EQ(l.data.N, 2u);
  EXPECT_EQ(l.polynomial, poly("x^4", z4));
  EXPECT_EQ(function_table(l.polynomial, z4).values, (std::vector<Elem>{0, 1, 0, 1}));
}

TEST(ResidueLift, Z9Identity) {
  const FiniteRing z9 = make_zn(9);
  const LiftBasis basis = make_lift_basis(z9);
  const Lift l = lift_residue_poly(basis, Polynomial::x(basis.residue.ring));
  EXPECT_EQ(l.data.reps_alpha, (std::vector<Elem>{0, 1, 2}));
  EXPECT_EQ(l.data.values_beta, (std::vector<Elem>{0, 1, 2}));
  EXPECT_EQ(l.data.exponent, 6u);
  EXPECT_GT(l.data.exponent, l.data.e);
  EXPECT_EQ(image(l.polynomial, z9).count(), 3u);
  const Verdict v = check_prop_2_6_lift(basis, Polynomial::x(basis.residue.ring));
  EXPECT_EQ(v.outcome, Outcome::holds);
}

TEST(ResidueLift, FieldLiftMatchesTable) {
  const FiniteRing f5 = make_zn(5);
  const LiftBasis basis = make_lift_basis(f5);
  const Polynomial f = poly("2x^2 + 3", basis.residue.ring);
  const Lift l = lift_residue_poly(basis, f);
  EXPECT_EQ(function_table(l.polynomial, f5).values, function_table(f, basis.residue.ring).values);
}

TEST(IndicatorConstructions, SweepsHoldOnLocalCatalog) {
  for (const CatalogEntry& e : standard_catalog(9)) {
    if (!analyze(e.ring).is_local) continue;
    EXPECT_TRUE(check_prop_2_6_forward(e.ring).holds()) << e.name;
    EXPECT_TRUE(check_prop_2_6_lift(e.ring).holds()) << e.name;
  }
}

// Nontrivial indicators on local rings

TEST(LocalIndicator, Examples) {
  const FiniteRing z4 = make_zn(4), z6 = make_zn(6), f8 = ring("GF(8)");
  const Verdict a = classify_prop_2_7(z4, polynomial_function_set(z4));
  EXPECT_EQ(a.outcome, Outcome::holds);
  ASSERT_TRUE(a.witness.polynomial.has_value());
  EXPECT_EQ(function_table(*a.witness.polynomial, z4).values, (std::vector<Elem>{0, 1, 0, 1}));
  const Verdict b = classify_prop_2_7(z6, polynomial_function_set(z6));
  EXPECT_EQ(b.outcome, Outcome::holds);
  EXPECT_EQ(b.witness.kind, WitnessKind::idempotents);
  EXPECT_EQ(b.witness.elements, (std::vector<Elem>{3, 4}));
  const Verdict c = classify_prop_2_7(f8, polynomial_function_set(f8));
  EXPECT_EQ(c.outcome, Outcome::holds);
  ASSERT_TRUE(c.witness.polynomial.has_value());
  std::vector<Elem> chi(8, 1);
  chi[0] = 0;
  EXPECT_EQ(function_table(*c.witness.polynomial, f8).values, chi);
}

TEST(LocalIndicator, SinglePolynomial) {
  const FiniteRing z4 = make_zn(4);
  EXPECT_EQ(classify_prop_2_7_poly(z4, poly("x^2", z4)).outcome, Outcome::holds);
  EXPECT_EQ(classify_prop_2_7_poly(z4, poly("x", z4)).outcome, Outcome::vacuous);
}

TEST(CosetUnions, Examples) {
  const FiniteRing z4 = make_zn(4);
  const auto set = polynomial_function_set(z4);
  EXPECT_EQ(check_remark_2_8_subset(z4, set, SubsetMask(z4, {1, 3})).outcome, Outcome::holds);
  EXPECT_TRUE(check_remark_2_8_subset(z4, set, SubsetMask(z4, {1, 2, 3})).holds());
  EXPECT_EQ(check_remark_2_8(z4, set).outcome, Outcome::holds);
  const FiniteRing f5 = make_zn(5);
  EXPECT_EQ(check_remark_2_8(f5, polynomial_function_set(f5)).outcome, Outcome::holds);
}

TEST(CosetUnions, CosetUnion) {
  const FiniteRing z9 = make_zn(9);
  const SubsetMask m(z9, {0, 3, 6});
  EXPECT_TRUE(is_coset_union(z9, m, SubsetMask(z9, {1, 4, 7})));
  EXPECT_FALSE(is_coset_union(z9, m, SubsetMask(z9, {1, 4})));
}

// Dispatcher

TEST(RunCheck, EveryIdOnZ4) {
  const FiniteRing z4 = make_zn(4);
  CheckContext ctx(z4, {});
  for (ResultId id : kAllResults) {
    const Verdict v = run_check(id, ctx);
    EXPECT_EQ(v.id, id);
    EXPECT_TRUE(v.holds()) << to_string(id) << ": " << v.details;
  }
}

TEST(RunCheck, NotApplicableIsSkippedOrPrecondition) {
  const Verdict v = run_check(ResultId::P2_6fwd, make_zn(6));
  EXPECT_TRUE(v.outcome == Outcome::skipped || v.outcome == Outcome::precondition_failed);
}

TEST(ResultIds, RoundTrip) {
  for (ResultId id : kAllResults) EXPECT_EQ(parse_result_id(to_string(id)), id);
  EXPECT_FALSE(parse_result_id("P9.9").has_value());
}
