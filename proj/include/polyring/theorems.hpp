#pragma once

#include <optional>

#include "polyring/theorems_fields.hpp"
#include "polyring/theorems_local.hpp"

namespace polyring {

/// A ring plus lazily computed invariants and function set, shared by the
/// checkers run against it. Not thread-safe; use one context per thread.
class CheckContext {
 public:
  explicit CheckContext(FiniteRing ring, CheckOptions options = {})
      : ring_(std::move(ring)), options_(options) {}

  const FiniteRing& ring() const noexcept { return ring_; }
  const CheckOptions& options() const noexcept { return options_; }

  const RingInvariants& invariants() {
    if (!invariants_) invariants_ = analyze(ring_);
    return *invariants_;
  }

  const PolyFunctionSet& functions() {
    if (!functions_) functions_.emplace(polynomial_function_set(ring_, options_.function_cap));
    return *functions_;
  }

 private:
  FiniteRing ring_;
  CheckOptions options_;
  std::optional<RingInvariants> invariants_;
  std::optional<PolyFunctionSet> functions_;
};

/// Whether the checker's hypotheses fit the ring and the size limits allow
/// an exhaustive run.
inline bool applicable(ResultId id, const RingInvariants& inv, const CheckOptions& opts) {
  const bool comm_unital = inv.is_unital && inv.is_commutative;
  const bool local = comm_unital && inv.is_local;
  switch (id) {
    case ResultId::L1_1:
    case ResultId::L2_2: return true;
    case ResultId::P1_2: return inv.order <= opts.max_bijection_order;
    case ResultId::P1_3: return inv.is_unital && inv.order <= opts.max_subset_order;
    case ResultId::P2_1:
    case ResultId::L2_4:
    case ResultId::L2_5:
    case ResultId::P2_7: return comm_unital;
    case ResultId::P2_3i:
    case ResultId::P2_3ii:
    case ResultId::P2_6fwd:
    case ResultId::P2_6lift: return local;
    case ResultId::R2_8: return local && inv.order <= opts.max_subset_order;
  }
  return false;
}

/// Runs the default (exhaustive) form of a checker.
inline Verdict run_check(ResultId id, CheckContext& ctx) {
  const FiniteRing& r = ctx.ring();
  const CheckOptions& opts = ctx.options();
  switch (id) {
    case ResultId::L1_1: return check_lemma_1_1(r);
    case ResultId::P1_2:
      if (r.order() > opts.max_bijection_order) return check_prop_1_2(r, opts);
      return check_prop_1_2(r, ctx.functions(), opts);
    case ResultId::P1_3:
      if (!r.is_unital() || r.order() > opts.max_subset_order) return check_prop_1_3(r, opts);
      return check_prop_1_3(r, ctx.functions(), opts);
    case ResultId::P2_1:
      if (!r.is_unital() || !r.is_commutative()) return verify_prop_2_1(r, PolyFunctionSet::compute(r, {.cap = 1}));
      return verify_prop_2_1(r, ctx.functions());
    case ResultId::L2_2: return check_lemma_2_2(r, opts);
    case ResultId::P2_3i: return unit_order_bound(r);
    case ResultId::P2_3ii: return check_prop_2_3(r);
    case ResultId::L2_4: return check_lemma_2_4_bound(r, opts);
    case ResultId::L2_5: return check_lemma_2_5_bound(r, opts);
    case ResultId::P2_6fwd: return check_prop_2_6_forward(r, opts);
    case ResultId::P2_6lift: return check_prop_2_6_lift(r, opts);
    case ResultId::P2_7:
      if (!r.is_unital() || !r.is_commutative())
        return detail::make_verdict(ResultId::P2_7, Outcome::skipped, "requires a commutative ring with unity");
      return classify_prop_2_7(r, ctx.functions());
    case ResultId::R2_8: {
      if (!detail::is_local_commutative(ctx.invariants())) return detail::not_local(ResultId::R2_8, r);
      if (r.order() > opts.max_subset_order) return check_remark_2_8(r, PolyFunctionSet::compute(r, {.cap = 1}), opts);
      return check_remark_2_8(r, ctx.functions(), opts);
    }
  }
  throw Error(ErrorKind::invalid_parameter, "unknown result id");
}

inline Verdict run_check(ResultId id, const FiniteRing& r, const CheckOptions& opts = {}) {
  CheckContext ctx(r, opts);
  return run_check(id, ctx);
}

}  // namespace polyring
