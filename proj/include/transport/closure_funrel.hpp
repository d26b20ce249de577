#pragma once

#include "transport/galois.hpp"

namespace transport {

/// Inputs for the dependent function relator closure. The base equivalence
/// lives on carriers (A1, A2); the dependent components are indexed by pairs
/// of base values and act on carriers (B1, B2):
///   cod_left  : params (A1, A1), relations on B1
///   cod_right : params (A2, A2), relations on B2
///   to_right  : params (A2, A1), tables B1 -> B2
///   to_left   : params (A1, A2), tables B2 -> B1
struct DepFunClosureInput {
  EquivalenceRecord base;
  DepRel cod_left;
  DepRel cod_right;
  DepFunTable to_right;
  DepFunTable to_left;
  std::size_t fun_space_cap = kDefaultCap;
};

struct DepFunClosureOutput {
  EquivalenceRecord record;  // over the encoded function-space carriers
  FunSpace space_left, space_right;
};

/// Pointwise transports of the closure, usable without materializing the
/// function spaces: (left f) x' = to_right(x', r1 x') (f (r1 x')) and
/// (right g) x = to_left(x, l1 x) (g (l1 x)).
FunTable dep_fun_transport_left(const DepFunClosureInput& in, const FunTable& f);
FunTable dep_fun_transport_right(const DepFunClosureInput& in, const FunTable& g);

void check_dep_fun_wiring(const DepFunClosureInput& in);

DepFunClosureOutput build_dep_fun_closure(const DepFunClosureInput& in);

/// Monotonicity side conditions on the dependent components. The appendix
/// variant bounds the parameter chains by the unit/counit instead of plain
/// chains; both share the transport-monotonicity conditions.
enum class MonoVariant { main, appendix };
CheckReport check_mono_conditions(const DepFunClosureInput& in, MonoVariant variant);

enum class ClosureStar { pre_equiv, per_equiv, connection };
const char* to_string(ClosureStar s);

/// Hypothesis-gated closure theorem: component classes, per-parameter-pair
/// classes, and the monotonicity conditions of the matching variant, then the
/// class of the built record. A failing conclusion under met hypotheses is a
/// soundness alarm, reported as a plain failure.
CheckReport verify_closure_theorem(const DepFunClosureInput& in, ClosureStar star);

/// The Galois relator of the built record coincides with the dependent
/// relator of the component Galois relators, for every f in dom L and g in
/// codom R.
CheckReport similarity_check(const DepFunClosureInput& in, const DepFunClosureOutput& out,
                             MonoVariant variant = MonoVariant::main);

/// Under reflexivity, parameter monotonicity and PER hypotheses the monotone
/// relator collapses to the plain one.
CheckReport mono_collapse_check(const Rel& l1, const DepRel& l2, std::size_t cap = kDefaultCap);

}  // namespace transport
