#pragma once

#include "transport/closure_funrel.hpp"
#include "transport/galois.hpp"

namespace transport {

/// Two equivalences sharing their middle carrier: first on (alpha, beta),
/// second on (beta, gamma). The middle relations first.R and second.L need
/// not coincide.
struct CompositionInput {
  EquivalenceRecord first, second;
};

void check_composition_wiring(const CompositionInput& in);

/// Chain construction: L = gal(L1) . L2 . gal(R1) on alpha, R symmetric on
/// gamma, with transports l2.l1 and r1.r2.
EquivalenceRecord build_composition(const CompositionInput& in);

/// Middle compatibility: (R1 . L2) = (L2 . R1).
CheckReport commutation_check(const Rel& r1, const Rel& l2);

enum class CompStar { pre_equiv, per_equiv, connection_conclusion };
const char* to_string(CompStar s);

/// Composition closure theorem. The pre/per variants require both components
/// in the star class plus commutation; connection_conclusion requires Galois
/// equivalences, preorders on the middle fields and commutation, and
/// concludes a connection.
CheckReport verify_comp_theorem(const CompositionInput& in, CompStar star);

/// Closure for coinciding relations (first.R = second.L): the conclusion is
/// checked on (L1, R2, l2.l1, r1.r2) directly.
CheckReport verify_comp_coincide(const CompositionInput& in, GaloisClass star);

/// The built record's Galois relator equals the composition of component
/// Galois relators. The appendix variant uses weaker hypotheses.
CheckReport comp_similarity_check(const CompositionInput& in,
                                  MonoVariant variant = MonoVariant::main);

/// Quotient-composition comparison: T1 equals gal(induced1, =, rep1), its
/// inverse equals gal(=, induced1, abs1), the chain T1 . induced2 . inv(T1)
/// matches the chain construction, and the middles commute vacuously.
CheckReport lifting_comparison_check(const PartialQuotient& q1, const PartialQuotient& q2);

}  // namespace transport
