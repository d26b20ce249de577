#pragma once

#include <optional>
#include <string_view>

#include "transport/rel.hpp"

namespace transport {

enum class GaloisClass {
  half_left,
  half_right,
  galois_prop,
  connection,
  galois_equiv,
  order_equiv,
  pre_equiv,
  per_equiv,
};

const char* to_string(GaloisClass c);
std::optional<GaloisClass> galois_class_from_string(std::string_view s);

/// Candidate equivalence (L, R, l, r): L on one carrier, R on another,
/// transports between them. claimed_class is advisory only; checks never
/// trust it.
struct EquivalenceRecord {
  Rel L, R;
  FunTable l, r;
  std::optional<GaloisClass> claimed_class;
};

EquivalenceRecord make_record(Rel L, Rel R, FunTable l, FunTable r,
                              std::optional<GaloisClass> claimed = std::nullopt);
EquivalenceRecord identity_record(const CarrierRef& c);
/// (R, L, r, l): the record with both sides swapped.
EquivalenceRecord flip_record(const EquivalenceRecord& e);

/// unit = r∘l (on the left carrier), counit = l∘r (on the right carrier).
std::pair<FunTable, FunTable> unit_counit(const FunTable& l, const FunTable& r);

/// Galois relator: x related to y iff in_codom R y and L x (r y).
Rel galois_relator(const Rel& L, const Rel& R, const FunTable& r);
/// Dual form: x related to y iff in_dom L x and R (l x) y.
Rel flip_galois_relator(const Rel& L, const Rel& R, const FunTable& l);

/// ([x y :: A] => B) f f, the monotonicity of a single function.
CheckReport check_monotone(std::string prop, const Rel& a, const Rel& b, const FunTable& f);

/// Evaluates the selected class predicate exactly as defined, with
/// sub-reports for every conjunct and a canonically minimal witness on
/// failure.
CheckReport galois_class_check(GaloisClass cls, const EquivalenceRecord& e);

/// The implication chain per_equiv => galois_equiv => connection =>
/// galois_prop => half_left and half_right, plus pre_equiv => galois_equiv,
/// evaluated by running every class check.
CheckReport class_hierarchy_check(const EquivalenceRecord& e);

/// (T, Abs, Rep): right-unique, right-total T with Abs and Rep respecting it.
struct PartialQuotient {
  Rel T;
  FunTable abs, rep;
};

PartialQuotient make_quotient(Rel T, FunTable abs, FunTable rep);

CheckReport partial_quotient_check(const PartialQuotient& q);

/// x1 ~ x2 iff both are in the domain of T and Abs x1 = Abs x2 (the relation
/// T composed with its inverse, for right-unique T).
Rel induced_left_rel(const PartialQuotient& q);

/// For a valid quotient, T equals the Galois relator of (induced, =, Rep).
CheckReport check_quotient_equals_galois_relator(const PartialQuotient& q);
/// The quotient conditions hold iff (induced, =, Abs, Rep) is a PER equivalence.
CheckReport check_quotient_iff_per_equivalence(const PartialQuotient& q);
/// Under the Galois property, forward and flipped Galois relators agree.
CheckReport check_galois_relator_flip_agreement(const EquivalenceRecord& e);
/// Galois equivalence + reflexivity on both fields yields an order equivalence.
CheckReport check_order_equiv_from_galois_equiv(const EquivalenceRecord& e);
/// Order equivalence + transitivity of both relations yields a Galois equivalence.
CheckReport check_galois_equiv_from_order_equiv(const EquivalenceRecord& e);

CheckReport galois_lemma_suite(const EquivalenceRecord& e);
CheckReport galois_lemma_suite(const PartialQuotient& q);

}  // namespace transport
