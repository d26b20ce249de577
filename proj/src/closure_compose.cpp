#include "transport/closure_compose.hpp"

namespace transport {

const char* to_string(CompStar s) {
  switch (s) {
    case CompStar::pre_equiv: return "pre_equiv";
    case CompStar::per_equiv: return "per_equiv";
    case CompStar::connection_conclusion: return "connection_conclusion";
  }
  return "?";
}

void check_composition_wiring(const CompositionInput& in) {
  if (!same_carrier(in.first.R.left(), in.second.L.left()))
    throw WiringError("composed equivalences must share the middle carrier");
}

EquivalenceRecord build_composition(const CompositionInput& in) {
  check_composition_wiring(in);
  const Rel gal_l1 = galois_relator(in.first.L, in.first.R, in.first.r);
  const Rel gal_r1 = galois_relator(in.first.R, in.first.L, in.first.l);
  const Rel gal_l2 = galois_relator(in.second.L, in.second.R, in.second.r);
  const Rel gal_r2 = galois_relator(in.second.R, in.second.L, in.second.l);
  Rel big_l = rel_compose(rel_compose(gal_l1, in.second.L), gal_r1);
  Rel big_r = rel_compose(rel_compose(gal_r2, in.first.R), gal_l2);
  return make_record(std::move(big_l), std::move(big_r), in.second.l.after(in.first.l),
                     in.first.r.after(in.second.r));
}

CheckReport commutation_check(const Rel& r1, const Rel& l2) {
  if (!same_carrier(r1.left(), r1.right()) || !same_carrier(l2.left(), l2.right()) ||
      !same_carrier(r1.left(), l2.left()))
    throw CarrierMismatch("commutation requires two relations on the middle carrier");
  return rel_equal_report("middle_commutation", rel_compose(r1, l2), rel_compose(l2, r1));
}

CheckReport verify_comp_theorem(const CompositionInput& in, CompStar star) {
  check_composition_wiring(in);
  std::vector<CheckReport> hyps;
  GaloisClass conclusion_class;
  if (star == CompStar::connection_conclusion) {
    conclusion_class = GaloisClass::connection;
    for (const auto* e : {&in.first, &in.second}) {
      CheckReport rep = galois_class_check(GaloisClass::galois_equiv, *e);
      rep.property = (e == &in.first ? "first_" : "second_") + rep.property;
      hyps.push_back(std::move(rep));
    }
    CheckReport pre_r1 =
        order_property(OrderPropertyKind::preorder_on, in.first.R.field_pred(), in.first.R);
    pre_r1.property = "preorder_on_first_right_field";
    hyps.push_back(std::move(pre_r1));
    CheckReport pre_l2 =
        order_property(OrderPropertyKind::preorder_on, in.second.L.field_pred(), in.second.L);
    pre_l2.property = "preorder_on_second_left_field";
    hyps.push_back(std::move(pre_l2));
  } else {
    conclusion_class =
        star == CompStar::pre_equiv ? GaloisClass::pre_equiv : GaloisClass::per_equiv;
    for (const auto* e : {&in.first, &in.second}) {
      CheckReport rep = galois_class_check(conclusion_class, *e);
      rep.property = (e == &in.first ? "first_" : "second_") + rep.property;
      hyps.push_back(std::move(rep));
    }
  }
  hyps.push_back(commutation_check(in.first.R, in.second.L));
  CheckReport hyp_report = CheckReport::all_of("hypotheses", std::move(hyps));
  const std::string prop = std::string("composition_closure_theorem_") + to_string(star);
  if (!hyp_report.ok())
    return CheckReport::gated(prop, std::move(hyp_report), CheckReport::passed("skipped"));
  CheckReport concl = galois_class_check(conclusion_class, build_composition(in));
  concl.property = "conclusion_" + concl.property;
  return CheckReport::gated(prop, std::move(hyp_report), std::move(concl));
}

CheckReport verify_comp_coincide(const CompositionInput& in, GaloisClass star) {
  check_composition_wiring(in);
  std::vector<CheckReport> hyps;
  for (const auto* e : {&in.first, &in.second}) {
    CheckReport rep = galois_class_check(star, *e);
    rep.property = (e == &in.first ? "first_" : "second_") + rep.property;
    hyps.push_back(std::move(rep));
  }
  hyps.push_back(rel_equal_report("middles_coincide", in.first.R, in.second.L));
  CheckReport hyp_report = CheckReport::all_of("hypotheses", std::move(hyps));
  const std::string prop = std::string("coinciding_composition_theorem_") + to_string(star);
  if (!hyp_report.ok())
    return CheckReport::gated(prop, std::move(hyp_report), CheckReport::passed("skipped"));
  EquivalenceRecord direct = make_record(in.first.L, in.second.R, in.second.l.after(in.first.l),
                                         in.first.r.after(in.second.r));
  CheckReport concl = galois_class_check(star, direct);
  concl.property = "conclusion_" + concl.property;
  return CheckReport::gated(prop, std::move(hyp_report), std::move(concl));
}

CheckReport comp_similarity_check(const CompositionInput& in, MonoVariant variant) {
  check_composition_wiring(in);
  std::vector<CheckReport> hyps;
  if (variant == MonoVariant::main) {
    for (const auto* e : {&in.first, &in.second}) {
      CheckReport rep = galois_class_check(GaloisClass::pre_equiv, *e);
      rep.property = (e == &in.first ? "first_" : "second_") + rep.property;
      hyps.push_back(std::move(rep));
    }
  } else {
    hyps.push_back(check_monotone("first_monotone_right", in.first.R, in.first.L, in.first.r));
    hyps.push_back(galois_class_check(GaloisClass::galois_prop, in.first));
    {
      CheckReport rep = galois_class_check(GaloisClass::half_left, flip_record(in.first));
      rep.property = "first_reverse_half_galois_left";
      hyps.push_back(std::move(rep));
    }
    {
      CheckReport rep =
          order_property(OrderPropertyKind::preorder_on, in.first.R.field_pred(), in.first.R);
      rep.property = "preorder_on_first_right_field";
      hyps.push_back(std::move(rep));
    }
    hyps.push_back(
        check_monotone("second_monotone_left", in.second.L, in.second.R, in.second.l));
    {
      CheckReport rep = galois_class_check(GaloisClass::half_left, flip_record(in.second));
      rep.property = "second_reverse_half_galois_left";
      hyps.push_back(std::move(rep));
    }
    {
      CheckReport rep = order_property(OrderPropertyKind::reflexive_on, in.second.L.dom_pred(),
                                       in.second.L);
      rep.property = "reflexive_on_second_left_dom";
      hyps.push_back(std::move(rep));
    }
  }
  hyps.push_back(commutation_check(in.first.R, in.second.L));
  CheckReport hyp_report = CheckReport::all_of("hypotheses", std::move(hyps));
  if (!hyp_report.ok())
    return CheckReport::gated("composition_similarity", std::move(hyp_report),
                              CheckReport::passed("skipped"));
  const EquivalenceRecord built = build_composition(in);
  const Rel lhs = galois_relator(built.L, built.R, built.r);
  const Rel rhs = rel_compose(galois_relator(in.first.L, in.first.R, in.first.r),
                              galois_relator(in.second.L, in.second.R, in.second.r));
  return CheckReport::gated("composition_similarity", std::move(hyp_report),
                            rel_equal_report("relator_composition", lhs, rhs));
}

CheckReport lifting_comparison_check(const PartialQuotient& q1, const PartialQuotient& q2) {
  std::vector<CheckReport> hyps;
  {
    CheckReport rep = partial_quotient_check(q1);
    rep.property = "first_" + rep.property;
    hyps.push_back(std::move(rep));
  }
  {
    CheckReport rep = partial_quotient_check(q2);
    rep.property = "second_" + rep.property;
    hyps.push_back(std::move(rep));
  }
  if (!same_carrier(q1.T.right(), q2.T.left()))
    throw WiringError("quotients must compose through a shared middle carrier");
  CheckReport hyp_report = CheckReport::all_of("hypotheses", std::move(hyps));
  if (!hyp_report.ok())
    return CheckReport::gated("lifting_comparison", std::move(hyp_report),
                              CheckReport::passed("skipped"));

  const Rel induced1 = induced_left_rel(q1);
  const Rel induced2 = induced_left_rel(q2);
  const Rel eq_mid = Rel::equality(q1.T.right());
  std::vector<CheckReport> checks;
  checks.push_back(rel_equal_report("quotient_rel_is_galois_relator", q1.T,
                                    galois_relator(induced1, eq_mid, q1.rep)));
  checks.push_back(rel_equal_report("inverse_is_flipped_galois_relator", rel_inverse(q1.T),
                                    galois_relator(eq_mid, induced1, q1.abs)));
  // The quotient chain T1 . induced2 . inv(T1) matches the chain construction
  // of the induced equivalence records.
  const EquivalenceRecord rec1 = make_record(induced1, eq_mid, q1.abs, q1.rep);
  const EquivalenceRecord rec2 =
      make_record(induced2, Rel::equality(q2.T.right()), q2.abs, q2.rep);
  const EquivalenceRecord built = build_composition({rec1, rec2});
  const Rel quotient_chain = rel_compose(rel_compose(q1.T, induced2), rel_inverse(q1.T));
  checks.push_back(rel_equal_report("chain_matches_quotient_composition", built.L,
                                    quotient_chain));
  checks.push_back(commutation_check(rec1.R, rec2.L));
  return CheckReport::gated("lifting_comparison", std::move(hyp_report),
                            CheckReport::all_of("comparisons", std::move(checks)));
}

}  // namespace transport
