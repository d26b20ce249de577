#include "transport/galois.hpp"

namespace transport {

const char* to_string(GaloisClass c) {
  switch (c) {
    case GaloisClass::half_left: return "half_left";
    case GaloisClass::half_right: return "half_right";
    case GaloisClass::galois_prop: return "galois_prop";
    case GaloisClass::connection: return "connection";
    case GaloisClass::galois_equiv: return "galois_equiv";
    case GaloisClass::order_equiv: return "order_equiv";
    case GaloisClass::pre_equiv: return "pre_equiv";
    case GaloisClass::per_equiv: return "per_equiv";
  }
  return "?";
}

std::optional<GaloisClass> galois_class_from_string(std::string_view s) {
  for (GaloisClass c :
       {GaloisClass::half_left, GaloisClass::half_right, GaloisClass::galois_prop,
        GaloisClass::connection, GaloisClass::galois_equiv, GaloisClass::order_equiv,
        GaloisClass::pre_equiv, GaloisClass::per_equiv}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

EquivalenceRecord make_record(Rel L, Rel R, FunTable l, FunTable r,
                              std::optional<GaloisClass> claimed) {
  if (!same_carrier(L.left(), L.right())) throw WiringError("left relation must be on one carrier");
  if (!same_carrier(R.left(), R.right()))
    throw WiringError("right relation must be on one carrier");
  if (!same_carrier(l.dom(), L.left()) || !same_carrier(l.cod(), R.left()))
    throw WiringError("left transport must map the left carrier to the right carrier");
  if (!same_carrier(r.dom(), R.left()) || !same_carrier(r.cod(), L.left()))
    throw WiringError("right transport must map the right carrier to the left carrier");
  return EquivalenceRecord{std::move(L), std::move(R), std::move(l), std::move(r), claimed};
}

EquivalenceRecord identity_record(const CarrierRef& c) {
  return make_record(Rel::equality(c), Rel::equality(c), FunTable::identity(c),
                     FunTable::identity(c), GaloisClass::per_equiv);
}

EquivalenceRecord flip_record(const EquivalenceRecord& e) {
  return make_record(e.R, e.L, e.r, e.l);
}

std::pair<FunTable, FunTable> unit_counit(const FunTable& l, const FunTable& r) {
  return {r.after(l), l.after(r)};
}

Rel galois_relator(const Rel& L, const Rel& R, const FunTable& r) {
  if (!same_carrier(r.dom(), R.left()) || !same_carrier(r.cod(), L.left()))
    throw WiringError("galois relator transport wiring mismatch");
  Rel out(L.left(), R.left());
  for (std::size_t j = 0; j < R.left()->size(); ++j) {
    if (!R.in_codom_index(j)) continue;
    const std::size_t rj = r.apply_index(j);
    for (std::size_t i = 0; i < L.left()->size(); ++i)
      if (L.contains_index(i, rj)) out.add_index(i, j);
  }
  return out;
}

Rel flip_galois_relator(const Rel& L, const Rel& R, const FunTable& l) {
  if (!same_carrier(l.dom(), L.left()) || !same_carrier(l.cod(), R.left()))
    throw WiringError("flipped galois relator transport wiring mismatch");
  Rel out(L.left(), R.left());
  for (std::size_t i = 0; i < L.left()->size(); ++i) {
    if (!L.in_dom_index(i)) continue;
    const std::size_t li = l.apply_index(i);
    for (std::size_t j = 0; j < R.left()->size(); ++j)
      if (R.contains_index(li, j)) out.add_index(i, j);
  }
  return out;
}

CheckReport check_monotone(std::string prop, const Rel& a, const Rel& b, const FunTable& f) {
  for (const auto& [i, j] : a.pair_indices()) {
    if (!b.contains_index(f.apply_index(i), f.apply_index(j)))
      return CheckReport::failure(std::move(prop), {a.left()->at(i), a.right()->at(j)});
  }
  return CheckReport::passed(std::move(prop));
}

namespace {

CheckReport check_half_left(const EquivalenceRecord& e, const std::string& prefix) {
  const Rel gal = galois_relator(e.L, e.R, e.r);
  for (const auto& [i, j] : gal.pair_indices()) {
    if (!e.R.contains_index(e.l.apply_index(i), j))
      return CheckReport::failure(prefix + "half_galois_left",
                                  {gal.left()->at(i), gal.right()->at(j)});
  }
  return CheckReport::passed(prefix + "half_galois_left");
}

CheckReport check_half_right(const EquivalenceRecord& e, const std::string& prefix) {
  const Rel gal = flip_galois_relator(e.L, e.R, e.l);
  for (const auto& [i, j] : gal.pair_indices()) {
    if (!e.L.contains_index(i, e.r.apply_index(j)))
      return CheckReport::failure(prefix + "half_galois_right",
                                  {gal.left()->at(i), gal.right()->at(j)});
  }
  return CheckReport::passed(prefix + "half_galois_right");
}

CheckReport check_galois_prop(const EquivalenceRecord& e, const std::string& prefix) {
  return CheckReport::all_of(prefix + "galois_prop",
                             {check_half_left(e, prefix), check_half_right(e, prefix)});
}

CheckReport check_connection(const EquivalenceRecord& e, const std::string& prefix) {
  return CheckReport::all_of(
      prefix + "galois_connection",
      {check_galois_prop(e, prefix), check_monotone(prefix + "monotone_left", e.L, e.R, e.l),
       check_monotone(prefix + "monotone_right", e.R, e.L, e.r)});
}

CheckReport check_galois_equiv(const EquivalenceRecord& e) {
  return CheckReport::all_of(
      "galois_equivalence", {check_connection(e, ""), check_connection(flip_record(e), "reverse_")});
}

CheckReport check_order_equiv(const EquivalenceRecord& e) {
  auto [unit, counit] = unit_counit(e.l, e.r);
  CheckReport unit_rep =
      point_property(PointPropertyKind::rel_equivalence_on, e.L.field_pred(), e.L, unit);
  unit_rep.property = "unit_rel_equivalence_on_field";
  CheckReport counit_rep =
      point_property(PointPropertyKind::rel_equivalence_on, e.R.field_pred(), e.R, counit);
  counit_rep.property = "counit_rel_equivalence_on_field";
  return CheckReport::all_of("order_equivalence",
                             {check_monotone("monotone_left", e.L, e.R, e.l),
                              check_monotone("monotone_right", e.R, e.L, e.r),
                              std::move(unit_rep), std::move(counit_rep)});
}

CheckReport field_order(OrderPropertyKind kind, const char* prop, const Rel& r) {
  CheckReport rep = order_property(kind, r.field_pred(), r);
  rep.property = prop;
  return rep;
}

}  // namespace

CheckReport galois_class_check(GaloisClass cls, const EquivalenceRecord& e) {
  switch (cls) {
    case GaloisClass::half_left: return check_half_left(e, "");
    case GaloisClass::half_right: return check_half_right(e, "");
    case GaloisClass::galois_prop: return check_galois_prop(e, "");
    case GaloisClass::connection: return check_connection(e, "");
    case GaloisClass::galois_equiv: return check_galois_equiv(e);
    case GaloisClass::order_equiv: return check_order_equiv(e);
    case GaloisClass::pre_equiv:
      return CheckReport::all_of(
          "preorder_equivalence",
          {check_galois_equiv(e),
           field_order(OrderPropertyKind::preorder_on, "preorder_on_left_field", e.L),
           field_order(OrderPropertyKind::preorder_on, "preorder_on_right_field", e.R)});
    case GaloisClass::per_equiv:
      return CheckReport::all_of(
          "per_equivalence",
          {check_galois_equiv(e),
           field_order(OrderPropertyKind::per_on, "per_on_left_field", e.L),
           field_order(OrderPropertyKind::per_on, "per_on_right_field", e.R)});
  }
  throw Error("bad galois class");
}

CheckReport class_hierarchy_check(const EquivalenceRecord& e) {
  const bool per = galois_class_check(GaloisClass::per_equiv, e).ok();
  const bool pre = galois_class_check(GaloisClass::pre_equiv, e).ok();
  const bool geq = galois_class_check(GaloisClass::galois_equiv, e).ok();
  const bool conn = galois_class_check(GaloisClass::connection, e).ok();
  const bool prop = galois_class_check(GaloisClass::galois_prop, e).ok();
  const bool hl = galois_class_check(GaloisClass::half_left, e).ok();
  const bool hr = galois_class_check(GaloisClass::half_right, e).ok();
  auto implies = [](bool a, bool b) { return !a || b; };
  std::vector<CheckReport> subs;
  auto note = [&subs](const char* prop_name, bool holds) {
    subs.push_back(holds ? CheckReport::passed(prop_name) : CheckReport::failure(prop_name));
  };
  note("per_equiv_implies_galois_equiv", implies(per, geq));
  note("pre_equiv_implies_galois_equiv", implies(pre, geq));
  note("galois_equiv_implies_connection", implies(geq, conn));
  note("connection_implies_galois_prop", implies(conn, prop));
  note("galois_prop_implies_half_left", implies(prop, hl));
  note("galois_prop_implies_half_right", implies(prop, hr));
  return CheckReport::all_of("class_hierarchy", std::move(subs));
}

PartialQuotient make_quotient(Rel T, FunTable abs, FunTable rep) {
  if (!same_carrier(abs.dom(), T.left()) || !same_carrier(abs.cod(), T.right()))
    throw WiringError("Abs must map the left carrier to the right carrier");
  if (!same_carrier(rep.dom(), T.right()) || !same_carrier(rep.cod(), T.left()))
    throw WiringError("Rep must map the right carrier to the left carrier");
  return PartialQuotient{std::move(T), std::move(abs), std::move(rep)};
}

CheckReport partial_quotient_check(const PartialQuotient& q) {
  std::vector<CheckReport> subs;
  // Right-uniqueness.
  {
    CheckReport r = CheckReport::passed("right_unique");
    for (const auto& [i, j] : q.T.pair_indices()) {
      for (const auto& [i2, j2] : q.T.pair_indices()) {
        if (i2 != i || j2 == j) continue;
        r = CheckReport::failure(
            "right_unique", {q.T.left()->at(i), q.T.right()->at(std::min(j, j2)),
                             q.T.right()->at(std::max(j, j2))});
        break;
      }
      if (r.failed()) break;
    }
    subs.push_back(std::move(r));
  }
  // Right-totality.
  {
    CheckReport r = CheckReport::passed("right_total");
    for (std::size_t j = 0; j < q.T.right()->size(); ++j) {
      if (!q.T.in_codom_index(j)) {
        r = CheckReport::failure("right_total", {q.T.right()->at(j)});
        break;
      }
    }
    subs.push_back(std::move(r));
  }
  // Abs respects T.
  {
    CheckReport r = CheckReport::passed("abs_respects");
    for (const auto& [i, j] : q.T.pair_indices()) {
      if (q.abs.apply_index(i) != j) {
        r = CheckReport::failure("abs_respects", {q.T.left()->at(i), q.T.right()->at(j)});
        break;
      }
    }
    subs.push_back(std::move(r));
  }
  // Rep respects T: T (Rep y) y for every y.
  {
    CheckReport r = CheckReport::passed("rep_respects");
    for (std::size_t j = 0; j < q.T.right()->size(); ++j) {
      if (!q.T.contains_index(q.rep.apply_index(j), j)) {
        r = CheckReport::failure("rep_respects", {q.T.right()->at(j)});
        break;
      }
    }
    subs.push_back(std::move(r));
  }
  return CheckReport::all_of("partial_quotient", std::move(subs));
}

// Identifies values mapping to the same abstraction. Both arguments are
// required to be in the domain of T: for right-unique T this is T composed
// with its inverse, which keeps the relation symmetric even when Abs
// identifies out-of-domain values with domain ones (as totalized retractions
// do).
Rel induced_left_rel(const PartialQuotient& q) {
  Rel out(q.T.left(), q.T.left());
  for (std::size_t i = 0; i < q.T.left()->size(); ++i) {
    if (!q.T.in_dom_index(i)) continue;
    for (std::size_t j = 0; j < q.T.left()->size(); ++j) {
      if (!q.T.in_dom_index(j)) continue;
      if (q.abs.apply_index(i) == q.abs.apply_index(j)) out.add_index(i, j);
    }
  }
  return out;
}

CheckReport check_quotient_equals_galois_relator(const PartialQuotient& q) {
  CheckReport hyp = partial_quotient_check(q);
  if (!hyp.ok())
    return CheckReport::gated("quotient_equals_galois_relator", std::move(hyp),
                              CheckReport::passed("skipped"));
  const Rel induced = induced_left_rel(q);
  CheckReport concl = rel_equal_report(
      "relator_equality", q.T, galois_relator(induced, Rel::equality(q.T.right()), q.rep));
  return CheckReport::gated("quotient_equals_galois_relator", std::move(hyp), std::move(concl));
}

CheckReport check_quotient_iff_per_equivalence(const PartialQuotient& q) {
  const bool quot = partial_quotient_check(q).ok();
  const Rel induced = induced_left_rel(q);
  const bool per =
      galois_class_check(GaloisClass::per_equiv,
                         make_record(induced, Rel::equality(q.T.right()), q.abs, q.rep))
          .ok();
  if (quot == per) return CheckReport::passed("quotient_iff_per_equivalence");
  return CheckReport::failure("quotient_iff_per_equivalence",
                              {Value::boolean(quot), Value::boolean(per)});
}

CheckReport check_galois_relator_flip_agreement(const EquivalenceRecord& e) {
  CheckReport hyp = check_galois_prop(e, "");
  if (!hyp.ok())
    return CheckReport::gated("galois_relator_flip_agreement", std::move(hyp),
                              CheckReport::passed("skipped"));
  CheckReport concl = rel_equal_report("relator_agreement", galois_relator(e.L, e.R, e.r),
                                       flip_galois_relator(e.L, e.R, e.l));
  return CheckReport::gated("galois_relator_flip_agreement", std::move(hyp), std::move(concl));
}

CheckReport check_order_equiv_from_galois_equiv(const EquivalenceRecord& e) {
  CheckReport hyp = CheckReport::all_of(
      "hypotheses",
      {check_galois_equiv(e),
       field_order(OrderPropertyKind::reflexive_on, "reflexive_on_left_field", e.L),
       field_order(OrderPropertyKind::reflexive_on, "reflexive_on_right_field", e.R)});
  if (!hyp.ok())
    return CheckReport::gated("order_equiv_from_galois_equiv", std::move(hyp),
                              CheckReport::passed("skipped"));
  return CheckReport::gated("order_equiv_from_galois_equiv", std::move(hyp),
                            check_order_equiv(e));
}

CheckReport check_galois_equiv_from_order_equiv(const EquivalenceRecord& e) {
  CheckReport hyp = CheckReport::all_of(
      "hypotheses",
      {check_order_equiv(e),
       order_property(OrderPropertyKind::transitive_on, Pred::full(e.L.left()), e.L),
       order_property(OrderPropertyKind::transitive_on, Pred::full(e.R.left()), e.R)});
  if (!hyp.ok())
    return CheckReport::gated("galois_equiv_from_order_equiv", std::move(hyp),
                              CheckReport::passed("skipped"));
  return CheckReport::gated("galois_equiv_from_order_equiv", std::move(hyp),
                            check_galois_equiv(e));
}

CheckReport galois_lemma_suite(const EquivalenceRecord& e) {
  return CheckReport::suite_of("lemma_suite",
                               {check_galois_relator_flip_agreement(e),
                                check_order_equiv_from_galois_equiv(e),
                                check_galois_equiv_from_order_equiv(e)});
}

CheckReport galois_lemma_suite(const PartialQuotient& q) {
  return CheckReport::suite_of(
      "lemma_suite", {check_quotient_equals_galois_relator(q),
                      check_quotient_iff_per_equivalence(q)});
}

}  // namespace transport
