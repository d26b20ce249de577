#include "transport/closure_funrel.hpp"

namespace transport {

const char* to_string(ClosureStar s) {
  switch (s) {
    case ClosureStar::pre_equiv: return "pre_equiv";
    case ClosureStar::per_equiv: return "per_equiv";
    case ClosureStar::connection: return "connection";
  }
  return "?";
}

void check_dep_fun_wiring(const DepFunClosureInput& in) {
  const CarrierRef& a1 = in.base.L.left();
  const CarrierRef& a2 = in.base.R.left();
  const CarrierRef& b1 = in.cod_left.base_left();
  const CarrierRef& b2 = in.cod_right.base_left();
  if (!same_carrier(in.cod_left.param1(), a1) || !same_carrier(in.cod_left.param2(), a1))
    throw WiringError("cod_left parameters must come from the left base carrier");
  if (!same_carrier(in.cod_left.base_right(), b1))
    throw WiringError("cod_left must relate one carrier");
  if (!same_carrier(in.cod_right.param1(), a2) || !same_carrier(in.cod_right.param2(), a2))
    throw WiringError("cod_right parameters must come from the right base carrier");
  if (!same_carrier(in.cod_right.base_right(), b2))
    throw WiringError("cod_right must relate one carrier");
  if (!same_carrier(in.to_right.param1(), a2) || !same_carrier(in.to_right.param2(), a1) ||
      !same_carrier(in.to_right.dom(), b1) || !same_carrier(in.to_right.cod(), b2))
    throw WiringError("to_right must be indexed (A2, A1) with tables B1 -> B2");
  if (!same_carrier(in.to_left.param1(), a1) || !same_carrier(in.to_left.param2(), a2) ||
      !same_carrier(in.to_left.dom(), b2) || !same_carrier(in.to_left.cod(), b1))
    throw WiringError("to_left must be indexed (A1, A2) with tables B2 -> B1");
}

FunTable dep_fun_transport_left(const DepFunClosureInput& in, const FunTable& f) {
  check_dep_fun_wiring(in);
  const CarrierRef& a2 = in.base.R.left();
  if (!same_carrier(f.dom(), in.base.L.left()) || !same_carrier(f.cod(), in.cod_left.base_left()))
    throw CarrierMismatch("transported table must map A1 to B1");
  return FunTable::from_fn(a2, in.to_right.cod(), [&](const Value& xp) {
    const Value& rx = in.base.r.apply(xp);
    return in.to_right.at(xp, rx).apply(f.apply(rx));
  });
}

FunTable dep_fun_transport_right(const DepFunClosureInput& in, const FunTable& g) {
  check_dep_fun_wiring(in);
  const CarrierRef& a1 = in.base.L.left();
  if (!same_carrier(g.dom(), in.base.R.left()) || !same_carrier(g.cod(), in.cod_right.base_left()))
    throw CarrierMismatch("transported table must map A2 to B2");
  return FunTable::from_fn(a1, in.to_left.cod(), [&](const Value& x) {
    const Value& lx = in.base.l.apply(x);
    return in.to_left.at(x, lx).apply(g.apply(lx));
  });
}

DepFunClosureOutput build_dep_fun_closure(const DepFunClosureInput& in) {
  check_dep_fun_wiring(in);
  FunSpace space_left =
      FunSpace::enumerate(in.base.L.left(), in.cod_left.base_left(), in.fun_space_cap);
  FunSpace space_right =
      FunSpace::enumerate(in.base.R.left(), in.cod_right.base_left(), in.fun_space_cap);
  Rel big_l = materialize_relator(RelatorKind::mono_relator, in.base.L, in.cod_left, space_left,
                                  space_left, in.fun_space_cap);
  Rel big_r = materialize_relator(RelatorKind::mono_relator, in.base.R, in.cod_right,
                                  space_right, space_right, in.fun_space_cap);
  FunTable big_lt =
      FunTable::from_fn(space_left.carrier, space_right.carrier, [&](const Value& enc) {
        return encode_table(dep_fun_transport_left(in, space_left.table_for(enc)));
      });
  FunTable big_rt =
      FunTable::from_fn(space_right.carrier, space_left.carrier, [&](const Value& enc) {
        return encode_table(dep_fun_transport_right(in, space_right.table_for(enc)));
      });
  return DepFunClosureOutput{
      make_record(std::move(big_l), std::move(big_r), std::move(big_lt), std::move(big_rt)),
      std::move(space_left), std::move(space_right)};
}

namespace {

// Chains x1 <=L x2 <=L x3 <=L x4 enumerated as 4-tuples of adjacent links.
template <typename Fn>
CheckReport for_each_chain4(const char* prop, const Rel& r, Fn&& body) {
  const std::size_t n = r.left()->size();
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      if (!r.contains_index(x1, x2)) continue;
      for (std::size_t x3 = 0; x3 < n; ++x3) {
        if (!r.contains_index(x2, x3)) continue;
        for (std::size_t x4 = 0; x4 < n; ++x4) {
          if (!r.contains_index(x3, x4)) continue;
          if (CheckReport rep = body(x1, x2, x3, x4); rep.failed()) return rep;
        }
      }
    }
  return CheckReport::passed(prop);
}

ValueSeq chain_witness(const CarrierRef& c, std::initializer_list<std::size_t> xs,
                       const ValueSeq& extra = {}) {
  ValueSeq w;
  for (std::size_t x : xs) w.push_back(c->at(x));
  for (const Value& v : extra) w.push_back(v);
  return w;
}

CheckReport cond_left_param(const DepFunClosureInput& in, MonoVariant variant) {
  const Rel& l1 = in.base.L;
  const CarrierRef& a1 = l1.left();
  const FunTable unit = in.base.r.after(in.base.l);
  const char* prop = "cod_left_parameter_monotone";
  return for_each_chain4(prop, l1, [&](std::size_t x1, std::size_t x2, std::size_t x3,
                                       std::size_t x4) {
    if (variant == MonoVariant::main) {
      CheckReport fin = rel_finer_report(prop, in.cod_left.at_index(x2, x3),
                                         in.cod_left.at_index(x1, x4));
      if (fin.failed())
        return CheckReport::failure(prop, chain_witness(a1, {x1, x2, x3, x4}, fin.witness));
    } else {
      if (l1.contains_index(x4, unit.apply_index(x3))) {
        CheckReport fin = rel_finer_report(prop, in.cod_left.at_index(x2, x4),
                                           in.cod_left.at_index(x1, x3));
        if (fin.failed())
          return CheckReport::failure(prop, chain_witness(a1, {x1, x2, x3, x4}, fin.witness));
      }
    }
    return CheckReport::passed(prop);
  });
}

CheckReport cond_right_param(const DepFunClosureInput& in, MonoVariant variant) {
  const Rel& r1 = in.base.R;
  const CarrierRef& a2 = r1.left();
  const FunTable counit = in.base.l.after(in.base.r);
  const char* prop = "cod_right_parameter_monotone";
  return for_each_chain4(prop, r1, [&](std::size_t x1, std::size_t x2, std::size_t x3,
                                       std::size_t x4) {
    if (variant == MonoVariant::main) {
      CheckReport fin = rel_finer_report(prop, in.cod_right.at_index(x2, x3),
                                         in.cod_right.at_index(x1, x4));
      if (fin.failed())
        return CheckReport::failure(prop, chain_witness(a2, {x1, x2, x3, x4}, fin.witness));
    } else {
      if (r1.contains_index(counit.apply_index(x2), x1)) {
        CheckReport fin = rel_finer_report(prop, in.cod_right.at_index(x1, x3),
                                           in.cod_right.at_index(x2, x4));
        if (fin.failed())
          return CheckReport::failure(prop, chain_witness(a2, {x1, x2, x3, x4}, fin.witness));
      }
    }
    return CheckReport::passed(prop);
  });
}

// Mixed chains x1 <=L1 x2 galois x1' <=R1 x2' shared by the transport
// monotonicity conditions.
template <typename Fn>
CheckReport for_each_mixed_chain(const char* prop, const EquivalenceRecord& base, Fn&& body) {
  const Rel gal = galois_relator(base.L, base.R, base.r);
  const std::size_t n1 = base.L.left()->size();
  const std::size_t n2 = base.R.left()->size();
  for (std::size_t x1 = 0; x1 < n1; ++x1)
    for (std::size_t x2 = 0; x2 < n1; ++x2) {
      if (!base.L.contains_index(x1, x2)) continue;
      for (std::size_t x1p = 0; x1p < n2; ++x1p) {
        if (!gal.contains_index(x2, x1p)) continue;
        for (std::size_t x2p = 0; x2p < n2; ++x2p) {
          if (!base.R.contains_index(x1p, x2p)) continue;
          if (CheckReport rep = body(x1, x2, x1p, x2p); rep.failed()) return rep;
        }
      }
    }
  return CheckReport::passed(prop);
}

CheckReport cond_to_right_mono(const DepFunClosureInput& in) {
  const char* prop = "to_right_parameter_monotone";
  const CarrierRef& a1 = in.base.L.left();
  const CarrierRef& a2 = in.base.R.left();
  return for_each_mixed_chain(prop, in.base, [&](std::size_t x1, std::size_t x2, std::size_t x1p,
                                                 std::size_t x2p) {
    const std::size_t r_x2p = in.base.r.apply_index(x2p);
    const std::size_t l_x1 = in.base.l.apply_index(x1);
    const Rel& dom_rel = in.cod_left.at_index(x1, r_x2p);
    const Rel& cod_rel = in.cod_right.at_index(l_x1, x2p);
    const FunTable& f1 = in.to_right.at_index(x1p, x1);
    const FunTable& f2 = in.to_right.at_index(x2p, x2);
    const Pred field = dom_rel.field_pred();
    for (std::size_t y = 0; y < field.carrier()->size(); ++y) {
      if (!field.contains_index(y)) continue;
      if (!cod_rel.contains_index(f1.apply_index(y), f2.apply_index(y)))
        return CheckReport::failure(
            prop, {a1->at(x1), a1->at(x2), a2->at(x1p), a2->at(x2p), field.carrier()->at(y)});
    }
    return CheckReport::passed(prop);
  });
}

CheckReport cond_to_left_mono(const DepFunClosureInput& in) {
  const char* prop = "to_left_parameter_monotone";
  const CarrierRef& a1 = in.base.L.left();
  const CarrierRef& a2 = in.base.R.left();
  return for_each_mixed_chain(prop, in.base, [&](std::size_t x1, std::size_t x2, std::size_t x1p,
                                                 std::size_t x2p) {
    const std::size_t r_x2p = in.base.r.apply_index(x2p);
    const std::size_t l_x1 = in.base.l.apply_index(x1);
    const Rel& dom_rel = in.cod_right.at_index(l_x1, x2p);
    const Rel& cod_rel = in.cod_left.at_index(x1, r_x2p);
    const FunTable& f1 = in.to_left.at_index(x1, x1p);
    const FunTable& f2 = in.to_left.at_index(x2, x2p);
    const Pred field = dom_rel.field_pred();
    for (std::size_t y = 0; y < field.carrier()->size(); ++y) {
      if (!field.contains_index(y)) continue;
      if (!cod_rel.contains_index(f1.apply_index(y), f2.apply_index(y)))
        return CheckReport::failure(
            prop, {a1->at(x1), a1->at(x2), a2->at(x1p), a2->at(x2p), field.carrier()->at(y)});
    }
    return CheckReport::passed(prop);
  });
}

CheckReport per_pair_class_check(const DepFunClosureInput& in, GaloisClass cls) {
  const Rel gal = galois_relator(in.base.L, in.base.R, in.base.r);
  std::vector<CheckReport> subs;
  for (const auto& [xi, xpi] : gal.pair_indices()) {
    const std::size_t rxp = in.base.r.apply_index(xpi);
    const std::size_t lx = in.base.l.apply_index(xi);
    EquivalenceRecord pair_record =
        make_record(in.cod_left.at_index(xi, rxp), in.cod_right.at_index(lx, xpi),
                    in.to_right.at_index(xpi, xi), in.to_left.at_index(xi, xpi));
    CheckReport rep = galois_class_check(cls, pair_record);
    if (rep.failed()) {
      ValueSeq wit = {gal.left()->at(xi), gal.right()->at(xpi)};
      CheckReport fail = CheckReport::failure("per_pair_class", std::move(wit));
      fail.subs.push_back(std::move(rep));
      return fail;
    }
  }
  return CheckReport::passed("per_pair_class");
}

CheckReport per_pair_transitivity(const DepFunClosureInput& in) {
  std::vector<CheckReport> subs;
  for (const auto& [x1, x2] : in.base.L.pair_indices()) {
    const Rel& c = in.cod_left.at_index(x1, x2);
    CheckReport rep = order_property(OrderPropertyKind::transitive_on, Pred::full(c.left()), c);
    if (rep.failed()) {
      CheckReport fail = CheckReport::failure(
          "cod_left_transitive", {in.base.L.left()->at(x1), in.base.L.left()->at(x2)});
      fail.subs.push_back(std::move(rep));
      return fail;
    }
  }
  for (const auto& [x1, x2] : in.base.R.pair_indices()) {
    const Rel& c = in.cod_right.at_index(x1, x2);
    CheckReport rep = order_property(OrderPropertyKind::transitive_on, Pred::full(c.left()), c);
    if (rep.failed()) {
      CheckReport fail = CheckReport::failure(
          "cod_right_transitive", {in.base.R.left()->at(x1), in.base.R.left()->at(x2)});
      fail.subs.push_back(std::move(rep));
      return fail;
    }
  }
  return CheckReport::passed("per_pair_transitivity");
}

}  // namespace

CheckReport check_mono_conditions(const DepFunClosureInput& in, MonoVariant variant) {
  check_dep_fun_wiring(in);
  return CheckReport::all_of(
      variant == MonoVariant::main ? "mono_conditions" : "mono_conditions_appendix",
      {cond_left_param(in, variant), cond_right_param(in, variant), cond_to_right_mono(in),
       cond_to_left_mono(in)});
}

CheckReport verify_closure_theorem(const DepFunClosureInput& in, ClosureStar star) {
  check_dep_fun_wiring(in);
  std::vector<CheckReport> hyps;
  GaloisClass conclusion_class;
  if (star == ClosureStar::connection) {
    conclusion_class = GaloisClass::connection;
    hyps.push_back(galois_class_check(GaloisClass::connection, in.base));
    CheckReport refl_l = order_property(OrderPropertyKind::reflexive_on, in.base.L.field_pred(),
                                        in.base.L);
    refl_l.property = "reflexive_on_left_field";
    hyps.push_back(std::move(refl_l));
    CheckReport refl_r = order_property(OrderPropertyKind::reflexive_on, in.base.R.field_pred(),
                                        in.base.R);
    refl_r.property = "reflexive_on_right_field";
    hyps.push_back(std::move(refl_r));
    hyps.push_back(per_pair_class_check(in, GaloisClass::connection));
    hyps.push_back(per_pair_transitivity(in));
    hyps.push_back(check_mono_conditions(in, MonoVariant::appendix));
  } else {
    conclusion_class =
        star == ClosureStar::pre_equiv ? GaloisClass::pre_equiv : GaloisClass::per_equiv;
    hyps.push_back(galois_class_check(conclusion_class, in.base));
    hyps.push_back(per_pair_class_check(in, conclusion_class));
    hyps.push_back(check_mono_conditions(in, MonoVariant::main));
  }
  CheckReport hyp_report = CheckReport::all_of("hypotheses", std::move(hyps));
  const std::string prop = std::string("dep_fun_closure_theorem_") + to_string(star);
  if (!hyp_report.ok())
    return CheckReport::gated(prop, std::move(hyp_report), CheckReport::passed("skipped"));
  DepFunClosureOutput out = build_dep_fun_closure(in);
  CheckReport concl = galois_class_check(conclusion_class, out.record);
  concl.property = "conclusion_" + concl.property;
  return CheckReport::gated(prop, std::move(hyp_report), std::move(concl));
}

CheckReport similarity_check(const DepFunClosureInput& in, const DepFunClosureOutput& out,
                             MonoVariant variant) {
  check_dep_fun_wiring(in);
  std::vector<CheckReport> hyps;
  if (variant == MonoVariant::main) {
    hyps.push_back(galois_class_check(GaloisClass::pre_equiv, in.base));
    hyps.push_back(per_pair_class_check(in, GaloisClass::pre_equiv));
    hyps.push_back(cond_left_param(in, MonoVariant::main));
    hyps.push_back(cond_to_left_mono(in));
  } else {
    hyps.push_back(galois_class_check(GaloisClass::connection, in.base));
    CheckReport refl_l = order_property(OrderPropertyKind::reflexive_on, in.base.L.field_pred(),
                                        in.base.L);
    refl_l.property = "reflexive_on_left_field";
    hyps.push_back(std::move(refl_l));
    // Per-pair: to_left monotone from the right case to the left case.
    {
      const Rel gal = galois_relator(in.base.L, in.base.R, in.base.r);
      CheckReport mono = CheckReport::passed("per_pair_to_left_monotone");
      for (const auto& [xi, xpi] : gal.pair_indices()) {
        const std::size_t rxp = in.base.r.apply_index(xpi);
        const std::size_t lx = in.base.l.apply_index(xi);
        CheckReport rep =
            check_monotone("per_pair_to_left_monotone", in.cod_right.at_index(lx, xpi),
                           in.cod_left.at_index(xi, rxp), in.to_left.at_index(xi, xpi));
        if (rep.failed()) {
          mono = std::move(rep);
          break;
        }
      }
      hyps.push_back(std::move(mono));
    }
    hyps.push_back(per_pair_transitivity(in));
    // L2 parameter monotonicity in the second argument, plain and unit-bounded.
    {
      const Rel& l1 = in.base.L;
      const FunTable unit = in.base.r.after(in.base.l);
      CheckReport up = CheckReport::passed("cod_left_second_parameter_monotone");
      const std::size_t n = l1.left()->size();
      for (std::size_t x1 = 0; x1 < n && up.ok(); ++x1)
        for (std::size_t x2 = 0; x2 < n && up.ok(); ++x2) {
          if (!l1.contains_index(x1, x2)) continue;
          for (std::size_t x3 = 0; x3 < n; ++x3) {
            if (!l1.contains_index(x2, x3)) continue;
            CheckReport fin = rel_finer_report("cod_left_second_parameter_monotone",
                                               in.cod_left.at_index(x1, x2),
                                               in.cod_left.at_index(x1, x3));
            if (fin.failed()) {
              up = CheckReport::failure("cod_left_second_parameter_monotone",
                                        chain_witness(l1.left(), {x1, x2, x3}, fin.witness));
              break;
            }
            if (l1.contains_index(x3, unit.apply_index(x2))) {
              CheckReport down = rel_finer_report("cod_left_second_parameter_antimonotone",
                                                  in.cod_left.at_index(x1, x3),
                                                  in.cod_left.at_index(x1, x2));
              if (down.failed()) {
                up = CheckReport::failure("cod_left_second_parameter_antimonotone",
                                          chain_witness(l1.left(), {x1, x2, x3}, down.witness));
                break;
              }
            }
          }
        }
      hyps.push_back(std::move(up));
    }
    hyps.push_back(cond_to_left_mono(in));
  }
  CheckReport hyp_report = CheckReport::all_of("hypotheses", std::move(hyps));
  if (!hyp_report.ok())
    return CheckReport::gated("dep_fun_similarity", std::move(hyp_report),
                              CheckReport::passed("skipped"));

  const Rel gal_big = galois_relator(out.record.L, out.record.R, out.record.r);
  const Rel gal_base = galois_relator(in.base.L, in.base.R, in.base.r);
  // Parameterized Galois relators of the dependent components.
  auto gal_case = [&](std::size_t xi, std::size_t xpi) {
    const std::size_t rxp = in.base.r.apply_index(xpi);
    const std::size_t lx = in.base.l.apply_index(xi);
    return galois_relator(in.cod_left.at_index(xi, rxp), in.cod_right.at_index(lx, xpi),
                          in.to_left.at_index(xi, xpi));
  };
  std::map<std::pair<std::size_t, std::size_t>, Rel> case_cache;
  CheckReport concl = CheckReport::passed("similarity_biconditional");
  for (std::size_t fi = 0; fi < out.space_left.tables.size() && concl.ok(); ++fi) {
    if (!out.record.L.in_dom_index(fi)) continue;
    for (std::size_t gi = 0; gi < out.space_right.tables.size(); ++gi) {
      if (!out.record.R.in_codom_index(gi)) continue;
      const bool lhs = gal_big.contains_index(fi, gi);
      bool rhs = true;
      for (const auto& [xi, xpi] : gal_base.pair_indices()) {
        auto key = std::make_pair(static_cast<std::size_t>(xi), static_cast<std::size_t>(xpi));
        auto it = case_cache.find(key);
        if (it == case_cache.end()) it = case_cache.emplace(key, gal_case(xi, xpi)).first;
        if (!it->second.contains_index(out.space_left.tables[fi].apply_index(xi),
                                       out.space_right.tables[gi].apply_index(xpi))) {
          rhs = false;
          break;
        }
      }
      if (lhs != rhs) {
        concl = CheckReport::failure("similarity_biconditional",
                                     {out.space_left.carrier->at(fi),
                                      out.space_right.carrier->at(gi), Value::boolean(lhs),
                                      Value::boolean(rhs)});
        break;
      }
    }
  }
  return CheckReport::gated("dep_fun_similarity", std::move(hyp_report), std::move(concl));
}

CheckReport mono_collapse_check(const Rel& l1, const DepRel& l2, std::size_t cap) {
  std::vector<CheckReport> hyps;
  CheckReport refl = order_property(OrderPropertyKind::reflexive_on, l1.field_pred(), l1);
  refl.property = "reflexive_on_left_field";
  hyps.push_back(std::move(refl));
  for (const auto& [x1, x2] : l1.pair_indices()) {
    CheckReport right_diag =
        rel_finer_report("diagonal_cases_finer", l2.at_index(x2, x2), l2.at_index(x1, x2));
    if (right_diag.failed()) {
      hyps.push_back(std::move(right_diag));
      break;
    }
    CheckReport left_diag =
        rel_finer_report("diagonal_cases_finer", l2.at_index(x1, x1), l2.at_index(x1, x2));
    if (left_diag.failed()) {
      hyps.push_back(std::move(left_diag));
      break;
    }
    const Rel& c = l2.at_index(x1, x2);
    CheckReport per = order_property(OrderPropertyKind::per_on, Pred::full(c.left()), c);
    if (per.failed()) {
      CheckReport fail =
          CheckReport::failure("case_per", {l1.left()->at(x1), l1.right()->at(x2)});
      fail.subs.push_back(std::move(per));
      hyps.push_back(std::move(fail));
      break;
    }
  }
  CheckReport hyp_report = CheckReport::all_of("hypotheses", std::move(hyps));
  const FunSpace space = FunSpace::enumerate(l1.left(), l2.base_left(), cap);
  const Rel mono = materialize_relator(RelatorKind::mono_relator, l1, l2, space, space, cap);
  const Rel plain = materialize_relator(RelatorKind::plain, l1, l2, space, space, cap);
  CheckReport concl = rel_equal_report("relators_equal", mono, plain);
  if (!hyp_report.ok()) {
    CheckReport gated = CheckReport::gated("mono_relator_collapse", std::move(hyp_report),
                                           CheckReport::passed("skipped"));
    gated.subs.push_back(std::move(concl));
    return gated;
  }
  return CheckReport::gated("mono_relator_collapse", std::move(hyp_report), std::move(concl));
}

}  // namespace transport
