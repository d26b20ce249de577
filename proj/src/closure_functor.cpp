#include "transport/closure_functor.hpp"

#include <algorithm>

namespace transport {

namespace {

void require_arity(const FunctorDef& f, std::size_t n) {
  if (f.arity != n)
    throw WiringError("functor " + f.name + " expects " + std::to_string(f.arity) +
                      " arguments, got " + std::to_string(n));
}

std::string joined_names(const std::vector<CarrierRef>& cs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += sep;
    out += cs[i]->name();
  }
  return out;
}

}  // namespace

FunctorDef identity_functor() {
  FunctorDef f;
  f.name = "identity";
  f.arity = 1;
  f.build_carrier = [](const std::vector<CarrierRef>& cs) { return cs.at(0); };
  f.lift_map = [](const std::vector<FunTable>& fs) { return fs.at(0); };
  f.lift_rel = [](const std::vector<Rel>& rs) { return rs.at(0); };
  return f;
}

FunctorDef const_functor(CarrierRef c) {
  FunctorDef f;
  f.name = "const(" + c->name() + ")";
  f.arity = 1;
  f.build_carrier = [c](const std::vector<CarrierRef>&) { return c; };
  f.lift_map = [c](const std::vector<FunTable>&) { return FunTable::identity(c); };
  f.lift_rel = [c](const std::vector<Rel>&) { return Rel::equality(c); };
  return f;
}

FunctorDef product_functor() {
  FunctorDef f;
  f.name = "product";
  f.arity = 2;
  f.build_carrier = [](const std::vector<CarrierRef>& cs) {
    ValueSeq elems;
    for (const Value& a : cs.at(0)->elements())
      for (const Value& b : cs.at(1)->elements()) elems.push_back(Value::tuple({a, b}));
    return make_carrier("product(" + joined_names(cs, ",") + ")", std::move(elems));
  };
  f.lift_map = [f](const std::vector<FunTable>& fs) {
    std::vector<CarrierRef> doms = {fs.at(0).dom(), fs.at(1).dom()};
    std::vector<CarrierRef> cods = {fs.at(0).cod(), fs.at(1).cod()};
    return FunTable::from_fn(f.build_carrier(doms), f.build_carrier(cods), [&](const Value& v) {
      const ValueSeq& items = v.tuple_items();
      return Value::tuple({fs.at(0).apply(items.at(0)), fs.at(1).apply(items.at(1))});
    });
  };
  f.lift_rel = [f](const std::vector<Rel>& rs) {
    std::vector<CarrierRef> lefts = {rs.at(0).left(), rs.at(1).left()};
    std::vector<CarrierRef> rights = {rs.at(0).right(), rs.at(1).right()};
    return Rel::from_fn(f.build_carrier(lefts), f.build_carrier(rights),
                        [&](const Value& x, const Value& y) {
                          return rs.at(0).contains(x.tuple_items().at(0), y.tuple_items().at(0)) &&
                                 rs.at(1).contains(x.tuple_items().at(1), y.tuple_items().at(1));
                        });
  };
  return f;
}

FunctorDef sum_functor() {
  FunctorDef f;
  f.name = "sum";
  f.arity = 2;
  f.build_carrier = [](const std::vector<CarrierRef>& cs) {
    ValueSeq elems;
    for (const Value& a : cs.at(0)->elements()) elems.push_back(Value::cons("inl", {a}));
    for (const Value& b : cs.at(1)->elements()) elems.push_back(Value::cons("inr", {b}));
    return make_carrier("sum(" + joined_names(cs, ",") + ")", std::move(elems));
  };
  f.lift_map = [f](const std::vector<FunTable>& fs) {
    std::vector<CarrierRef> doms = {fs.at(0).dom(), fs.at(1).dom()};
    std::vector<CarrierRef> cods = {fs.at(0).cod(), fs.at(1).cod()};
    return FunTable::from_fn(f.build_carrier(doms), f.build_carrier(cods), [&](const Value& v) {
      const bool left = v.cons_name() == "inl";
      const FunTable& side = left ? fs.at(0) : fs.at(1);
      return Value::cons(v.cons_name(), {side.apply(v.cons_args().at(0))});
    });
  };
  f.lift_rel = [f](const std::vector<Rel>& rs) {
    std::vector<CarrierRef> lefts = {rs.at(0).left(), rs.at(1).left()};
    std::vector<CarrierRef> rights = {rs.at(0).right(), rs.at(1).right()};
    return Rel::from_fn(f.build_carrier(lefts), f.build_carrier(rights),
                        [&](const Value& x, const Value& y) {
                          if (x.cons_name() != y.cons_name()) return false;
                          const Rel& side = x.cons_name() == "inl" ? rs.at(0) : rs.at(1);
                          return side.contains(x.cons_args().at(0), y.cons_args().at(0));
                        });
  };
  return f;
}

FunctorDef option_functor() {
  FunctorDef f;
  f.name = "option";
  f.arity = 1;
  f.build_carrier = [](const std::vector<CarrierRef>& cs) {
    ValueSeq elems;
    elems.push_back(Value::cons("None"));
    for (const Value& a : cs.at(0)->elements()) elems.push_back(Value::cons("Some", {a}));
    return make_carrier("option(" + cs.at(0)->name() + ")", std::move(elems));
  };
  f.lift_map = [f](const std::vector<FunTable>& fs) {
    return FunTable::from_fn(f.build_carrier({fs.at(0).dom()}), f.build_carrier({fs.at(0).cod()}),
                             [&](const Value& v) {
                               if (v.cons_name() == "None") return v;
                               return Value::cons("Some", {fs.at(0).apply(v.cons_args().at(0))});
                             });
  };
  f.lift_rel = [f](const std::vector<Rel>& rs) {
    return Rel::from_fn(f.build_carrier({rs.at(0).left()}), f.build_carrier({rs.at(0).right()}),
                        [&](const Value& x, const Value& y) {
                          if (x.cons_name() == "None" || y.cons_name() == "None")
                            return x.cons_name() == y.cons_name();
                          return rs.at(0).contains(x.cons_args().at(0), y.cons_args().at(0));
                        });
  };
  return f;
}

FunctorDef list_functor(std::size_t max_len) {
  FunctorDef f;
  f.name = "list" + std::to_string(max_len);
  f.arity = 1;
  f.build_carrier = [max_len](const std::vector<CarrierRef>& cs) {
    ValueSeq elems;
    std::vector<ValueSeq> layer = {{}};
    elems.push_back(Value::list({}));
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<ValueSeq> next;
      for (const ValueSeq& prefix : layer)
        for (const Value& a : cs.at(0)->elements()) {
          ValueSeq xs = prefix;
          xs.push_back(a);
          elems.push_back(Value::list(xs));
          next.push_back(std::move(xs));
        }
      layer = std::move(next);
    }
    return make_carrier("list" + std::to_string(max_len) + "(" + cs.at(0)->name() + ")",
                        std::move(elems));
  };
  f.lift_map = [f](const std::vector<FunTable>& fs) {
    return FunTable::from_fn(f.build_carrier({fs.at(0).dom()}), f.build_carrier({fs.at(0).cod()}),
                             [&](const Value& v) {
                               ValueSeq out;
                               for (const Value& a : v.list_items()) out.push_back(fs.at(0).apply(a));
                               return Value::list(std::move(out));
                             });
  };
  f.lift_rel = [f](const std::vector<Rel>& rs) {
    return Rel::from_fn(f.build_carrier({rs.at(0).left()}), f.build_carrier({rs.at(0).right()}),
                        [&](const Value& x, const Value& y) {
                          const ValueSeq& xs = x.list_items();
                          const ValueSeq& ys = y.list_items();
                          if (xs.size() != ys.size()) return false;
                          for (std::size_t i = 0; i < xs.size(); ++i)
                            if (!rs.at(0).contains(xs[i], ys[i])) return false;
                          return true;
                        });
  };
  return f;
}

FunctorDef builtin_functor(std::string_view name, std::size_t list_bound) {
  if (name == "identity") return identity_functor();
  if (name == "product") return product_functor();
  if (name == "sum") return sum_functor();
  if (name == "option") return option_functor();
  if (name.substr(0, 4) == "list" && name.size() > 4) {
    std::size_t k = 0;
    for (char c : name.substr(4)) {
      if (c < '0' || c > '9') throw NotFound("unknown functor " + std::string(name));
      k = k * 10 + static_cast<std::size_t>(c - '0');
    }
    if (k > list_bound)
      throw Error("list functor bound " + std::to_string(k) + " exceeds the list bound " +
                  std::to_string(list_bound));
    return list_functor(k);
  }
  throw NotFound("unknown functor " + std::string(name));
}

Value functor_map(const FunctorDef& f, const std::vector<FunTable>& fs, const Value& v) {
  require_arity(f, fs.size());
  return f.lift_map(fs).apply(v);
}

bool functor_rel(const FunctorDef& f, const std::vector<Rel>& rs, const Value& x, const Value& y) {
  require_arity(f, rs.size());
  return f.lift_rel(rs).contains(x, y);
}

EquivalenceRecord build_functor_closure(const FunctorDef& f,
                                        const std::vector<EquivalenceRecord>& components) {
  require_arity(f, components.size());
  std::vector<Rel> ls, rs;
  std::vector<FunTable> lts, rts;
  for (const EquivalenceRecord& e : components) {
    ls.push_back(e.L);
    rs.push_back(e.R);
    lts.push_back(e.l);
    rts.push_back(e.r);
  }
  return make_record(f.lift_rel(ls), f.lift_rel(rs), f.lift_map(lts), f.lift_map(rts));
}

const char* to_string(FunctorStar s) {
  switch (s) {
    case FunctorStar::connection: return "connection";
    case FunctorStar::galois_equiv: return "galois_equiv";
    case FunctorStar::pre_equiv: return "pre_equiv";
    case FunctorStar::per_equiv: return "per_equiv";
  }
  return "?";
}

namespace {

GaloisClass functor_star_class(FunctorStar s) {
  switch (s) {
    case FunctorStar::connection: return GaloisClass::connection;
    case FunctorStar::galois_equiv: return GaloisClass::galois_equiv;
    case FunctorStar::pre_equiv: return GaloisClass::pre_equiv;
    case FunctorStar::per_equiv: return GaloisClass::per_equiv;
  }
  throw Error("bad functor star");
}

}  // namespace

CheckReport verify_functor_theorem(const FunctorDef& f,
                                   const std::vector<EquivalenceRecord>& components,
                                   FunctorStar star) {
  require_arity(f, components.size());
  const GaloisClass cls = functor_star_class(star);
  std::vector<CheckReport> hyps;
  for (std::size_t i = 0; i < components.size(); ++i) {
    CheckReport rep = galois_class_check(cls, components[i]);
    rep.property = "component" + std::to_string(i + 1) + "_" + rep.property;
    hyps.push_back(std::move(rep));
  }
  CheckReport hyp_report = CheckReport::all_of("hypotheses", std::move(hyps));
  const std::string prop = std::string("functor_closure_theorem_") + to_string(star);
  if (!hyp_report.ok())
    return CheckReport::gated(prop, std::move(hyp_report), CheckReport::passed("skipped"));
  CheckReport concl = galois_class_check(cls, build_functor_closure(f, components));
  concl.property = "conclusion_" + concl.property;
  return CheckReport::gated(prop, std::move(hyp_report), std::move(concl));
}

CheckReport functor_similarity_check(const FunctorDef& f,
                                     const std::vector<EquivalenceRecord>& components) {
  require_arity(f, components.size());
  const EquivalenceRecord built = build_functor_closure(f, components);
  std::vector<Rel> component_relators;
  for (const EquivalenceRecord& e : components)
    component_relators.push_back(galois_relator(e.L, e.R, e.r));
  return rel_equal_report("functor_similarity", galois_relator(built.L, built.R, built.r),
                          f.lift_rel(component_relators));
}

CheckReport functor_law_check(const FunctorDef& f, const std::vector<CarrierRef>& carriers) {
  require_arity(f, carriers.size());
  std::vector<FunTable> ids;
  std::vector<Rel> eqs;
  for (const CarrierRef& c : carriers) {
    ids.push_back(FunTable::identity(c));
    eqs.push_back(Rel::equality(c));
  }
  const CarrierRef built = f.build_carrier(carriers);
  CheckReport map_id = f.lift_map(ids) == FunTable::identity(built)
                           ? CheckReport::passed("map_identity")
                           : CheckReport::failure("map_identity");
  CheckReport rel_eq =
      rel_equal_report("relator_of_equalities", f.lift_rel(eqs), Rel::equality(built));
  return CheckReport::all_of("functor_laws", {std::move(map_id), std::move(rel_eq)});
}

}  // namespace transport
