#pragma once

// Shared fixtures: the bounded worlds every suite checks against.
//  - b: integers {-2..2} vs naturals {0,1,2} under nonnegative restricted
//    equality, with the clamped retraction pair.
//  - c: lists over {0,1,2} (length <= 3) vs finite sets, via to_fset and the
//    sorted duplicate-free section.
//  - d: guarded decrement closure on the small integer world {-1,0,1}.
//  - e: the halving adjunction between ({0..3}, <=) and ({0,1}, <=).

#include <algorithm>
#include <set>

#include "transport/closure_compose.hpp"
#include "transport/closure_functor.hpp"
#include "transport/closure_funrel.hpp"
#include "transport/engine.hpp"

namespace fx {

using namespace transport;

inline Value V(std::int64_t i) { return Value::integer(i); }
inline Value VB(bool b) { return Value::boolean(b); }

inline CarrierRef b2() {
  static CarrierRef c = make_carrier("B2", {VB(false), VB(true)});
  return c;
}

inline CarrierRef int_range(const std::string& name, std::int64_t lo, std::int64_t hi) {
  ValueSeq vs;
  for (std::int64_t i = lo; i <= hi; ++i) vs.push_back(V(i));
  return make_carrier(name, std::move(vs));
}

inline CarrierRef int5() {
  static CarrierRef c = int_range("Int5", -2, 2);
  return c;
}
inline CarrierRef nat3() {
  static CarrierRef c = int_range("Nat3", 0, 2);
  return c;
}
inline CarrierRef int3() {
  static CarrierRef c = int_range("Int3", -1, 1);
  return c;
}
inline CarrierRef nat2() {
  static CarrierRef c = int_range("Nat2", 0, 1);
  return c;
}

inline Rel zpos(const CarrierRef& ints) {
  return restricted_eq(Pred::from_fn(ints, [](const Value& v) { return v.as_int() >= 0; }));
}

inline FunTable to_nat(const CarrierRef& ints, const CarrierRef& nats) {
  return FunTable::from_fn(ints, nats, [](const Value& v) {
    return V(std::max<std::int64_t>(v.as_int(), 0));
  });
}

inline FunTable to_int(const CarrierRef& nats, const CarrierRef& ints) {
  return FunTable::from_fn(nats, ints, [](const Value& v) { return v; });
}

// Fixture B: (Zpos, =Nat3, to_nat, to_int) on Int5/Nat3.
inline EquivalenceRecord fixture_b() {
  return make_record(zpos(int5()), Rel::equality(nat3()), to_nat(int5(), nat3()),
                     to_int(nat3(), int5()), GaloisClass::per_equiv);
}

inline PartialQuotient quotient_b() {
  Rel t = Rel::from_fn(int5(), nat3(),
                       [](const Value& i, const Value& n) { return i.as_int() == n.as_int(); });
  return make_quotient(std::move(t), to_nat(int5(), nat3()), to_int(nat3(), int5()));
}

inline EquivalenceRecord identity_b2() { return identity_record(b2()); }

// Fixture C: lists over {0,1,2} with length bound 3 against finite sets.
inline CarrierRef natu() {
  static CarrierRef c = int_range("NatU", 0, 2);
  return c;
}

inline CarrierRef list_carrier() {
  static CarrierRef c = list_functor(3).build_carrier({natu()});
  return c;
}

inline Value fset_of(const Value& list) {
  std::set<std::int64_t> set;
  for (const Value& v : list.list_items()) set.insert(v.as_int());
  ValueSeq args;
  for (std::int64_t v : set) args.push_back(V(v));
  return Value::cons("Fset", std::move(args));
}

inline CarrierRef fset_carrier() {
  static CarrierRef c = [] {
    std::set<std::string> seen;
    ValueSeq elems;
    for (const Value& xs : list_carrier()->elements()) {
      Value s = fset_of(xs);
      if (seen.insert(s.str()).second) elems.push_back(s);
    }
    return make_carrier("FsetU", std::move(elems));
  }();
  return c;
}

inline FunTable to_fset() {
  return FunTable::from_fn(list_carrier(), fset_carrier(), fset_of);
}

inline FunTable to_list_fin() {
  return FunTable::from_fn(fset_carrier(), list_carrier(), [](const Value& s) {
    return Value::list(s.cons_args());  // sorted duplicate-free section
  });
}

inline Rel lfs() {
  return Rel::from_fn(list_carrier(), fset_carrier(),
                      [](const Value& xs, const Value& s) { return fset_of(xs) == s; });
}

inline Rel lfs_left() {
  return Rel::from_fn(list_carrier(), list_carrier(),
                      [](const Value& xs, const Value& ys) { return fset_of(xs) == fset_of(ys); });
}

inline EquivalenceRecord fixture_c() {
  return make_record(lfs_left(), Rel::equality(fset_carrier()), to_fset(), to_list_fin(),
                     GaloisClass::per_equiv);
}

inline PartialQuotient quotient_c() { return make_quotient(lfs(), to_fset(), to_list_fin()); }

inline FunTable max_list() {
  return FunTable::from_fn(list_carrier(), natu(), [](const Value& xs) {
    std::int64_t best = 0;
    for (const Value& v : xs.list_items()) best = std::max(best, v.as_int());
    return V(best);
  });
}

// Fixture D: the guarded decrement closure on Int3/Nat2. The dependency
// bounds the argument below by 1, which is exactly what keeps decrement
// inside the nonnegative fragment.
inline DepFunClosureInput fixture_d_input() {
  CarrierRef ci = int3();
  CarrierRef cn = nat2();
  Rel zp = zpos(ci);
  Rel eqn = Rel::equality(cn);
  DepRel cod_left = DepRel::from_fn(ci, ci, [&](const Value& x, const Value&) {
    return rel_if(x.as_int() >= 1, zp);
  });
  DepRel cod_right = DepRel::from_fn(cn, cn, [&](const Value& x, const Value&) {
    return rel_if(x.as_int() >= 1, eqn);
  });
  DepFunTable to_right = DepFunTable::constant(cn, ci, to_nat(ci, cn));
  DepFunTable to_left = DepFunTable::constant(ci, cn, to_int(cn, ci));
  return DepFunClosureInput{
      make_record(zp, eqn, to_nat(ci, cn), to_int(cn, ci), GaloisClass::per_equiv),
      std::move(cod_left),
      std::move(cod_right),
      std::move(to_right),
      std::move(to_left),
      kDefaultCap};
}

inline FunTable decrement3() {
  return FunTable::from_fn(int3(), int3(), [](const Value& v) {
    return V(std::max<std::int64_t>(v.as_int() - 1, -1));
  });
}

// Fixture E: the halving connection between ({0..3}, <=) and ({0,1}, <=):
// halve is left adjoint to y -> 2y+1.
inline CarrierRef nat4() {
  static CarrierRef c = int_range("Nat4", 0, 3);
  return c;
}
inline CarrierRef nat2e() {
  static CarrierRef c = int_range("Half2", 0, 1);
  return c;
}

inline Rel le_rel(const CarrierRef& c) {
  return Rel::from_fn(c, c, [](const Value& a, const Value& b) { return a.as_int() <= b.as_int(); });
}

inline FunTable halve() {
  return FunTable::from_fn(nat4(), nat2e(), [](const Value& v) { return V(v.as_int() / 2); });
}

inline FunTable double_succ() {
  return FunTable::from_fn(nat2e(), nat4(), [](const Value& v) { return V(2 * v.as_int() + 1); });
}

inline EquivalenceRecord fixture_e() {
  return make_record(le_rel(nat4()), le_rel(nat2e()), halve(), double_succ(),
                     GaloisClass::connection);
}

// Tagged copy of Nat3 and the renaming equivalence used by composition tests.
inline CarrierRef nat3_tagged() {
  static CarrierRef c = [] {
    ValueSeq vs;
    for (const Value& v : nat3()->elements()) vs.push_back(Value::cons("P", {v}));
    return make_carrier("Nat3P", std::move(vs));
  }();
  return c;
}

inline FunTable rename() {
  return FunTable::from_fn(nat3(), nat3_tagged(),
                           [](const Value& v) { return Value::cons("P", {v}); });
}

inline FunTable rename_back() {
  return FunTable::from_fn(nat3_tagged(), nat3(),
                           [](const Value& v) { return v.cons_args().at(0); });
}

inline EquivalenceRecord renaming() {
  return make_record(Rel::equality(nat3()), Rel::equality(nat3_tagged()), rename(),
                     rename_back(), GaloisClass::per_equiv);
}

inline PartialQuotient quotient_renaming() {
  Rel t = Rel::from_fn(nat3(), nat3_tagged(), [](const Value& n, const Value& p) {
    return p.cons_args().at(0) == n;
  });
  return make_quotient(std::move(t), rename(), rename_back());
}

}  // namespace fx
