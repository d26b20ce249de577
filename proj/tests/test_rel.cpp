#include <doctest.h>

#include "fixtures_common.hpp"

using namespace transport;

namespace {

// Independent composition oracle: the bare definition as a nested scan.
Rel compose_oracle(const Rel& r, const Rel& s) {
  Rel out(r.left(), s.right());
  for (std::size_t i = 0; i < r.left()->size(); ++i)
    for (std::size_t j = 0; j < s.right()->size(); ++j) {
      for (std::size_t z = 0; z < r.right()->size(); ++z) {
        if (r.contains_index(i, z) && s.contains_index(z, j)) {
          out.add_index(i, j);
          break;
        }
      }
    }
  return out;
}

CarrierRef three() { return make_carrier("T3", {fx::V(0), fx::V(1), fx::V(2)}); }

}  // namespace

TEST_CASE("rel_inverse swaps pairs and is an involution") {
  CarrierRef c = three();
  Rel r = Rel::from_pairs(c, c, {{fx::V(0), fx::V(1)}, {fx::V(1), fx::V(1)}});
  Rel inv = rel_inverse(r);
  CHECK(inv.contains(fx::V(1), fx::V(0)));
  CHECK(inv.contains(fx::V(1), fx::V(1)));
  CHECK(inv.pair_count() == 2);
  CHECK(rel_inverse(Rel::empty(c, c)) == Rel::empty(c, c));
  CHECK(rel_inverse(rel_inverse(fx::zpos(fx::int5()))) == fx::zpos(fx::int5()));
}

TEST_CASE("rel_compose matches the definition and restricted equality is idempotent") {
  CarrierRef c = three();
  Rel a = Rel::from_pairs(c, c, {{fx::V(0), fx::V(1)}});
  Rel b = Rel::from_pairs(c, c, {{fx::V(1), fx::V(0)}});
  Rel ab = rel_compose(a, b);
  CHECK(ab.pair_count() == 1);
  CHECK(ab.contains(fx::V(0), fx::V(0)));
  CHECK(rel_compose(a, Rel::empty(c, c)) == Rel::empty(c, c));

  Rel zp = fx::zpos(fx::int5());
  CHECK(rel_compose(zp, zp) == zp);
  CHECK(rel_compose(zp, zp) == compose_oracle(zp, zp));
  CHECK_THROWS_AS(rel_compose(zp, Rel::equality(fx::nat3())), CarrierMismatch);
}

TEST_CASE("rel_compose is associative and inversion distributes on fixture relations") {
  std::vector<Rel> rels = {fx::zpos(fx::int5()), Rel::equality(fx::int5()),
                           fx::le_rel(fx::int5()),
                           Rel::from_pairs(fx::int5(), fx::int5(),
                                           {{fx::V(-2), fx::V(2)}, {fx::V(0), fx::V(1)}})};
  for (const Rel& a : rels)
    for (const Rel& b : rels)
      for (const Rel& c : rels) {
        CHECK(rel_compose(rel_compose(a, b), c) == rel_compose(a, rel_compose(b, c)));
        CHECK(rel_inverse(rel_compose(a, b)) == rel_compose(rel_inverse(b), rel_inverse(a)));
      }
}

TEST_CASE("rel_finer and its witness") {
  Rel zp = fx::zpos(fx::int5());
  Rel eq = Rel::equality(fx::int5());
  CHECK(rel_finer(Rel::empty(fx::int5(), fx::int5()), zp));
  CHECK(rel_finer(zp, eq));
  CheckReport rep = rel_finer_report("finer", eq, zp);
  CHECK(rep.failed());
  CHECK(rep.witness == ValueSeq{fx::V(-2), fx::V(-2)});  // canonically smallest
}

TEST_CASE("membership kinds") {
  Rel zp = fx::zpos(fx::int5());
  CHECK_FALSE(rel_membership(MembershipKind::in_dom, zp, fx::V(-1)));
  CHECK(rel_membership(MembershipKind::in_dom, zp, fx::V(0)));
  CarrierRef c = three();
  Rel r = Rel::from_pairs(c, c, {{fx::V(0), fx::V(1)}});
  CHECK(rel_membership(MembershipKind::in_codom, r, fx::V(1)));
  CHECK(rel_membership(MembershipKind::in_field, r, fx::V(0)));
  CHECK_FALSE(rel_membership(MembershipKind::in_field, r, fx::V(2)));
  CHECK_THROWS_AS(rel_membership(MembershipKind::in_dom, zp, fx::V(7)), CarrierMismatch);
}

TEST_CASE("restricted equality") {
  Rel zp = restricted_eq(Pred::of(fx::int5(), {fx::V(0), fx::V(1), fx::V(2)}));
  CHECK(zp == fx::zpos(fx::int5()));
  CHECK(zp.pair_count() == 3);
  CHECK(restricted_eq(Pred::none(fx::int5())).pair_count() == 0);
  CHECK(restricted_eq(Pred::full(fx::int5())) == Rel::equality(fx::int5()));
}

TEST_CASE("rel_if") {
  Rel zp = fx::zpos(fx::int5());
  CHECK(rel_if(true, zp) == zp);
  Rel vacuous = rel_if(false, Rel::empty(fx::b2(), fx::b2()));
  CHECK(vacuous.pair_count() == 4);
  CHECK(rel_finer(zp, rel_if(false, zp)));
}

TEST_CASE("order properties with minimal witnesses") {
  CarrierRef c = three();
  CHECK(order_property(OrderPropertyKind::reflexive_on, Pred::full(fx::b2()),
                       Rel::equality(fx::b2()))
            .ok());
  Rel zp = fx::zpos(fx::int5());
  CHECK(order_property(OrderPropertyKind::per_on, zp.field_pred(), zp).ok());

  Rel chain = Rel::from_pairs(c, c, {{fx::V(0), fx::V(1)}, {fx::V(1), fx::V(2)}});
  CheckReport rep = order_property(OrderPropertyKind::transitive_on, Pred::full(c), chain);
  CHECK(rep.failed());
  CHECK(rep.witness == ValueSeq{fx::V(0), fx::V(1), fx::V(2)});

  // preorder_on and per_on agree with their definitional conjunctions.
  for (const Rel& r : {zp, chain, fx::le_rel(c), Rel::equality(c)}) {
    const Pred full = Pred::full(r.left());
    CHECK(order_property(OrderPropertyKind::preorder_on, full, r).ok() ==
          (order_property(OrderPropertyKind::reflexive_on, full, r).ok() &&
           order_property(OrderPropertyKind::transitive_on, full, r).ok()));
    CHECK(order_property(OrderPropertyKind::per_on, full, r).ok() ==
          (order_property(OrderPropertyKind::transitive_on, full, r).ok() &&
           order_property(OrderPropertyKind::symmetric_on, full, r).ok()));
  }
}

TEST_CASE("point properties") {
  Rel zp = fx::zpos(fx::int5());
  FunTable id = FunTable::identity(fx::int5());
  CHECK(point_property(PointPropertyKind::inflationary_on, zp.field_pred(), zp, id).ok());

  // The unit to_int . to_nat fixes the nonnegative fragment.
  FunTable unit = fx::to_int(fx::nat3(), fx::int5()).after(fx::to_nat(fx::int5(), fx::nat3()));
  CHECK(point_property(PointPropertyKind::rel_equivalence_on, zp.field_pred(), zp, unit).ok());
  CHECK_FALSE(
      point_property(PointPropertyKind::rel_equivalence_on, Pred::full(fx::int5()), zp, unit)
          .ok());

  CarrierRef c = three();
  FunTable zero = FunTable::constant(c, c, fx::V(0));
  CHECK(point_property(PointPropertyKind::deflationary_on, Pred::full(c), fx::le_rel(c), zero)
            .ok());
}

TEST_CASE("dependent function relator on the guarded subtraction layers") {
  // Outer layer manually nested, mirroring the two-argument subtraction on
  // Int5: for related first arguments, the inner guarded relator must hold.
  CarrierRef ci = fx::int5();
  Rel zp = fx::zpos(ci);
  auto sub_at = [&](std::int64_t a) {
    return FunTable::from_fn(ci, ci, [a](const Value& b) {
      return fx::V(std::max<std::int64_t>(-2, std::min<std::int64_t>(2, a - b.as_int())));
    });
  };
  auto inner_rel = [&](std::int64_t i1, bool guarded) {
    return DepRel::from_fn(ci, ci, [&, i1](const Value& x, const Value&) {
      return rel_if(!guarded || i1 >= x.as_int(), zp);
    });
  };
  bool guarded_ok = true;
  ValueSeq unguarded_witness;
  for (const auto& [i, j] : zp.pair_indices()) {
    const std::int64_t i1 = ci->at(i).as_int();
    (void)j;
    guarded_ok = guarded_ok && dep_fun_relator(RelatorKind::plain, zp, inner_rel(i1, true),
                                               sub_at(i1), sub_at(i1));
    CheckReport rep = dep_fun_relator_report(RelatorKind::plain, zp, inner_rel(i1, false),
                                             sub_at(i1), sub_at(i1));
    if (rep.failed() && unguarded_witness.empty())
      unguarded_witness = {ci->at(i), rep.witness.at(0)};
  }
  CHECK(guarded_ok);
  CHECK(unguarded_witness == ValueSeq{fx::V(0), fx::V(1)});  // 0-1 leaves the field

  // Identity case: every kind holds.
  DepRel eqdep = DepRel::constant(fx::b2(), fx::b2(), Rel::equality(fx::b2()));
  FunTable id = FunTable::identity(fx::b2());
  for (RelatorKind k : {RelatorKind::plain, RelatorKind::mono_fun, RelatorKind::mono_relator})
    CHECK(dep_fun_relator(k, Rel::equality(fx::b2()), eqdep, id, id));

  // mono_fun coincides with the plain relator applied to (f, f).
  CarrierRef c = three();
  DepRel ledep = DepRel::constant(c, c, fx::le_rel(c));
  for (const FunTable& f : enumerate_fun_tables(c, c, 64))
    for (const FunTable& g : enumerate_fun_tables(c, c, 64))
      CHECK(dep_fun_relator(RelatorKind::mono_fun, fx::le_rel(c), ledep, f, g) ==
            dep_fun_relator(RelatorKind::plain, fx::le_rel(c), ledep, f, f));
}

TEST_CASE("dependent function mapper") {
  // Non-dependent degeneration: with f = id and constant g = id the mapper
  // returns its argument.
  CarrierRef c = three();
  FunTable id = FunTable::identity(c);
  FunTable h = FunTable::from_pairs(
      c, c, {{fx::V(0), fx::V(1)}, {fx::V(1), fx::V(2)}, {fx::V(2), fx::V(0)}});
  CHECK(dep_fun_map(id, [&](const Value&) { return id; }, h) == h);

  // Partial application fixture: n -> to_nat(2 - to_int n).
  FunTable toi = fx::to_int(fx::nat3(), fx::int5());
  FunTable ton = fx::to_nat(fx::int5(), fx::nat3());
  FunTable two_minus = FunTable::from_fn(fx::int5(), fx::int5(), [](const Value& v) {
    return fx::V(std::min<std::int64_t>(2, std::max<std::int64_t>(-2, 2 - v.as_int())));
  });
  FunTable got = dep_fun_map(toi, [&](const Value&) { return ton; }, two_minus);
  CHECK(got.apply(fx::V(0)) == fx::V(2));
  CHECK(got.apply(fx::V(1)) == fx::V(1));
  CHECK(got.apply(fx::V(2)) == fx::V(0));

  CarrierRef empty = make_carrier("E0", {});
  FunTable f0(empty, c, {});
  CHECK(dep_fun_map(f0, [&](const Value&) { return id; }, h).dom()->size() == 0);
}

TEST_CASE("materialized relators over function spaces") {
  FunSpace sp = FunSpace::enumerate(fx::b2(), fx::b2(), 64);
  Rel eq = Rel::equality(fx::b2());
  DepRel eqdep = DepRel::constant(fx::b2(), fx::b2(), eq);

  // Relator with equalities on both sides is extensional equality of tables.
  Rel plain = materialize_relator(RelatorKind::plain, eq, eqdep, sp, sp, 64);
  CHECK(plain == Rel::equality(sp.carrier));

  // Empty domain relation relates everything vacuously.
  Rel vac = materialize_relator(RelatorKind::plain, Rel::empty(fx::b2(), fx::b2()), eqdep, sp,
                                sp, 64);
  CHECK(vac.pair_count() == 16);

  // The monotone variant is finer than the plain one.
  const auto in = fx::fixture_d_input();
  FunSpace spd = FunSpace::enumerate(fx::int3(), fx::int3(), kDefaultCap);
  Rel mono = materialize_relator(RelatorKind::mono_relator, in.base.L, in.cod_left, spd, spd,
                                 kDefaultCap);
  Rel plain_d = materialize_relator(RelatorKind::plain, in.base.L, in.cod_left, spd, spd,
                                    kDefaultCap);
  CHECK(rel_finer(mono, plain_d));

  CHECK_THROWS_AS(materialize_relator(RelatorKind::plain, in.base.L, in.cod_left, spd, spd, 10),
                  CapExceeded);
}
