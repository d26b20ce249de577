#include <doctest.h>

#include "fixtures_common.hpp"

using namespace transport;

namespace {

EquivalenceRecord identity_fset() { return identity_record(fx::fset_carrier()); }

PartialQuotient identity_fset_quotient() {
  return make_quotient(Rel::equality(fx::fset_carrier()), FunTable::identity(fx::fset_carrier()),
                       FunTable::identity(fx::fset_carrier()));
}

}  // namespace

TEST_CASE("composition of identities is the identity") {
  CompositionInput in{fx::identity_b2(), fx::identity_b2()};
  EquivalenceRecord rec = build_composition(in);
  CHECK(rec.L == Rel::equality(fx::b2()));
  CHECK(rec.R == Rel::equality(fx::b2()));
  CHECK(rec.l == FunTable::identity(fx::b2()));
}

TEST_CASE("composing the integer fixture with a renaming bijection") {
  CompositionInput in{fx::fixture_b(), fx::renaming()};
  EquivalenceRecord rec = build_composition(in);
  CHECK(rec.L == fx::zpos(fx::int5()));
  CHECK(rec.R == Rel::equality(fx::nat3_tagged()));
  CHECK(rec.l == fx::rename().after(fx::to_nat(fx::int5(), fx::nat3())));
  CHECK(galois_class_check(GaloisClass::per_equiv, rec).ok());
}

TEST_CASE("composing the list/fset quotient with the identity recovers the induced relation") {
  CompositionInput in{fx::fixture_c(), identity_fset()};
  EquivalenceRecord rec = build_composition(in);
  CHECK(rec.L == fx::lfs_left());
  CHECK(rec.L == induced_left_rel(fx::quotient_c()));
}

TEST_CASE("commutation check") {
  Rel eqn = Rel::equality(fx::nat3());
  CHECK(commutation_check(eqn, eqn).ok());
  CHECK(commutation_check(fx::zpos(fx::int5()), fx::zpos(fx::int5())).ok());

  CarrierRef c = make_carrier("T3", {fx::V(0), fx::V(1), fx::V(2)});
  Rel r1 = Rel::from_pairs(c, c, {{fx::V(0), fx::V(1)}});
  Rel l2 = Rel::from_pairs(c, c, {{fx::V(1), fx::V(2)}});
  CheckReport rep = commutation_check(r1, l2);
  CHECK(rep.failed());
  CHECK(rep.first_failure()->witness == ValueSeq{fx::V(0), fx::V(2)});

  // Commutation is stable under flipping both arguments and inverting.
  for (const auto& [a, b] : std::vector<std::pair<Rel, Rel>>{{eqn, eqn}, {r1, l2}, {l2, r1}}) {
    CHECK(commutation_check(a, b).ok() ==
          commutation_check(rel_inverse(b), rel_inverse(a)).ok());
  }
}

TEST_CASE("composition closure theorem") {
  CHECK(verify_comp_theorem({fx::fixture_b(), fx::renaming()}, CompStar::per_equiv).verdict ==
        Verdict::pass);
  CHECK(verify_comp_theorem({fx::identity_b2(), fx::identity_b2()}, CompStar::pre_equiv)
            .verdict == Verdict::pass);
  CHECK(verify_comp_theorem({fx::fixture_c(), identity_fset()}, CompStar::per_equiv).verdict ==
        Verdict::pass);
  CHECK(verify_comp_theorem({fx::fixture_b(), fx::renaming()},
                            CompStar::connection_conclusion)
            .verdict == Verdict::pass);

  // Broken commutation gates the theorem: middle relations on Nat3 that step
  // in opposite directions cannot commute.
  CarrierRef cn = fx::nat3();
  Rel skew = Rel::from_pairs(cn, cn, {{fx::V(0), fx::V(1)}, {fx::V(1), fx::V(1)}});
  EquivalenceRecord second =
      make_record(skew, Rel::equality(cn), FunTable::constant(cn, cn, fx::V(1)),
                  FunTable::constant(cn, cn, fx::V(1)));
  CheckReport rep = verify_comp_theorem({fx::fixture_b(), second}, CompStar::per_equiv);
  CHECK(rep.verdict == Verdict::inapplicable);
}

TEST_CASE("coinciding-relations closure") {
  CHECK(verify_comp_coincide({fx::fixture_b(), fx::renaming()}, GaloisClass::per_equiv)
            .verdict == Verdict::pass);
  for (GaloisClass cls : {GaloisClass::connection, GaloisClass::galois_equiv,
                          GaloisClass::order_equiv, GaloisClass::pre_equiv}) {
    CHECK(verify_comp_coincide({fx::identity_b2(), fx::identity_b2()}, cls).verdict ==
          Verdict::pass);
  }
  // Middles must literally coincide.
  CHECK(verify_comp_coincide({fx::fixture_c(), identity_fset()}, GaloisClass::per_equiv)
            .verdict == Verdict::pass);
  EquivalenceRecord shrunk = fx::renaming();
  Rel smaller = restricted_eq(Pred::of(fx::nat3(), {fx::V(0), fx::V(1)}));
  EquivalenceRecord second = make_record(smaller, Rel::equality(fx::nat3_tagged()), fx::rename(),
                                         fx::rename_back());
  CHECK(verify_comp_coincide({fx::fixture_b(), second}, GaloisClass::per_equiv).verdict ==
        Verdict::inapplicable);
}

TEST_CASE("composition similarity") {
  {
    CompositionInput in{fx::identity_b2(), fx::identity_b2()};
    CHECK(comp_similarity_check(in).verdict == Verdict::pass);
    EquivalenceRecord rec = build_composition(in);
    CHECK(galois_relator(rec.L, rec.R, rec.r) == Rel::equality(fx::b2()));
  }
  {
    CompositionInput in{fx::fixture_b(), fx::renaming()};
    CHECK(comp_similarity_check(in).verdict == Verdict::pass);
    CHECK(comp_similarity_check(in, MonoVariant::appendix).verdict == Verdict::pass);
  }
  {
    CompositionInput in{fx::fixture_c(), identity_fset()};
    CHECK(comp_similarity_check(in).verdict == Verdict::pass);
  }
}

TEST_CASE("expectations on composed transports") {
  for (CompositionInput in : {CompositionInput{fx::fixture_b(), fx::renaming()},
                              CompositionInput{fx::fixture_c(), identity_fset()}}) {
    REQUIRE(verify_comp_theorem(in, CompStar::per_equiv).verdict == Verdict::pass);
    EquivalenceRecord rec = build_composition(in);
    auto [unit, counit] = unit_counit(rec.l, rec.r);
    CHECK(point_property(PointPropertyKind::inflationary_on, rec.L.dom_pred(), rec.L, unit).ok());
    CHECK(point_property(PointPropertyKind::deflationary_on, rec.R.codom_pred(), rec.R, counit)
              .ok());
    // With coinciding reflexive middles the chain stays within the original
    // left relation.
    if (in.first.R == in.second.L) CHECK(rel_finer(rec.L, in.first.L));
  }
}

TEST_CASE("quotient composition matches the package construction") {
  CHECK(lifting_comparison_check(fx::quotient_c(), identity_fset_quotient()).verdict ==
        Verdict::pass);
  CHECK(lifting_comparison_check(fx::quotient_b(), fx::quotient_renaming()).verdict ==
        Verdict::pass);
  PartialQuotient idb = make_quotient(Rel::equality(fx::b2()), FunTable::identity(fx::b2()),
                                      FunTable::identity(fx::b2()));
  CHECK(lifting_comparison_check(idb, idb).verdict == Verdict::pass);

  // Gating: a broken first quotient is inapplicable.
  Rel partial = Rel::from_fn(fx::int5(), fx::nat3(), [](const Value& i, const Value& n) {
    return i.as_int() == n.as_int() && n.as_int() != 1;
  });
  PartialQuotient broken = make_quotient(partial, fx::to_nat(fx::int5(), fx::nat3()),
                                         fx::to_int(fx::nat3(), fx::int5()));
  CHECK(lifting_comparison_check(broken, fx::quotient_renaming()).verdict ==
        Verdict::inapplicable);
}
