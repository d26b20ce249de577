#include <doctest.h>

#include "fixtures_common.hpp"

using namespace transport;

namespace {

// Registry mirroring the paper-scale subtraction setup: integers {-2..2},
// naturals {0,1,2}, the registered base equivalence, order conditions and the
// clamped curried subtraction table.
Registry subtraction_registry() {
  Registry reg;
  CarrierRef ci = fx::int5();
  CarrierRef cn = fx::nat3();
  reg.carriers["Int5"] = ci;
  reg.carriers["Nat3"] = cn;
  reg.relations.emplace("Zpos", fx::zpos(ci));
  reg.conditions.emplace("geq", Rel::from_fn(ci, ci, [](const Value& a, const Value& b) {
                           return a.as_int() >= b.as_int();
                         }));
  reg.conditions.emplace("geqN", Rel::from_fn(cn, cn, [](const Value& a, const Value& b) {
                           return a.as_int() >= b.as_int();
                         }));
  reg = register_equivalence(std::move(reg), "int_nat", fx::fixture_b());

  FunSpace inner = FunSpace::enumerate(ci, ci, 1 << 20);
  FunTable sub = FunTable::from_fn(ci, inner.carrier, [&](const Value& a) {
    return encode_table(FunTable::from_fn(ci, ci, [&](const Value& b) {
      return fx::V(std::max<std::int64_t>(-2, std::min<std::int64_t>(2, a.as_int() - b.as_int())));
    }));
  });
  reg.functions.emplace("sub", NamedFunction{sub, {ci, ci}, ci});
  return reg;
}

Registry lists_registry() {
  Registry reg;
  reg.carriers["ListU"] = fx::list_carrier();
  reg.carriers["FsetU"] = fx::fset_carrier();
  reg.carriers["NatU"] = fx::natu();
  reg.relations.emplace("LFS_L", fx::lfs_left());
  reg = register_equivalence(std::move(reg), "lists_fsets", fx::fixture_c());
  reg.functions.emplace("max_list",
                        NamedFunction{fx::max_list(), {fx::list_carrier()}, fx::natu()});
  return reg;
}

const char* kSubGuardedL =
    "fun(i1 _: atom Zpos) -> fun(i2 _: atom Zpos if geq(i1,i2)) -> atom Zpos";
const char* kSubGuardedR =
    "fun(n1 _: eq Nat3) -> fun(n2 _: eq Nat3 if geqN(n1,n2)) -> eq Nat3";
const char* kSubPlainL = "fun(i1 _: atom Zpos) -> fun(i2 _: atom Zpos) -> atom Zpos";
const char* kSubPlainR = "fun(n1 _: eq Nat3) -> fun(n2 _: eq Nat3) -> eq Nat3";

}  // namespace

TEST_CASE("expression parsing") {
  for (const char* text :
       {"atom Zpos", "eq Nat3", "left int_nat", "right int_nat", kSubGuardedL, kSubGuardedR,
        "functor option(atom Zpos)", "functor product(eq Nat3, atom Zpos)",
        "compose(atom Zpos, eq Nat3)"}) {
    RelExprPtr e = parse_rel_expr(text);
    // The renderer is parseable again and stable.
    CHECK(parse_rel_expr(e->text())->text() == e->text());
  }
  CHECK_THROWS_AS(parse_rel_expr("fun(x: atom A) -> eq B"), ParseError);
  CHECK_THROWS_AS(parse_rel_expr("atom"), ParseError);
  CHECK_THROWS_AS(parse_rel_expr("compose(atom A)"), ParseError);
  CHECK_THROWS_AS(parse_rel_expr("atom A extra"), ParseError);
}

TEST_CASE("registration is restricted to PER equivalences") {
  Registry reg;
  reg = register_equivalence(std::move(reg), "b", fx::fixture_b());
  CHECK(reg.equivalences.count("b") == 1);
  CHECK_THROWS_AS(register_equivalence(reg, "b", fx::fixture_b()), Error);
  try {
    register_equivalence(reg, "e", fx::fixture_e());
    FAIL("expected rejection");
  } catch (const SideConditionError& err) {
    const CheckReport* leaf = err.report.first_failure();
    REQUIRE(leaf != nullptr);
    CHECK(leaf->property == "reverse_half_galois_left");
  }
}

TEST_CASE("elaboration resolves leaves against the registry") {
  Registry reg = subtraction_registry();
  // Atom/eq pair resolves to the registered record.
  Synthesized syn =
      elaborate(reg, parse_rel_expr("atom Zpos"), parse_rel_expr("eq Nat3"));
  REQUIRE(syn.ext);
  CHECK(syn.ext->L == fx::zpos(fx::int5()));
  // Explicit sides work as well.
  Synthesized syn2 =
      elaborate(reg, parse_rel_expr("left int_nat"), parse_rel_expr("right int_nat"));
  REQUIRE(syn2.ext);
  CHECK(syn2.ext->L == syn.ext->L);
  // Equal relations on both sides become identity transports when they are
  // PERs.
  Synthesized syn3 = elaborate(reg, parse_rel_expr("eq Nat3"), parse_rel_expr("eq Nat3"));
  REQUIRE(syn3.ext);
  CHECK(syn3.ext->l == FunTable::identity(fx::nat3()));
  // Unresolvable atoms and non-parallel shapes are reported.
  CHECK_THROWS_AS(elaborate(reg, parse_rel_expr("atom missing"), parse_rel_expr("eq Nat3")),
                  NotFound);
  CHECK_THROWS_AS(
      elaborate(reg, parse_rel_expr("atom Zpos"), parse_rel_expr("functor option(eq Nat3)")),
      SideConditionError);
}

TEST_CASE("elaborated functor and composition nodes match the direct constructions") {
  Registry reg = subtraction_registry();
  reg.carriers["Nat3P"] = fx::nat3_tagged();
  reg = register_equivalence(std::move(reg), "rename", fx::renaming());

  Synthesized opt = elaborate(reg, parse_rel_expr("functor option(atom Zpos)"),
                              parse_rel_expr("functor option(eq Nat3)"));
  REQUIRE(opt.ext);
  EquivalenceRecord direct = build_functor_closure(option_functor(), {fx::fixture_b()});
  CHECK(opt.ext->L == direct.L);
  CHECK(opt.ext->R == direct.R);
  CHECK(opt.ext->l == direct.l);

  // Determinism: a second elaboration yields pairwise identical records.
  Synthesized opt2 = elaborate(reg, parse_rel_expr("functor option(atom Zpos)"),
                               parse_rel_expr("functor option(eq Nat3)"));
  CHECK(opt2.ext->L == opt.ext->L);
  CHECK(opt2.ext->r == opt.ext->r);

  Synthesized comp = elaborate(reg, parse_rel_expr("compose(atom Zpos, eq Nat3)"),
                               parse_rel_expr("compose(eq Nat3, eq Nat3P)"));
  REQUIRE(comp.ext);
  EquivalenceRecord comp_direct = build_composition({fx::fixture_b(), fx::renaming()});
  CHECK(comp.ext->L == comp_direct.L);
  CHECK(comp.ext->l == comp_direct.l);
}

TEST_CASE("guarded subtraction transports to truncated subtraction") {
  Registry reg = subtraction_registry();
  TransportOutcome out = transport_term(reg, "sub", parse_rel_expr(kSubGuardedL),
                                        parse_rel_expr(kSubGuardedR));
  REQUIRE(out.ok);
  CHECK(out.in_dom.ok());
  CHECK(out.relatedness.ok());
  CHECK(out.similarity.ok());
  REQUIRE(out.term_out);
  // Correctness: the transported table computes to_nat(to_int n1 - to_int n2)
  // and tracks integer subtraction on all guarded carrier pairs.
  CarrierRef cn = fx::nat3();
  for (const Value& n1 : cn->elements())
    for (const Value& n2 : cn->elements()) {
      const Value inner = out.term_out->cons_args().at(*cn->index_of(n1));
      const Value got = inner.cons_args().at(*cn->index_of(n2));
      CHECK(got == fx::V(std::max<std::int64_t>(n1.as_int() - n2.as_int(), 0)));
    }
  // Determinism of the whole transport.
  TransportOutcome out2 = transport_term(reg, "sub", parse_rel_expr(kSubGuardedL),
                                         parse_rel_expr(kSubGuardedR));
  CHECK(*out2.term_out == *out.term_out);
}

TEST_CASE("dropping the guard is detected with the minimal witness") {
  Registry reg = subtraction_registry();
  TransportOutcome out =
      transport_term(reg, "sub", parse_rel_expr(kSubPlainL), parse_rel_expr(kSubPlainR));
  CHECK_FALSE(out.ok);
  CHECK(out.in_dom.failed());
  CHECK(out.in_dom.witness == ValueSeq{fx::V(0), fx::V(1)});
  CHECK_FALSE(out.term_out.has_value());
}

TEST_CASE("incoherent guards across the two sides are a side-condition failure") {
  Registry reg = subtraction_registry();
  CHECK_THROWS_AS(transport_term(reg, "sub", parse_rel_expr(kSubGuardedL),
                                 parse_rel_expr(kSubPlainR)),
                  SideConditionError);
}

TEST_CASE("max_list transports to the maximum over finite sets") {
  Registry reg = lists_registry();
  RelExprPtr lhs = parse_rel_expr("fun(xs ys: atom LFS_L) -> eq NatU");
  RelExprPtr rhs = parse_rel_expr("fun(s t: eq FsetU) -> eq NatU");
  TransportOutcome out = transport_term(reg, "max_list", lhs, rhs);
  REQUIRE(out.ok);
  CHECK(out.similarity.ok());
  CarrierRef fs = fx::fset_carrier();
  for (std::size_t j = 0; j < fs->size(); ++j) {
    std::int64_t best = 0;
    for (const Value& v : fs->at(j).cons_args()) best = std::max(best, v.as_int());
    CHECK(out.term_out->cons_args().at(j) == fx::V(best));
  }
  // The synthesized function space is far too large to materialize.
  CHECK_THROWS_AS(materialize_synthesized(*out.synthesized, kDefaultCap), CapExceeded);
}

TEST_CASE("value-level transport through a composition") {
  Registry reg = subtraction_registry();
  reg.carriers["Nat3P"] = fx::nat3_tagged();
  reg = register_equivalence(std::move(reg), "rename", fx::renaming());
  TransportOutcome out =
      transport_term(reg, "1", parse_rel_expr("compose(atom Zpos, eq Nat3)"),
                     parse_rel_expr("compose(eq Nat3, eq Nat3P)"));
  REQUIRE(out.ok);
  CHECK(*out.term_out == Value::cons("P", {fx::V(1)}));
  CHECK(out.similarity.ok());

  TransportOutcome bad =
      transport_term(reg, "-1", parse_rel_expr("compose(atom Zpos, eq Nat3)"),
                     parse_rel_expr("compose(eq Nat3, eq Nat3P)"));
  CHECK_FALSE(bad.ok);
  CHECK(bad.in_dom.failed());
}

TEST_CASE("synthesized function-space equivalences match the library closure") {
  // On the small world the subtraction-style expression is materializable and
  // must agree with the direct dependent closure build.
  Registry reg;
  reg.carriers["Int3"] = fx::int3();
  reg.carriers["Nat2"] = fx::nat2();
  reg.relations.emplace("Zpos3", fx::zpos(fx::int3()));
  reg.conditions.emplace("ge1", Rel::from_fn(fx::int3(), fx::int3(),
                                             [](const Value& a, const Value& b) {
                                               return a.as_int() >= 1 && a == b;
                                             }));
  reg.conditions.emplace("ge1N", Rel::from_fn(fx::nat2(), fx::nat2(),
                                              [](const Value& a, const Value& b) {
                                                return a.as_int() >= 1 && a == b;
                                              }));
  reg = register_equivalence(std::move(reg), "int_nat",
                             make_record(fx::zpos(fx::int3()), Rel::equality(fx::nat2()),
                                         fx::to_nat(fx::int3(), fx::nat2()),
                                         fx::to_int(fx::nat2(), fx::int3())));
  Synthesized syn = elaborate(
      reg, parse_rel_expr("fun(i j: atom Zpos3 if ge1(i,j)) -> atom Zpos3"),
      parse_rel_expr("fun(n m: eq Nat2 if ge1N(n,m)) -> eq Nat2"));
  EquivalenceRecord materialized = materialize_synthesized(syn, kDefaultCap);
  DepFunClosureOutput direct = build_dep_fun_closure(fx::fixture_d_input());
  CHECK(materialized.L.pair_count() == direct.record.L.pair_count());
  CHECK(materialized.L == direct.record.L);
  CHECK(materialized.R == direct.record.R);
  CHECK(materialized.l == direct.record.l);
  CHECK(galois_class_check(GaloisClass::per_equiv, materialized).ok());
}

TEST_CASE("counterexample search interface") {
  CHECK_THROWS_AS(counterexample_search("no_such_claim", "none", 2), NotFound);
  CHECK_THROWS_AS(counterexample_search("composition_closure", "reflexivity", 2), NotFound);
  CHECK_THROWS_AS(counterexample_search("composition_closure", "none", 9), Error);

  CheckReport sweep = counterexample_search("depfun_closure", "none", 2);
  CHECK(sweep.property == "search_exhausted");

  CheckReport guard = counterexample_search("guarded_subtraction", "guard", 2);
  CHECK(guard.property == "counterexample_found");
  CHECK(guard.witness == ValueSeq{fx::V(0), fx::V(1)});

  CheckReport intact = counterexample_search("guarded_subtraction", "none", 2);
  CHECK(intact.property == "search_exhausted");
}
