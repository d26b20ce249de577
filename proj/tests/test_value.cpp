#include <doctest.h>

#include "fixtures_common.hpp"

using namespace transport;

TEST_CASE("value parsing round-trips the canonical printer") {
  for (const char* text :
       {"3", "-2", "true", "false", "[0,1]", "[]", "(1,2)", "(1,2,3)", "Fset(0,1)", "None()",
        "Some([0,1])", "fn(0,1,2)", "P(2)"}) {
    const Value v = parse_value(text);
    CHECK(parse_value(v.str()) == v);
  }
  CHECK(parse_value("3") == Value::integer(3));
  CHECK(parse_value("[0,1]") == Value::list({fx::V(0), fx::V(1)}));
  CHECK(parse_value(" [ 0 , 1 ] ") == Value::list({fx::V(0), fx::V(1)}));
}

TEST_CASE("value parsing rejects grammar violations") {
  CHECK_THROWS_AS(parse_value("Fset({0,1})"), ParseError);  // braces are not in the grammar
  CHECK_THROWS_AS(parse_value("(3)"), ParseError);          // tuples need two components
  CHECK_THROWS_AS(parse_value("[0,1,2,0]"), ParseError);    // list bound (default 3)
  CHECK_THROWS_AS(parse_value("fset"), ParseError);         // bare identifier
  CHECK_THROWS_AS(parse_value("1 2"), ParseError);          // trailing input
  CHECK_THROWS_AS(parse_value(""), ParseError);
  try {
    parse_value("[0,@]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
  CHECK_NOTHROW(parse_value("[0,1,2,0]", 4));
}

TEST_CASE("compare_values orders by tag rank then lexicographically") {
  CHECK(compare_values(fx::V(0), fx::V(1)) < 0);
  CHECK(compare_values(fx::V(2), fx::VB(true)) < 0);  // Int before Bool
  CHECK(compare_values(Value::list({fx::V(0)}), Value::list({fx::V(0), fx::V(1)})) < 0);
  CHECK(compare_values(fx::VB(true), Value::tuple({fx::V(0), fx::V(0)})) < 0);
  CHECK(compare_values(Value::list({}), Value::cons("A")) < 0);
  CHECK(compare_values(Value::cons("A", {fx::V(1)}), Value::cons("B", {fx::V(0)})) < 0);
}

namespace {

std::vector<Value> sample_values() {
  return {fx::V(-2),
          fx::V(0),
          fx::V(3),
          fx::VB(false),
          fx::VB(true),
          Value::list({}),
          Value::list({fx::V(1)}),
          Value::list({fx::V(0), fx::V(1)}),
          Value::tuple({fx::V(0), fx::V(1)}),
          Value::tuple({fx::V(1), fx::V(0)}),
          Value::cons("Fset"),
          Value::cons("Fset", {fx::V(0)}),
          Value::cons("Some", {fx::V(2)}),
          Value::cons("P", {Value::list({fx::V(2)})})};
}

}  // namespace

TEST_CASE("compare_values is a strict total order on a sample universe") {
  const auto vs = sample_values();
  for (const Value& a : vs)
    for (const Value& b : vs) {
      const int ab = compare_values(a, b);
      const int ba = compare_values(b, a);
      CHECK(ab == -ba);
      CHECK((ab == 0) == (a == b));
      for (const Value& c : vs) {
        if (ab < 0 && compare_values(b, c) < 0) CHECK(compare_values(a, c) < 0);
      }
    }
}

TEST_CASE("carriers sort and deduplicate") {
  CarrierRef c = make_carrier("C", {fx::V(2), fx::V(0), fx::V(1)});
  CHECK(c->at(0) == fx::V(0));
  CHECK(c->at(2) == fx::V(2));
  CHECK(c->index_of(fx::V(1)) == 1);
  CHECK_FALSE(c->index_of(fx::V(9)).has_value());
  CHECK_THROWS_AS(make_carrier("D", {fx::V(0), fx::V(0)}), Error);
}

TEST_CASE("enumerate_fun_tables counts and caps") {
  CarrierRef two = make_carrier("Two", {fx::V(0), fx::V(1)});
  CarrierRef one = make_carrier("One", {fx::V(0)});
  CarrierRef three = make_carrier("Three", {fx::V(0), fx::V(1), fx::V(2)});

  CHECK(enumerate_fun_tables(two, one, 10).size() == 1);
  CHECK(enumerate_fun_tables(two, two, 10).size() == 4);
  CHECK_THROWS_AS(enumerate_fun_tables(three, three, 10), CapExceeded);
  try {
    enumerate_fun_tables(three, three, 10);
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("3^3") != std::string::npos);
  }
}

TEST_CASE("enumeration is exhaustive, total and canonically ordered") {
  // All carrier pairs with |cod|^|dom| <= 256.
  std::vector<CarrierRef> carriers = {make_carrier("A1", {fx::V(0)}),
                                      make_carrier("A2", {fx::V(0), fx::V(1)}),
                                      make_carrier("A3", {fx::V(0), fx::V(1), fx::V(2)}),
                                      make_carrier("A4", {fx::V(0), fx::V(1), fx::V(2), fx::V(3)})};
  for (const auto& dom : carriers)
    for (const auto& cod : carriers) {
      if (fun_space_size(dom->size(), cod->size(), 256) > 256) continue;
      auto tables = enumerate_fun_tables(dom, cod, 256);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < dom->size(); ++i) expected *= cod->size();
      CHECK(tables.size() == expected);
      std::set<std::string> seen;
      Value prev;
      for (std::size_t i = 0; i < tables.size(); ++i) {
        const Value enc = encode_table(tables[i]);
        CHECK(seen.insert(enc.str()).second);  // distinct
        if (i > 0) CHECK(compare_values(prev, enc) < 0);
        prev = enc;
        for (const Value& x : dom->elements()) CHECK(cod->contains(tables[i].apply(x)));
      }
    }
}

TEST_CASE("table encode/decode and composition") {
  CarrierRef two = make_carrier("Two", {fx::V(0), fx::V(1)});
  FunTable swap = FunTable::from_pairs(two, two, {{fx::V(0), fx::V(1)}, {fx::V(1), fx::V(0)}});
  CHECK(decode_table(encode_table(swap), two, two) == swap);
  CHECK(swap.after(swap) == FunTable::identity(two));
  CHECK_THROWS_AS(FunTable::from_pairs(two, two, {{fx::V(0), fx::V(1)}}), Error);
  CHECK_THROWS_AS(decode_table(fx::V(3), two, two), Error);
}
