#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "transport/errors.hpp"

namespace transport {

inline constexpr std::size_t kDefaultListBound = 3;
inline constexpr std::size_t kDefaultCap = 4096;

class Value;
using ValueSeq = std::vector<Value>;

/// Closed first-order datum. Carriers, relations and function tables are all
/// built from these; functions never appear as values except through the
/// explicit table encoding (see encode_table).
class Value {
 public:
  struct Tuple {
    ValueSeq items;
  };
  struct List {
    ValueSeq items;
  };
  struct Cons {
    std::string name;
    ValueSeq args;
  };

  Value() : data_(std::int64_t{0}) {}

  static Value integer(std::int64_t v) { return Value(Data(v)); }
  static Value boolean(bool v) { return Value(Data(v)); }
  static Value tuple(ValueSeq items);
  static Value list(ValueSeq items) { return Value(Data(List{std::move(items)})); }
  static Value cons(std::string name, ValueSeq args = {}) {
    return Value(Data(Cons{std::move(name), std::move(args)}));
  }

  bool is_int() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_bool() const { return std::holds_alternative<bool>(data_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(data_); }
  bool is_list() const { return std::holds_alternative<List>(data_); }
  bool is_cons() const { return std::holds_alternative<Cons>(data_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  bool as_bool() const { return std::get<bool>(data_); }
  const ValueSeq& tuple_items() const { return std::get<Tuple>(data_).items; }
  const ValueSeq& list_items() const { return std::get<List>(data_).items; }
  const std::string& cons_name() const { return std::get<Cons>(data_).name; }
  const ValueSeq& cons_args() const { return std::get<Cons>(data_).args; }

  /// Canonical text form; parse_value round-trips it.
  std::string str() const;

 private:
  using Data = std::variant<std::int64_t, bool, Tuple, List, Cons>;
  explicit Value(Data d) : data_(std::move(d)) {}
  Data data_;

  friend int compare_values(const Value& a, const Value& b);
};

/// Strict total order: -1, 0, 1. Tag rank Int < Bool < Tuple < List < Cons,
/// then lexicographic recursion. Drives all enumeration and witness minimality.
int compare_values(const Value& a, const Value& b);

inline bool operator==(const Value& a, const Value& b) { return compare_values(a, b) == 0; }
inline bool operator!=(const Value& a, const Value& b) { return compare_values(a, b) != 0; }
inline bool operator<(const Value& a, const Value& b) { return compare_values(a, b) < 0; }

std::ostream& operator<<(std::ostream& os, const Value& v);

/// Parses the value grammar:
///   INT | true | false | '(' v ',' v [',' v]* ')' | '[' [v (',' v)*] ']'
///   | IDENT '(' [v (',' v)*] ')'
/// Rejects list literals longer than list_bound.
Value parse_value(std::string_view text, std::size_t list_bound = kDefaultListBound);

/// Finite ordered set of values. Immutable after construction; elements are
/// sorted canonically and duplicate-free.
class Carrier {
 public:
  Carrier(std::string name, ValueSeq elements);

  const std::string& name() const { return name_; }
  const ValueSeq& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Value& at(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> index_of(const Value& v) const;
  bool contains(const Value& v) const { return index_of(v).has_value(); }
  /// index_of that throws CarrierMismatch when absent.
  std::size_t index_or_throw(const Value& v) const;

 private:
  std::string name_;
  ValueSeq elements_;
};

using CarrierRef = std::shared_ptr<const Carrier>;

CarrierRef make_carrier(std::string name, ValueSeq elements);

/// Carriers compare by content, not identity: independently built function
/// spaces must be interchangeable.
bool same_carrier(const Carrier& a, const Carrier& b);
inline bool same_carrier(const CarrierRef& a, const CarrierRef& b) {
  return a == b || same_carrier(*a, *b);
}

/// Total function between carriers, stored extensionally as an index table.
class FunTable {
 public:
  FunTable(CarrierRef dom, CarrierRef cod, std::vector<std::uint32_t> out);

  static FunTable identity(const CarrierRef& c);
  static FunTable constant(const CarrierRef& dom, const CarrierRef& cod, const Value& out);
  static FunTable from_fn(const CarrierRef& dom, const CarrierRef& cod,
                          const std::function<Value(const Value&)>& fn);
  static FunTable from_pairs(const CarrierRef& dom, const CarrierRef& cod,
                             const std::vector<std::pair<Value, Value>>& pairs);

  const CarrierRef& dom() const { return dom_; }
  const CarrierRef& cod() const { return cod_; }

  std::size_t apply_index(std::size_t i) const { return out_.at(i); }
  const Value& apply(const Value& v) const;

  /// this∘inner: (this.after(inner))(x) = this(inner(x)).
  FunTable after(const FunTable& inner) const;

  bool operator==(const FunTable& o) const;

 private:
  CarrierRef dom_, cod_;
  std::vector<std::uint32_t> out_;
};

/// |cod|^|dom| saturated at cap+1 so callers can compare against cap.
std::size_t fun_space_size(std::size_t dom, std::size_t cod, std::size_t cap);

/// All total tables dom -> cod in canonical order (the order of their
/// encodings under encode_table). Errors with the exact count when
/// |cod|^|dom| exceeds cap.
std::vector<FunTable> enumerate_fun_tables(const CarrierRef& dom, const CarrierRef& cod,
                                           std::size_t cap);

/// A table encoded as a value: fn(out_0, ..., out_{n-1}) with outputs listed
/// in dom order. This is how function-space carriers hold their elements.
Value encode_table(const FunTable& t);
FunTable decode_table(const Value& v, const CarrierRef& dom, const CarrierRef& cod);

}  // namespace transport
