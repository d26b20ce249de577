#pragma once

#include <functional>
#include <map>
#include <set>
#include <utility>

#include "transport/report.hpp"
#include "transport/value.hpp"

namespace transport {

/// Subset of a carrier.
class Pred {
 public:
  static Pred full(CarrierRef c);
  static Pred none(CarrierRef c);
  static Pred of(CarrierRef c, const ValueSeq& members);
  static Pred from_fn(CarrierRef c, const std::function<bool(const Value&)>& fn);

  const CarrierRef& carrier() const { return carrier_; }
  bool contains_index(std::size_t i) const { return member_.at(i); }
  bool contains(const Value& v) const;
  ValueSeq members() const;

 private:
  Pred(CarrierRef c, std::vector<bool> member)
      : carrier_(std::move(c)), member_(std::move(member)) {}
  CarrierRef carrier_;
  std::vector<bool> member_;
};

/// Extensional binary relation between two carriers. Pairs iterate in
/// canonical order (left element ascending, then right).
class Rel {
 public:
  using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

  Rel(CarrierRef left, CarrierRef right) : left_(std::move(left)), right_(std::move(right)) {}

  static Rel empty(CarrierRef left, CarrierRef right) { return Rel(std::move(left), std::move(right)); }
  static Rel full(CarrierRef left, CarrierRef right);
  static Rel equality(const CarrierRef& c);
  static Rel from_pairs(CarrierRef left, CarrierRef right,
                        const std::vector<std::pair<Value, Value>>& pairs);
  static Rel from_fn(CarrierRef left, CarrierRef right,
                     const std::function<bool(const Value&, const Value&)>& fn);

  const CarrierRef& left() const { return left_; }
  const CarrierRef& right() const { return right_; }

  void add_index(std::size_t i, std::size_t j);
  void add(const Value& x, const Value& y);

  bool contains_index(std::size_t i, std::size_t j) const {
    return pairs_.count({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}) != 0;
  }
  bool contains(const Value& x, const Value& y) const;

  std::size_t pair_count() const { return pairs_.size(); }
  const std::set<IndexPair>& pair_indices() const { return pairs_; }
  std::vector<std::pair<Value, Value>> pairs() const;

  bool in_dom_index(std::size_t i) const;
  bool in_codom_index(std::size_t j) const;
  bool in_dom(const Value& x) const { return in_dom_index(left_->index_or_throw(x)); }
  bool in_codom(const Value& y) const { return in_codom_index(right_->index_or_throw(y)); }
  bool in_field(const Value& x) const;

  Pred dom_pred() const;
  Pred codom_pred() const;
  /// in_dom ∨ in_codom; requires left and right carriers to coincide.
  Pred field_pred() const;

  bool operator==(const Rel& o) const;

 private:
  CarrierRef left_, right_;
  std::set<IndexPair> pairs_;
};

Rel rel_inverse(const Rel& r);
Rel rel_compose(const Rel& r, const Rel& s);
bool rel_finer(const Rel& r, const Rel& s);
CheckReport rel_finer_report(std::string prop, const Rel& r, const Rel& s);
/// Extensional equality both ways, witnessing the first pair in the
/// symmetric difference.
CheckReport rel_equal_report(std::string prop, const Rel& a, const Rel& b);
/// rel_if B S: S when B holds, the full relation otherwise (vacuous implication).
Rel rel_if(bool cond, const Rel& s);
/// Restricted equality =_S: {(x,x) | x in S}.
Rel restricted_eq(const Pred& s);

enum class MembershipKind { in_dom, in_codom, in_field };
bool rel_membership(MembershipKind kind, const Rel& r, const Value& x);

enum class OrderPropertyKind { reflexive_on, transitive_on, symmetric_on, preorder_on, per_on };
/// Relativised order properties; unrelativised forms use the full-carrier Pred.
CheckReport order_property(OrderPropertyKind kind, const Pred& p, const Rel& r);

enum class PointPropertyKind { inflationary_on, deflationary_on, rel_equivalence_on };
CheckReport point_property(PointPropertyKind kind, const Pred& p, const Rel& r, const FunTable& f);

/// Relation family indexed by a pair of parameter values; parameter pairs
/// without an explicit case fall back to the default (empty unless stated).
class DepRel {
 public:
  DepRel(CarrierRef param1, CarrierRef param2, Rel default_rel);

  static DepRel constant(CarrierRef param1, CarrierRef param2, Rel r);
  static DepRel from_fn(CarrierRef param1, CarrierRef param2,
                        const std::function<Rel(const Value&, const Value&)>& fn);

  const CarrierRef& param1() const { return param1_; }
  const CarrierRef& param2() const { return param2_; }
  const CarrierRef& base_left() const { return default_.left(); }
  const CarrierRef& base_right() const { return default_.right(); }

  void set_case(const Value& x, const Value& y, Rel r);
  const Rel& at_index(std::size_t i, std::size_t j) const;
  const Rel& at(const Value& x, const Value& y) const;

 private:
  CarrierRef param1_, param2_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Rel> cases_;
  Rel default_;
};

/// Function-table family indexed by a pair of parameter values.
class DepFunTable {
 public:
  DepFunTable(CarrierRef param1, CarrierRef param2, FunTable default_table);

  static DepFunTable constant(CarrierRef param1, CarrierRef param2, FunTable f);
  static DepFunTable from_fn(CarrierRef param1, CarrierRef param2,
                             const std::function<FunTable(const Value&, const Value&)>& fn);

  const CarrierRef& param1() const { return param1_; }
  const CarrierRef& param2() const { return param2_; }
  const CarrierRef& dom() const { return default_.dom(); }
  const CarrierRef& cod() const { return default_.cod(); }

  void set_case(const Value& x, const Value& y, FunTable f);
  const FunTable& at_index(std::size_t i, std::size_t j) const;
  const FunTable& at(const Value& x, const Value& y) const;

 private:
  CarrierRef param1_, param2_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, FunTable> cases_;
  FunTable default_;
};

/// Relator kinds: plain relates f,g pointwise over related inputs; mono_fun is
/// the plain relator applied to f,f; mono_relator additionally requires both
/// functions monotone.
enum class RelatorKind { plain, mono_fun, mono_relator };

CheckReport dep_fun_relator_report(RelatorKind kind, const Rel& r1, const DepRel& s,
                                   const FunTable& f, const FunTable& g);
bool dep_fun_relator(RelatorKind kind, const Rel& r1, const DepRel& s, const FunTable& f,
                     const FunTable& g);

/// Dependent function mapper: result(x) = g(f x)(h(f x)), with g indexed by
/// the outputs of f.
FunTable dep_fun_map(const FunTable& f, const std::function<FunTable(const Value&)>& g,
                     const FunTable& h);

/// An enumerated function space together with its encoded carrier.
struct FunSpace {
  CarrierRef dom, cod;
  std::vector<FunTable> tables;  // canonical order, parallel to carrier elements
  CarrierRef carrier;            // encoded fn(...) values

  static FunSpace enumerate(const CarrierRef& dom, const CarrierRef& cod, std::size_t cap);
  const FunTable& table_for(const Value& encoded) const;
};

/// Reifies a relator over enumerated function spaces as an extensional Rel
/// between the encoded carriers. Errors when |space_l|*|space_r| exceeds cap.
Rel materialize_relator(RelatorKind kind, const Rel& r1, const DepRel& s, const FunSpace& space_l,
                        const FunSpace& space_r, std::size_t cap);

}  // namespace transport
