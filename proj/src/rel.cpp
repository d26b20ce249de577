#include "transport/rel.hpp"

#include <algorithm>

namespace transport {

Pred Pred::full(CarrierRef c) {
  std::vector<bool> m(c->size(), true);
  return Pred(std::move(c), std::move(m));
}

Pred Pred::none(CarrierRef c) {
  std::vector<bool> m(c->size(), false);
  return Pred(std::move(c), std::move(m));
}

Pred Pred::of(CarrierRef c, const ValueSeq& members) {
  std::vector<bool> m(c->size(), false);
  for (const Value& v : members) m[c->index_or_throw(v)] = true;
  return Pred(std::move(c), std::move(m));
}

Pred Pred::from_fn(CarrierRef c, const std::function<bool(const Value&)>& fn) {
  std::vector<bool> m(c->size(), false);
  for (std::size_t i = 0; i < c->size(); ++i) m[i] = fn(c->at(i));
  return Pred(std::move(c), std::move(m));
}

bool Pred::contains(const Value& v) const {
  return member_.at(carrier_->index_or_throw(v));
}

ValueSeq Pred::members() const {
  ValueSeq out;
  for (std::size_t i = 0; i < member_.size(); ++i)
    if (member_[i]) out.push_back(carrier_->at(i));
  return out;
}

Rel Rel::full(CarrierRef left, CarrierRef right) {
  Rel r(left, right);
  for (std::size_t i = 0; i < left->size(); ++i)
    for (std::size_t j = 0; j < right->size(); ++j) r.add_index(i, j);
  return r;
}

Rel Rel::equality(const CarrierRef& c) {
  Rel r(c, c);
  for (std::size_t i = 0; i < c->size(); ++i) r.add_index(i, i);
  return r;
}

Rel Rel::from_pairs(CarrierRef left, CarrierRef right,
                    const std::vector<std::pair<Value, Value>>& pairs) {
  Rel r(std::move(left), std::move(right));
  for (const auto& [x, y] : pairs) r.add(x, y);
  return r;
}

Rel Rel::from_fn(CarrierRef left, CarrierRef right,
                 const std::function<bool(const Value&, const Value&)>& fn) {
  Rel r(left, right);
  for (std::size_t i = 0; i < left->size(); ++i)
    for (std::size_t j = 0; j < right->size(); ++j)
      if (fn(left->at(i), right->at(j))) r.add_index(i, j);
  return r;
}

void Rel::add_index(std::size_t i, std::size_t j) {
  if (i >= left_->size() || j >= right_->size()) throw CarrierMismatch("pair outside carriers");
  pairs_.insert({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
}

void Rel::add(const Value& x, const Value& y) {
  add_index(left_->index_or_throw(x), right_->index_or_throw(y));
}

bool Rel::contains(const Value& x, const Value& y) const {
  auto i = left_->index_of(x);
  auto j = right_->index_of(y);
  if (!i || !j) return false;
  return contains_index(*i, *j);
}

std::vector<std::pair<Value, Value>> Rel::pairs() const {
  std::vector<std::pair<Value, Value>> out;
  out.reserve(pairs_.size());
  for (const auto& [i, j] : pairs_) out.emplace_back(left_->at(i), right_->at(j));
  return out;
}

bool Rel::in_dom_index(std::size_t i) const {
  auto it = pairs_.lower_bound({static_cast<std::uint32_t>(i), 0});
  return it != pairs_.end() && it->first == i;
}

bool Rel::in_codom_index(std::size_t j) const {
  for (const auto& [i, jj] : pairs_)
    if (jj == j) return true;
  return false;
}

bool Rel::in_field(const Value& x) const {
  if (!same_carrier(left_, right_))
    throw CarrierMismatch("in_field requires a relation on one carrier");
  return in_dom(x) || in_codom(x);
}

Pred Rel::dom_pred() const {
  return Pred::from_fn(left_, [this](const Value& v) { return in_dom(v); });
}

Pred Rel::codom_pred() const {
  std::vector<bool> m(right_->size(), false);
  for (const auto& [i, j] : pairs_) m[j] = true;
  return Pred::from_fn(right_, [&m, this](const Value& v) { return m[right_->index_or_throw(v)]; });
}

Pred Rel::field_pred() const {
  if (!same_carrier(left_, right_))
    throw CarrierMismatch("field requires a relation on one carrier");
  std::vector<bool> m(left_->size(), false);
  for (const auto& [i, j] : pairs_) {
    m[i] = true;
    m[j] = true;
  }
  CarrierRef c = left_;
  return Pred::from_fn(c, [&m, &c](const Value& v) { return m[c->index_or_throw(v)]; });
}

bool Rel::operator==(const Rel& o) const {
  return same_carrier(left_, o.left_) && same_carrier(right_, o.right_) && pairs_ == o.pairs_;
}

Rel rel_inverse(const Rel& r) {
  Rel out(r.right(), r.left());
  for (const auto& [i, j] : r.pair_indices()) out.add_index(j, i);
  return out;
}

Rel rel_compose(const Rel& r, const Rel& s) {
  if (!same_carrier(r.right(), s.left()))
    throw CarrierMismatch("composition mismatch: " + r.right()->name() + " vs " +
                          s.left()->name());
  // Index s by left element for the existential.
  std::vector<std::vector<std::uint32_t>> succ(s.left()->size());
  for (const auto& [z, y] : s.pair_indices()) succ[z].push_back(y);
  Rel out(r.left(), s.right());
  for (const auto& [x, z] : r.pair_indices())
    for (auto y : succ[z]) out.add_index(x, y);
  return out;
}

bool rel_finer(const Rel& r, const Rel& s) {
  return rel_finer_report("finer", r, s).ok();
}

CheckReport rel_finer_report(std::string prop, const Rel& r, const Rel& s) {
  if (!same_carrier(r.left(), s.left()) || !same_carrier(r.right(), s.right()))
    throw CarrierMismatch("finer-than requires matching carriers");
  for (const auto& [i, j] : r.pair_indices()) {
    if (!s.contains_index(i, j))
      return CheckReport::failure(std::move(prop), {r.left()->at(i), r.right()->at(j)});
  }
  return CheckReport::passed(std::move(prop));
}

CheckReport rel_equal_report(std::string prop, const Rel& a, const Rel& b) {
  CheckReport fwd = rel_finer_report(prop + "_extra_pair", a, b);
  if (fwd.failed()) return fwd;
  CheckReport bwd = rel_finer_report(prop + "_missing_pair", b, a);
  if (bwd.failed()) return bwd;
  return CheckReport::passed(std::move(prop));
}

Rel rel_if(bool cond, const Rel& s) {
  return cond ? s : Rel::full(s.left(), s.right());
}

Rel restricted_eq(const Pred& s) {
  Rel r(s.carrier(), s.carrier());
  for (std::size_t i = 0; i < s.carrier()->size(); ++i)
    if (s.contains_index(i)) r.add_index(i, i);
  return r;
}

bool rel_membership(MembershipKind kind, const Rel& r, const Value& x) {
  switch (kind) {
    case MembershipKind::in_dom: return r.in_dom(x);
    case MembershipKind::in_codom: return r.in_codom(x);
    case MembershipKind::in_field: return r.in_field(x);
  }
  throw Error("bad membership kind");
}

namespace {

void require_endorelation(const Pred& p, const Rel& r) {
  if (!same_carrier(r.left(), r.right()) || !same_carrier(p.carrier(), r.left()))
    throw CarrierMismatch("order property requires a relation on the predicate's carrier");
}

CheckReport check_reflexive_on(const Pred& p, const Rel& r) {
  const std::size_t n = p.carrier()->size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p.contains_index(i) && !r.contains_index(i, i))
      return CheckReport::failure("reflexive_on", {p.carrier()->at(i)});
  }
  return CheckReport::passed("reflexive_on");
}

CheckReport check_transitive_on(const Pred& p, const Rel& r) {
  const std::size_t n = p.carrier()->size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.contains_index(i)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.contains_index(j) || !r.contains_index(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!p.contains_index(k) || !r.contains_index(j, k)) continue;
        if (!r.contains_index(i, k))
          return CheckReport::failure(
              "transitive_on", {p.carrier()->at(i), p.carrier()->at(j), p.carrier()->at(k)});
      }
    }
  }
  return CheckReport::passed("transitive_on");
}

CheckReport check_symmetric_on(const Pred& p, const Rel& r) {
  const std::size_t n = p.carrier()->size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.contains_index(i)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.contains_index(j) || !r.contains_index(i, j)) continue;
      if (!r.contains_index(j, i))
        return CheckReport::failure("symmetric_on", {p.carrier()->at(i), p.carrier()->at(j)});
    }
  }
  return CheckReport::passed("symmetric_on");
}

}  // namespace

CheckReport order_property(OrderPropertyKind kind, const Pred& p, const Rel& r) {
  require_endorelation(p, r);
  switch (kind) {
    case OrderPropertyKind::reflexive_on: return check_reflexive_on(p, r);
    case OrderPropertyKind::transitive_on: return check_transitive_on(p, r);
    case OrderPropertyKind::symmetric_on: return check_symmetric_on(p, r);
    case OrderPropertyKind::preorder_on:
      return CheckReport::all_of("preorder_on",
                                 {check_transitive_on(p, r), check_reflexive_on(p, r)});
    case OrderPropertyKind::per_on:
      return CheckReport::all_of("partial_equivalence_rel_on",
                                 {check_transitive_on(p, r), check_symmetric_on(p, r)});
  }
  throw Error("bad order property kind");
}

CheckReport point_property(PointPropertyKind kind, const Pred& p, const Rel& r,
                           const FunTable& f) {
  require_endorelation(p, r);
  if (!same_carrier(f.dom(), p.carrier()) || !same_carrier(f.cod(), p.carrier()))
    throw CarrierMismatch("point property requires an endofunction on the predicate's carrier");
  auto inflationary = [&]() -> CheckReport {
    for (std::size_t i = 0; i < p.carrier()->size(); ++i) {
      if (p.contains_index(i) && !r.contains_index(i, f.apply_index(i)))
        return CheckReport::failure("inflationary_on", {p.carrier()->at(i)});
    }
    return CheckReport::passed("inflationary_on");
  };
  auto deflationary = [&]() -> CheckReport {
    for (std::size_t i = 0; i < p.carrier()->size(); ++i) {
      if (p.contains_index(i) && !r.contains_index(f.apply_index(i), i))
        return CheckReport::failure("deflationary_on", {p.carrier()->at(i)});
    }
    return CheckReport::passed("deflationary_on");
  };
  switch (kind) {
    case PointPropertyKind::inflationary_on: return inflationary();
    case PointPropertyKind::deflationary_on: return deflationary();
    case PointPropertyKind::rel_equivalence_on:
      return CheckReport::all_of("rel_equivalence_on", {inflationary(), deflationary()});
  }
  throw Error("bad point property kind");
}

DepRel::DepRel(CarrierRef param1, CarrierRef param2, Rel default_rel)
    : param1_(std::move(param1)), param2_(std::move(param2)), default_(std::move(default_rel)) {}

DepRel DepRel::constant(CarrierRef param1, CarrierRef param2, Rel r) {
  return DepRel(std::move(param1), std::move(param2), std::move(r));
}

DepRel DepRel::from_fn(CarrierRef param1, CarrierRef param2,
                       const std::function<Rel(const Value&, const Value&)>& fn) {
  if (param1->size() == 0 || param2->size() == 0)
    throw WiringError("dependent relation needs nonempty parameter carriers");
  Rel first = fn(param1->at(0), param2->at(0));
  DepRel d(param1, param2, Rel::empty(first.left(), first.right()));
  for (std::size_t i = 0; i < param1->size(); ++i)
    for (std::size_t j = 0; j < param2->size(); ++j)
      d.set_case(param1->at(i), param2->at(j), fn(param1->at(i), param2->at(j)));
  return d;
}

void DepRel::set_case(const Value& x, const Value& y, Rel r) {
  if (!same_carrier(r.left(), base_left()) || !same_carrier(r.right(), base_right()))
    throw WiringError("dependent relation case has mismatched base carriers");
  cases_.insert_or_assign({static_cast<std::uint32_t>(param1_->index_or_throw(x)),
                           static_cast<std::uint32_t>(param2_->index_or_throw(y))},
                          std::move(r));
}

const Rel& DepRel::at_index(std::size_t i, std::size_t j) const {
  auto it = cases_.find({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  return it == cases_.end() ? default_ : it->second;
}

const Rel& DepRel::at(const Value& x, const Value& y) const {
  return at_index(param1_->index_or_throw(x), param2_->index_or_throw(y));
}

DepFunTable::DepFunTable(CarrierRef param1, CarrierRef param2, FunTable default_table)
    : param1_(std::move(param1)), param2_(std::move(param2)), default_(std::move(default_table)) {}

DepFunTable DepFunTable::constant(CarrierRef param1, CarrierRef param2, FunTable f) {
  return DepFunTable(std::move(param1), std::move(param2), std::move(f));
}

DepFunTable DepFunTable::from_fn(CarrierRef param1, CarrierRef param2,
                                 const std::function<FunTable(const Value&, const Value&)>& fn) {
  if (param1->size() == 0 || param2->size() == 0)
    throw WiringError("dependent table needs nonempty parameter carriers");
  DepFunTable d(param1, param2, fn(param1->at(0), param2->at(0)));
  for (std::size_t i = 0; i < param1->size(); ++i)
    for (std::size_t j = 0; j < param2->size(); ++j)
      d.set_case(param1->at(i), param2->at(j), fn(param1->at(i), param2->at(j)));
  return d;
}

void DepFunTable::set_case(const Value& x, const Value& y, FunTable f) {
  if (!same_carrier(f.dom(), dom()) || !same_carrier(f.cod(), cod()))
    throw WiringError("dependent table case has mismatched carriers");
  cases_.insert_or_assign({static_cast<std::uint32_t>(param1_->index_or_throw(x)),
                           static_cast<std::uint32_t>(param2_->index_or_throw(y))},
                          std::move(f));
}

const FunTable& DepFunTable::at_index(std::size_t i, std::size_t j) const {
  auto it = cases_.find({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  return it == cases_.end() ? default_ : it->second;
}

const FunTable& DepFunTable::at(const Value& x, const Value& y) const {
  return at_index(param1_->index_or_throw(x), param2_->index_or_throw(y));
}

namespace {

CheckReport plain_relator(const Rel& r1, const DepRel& s, const FunTable& f, const FunTable& g,
                          const char* prop) {
  if (!same_carrier(f.dom(), r1.left()) || !same_carrier(g.dom(), r1.right()))
    throw CarrierMismatch("relator input carriers do not match the domain relation");
  if (!same_carrier(s.param1(), r1.left()) || !same_carrier(s.param2(), r1.right()))
    throw CarrierMismatch("dependent relation parameters do not match the domain relation");
  if (!same_carrier(s.base_left(), f.cod()) || !same_carrier(s.base_right(), g.cod()))
    throw CarrierMismatch("dependent relation bases do not match the function codomains");
  for (const auto& [i, j] : r1.pair_indices()) {
    const Rel& c = s.at_index(i, j);
    if (!c.contains_index(f.apply_index(i), g.apply_index(j)))
      return CheckReport::failure(prop, {r1.left()->at(i), r1.right()->at(j)});
  }
  return CheckReport::passed(prop);
}

}  // namespace

CheckReport dep_fun_relator_report(RelatorKind kind, const Rel& r1, const DepRel& s,
                                   const FunTable& f, const FunTable& g) {
  switch (kind) {
    case RelatorKind::plain: return plain_relator(r1, s, f, g, "dep_fun_relator");
    case RelatorKind::mono_fun: return plain_relator(r1, s, f, f, "dep_fun_mono");
    case RelatorKind::mono_relator:
      return CheckReport::all_of("mono_dep_fun_relator",
                                 {plain_relator(r1, s, f, g, "dep_fun_relator"),
                                  plain_relator(r1, s, f, f, "dep_fun_mono_left"),
                                  plain_relator(r1, s, g, g, "dep_fun_mono_right")});
  }
  throw Error("bad relator kind");
}

bool dep_fun_relator(RelatorKind kind, const Rel& r1, const DepRel& s, const FunTable& f,
                     const FunTable& g) {
  return dep_fun_relator_report(kind, r1, s, f, g).ok();
}

FunTable dep_fun_map(const FunTable& f, const std::function<FunTable(const Value&)>& g,
                     const FunTable& h) {
  if (!same_carrier(h.dom(), f.cod()))
    throw CarrierMismatch("mapper mismatch: inner output " + f.cod()->name() +
                          " vs argument domain " + h.dom()->name());
  std::vector<std::uint32_t> out;
  out.reserve(f.dom()->size());
  CarrierRef cod;
  for (std::size_t i = 0; i < f.dom()->size(); ++i) {
    const Value& fx = f.cod()->at(f.apply_index(i));
    const FunTable gx = g(fx);
    if (!same_carrier(gx.dom(), h.cod()))
      throw CarrierMismatch("mapper mismatch: case domain " + gx.dom()->name() +
                            " vs argument codomain " + h.cod()->name());
    if (!cod)
      cod = gx.cod();
    else if (!same_carrier(cod, gx.cod()))
      throw CarrierMismatch("mapper cases disagree on codomain");
    out.push_back(static_cast<std::uint32_t>(gx.apply_index(h.apply_index(f.apply_index(i)))));
  }
  if (!cod) {
    if (f.cod()->size() == 0) throw WiringError("cannot infer codomain for empty mapper");
    cod = g(f.cod()->at(0)).cod();
  }
  return FunTable(f.dom(), cod, std::move(out));
}

FunSpace FunSpace::enumerate(const CarrierRef& dom, const CarrierRef& cod, std::size_t cap) {
  FunSpace s;
  s.dom = dom;
  s.cod = cod;
  s.tables = enumerate_fun_tables(dom, cod, cap);
  ValueSeq encoded;
  encoded.reserve(s.tables.size());
  for (const FunTable& t : s.tables) encoded.push_back(encode_table(t));
  s.carrier = make_carrier("[" + dom->name() + "->" + cod->name() + "]", std::move(encoded));
  return s;
}

const FunTable& FunSpace::table_for(const Value& encoded) const {
  return tables.at(carrier->index_or_throw(encoded));
}

Rel materialize_relator(RelatorKind kind, const Rel& r1, const DepRel& s, const FunSpace& space_l,
                        const FunSpace& space_r, std::size_t cap) {
  const std::size_t pairs = space_l.tables.size() * space_r.tables.size();
  if (space_r.tables.size() != 0 && pairs / space_r.tables.size() != space_l.tables.size())
    throw CapExceeded("relator pair count overflows");
  if (pairs > cap)
    throw CapExceeded("relator materialization needs " + std::to_string(pairs) +
                      " pairs, exceeding cap " + std::to_string(cap));
  // Precompute monotonicity per table to avoid re-deriving it pairwise.
  std::vector<bool> mono_l, mono_r;
  if (kind == RelatorKind::mono_relator) {
    mono_l.reserve(space_l.tables.size());
    for (const FunTable& f : space_l.tables)
      mono_l.push_back(plain_relator(r1, s, f, f, "m").ok());
    mono_r.reserve(space_r.tables.size());
    for (const FunTable& g : space_r.tables)
      mono_r.push_back(plain_relator(r1, s, g, g, "m").ok());
  }
  Rel out(space_l.carrier, space_r.carrier);
  for (std::size_t i = 0; i < space_l.tables.size(); ++i) {
    for (std::size_t j = 0; j < space_r.tables.size(); ++j) {
      bool related = false;
      switch (kind) {
        case RelatorKind::plain:
          related = plain_relator(r1, s, space_l.tables[i], space_r.tables[j], "p").ok();
          break;
        case RelatorKind::mono_fun:
          related = i == j && plain_relator(r1, s, space_l.tables[i], space_l.tables[i], "p").ok();
          break;
        case RelatorKind::mono_relator:
          related = mono_l[i] && mono_r[j] &&
                    plain_relator(r1, s, space_l.tables[i], space_r.tables[j], "p").ok();
          break;
      }
      if (related) out.add_index(i, j);
    }
  }
  return out;
}

}  // namespace transport
