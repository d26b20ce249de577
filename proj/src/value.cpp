#include "transport/value.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace transport {

Value Value::tuple(ValueSeq items) {
  if (items.size() < 2) throw Error("tuple requires at least two components");
  return Value(Data(Tuple{std::move(items)}));
}

namespace {

int tag_rank(const Value& v) {
  if (v.is_int()) return 0;
  if (v.is_bool()) return 1;
  if (v.is_tuple()) return 2;
  if (v.is_list()) return 3;
  return 4;
}

int compare_seq(const ValueSeq& a, const ValueSeq& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare_values(a[i], b[i]); c != 0) return c;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

void print_seq(std::ostream& os, const ValueSeq& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) os << ',';
    os << seq[i];
  }
}

}  // namespace

int compare_values(const Value& a, const Value& b) {
  if (int ra = tag_rank(a), rb = tag_rank(b); ra != rb) return ra < rb ? -1 : 1;
  if (a.is_int()) {
    if (a.as_int() == b.as_int()) return 0;
    return a.as_int() < b.as_int() ? -1 : 1;
  }
  if (a.is_bool()) {
    if (a.as_bool() == b.as_bool()) return 0;
    return !a.as_bool() ? -1 : 1;
  }
  if (a.is_tuple()) return compare_seq(a.tuple_items(), b.tuple_items());
  if (a.is_list()) return compare_seq(a.list_items(), b.list_items());
  if (int c = a.cons_name().compare(b.cons_name()); c != 0) return c < 0 ? -1 : 1;
  return compare_seq(a.cons_args(), b.cons_args());
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
  if (v.is_int()) return os << v.as_int();
  if (v.is_bool()) return os << (v.as_bool() ? "true" : "false");
  if (v.is_tuple()) {
    os << '(';
    print_seq(os, v.tuple_items());
    return os << ')';
  }
  if (v.is_list()) {
    os << '[';
    print_seq(os, v.list_items());
    return os << ']';
  }
  os << v.cons_name() << '(';
  print_seq(os, v.cons_args());
  return os << ')';
}

std::string Value::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

namespace {

class ValueParser {
 public:
  ValueParser(std::string_view text, std::size_t list_bound)
      : text_(text), bound_(list_bound) {}

  Value parse_all() {
    Value v = parse();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return v;
  }

 private:
  std::string_view text_;
  std::size_t bound_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Value parse() {
    const char c = peek();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return parse_int();
    if (c == '(') return parse_tuple();
    if (c == '[') return parse_list();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    throw ParseError("unexpected character", pos_);
  }

  Value parse_int() {
    const std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected digits", pos_);
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return Value::integer(text_[start] == '-' ? -v : v);
  }

  ValueSeq parse_args(char close) {
    ValueSeq items;
    skip_ws();
    if (peek() == close) {
      ++pos_;
      return items;
    }
    while (true) {
      items.push_back(parse());
      const char c = peek();
      if (c == close) {
        ++pos_;
        return items;
      }
      expect(',');
    }
  }

  Value parse_tuple() {
    const std::size_t start = pos_;
    expect('(');
    ValueSeq items = parse_args(')');
    if (items.size() < 2) throw ParseError("tuple requires at least two components", start);
    return Value::tuple(std::move(items));
  }

  Value parse_list() {
    const std::size_t start = pos_;
    expect('[');
    ValueSeq items = parse_args(']');
    if (items.size() > bound_)
      throw ParseError("list literal exceeds length bound " + std::to_string(bound_), start);
    return Value::list(std::move(items));
  }

  Value parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name == "true") return Value::boolean(true);
    if (name == "false") return Value::boolean(false);
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(')
      throw ParseError("expected '(' after constructor name", pos_);
    ++pos_;
    return Value::cons(std::move(name), parse_args(')'));
  }
};

}  // namespace

Value parse_value(std::string_view text, std::size_t list_bound) {
  return ValueParser(text, list_bound).parse_all();
}

Carrier::Carrier(std::string name, ValueSeq elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const Value& a, const Value& b) { return compare_values(a, b) < 0; });
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i - 1] == elements_[i])
      throw Error("carrier " + name_ + " has duplicate element " + elements_[i].str());
  }
}

std::optional<std::size_t> Carrier::index_of(const Value& v) const {
  auto it = std::lower_bound(
      elements_.begin(), elements_.end(), v,
      [](const Value& a, const Value& b) { return compare_values(a, b) < 0; });
  if (it == elements_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t Carrier::index_or_throw(const Value& v) const {
  if (auto i = index_of(v)) return *i;
  throw CarrierMismatch("value " + v.str() + " not in carrier " + name_);
}

CarrierRef make_carrier(std::string name, ValueSeq elements) {
  return std::make_shared<const Carrier>(std::move(name), std::move(elements));
}

bool same_carrier(const Carrier& a, const Carrier& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.at(i) == b.at(i))) return false;
  return true;
}

FunTable::FunTable(CarrierRef dom, CarrierRef cod, std::vector<std::uint32_t> out)
    : dom_(std::move(dom)), cod_(std::move(cod)), out_(std::move(out)) {
  if (out_.size() != dom_->size())
    throw WiringError("table for " + dom_->name() + " is not total");
  for (auto o : out_)
    if (o >= cod_->size()) throw WiringError("table output outside codomain " + cod_->name());
}

FunTable FunTable::identity(const CarrierRef& c) {
  std::vector<std::uint32_t> out(c->size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(i);
  return FunTable(c, c, std::move(out));
}

FunTable FunTable::constant(const CarrierRef& dom, const CarrierRef& cod, const Value& v) {
  const auto idx = static_cast<std::uint32_t>(cod->index_or_throw(v));
  return FunTable(dom, cod, std::vector<std::uint32_t>(dom->size(), idx));
}

FunTable FunTable::from_fn(const CarrierRef& dom, const CarrierRef& cod,
                           const std::function<Value(const Value&)>& fn) {
  std::vector<std::uint32_t> out;
  out.reserve(dom->size());
  for (const Value& v : dom->elements())
    out.push_back(static_cast<std::uint32_t>(cod->index_or_throw(fn(v))));
  return FunTable(dom, cod, std::move(out));
}

FunTable FunTable::from_pairs(const CarrierRef& dom, const CarrierRef& cod,
                              const std::vector<std::pair<Value, Value>>& pairs) {
  std::vector<std::uint32_t> out(dom->size(), 0);
  std::vector<bool> seen(dom->size(), false);
  for (const auto& [in, v] : pairs) {
    const std::size_t i = dom->index_or_throw(in);
    if (seen[i]) throw Error("duplicate table entry for " + in.str());
    seen[i] = true;
    out[i] = static_cast<std::uint32_t>(cod->index_or_throw(v));
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw Error("table missing entry for " + dom->at(i).str());
  return FunTable(dom, cod, std::move(out));
}

const Value& FunTable::apply(const Value& v) const {
  return cod_->at(out_.at(dom_->index_or_throw(v)));
}

FunTable FunTable::after(const FunTable& inner) const {
  if (!same_carrier(inner.cod(), dom_))
    throw CarrierMismatch("composition mismatch: " + inner.cod()->name() + " vs " +
                          dom_->name());
  std::vector<std::uint32_t> out;
  out.reserve(inner.dom()->size());
  for (std::size_t i = 0; i < inner.dom()->size(); ++i)
    out.push_back(static_cast<std::uint32_t>(apply_index(inner.apply_index(i))));
  return FunTable(inner.dom(), cod_, std::move(out));
}

bool FunTable::operator==(const FunTable& o) const {
  return same_carrier(dom_, o.dom_) && same_carrier(cod_, o.cod_) && out_ == o.out_;
}

std::size_t fun_space_size(std::size_t dom, std::size_t cod, std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < dom; ++i) {
    if (cod != 0 && n > cap / cod + 1) return cap + 1;
    n *= cod;
    if (n > cap) return cap + 1;
  }
  return n;
}

std::vector<FunTable> enumerate_fun_tables(const CarrierRef& dom, const CarrierRef& cod,
                                           std::size_t cap) {
  const std::size_t n = fun_space_size(dom->size(), cod->size(), cap);
  if (n > cap) {
    throw CapExceeded("function space " + dom->name() + " -> " + cod->name() + " has " +
                      std::to_string(cod->size()) + "^" + std::to_string(dom->size()) +
                      " tables, exceeding cap " + std::to_string(cap));
  }
  std::vector<FunTable> tables;
  tables.reserve(n);
  if (cod->size() == 0 && dom->size() > 0) return tables;
  std::vector<std::uint32_t> out(dom->size(), 0);
  while (true) {
    tables.emplace_back(dom, cod, out);
    // Odometer with the last slot least significant keeps encodings canonical.
    std::size_t i = out.size();
    while (i > 0) {
      --i;
      if (++out[i] < cod->size()) break;
      out[i] = 0;
      if (i == 0) return tables;
    }
    if (out.empty()) return tables;
  }
}

Value encode_table(const FunTable& t) {
  ValueSeq outs;
  outs.reserve(t.dom()->size());
  for (std::size_t i = 0; i < t.dom()->size(); ++i) outs.push_back(t.cod()->at(t.apply_index(i)));
  return Value::cons("fn", std::move(outs));
}

FunTable decode_table(const Value& v, const CarrierRef& dom, const CarrierRef& cod) {
  if (!v.is_cons() || v.cons_name() != "fn")
    throw Error("not an encoded table: " + v.str());
  const ValueSeq& outs = v.cons_args();
  if (outs.size() != dom->size())
    throw WiringError("encoded table arity " + std::to_string(outs.size()) +
                      " does not match carrier " + dom->name());
  std::vector<std::uint32_t> out;
  out.reserve(outs.size());
  for (const Value& o : outs) out.push_back(static_cast<std::uint32_t>(cod->index_or_throw(o)));
  return FunTable(dom, cod, std::move(out));
}

}  // namespace transport
