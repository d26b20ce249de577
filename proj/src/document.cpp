#include "transport/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace transport {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error_at(const std::string& text, std::size_t byte,
                                 const std::string& what) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw ParseError(what + " (line " + std::to_string(line) + ", column " + std::to_string(col) +
                       ")",
                   byte);
}

struct Loader {
  const json& doc;
  RunOptions opts;
  Registry reg;
  std::map<std::string, DepRel> dep_relations;
  std::map<std::string, DepFunTable> dep_functions;
  std::map<std::string, std::vector<std::string>> functor_chains;

  Value value(const std::string& text) const { return parse_value(text, opts.list_bound); }

  CarrierRef carrier(const std::string& name) const {
    auto it = reg.carriers.find(name);
    if (it == reg.carriers.end()) throw NotFound("unknown carrier '" + name + "'");
    return it->second;
  }

  const Rel& relation(const std::string& name) const {
    auto it = reg.relations.find(name);
    if (it == reg.relations.end()) throw NotFound("unknown relation '" + name + "'");
    return it->second;
  }

  const NamedFunction& function(const std::string& name) const {
    auto it = reg.functions.find(name);
    if (it == reg.functions.end()) throw NotFound("unknown function '" + name + "'");
    return it->second;
  }

  const EquivalenceRecord& equivalence(const std::string& name) const {
    auto it = reg.equivalences.find(name);
    if (it == reg.equivalences.end()) throw NotFound("unknown equivalence '" + name + "'");
    return it->second;
  }

  void load_carriers() {
    if (!doc.contains("carriers")) return;
    for (const auto& [name, elems] : doc.at("carriers").items()) {
      ValueSeq vs;
      for (const auto& e : elems) vs.push_back(value(e.get<std::string>()));
      reg.carriers.emplace(name, make_carrier(name, std::move(vs)));
    }
  }

  void load_relations() {
    if (!doc.contains("relations")) return;
    for (const auto& [name, spec] : doc.at("relations").items()) {
      if (spec.contains("eq")) {
        reg.relations.emplace(name, Rel::equality(carrier(spec.at("eq").get<std::string>())));
      } else if (spec.contains("restricted_eq")) {
        CarrierRef c = carrier(spec.at("restricted_eq").get<std::string>());
        ValueSeq members;
        for (const auto& m : spec.at("members")) members.push_back(value(m.get<std::string>()));
        reg.relations.emplace(name, restricted_eq(Pred::of(c, members)));
      } else if (spec.contains("between")) {
        CarrierRef l = carrier(spec.at("between").at(0).get<std::string>());
        CarrierRef r = carrier(spec.at("between").at(1).get<std::string>());
        Rel rel(l, r);
        for (const auto& p : spec.at("pairs"))
          rel.add(value(p.at(0).get<std::string>()), value(p.at(1).get<std::string>()));
        reg.relations.emplace(name, std::move(rel));
      } else {
        throw ParseError("relation '" + name + "' needs eq, restricted_eq or between", 0);
      }
      // Every named relation can also serve as a guard condition.
      reg.conditions.emplace(name, reg.relations.at(name));
    }
  }

  void load_functions() {
    if (!doc.contains("functions")) return;
    for (const auto& [name, spec] : doc.at("functions").items()) {
      const json& dom = spec.at("dom");
      CarrierRef cod = carrier(spec.at("cod").get<std::string>());
      if (dom.is_string()) {
        CarrierRef d = carrier(dom.get<std::string>());
        std::vector<std::pair<Value, Value>> pairs;
        for (const auto& row : spec.at("table"))
          pairs.emplace_back(value(row.at(0).get<std::string>()),
                             value(row.at(1).get<std::string>()));
        reg.functions.emplace(
            name, NamedFunction{FunTable::from_pairs(d, cod, pairs), {d}, cod});
      } else {
        // Two-argument form, stored curried through the encoded inner space.
        if (dom.size() != 2)
          throw ParseError("function '" + name + "' supports at most two arguments", 0);
        CarrierRef d1 = carrier(dom.at(0).get<std::string>());
        CarrierRef d2 = carrier(dom.at(1).get<std::string>());
        std::map<std::size_t, std::vector<std::pair<Value, Value>>> rows;
        for (const auto& row : spec.at("table")) {
          const Value a = value(row.at(0).get<std::string>());
          rows[d1->index_or_throw(a)].emplace_back(value(row.at(1).get<std::string>()),
                                                   value(row.at(2).get<std::string>()));
        }
        FunSpace inner = FunSpace::enumerate(d2, cod, opts.cap);
        std::vector<std::pair<Value, Value>> outer;
        for (std::size_t i = 0; i < d1->size(); ++i) {
          auto it = rows.find(i);
          if (it == rows.end())
            throw Error("function '" + name + "' missing rows for " + d1->at(i).str());
          outer.emplace_back(d1->at(i), encode_table(FunTable::from_pairs(d2, cod, it->second)));
        }
        reg.functions.emplace(
            name,
            NamedFunction{FunTable::from_pairs(d1, inner.carrier, outer), {d1, d2}, cod});
      }
    }
  }

  void load_dep_relations() {
    if (!doc.contains("dep_relations")) return;
    for (const auto& [name, spec] : doc.at("dep_relations").items()) {
      CarrierRef p1 = carrier(spec.at("params").at(0).get<std::string>());
      CarrierRef p2 = carrier(spec.at("params").at(1).get<std::string>());
      DepRel d(p1, p2, relation(spec.at("default").get<std::string>()));
      if (spec.contains("cases")) {
        for (const auto& c : spec.at("cases"))
          d.set_case(value(c.at("at").at(0).get<std::string>()),
                     value(c.at("at").at(1).get<std::string>()),
                     relation(c.at("rel").get<std::string>()));
      }
      dep_relations.emplace(name, std::move(d));
    }
  }

  void load_dep_functions() {
    if (!doc.contains("dep_functions")) return;
    for (const auto& [name, spec] : doc.at("dep_functions").items()) {
      CarrierRef p1 = carrier(spec.at("params").at(0).get<std::string>());
      CarrierRef p2 = carrier(spec.at("params").at(1).get<std::string>());
      DepFunTable d(p1, p2, function(spec.at("default").get<std::string>()).table);
      if (spec.contains("cases")) {
        for (const auto& c : spec.at("cases"))
          d.set_case(value(c.at("at").at(0).get<std::string>()),
                     value(c.at("at").at(1).get<std::string>()),
                     function(c.at("fn").get<std::string>()).table);
      }
      dep_functions.emplace(name, std::move(d));
    }
  }

  void load_functors() {
    if (!doc.contains("functors")) return;
    for (const auto& [name, chain] : doc.at("functors").items()) {
      std::vector<std::string> names;
      for (const auto& n : chain) names.push_back(n.get<std::string>());
      if (names.empty()) throw ParseError("functor '" + name + "' needs a builtin chain", 0);
      functor_chains.emplace(name, std::move(names));
    }
  }

  EquivalenceRecord record_from_spec(const json& spec) const {
    return make_record(relation(spec.at("L").get<std::string>()),
                       relation(spec.at("R").get<std::string>()),
                       function(spec.at("l").get<std::string>()).table,
                       function(spec.at("r").get<std::string>()).table);
  }
};

std::string witness_detail(const CheckReport& rep) {
  const CheckReport* f = rep.first_failure();
  const CheckReport& r = f ? *f : rep;
  std::string out = r.property;
  if (!r.witness.empty()) out += " witness=" + format_witness(r.witness);
  return out;
}

const CheckReport* find_failed(const CheckReport& rep) {
  if (rep.failed()) return rep.first_failure();
  for (const CheckReport& s : rep.subs)
    if (const CheckReport* f = find_failed(s)) return f;
  return nullptr;
}

std::string verify_detail(const CheckReport& rep) {
  if (rep.failed()) return witness_detail(rep);
  if (rep.verdict == Verdict::inapplicable) {
    if (const CheckReport* f = find_failed(rep)) {
      std::string out = rep.property + " unmet:" + f->property;
      if (!f->witness.empty()) out += " witness=" + format_witness(f->witness);
      return out;
    }
    return rep.property + " unmet";
  }
  return rep.property;
}

std::string status_of(const CheckReport& rep) {
  switch (rep.verdict) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inapplicable: return "INAPPLICABLE";
  }
  return "ERROR";
}

// Rows of a transported term: one row per argument tuple plus the result.
void dump_rows(const Value& enc, const std::vector<CarrierRef>& doms, std::size_t level,
               std::vector<std::string>& prefix, json& rows) {
  if (level == doms.size()) {
    json row = json::array();
    for (const std::string& p : prefix) row.push_back(p);
    row.push_back(enc.str());
    rows.push_back(std::move(row));
    return;
  }
  const CarrierRef& d = doms[level];
  const ValueSeq& outs = enc.cons_args();
  for (std::size_t i = 0; i < d->size(); ++i) {
    prefix.push_back(d->at(i).str());
    dump_rows(outs.at(i), doms, level + 1, prefix, rows);
    prefix.pop_back();
  }
}

class Runner {
 public:
  Runner(Loader loader) : ld_(std::move(loader)) {}

  RunReport run() {
    register_declared();
    if (ld_.doc.contains("commands")) {
      for (const auto& cmd : ld_.doc.at("commands")) run_command(cmd);
    }
    return std::move(report_);
  }

 private:
  Loader ld_;
  RunReport report_;

  void add(RunEntry e) { report_.entries.push_back(std::move(e)); }

  void add_report(const std::string& command, const CheckReport& rep,
                  const std::string& pass_detail = "") {
    RunEntry e;
    e.status = status_of(rep);
    e.command = command;
    e.detail = rep.ok() && !pass_detail.empty() ? pass_detail : verify_detail(rep);
    const CheckReport* f = rep.failed() ? rep.first_failure() : nullptr;
    if (f) e.witness = f->witness;
    add(std::move(e));
  }

  void register_declared() {
    if (!ld_.doc.contains("equivalences")) return;
    for (const auto& [name, spec] : ld_.doc.at("equivalences").items()) {
      EquivalenceRecord record = ld_.record_from_spec(spec);
      if (!spec.value("register", true)) {
        ld_.reg.equivalences.emplace(name, std::move(record));  // declared, unvalidated
        continue;
      }
      try {
        ld_.reg = register_equivalence(std::move(ld_.reg), name, std::move(record));
        add({"PASS", "register " + name, "per_equiv", {}, ""});
      } catch (const SideConditionError& err) {
        add({"ERROR", "register " + name, witness_detail(err.report), err.report.witness, ""});
      }
    }
  }

  FunctorDef functor_by_name(const std::string& name) {
    auto it = ld_.functor_chains.find(name);
    if (it == ld_.functor_chains.end()) return builtin_functor(name, ld_.opts.list_bound);
    // A declared chain [f1, ..., fk] composes unary builtins around the last
    // (possibly n-ary) one.
    std::vector<FunctorDef> defs;
    for (const std::string& n : it->second) defs.push_back(builtin_functor(n, ld_.opts.list_bound));
    for (std::size_t i = 0; i + 1 < defs.size(); ++i)
      if (defs[i].arity != 1)
        throw Error("functor chain '" + name + "' may only compose unary builtins");
    FunctorDef out;
    out.name = name;
    out.arity = defs.back().arity;
    out.build_carrier = [defs](const std::vector<CarrierRef>& cs) {
      CarrierRef c = defs.back().build_carrier(cs);
      for (std::size_t i = defs.size() - 1; i-- > 0;) c = defs[i].build_carrier({c});
      return c;
    };
    out.lift_map = [defs](const std::vector<FunTable>& fs) {
      FunTable f = defs.back().lift_map(fs);
      for (std::size_t i = defs.size() - 1; i-- > 0;) f = defs[i].lift_map({f});
      return f;
    };
    out.lift_rel = [defs](const std::vector<Rel>& rs) {
      Rel r = defs.back().lift_rel(rs);
      for (std::size_t i = defs.size() - 1; i-- > 0;) r = defs[i].lift_rel({r});
      return r;
    };
    return out;
  }

  PartialQuotient quotient_from_spec(const json& spec) {
    return make_quotient(ld_.relation(spec.at("T").get<std::string>()),
                         ld_.function(spec.at("abs").get<std::string>()).table,
                         ld_.function(spec.at("rep").get<std::string>()).table);
  }

  DepFunClosureInput depfun_input_from_spec(const json& spec) {
    auto rel_at = [this](const std::string& n) {
      auto it = ld_.dep_relations.find(n);
      if (it == ld_.dep_relations.end()) throw NotFound("unknown dependent relation '" + n + "'");
      return it->second;
    };
    auto fn_at = [this](const std::string& n) {
      auto it = ld_.dep_functions.find(n);
      if (it == ld_.dep_functions.end()) throw NotFound("unknown dependent function '" + n + "'");
      return it->second;
    };
    return DepFunClosureInput{ld_.equivalence(spec.at("base").get<std::string>()),
                              rel_at(spec.at("cod_left").get<std::string>()),
                              rel_at(spec.at("cod_right").get<std::string>()),
                              fn_at(spec.at("to_right").get<std::string>()),
                              fn_at(spec.at("to_left").get<std::string>()),
                              ld_.opts.cap};
  }

  void run_command(const json& cmd) {
    const std::string kind = cmd.at("cmd").get<std::string>();
    try {
      if (kind == "check") {
        run_check(cmd);
      } else if (kind == "transport") {
        run_transport(cmd);
      } else if (kind == "verify") {
        run_verify(cmd);
      } else if (kind == "counterexample") {
        run_counterexample(cmd);
      } else {
        throw NotFound("unknown command '" + kind + "'");
      }
    } catch (const SideConditionError& err) {
      add({"ERROR", kind, std::string(err.what()), err.report.witness, ""});
    } catch (const Error& err) {
      add({"ERROR", kind, err.what(), {}, ""});
    }
  }

  void run_check(const json& cmd) {
    const std::string name = cmd.at("equivalence").get<std::string>();
    const std::string cls_name = cmd.at("class").get<std::string>();
    auto cls = galois_class_from_string(cls_name);
    if (!cls) throw NotFound("unknown class '" + cls_name + "'");
    CheckReport rep = galois_class_check(*cls, ld_.equivalence(name));
    add_report("check " + name, rep, cls_name);
  }

  void run_transport(const json& cmd) {
    const std::string term = cmd.at("term").get<std::string>();
    const std::string out_name = cmd.value("name", term + "'");
    RelExprPtr lhs = parse_rel_expr(cmd.at("L").get<std::string>());
    RelExprPtr rhs = parse_rel_expr(cmd.at("R").get<std::string>());
    EngineConfig cfg{ld_.opts.cap, ld_.opts.list_bound};
    TransportOutcome out = transport_term(ld_.reg, term, lhs, rhs, cfg);
    RunEntry e;
    e.command = "transport " + term;
    if (!out.in_dom.ok()) {
      e.status = "FAIL";
      e.detail = witness_detail(out.in_dom);
      e.witness = out.in_dom.first_failure()->witness;
      add(std::move(e));
      return;
    }
    if (!out.ok) {
      e.status = "FAIL";
      e.detail = witness_detail(out.relatedness);
      add(std::move(e));
      return;
    }
    const Synthesized& syn = *out.synthesized;
    json dump;
    dump["term"] = out_name;
    if (syn.right_arg_doms.empty()) {
      dump["value"] = out.term_out->str();
    } else {
      json rows = json::array();
      std::vector<std::string> prefix;
      dump_rows(*out.term_out, syn.right_arg_doms, 0, prefix, rows);
      dump["table"] = std::move(rows);
    }
    dump["relatedness"] = to_string(out.relatedness.verdict);
    dump["similarity"] = to_string(out.similarity.verdict);
    dump["class"] = "per_equiv";
    e.status = out.similarity.ok() ? "PASS" : "FAIL";
    e.detail = "-> " + out_name;
    if (!out.similarity.ok()) e.detail = witness_detail(out.similarity);
    e.dump_json = dump.dump();
    add(std::move(e));
    // Successful transports register the new term for later commands.
    if (out.ok && !syn.right_arg_doms.empty()) {
      NamedFunction nf{decode_outer_table(*out.term_out, syn), syn.right_arg_doms,
                       syn.right_result_cod};
      ld_.reg.functions.insert_or_assign(out_name, std::move(nf));
    }
  }

  FunTable decode_outer_table(const Value& enc, const Synthesized& syn) {
    const CarrierRef& dom = syn.right_arg_doms.front();
    // Rebuild the codomain carrier from the encoded outputs.
    ValueSeq outs = enc.cons_args();
    if (syn.right_arg_doms.size() == 1)
      return decode_table(enc, dom, syn.right_result_cod);
    ValueSeq uniq = outs;
    CarrierRef cod = make_carrier("[" + syn.text_right + " results]", [&uniq] {
      std::sort(uniq.begin(), uniq.end(),
                [](const Value& a, const Value& b) { return compare_values(a, b) < 0; });
      uniq.erase(std::unique(uniq.begin(), uniq.end(),
                             [](const Value& a, const Value& b) { return a == b; }),
                 uniq.end());
      return uniq;
    }());
    return decode_table(enc, dom, cod);
  }

  void run_verify(const json& cmd) {
    const std::string what = cmd.at("what").get<std::string>();
    const std::string label = "verify " + what;
    if (what == "hierarchy") {
      const std::string name = cmd.at("equivalence").get<std::string>();
      add_report(label + " " + name, class_hierarchy_check(ld_.equivalence(name)));
    } else if (what == "lemma_suite") {
      if (cmd.contains("equivalence")) {
        const std::string name = cmd.at("equivalence").get<std::string>();
        add_report(label + " " + name, galois_lemma_suite(ld_.equivalence(name)));
      } else {
        add_report(label, galois_lemma_suite(quotient_from_spec(cmd.at("quotient"))));
      }
    } else if (what == "quotient") {
      add_report(label, partial_quotient_check(quotient_from_spec(cmd.at("quotient"))));
    } else if (what == "functor_theorem" || what == "functor_similarity" ||
               what == "functor_laws") {
      FunctorDef def = functor_by_name(cmd.at("functor").get<std::string>());
      if (what == "functor_laws") {
        std::vector<CarrierRef> cs;
        for (const auto& n : cmd.at("carriers")) cs.push_back(ld_.carrier(n.get<std::string>()));
        add_report(label + " " + def.name, functor_law_check(def, cs));
        return;
      }
      std::vector<EquivalenceRecord> comps;
      for (const auto& n : cmd.at("components"))
        comps.push_back(ld_.equivalence(n.get<std::string>()));
      if (what == "functor_theorem") {
        const std::string star = cmd.at("star").get<std::string>();
        FunctorStar fs;
        if (star == "connection") fs = FunctorStar::connection;
        else if (star == "galois_equiv") fs = FunctorStar::galois_equiv;
        else if (star == "pre_equiv") fs = FunctorStar::pre_equiv;
        else if (star == "per_equiv") fs = FunctorStar::per_equiv;
        else throw NotFound("unknown star '" + star + "'");
        add_report(label + " " + def.name + " " + star, verify_functor_theorem(def, comps, fs));
      } else {
        add_report(label + " " + def.name, functor_similarity_check(def, comps));
      }
    } else if (what == "comp_theorem" || what == "comp_similarity" || what == "comp_coincide") {
      CompositionInput in{ld_.equivalence(cmd.at("first").get<std::string>()),
                          ld_.equivalence(cmd.at("second").get<std::string>())};
      if (what == "comp_theorem") {
        const std::string star = cmd.at("star").get<std::string>();
        CompStar cs;
        if (star == "pre_equiv") cs = CompStar::pre_equiv;
        else if (star == "per_equiv") cs = CompStar::per_equiv;
        else if (star == "connection_conclusion") cs = CompStar::connection_conclusion;
        else throw NotFound("unknown star '" + star + "'");
        add_report(label + " " + star, verify_comp_theorem(in, cs));
      } else if (what == "comp_coincide") {
        const std::string star = cmd.at("star").get<std::string>();
        auto cls = galois_class_from_string(star);
        if (!cls) throw NotFound("unknown star '" + star + "'");
        add_report(label + " " + star, verify_comp_coincide(in, *cls));
      } else {
        const MonoVariant variant =
            cmd.value("variant", "main") == "appendix" ? MonoVariant::appendix : MonoVariant::main;
        add_report(label, comp_similarity_check(in, variant));
      }
    } else if (what == "lifting") {
      add_report(label, lifting_comparison_check(quotient_from_spec(cmd.at("q1")),
                                                 quotient_from_spec(cmd.at("q2"))));
    } else if (what == "depfun_theorem" || what == "depfun_similarity" ||
               what == "mono_conditions") {
      DepFunClosureInput in = depfun_input_from_spec(cmd);
      if (what == "depfun_theorem") {
        const std::string star = cmd.at("star").get<std::string>();
        ClosureStar cs;
        if (star == "pre_equiv") cs = ClosureStar::pre_equiv;
        else if (star == "per_equiv") cs = ClosureStar::per_equiv;
        else if (star == "connection") cs = ClosureStar::connection;
        else throw NotFound("unknown star '" + star + "'");
        add_report(label + " " + star, verify_closure_theorem(in, cs));
      } else if (what == "depfun_similarity") {
        DepFunClosureOutput out = build_dep_fun_closure(in);
        add_report(label, similarity_check(in, out));
      } else {
        const MonoVariant variant =
            cmd.value("variant", "main") == "appendix" ? MonoVariant::appendix : MonoVariant::main;
        add_report(label, check_mono_conditions(in, variant));
      }
    } else if (what == "mono_collapse") {
      auto it = ld_.dep_relations.find(cmd.at("cod_left").get<std::string>());
      if (it == ld_.dep_relations.end()) throw NotFound("unknown dependent relation");
      add_report(label, mono_collapse_check(ld_.relation(cmd.at("rel").get<std::string>()),
                                            it->second, ld_.opts.cap));
    } else {
      throw NotFound("unknown verification '" + what + "'");
    }
  }

  void run_counterexample(const json& cmd) {
    const std::string claim = cmd.at("claim").get<std::string>();
    const std::string drop = cmd.value("drop", "none");
    const std::size_t bound = cmd.value("bound", 3);
    CheckReport rep = counterexample_search(claim, drop, bound);
    RunEntry e;
    e.status = "PASS";
    e.command = "counterexample " + claim + " drop=" + drop;
    if (rep.property == "counterexample_found") {
      e.detail = "found witness=" + format_witness(rep.witness);
      e.witness = rep.witness;
    } else {
      e.detail = "exhausted";
    }
    add(std::move(e));
  }
};

}  // namespace

bool RunReport::ok() const {
  for (const RunEntry& e : entries)
    if (e.status == "FAIL" || e.status == "ERROR") return false;
  return true;
}

RunReport run_document_text(const std::string& json_text, const RunOptions& opts) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    parse_error_at(json_text, err.byte, err.what());
  }
  Loader loader{doc, opts, {}, {}, {}, {}};
  loader.load_carriers();
  loader.load_relations();
  loader.load_functions();
  loader.load_dep_relations();
  loader.load_dep_functions();
  loader.load_functors();
  Runner runner(std::move(loader));
  return runner.run();
}

RunReport run_file(const std::string& path, const RunOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_document_text(buf.str(), opts);
}

std::string emit_report(const RunReport& report, ReportFormat format) {
  if (format == ReportFormat::text) {
    std::ostringstream os;
    for (const RunEntry& e : report.entries)
      os << e.status << ' ' << e.command << ' ' << e.detail << '\n';
    os << (report.ok() ? "OK" : "FAILURES") << '\n';
    return os.str();
  }
  json out;
  out["ok"] = report.ok();
  json entries = json::array();
  for (const RunEntry& e : report.entries) {
    json je;
    je["status"] = e.status;
    je["command"] = e.command;
    je["detail"] = e.detail;
    if (!e.witness.empty()) {
      json w = json::array();
      for (const Value& v : e.witness) w.push_back(v.str());
      je["witness"] = std::move(w);
    }
    if (!e.dump_json.empty()) je["dump"] = json::parse(e.dump_json);
    entries.push_back(std::move(je));
  }
  out["entries"] = std::move(entries);
  return out.dump(2) + "\n";
}

RunReport parse_structured_report(const std::string& bytes) {
  json in = json::parse(bytes);
  RunReport report;
  for (const auto& je : in.at("entries")) {
    RunEntry e;
    e.status = je.at("status").get<std::string>();
    e.command = je.at("command").get<std::string>();
    e.detail = je.at("detail").get<std::string>();
    if (je.contains("witness"))
      for (const auto& w : je.at("witness")) e.witness.push_back(parse_value(w.get<std::string>(), 64));
    if (je.contains("dump")) e.dump_json = je.at("dump").dump();
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace transport
