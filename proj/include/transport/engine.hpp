#pragma once

#include <memory>

#include "transport/closure_compose.hpp"
#include "transport/closure_functor.hpp"
#include "transport/closure_funrel.hpp"

namespace transport {

/// A registered term. Multi-argument functions are stored curried: the table
/// maps the first argument to encoded tables over the remaining arguments.
struct NamedFunction {
  FunTable table;
  std::vector<CarrierRef> arg_doms;
  CarrierRef result_cod;
};

/// Immutable-after-build name tables. Registered equivalences are restricted
/// to PER equivalences; weaker classes stay library-only.
struct Registry {
  std::map<std::string, CarrierRef> carriers;
  std::map<std::string, Rel> relations;
  std::map<std::string, Rel> conditions;
  std::map<std::string, NamedFunction> functions;
  std::map<std::string, EquivalenceRecord> equivalences;
};

struct SideConditionError : Error {
  SideConditionError(const std::string& msg, CheckReport rep)
      : Error(msg + ": " + rep.summary()), report(std::move(rep)) {}
  CheckReport report;
};

/// Validates per_equiv and returns the extended registry; rejection carries
/// the failing sub-property.
Registry register_equivalence(Registry reg, const std::string& name, EquivalenceRecord e);

/// Relation expressions, parsed from the prefix syntax:
///   atom NAME | eq CARRIER | left NAME | right NAME
///   | fun(x y: EXPR [if COND(a,b)]) -> EXPR
///   | functor NAME(EXPR,...) | compose(EXPR, EXPR)
struct RelExpr;
using RelExprPtr = std::shared_ptr<const RelExpr>;

struct RelExpr {
  struct Atom {
    std::string name;
  };
  struct Eq {
    std::string carrier;
  };
  struct EquivSide {
    std::string name;
    bool left_side;
  };
  struct Guard {
    std::string condition, arg1, arg2;
  };
  struct DepFun {
    std::string binder1, binder2;
    RelExprPtr domain;
    std::optional<Guard> guard;
    RelExprPtr codomain;
  };
  struct FunctorApp {
    std::string name;
    std::vector<RelExprPtr> args;
  };
  struct Compose {
    RelExprPtr first, second;
  };
  using Node = std::variant<Atom, Eq, EquivSide, DepFun, FunctorApp, Compose>;
  Node node;

  std::string text() const;
};

RelExprPtr parse_rel_expr(std::string_view text);

struct EngineConfig {
  std::size_t cap = kDefaultCap;
  std::size_t list_bound = kDefaultListBound;
};

/// Evaluable relation view: either an extensional Rel or a lazily evaluated
/// function relator over (possibly huge) table spaces. All synthesized
/// relations are endorelations whose element space can be enumerated on
/// demand, subject to the cap.
class SynthRel {
 public:
  virtual ~SynthRel() = default;
  /// Membership; on failure of a relator clause the left binder values along
  /// the failing path are prepended to chain (outermost first).
  virtual bool contains(const Value& x, const Value& y, ValueSeq* chain = nullptr) const = 0;
  virtual const std::string& key() const = 0;
  virtual bool is_full() const = 0;
  virtual std::size_t space_size(std::size_t cap) const = 0;
  virtual ValueSeq space_elements(std::size_t cap) const = 0;

  Rel materialize(std::size_t cap, const std::string& name_hint) const;
};
using SynthRelPtr = std::shared_ptr<const SynthRel>;

/// A synthesized equivalence: relation views, transports on element
/// encodings, and a per-pair similarity evaluator following the closure kind
/// at the root expression node. Construction has already re-checked every
/// side condition, so the record is PER-certified by the closure theorems.
struct Synthesized {
  SynthRelPtr L, R;
  std::function<Value(const Value&)> to_right, to_left;
  std::string text_left, text_right;
  std::function<CheckReport(const Value&, const Value&, bool)> similarity_at;
  std::shared_ptr<const EquivalenceRecord> ext;  // set when extensional
  std::vector<CarrierRef> right_arg_doms;        // argument chain of transported terms
  CarrierRef right_result_cod;
  std::shared_ptr<const void> keepalive;  // owns the elaboration state behind the closures
};

Synthesized elaborate(const Registry& reg, const RelExprPtr& lhs, const RelExprPtr& rhs,
                      const EngineConfig& cfg = {});

/// Extensional record for a synthesized equivalence; errors under the cap
/// for large function spaces.
EquivalenceRecord materialize_synthesized(const Synthesized& syn, std::size_t cap);

struct TransportOutcome {
  bool ok = false;
  std::optional<Value> term_out;
  CheckReport in_dom;
  CheckReport relatedness;
  CheckReport similarity;
  std::shared_ptr<Synthesized> synthesized;
};

/// Transports a registered term (or value literal) through the synthesized
/// equivalence: checks in_dom L t, applies the left transport, then verifies
/// relatedness and the rewritten similarity form.
TransportOutcome transport_term(const Registry& reg, const std::string& term,
                                const RelExprPtr& lhs, const RelExprPtr& rhs,
                                const EngineConfig& cfg = {});

/// Condition-necessity search. Claims: composition_closure (droppable:
/// commutation), depfun_closure, guarded_subtraction (droppable: guard);
/// "none" sweeps for soundness. Returns a report whose property is either
/// counterexample_found (with the instance as witness) or search_exhausted.
CheckReport counterexample_search(const std::string& claim, const std::string& dropped,
                                  std::size_t bound);

}  // namespace transport
