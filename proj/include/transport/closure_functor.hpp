#pragma once

#include "transport/galois.hpp"

namespace transport {

/// A natural functor over finite carriers: a carrier builder plus a mapper
/// (lifts functions) and a relator (lifts relations). Lawful instances
/// satisfy map(id,...) = id and relator(=,...) = (=) on the built carrier.
struct FunctorDef {
  std::string name;
  std::size_t arity = 1;
  std::function<CarrierRef(const std::vector<CarrierRef>&)> build_carrier;
  std::function<FunTable(const std::vector<FunTable>&)> lift_map;
  std::function<Rel(const std::vector<Rel>&)> lift_rel;
};

FunctorDef identity_functor();
FunctorDef const_functor(CarrierRef c);
FunctorDef product_functor();
FunctorDef sum_functor();
FunctorDef option_functor();
FunctorDef list_functor(std::size_t max_len);

/// Builtins by name: identity, product, sum, option, listK (K a digit,
/// bounded by the global list bound).
FunctorDef builtin_functor(std::string_view name, std::size_t list_bound = kDefaultListBound);

Value functor_map(const FunctorDef& f, const std::vector<FunTable>& fs, const Value& v);
bool functor_rel(const FunctorDef& f, const std::vector<Rel>& rs, const Value& x, const Value& y);

EquivalenceRecord build_functor_closure(const FunctorDef& f,
                                        const std::vector<EquivalenceRecord>& components);

enum class FunctorStar { connection, galois_equiv, pre_equiv, per_equiv };
const char* to_string(FunctorStar s);

/// Hypothesis-gated: if every component passes the star class, the built
/// record must too.
CheckReport verify_functor_theorem(const FunctorDef& f,
                                   const std::vector<EquivalenceRecord>& components,
                                   FunctorStar star);

/// The Galois relator of the built record equals the functor relator of the
/// component Galois relators, unconditionally.
CheckReport functor_similarity_check(const FunctorDef& f,
                                     const std::vector<EquivalenceRecord>& components);

/// map id = id and relator of equalities = equality, on the given carriers.
CheckReport functor_law_check(const FunctorDef& f, const std::vector<CarrierRef>& carriers);

}  // namespace transport
