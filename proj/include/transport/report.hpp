#pragma once

#include <string>
#include <vector>

#include "transport/value.hpp"

namespace transport {

enum class Verdict { pass, fail, inapplicable };

const char* to_string(Verdict v);

/// Outcome of a predicate, lemma or theorem check. Failures of universally
/// quantified properties carry the canonically smallest witness tuple found
/// by scanning in canonical order. Hypothesis-gated checks report
/// `inapplicable` when hypotheses are unmet: only `fail` signals a refutation.
struct CheckReport {
  Verdict verdict = Verdict::pass;
  std::string property;
  ValueSeq witness;
  std::vector<CheckReport> subs;

  bool ok() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }

  static CheckReport passed(std::string prop) { return {Verdict::pass, std::move(prop), {}, {}}; }
  static CheckReport failure(std::string prop, ValueSeq wit = {}) {
    return {Verdict::fail, std::move(prop), std::move(wit), {}};
  }
  /// Conjunction: fails with the first failing sub, passes otherwise.
  static CheckReport all_of(std::string prop, std::vector<CheckReport> subs);
  /// Like all_of, but inapplicable subs are acceptable (a suite of gated
  /// checks refutes only on an actual failure).
  static CheckReport suite_of(std::string prop, std::vector<CheckReport> subs);
  /// Gate: if hypotheses fail, the whole check is inapplicable.
  static CheckReport gated(std::string prop, CheckReport hypotheses, CheckReport conclusion);

  /// Deepest first failing leaf, or nullptr when ok.
  const CheckReport* first_failure() const;

  /// "property" or "property witness=(v1,v2)" of the first failure.
  std::string summary() const;
};

std::string format_witness(const ValueSeq& witness);

}  // namespace transport
