#include "transport/report.hpp"

#include <sstream>

namespace transport {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

CheckReport CheckReport::all_of(std::string prop, std::vector<CheckReport> subs) {
  CheckReport r;
  r.property = std::move(prop);
  r.verdict = Verdict::pass;
  for (const CheckReport& s : subs) {
    if (s.failed()) {
      r.verdict = Verdict::fail;
      break;
    }
    if (s.verdict == Verdict::inapplicable && r.verdict == Verdict::pass)
      r.verdict = Verdict::inapplicable;
  }
  r.subs = std::move(subs);
  return r;
}

CheckReport CheckReport::suite_of(std::string prop, std::vector<CheckReport> subs) {
  CheckReport r;
  r.property = std::move(prop);
  r.verdict = Verdict::pass;
  for (const CheckReport& s : subs) {
    if (s.failed()) {
      r.verdict = Verdict::fail;
      break;
    }
  }
  r.subs = std::move(subs);
  return r;
}

CheckReport CheckReport::gated(std::string prop, CheckReport hypotheses, CheckReport conclusion) {
  CheckReport r;
  r.property = std::move(prop);
  if (!hypotheses.ok()) {
    r.verdict = Verdict::inapplicable;
  } else {
    r.verdict = conclusion.verdict;
  }
  r.subs.push_back(std::move(hypotheses));
  r.subs.push_back(std::move(conclusion));
  return r;
}

const CheckReport* CheckReport::first_failure() const {
  if (!failed()) return nullptr;
  for (const CheckReport& s : subs) {
    if (const CheckReport* f = s.first_failure()) return f;
  }
  return this;
}

std::string format_witness(const ValueSeq& witness) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) os << ',';
    os << witness[i];
  }
  os << ')';
  return os.str();
}

std::string CheckReport::summary() const {
  const CheckReport* f = first_failure();
  const CheckReport& r = f ? *f : *this;
  std::string s = r.property;
  if (!r.witness.empty()) s += " witness=" + format_witness(r.witness);
  return s;
}

}  // namespace transport
