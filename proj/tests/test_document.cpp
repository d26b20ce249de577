#include <doctest.h>

#include <fstream>
#include <sstream>

#include "transport/document.hpp"

using namespace transport;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture(const std::string& name) {
  return std::string(TRANSPORT_FIXTURE_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
  return std::string(TRANSPORT_GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("empty document yields an empty passing report") {
  RunReport rep = run_document_text("{}");
  CHECK(rep.entries.empty());
  CHECK(rep.ok());
  CHECK(rep.exit_code() == 0);
  CHECK(emit_report(rep, ReportFormat::text) == "OK\n");
}

TEST_CASE("documents match their golden reports byte for byte") {
  struct Expect {
    const char* name;
    int exit_code;
  };
  for (const Expect& e : {Expect{"empty", 0}, Expect{"zpos_bad", 1}, Expect{"halving", 1},
                          Expect{"lists_fsets", 0}, Expect{"subtraction", 1},
                          Expect{"indexing", 0}, Expect{"functors", 0},
                          Expect{"composition", 0}, Expect{"decrement", 0}}) {
    CAPTURE(e.name);
    RunReport rep = run_file(fixture(std::string(e.name) + ".json"));
    CHECK(rep.exit_code() == e.exit_code);
    CHECK(emit_report(rep, ReportFormat::structured) ==
          slurp(golden(std::string(e.name) + ".structured.json")));
    CHECK(emit_report(rep, ReportFormat::text) ==
          slurp(golden(std::string(e.name) + ".text.txt")));
  }
}

TEST_CASE("identical runs produce byte-identical structured reports") {
  for (const char* name : {"subtraction", "lists_fsets", "composition"}) {
    const std::string path = fixture(std::string(name) + ".json");
    const std::string once = emit_report(run_file(path), ReportFormat::structured);
    const std::string twice = emit_report(run_file(path), ReportFormat::structured);
    CHECK(once == twice);
  }
}

TEST_CASE("structured reports round-trip through their parser") {
  const std::string bytes =
      emit_report(run_file(fixture("subtraction.json")), ReportFormat::structured);
  RunReport parsed = parse_structured_report(bytes);
  CHECK(emit_report(parsed, ReportFormat::structured) == bytes);
}

TEST_CASE("the spec's broken-retraction line renders exactly") {
  RunReport rep = run_file(fixture("zpos_bad.json"));
  REQUIRE(rep.entries.size() == 1);
  const std::string text = emit_report(rep, ReportFormat::text);
  CHECK(text.find("FAIL check zpos_bad half_galois_left witness=(1,1)\n") != std::string::npos);
}

TEST_CASE("parse errors carry line and column") {
  try {
    run_document_text("{\n  \"carriers\": {\n    oops\n}}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("unresolved references are reported") {
  CHECK_THROWS_AS(run_document_text(R"({"relations": {"R": {"eq": "NoSuchCarrier"}}})"),
                  NotFound);
  // Unknown names inside commands surface as ERROR entries, not crashes.
  RunReport rep = run_document_text(
      R"({"commands": [{"cmd": "check", "class": "per_equiv", "equivalence": "missing"}]})");
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].status == "ERROR");
  CHECK(rep.exit_code() == 1);
  RunReport rep2 = run_document_text(R"({"commands": [{"cmd": "frobnicate"}]})");
  CHECK(rep2.entries.at(0).status == "ERROR");
}

TEST_CASE("declared equivalences that claim registration must be PERs") {
  const char* doc = R"({
    "carriers": {"N4": ["0","1","2","3"], "H2": ["0","1"]},
    "relations": {
      "Le4": {"between": ["N4","N4"], "pairs": [
        ["0","0"],["0","1"],["0","2"],["0","3"],["1","1"],["1","2"],["1","3"],
        ["2","2"],["2","3"],["3","3"]]},
      "Le2": {"between": ["H2","H2"], "pairs": [["0","0"],["0","1"],["1","1"]]}
    },
    "functions": {
      "halve": {"dom": "N4", "cod": "H2", "table": [["0","0"],["1","0"],["2","1"],["3","1"]]},
      "dbl1": {"dom": "H2", "cod": "N4", "table": [["0","1"],["1","3"]]}
    },
    "equivalences": {"halving": {"L": "Le4", "R": "Le2", "l": "halve", "r": "dbl1"}},
    "commands": []
  })";
  RunReport rep = run_document_text(doc);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].status == "ERROR");
  CHECK(rep.entries[0].command == "register halving");
  CHECK(rep.exit_code() == 1);
}

TEST_CASE("caps propagate into documents") {
  RunOptions tight;
  tight.cap = 8;
  // The subtraction document cannot even declare its curried table: the inner
  // function space has 5^5 tables.
  CHECK_THROWS_AS(run_file(fixture("subtraction.json"), tight), CapExceeded);
  // Commands that exceed the cap report ERROR entries instead.
  RunOptions small;
  small.cap = 2;
  RunReport rep = run_file(fixture("decrement.json"), small);
  CHECK_FALSE(rep.ok());
  bool saw_cap_error = false;
  for (const RunEntry& e : rep.entries)
    if (e.status == "ERROR" && e.detail.find("cap") != std::string::npos) saw_cap_error = true;
  CHECK(saw_cap_error);
}
