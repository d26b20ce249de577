#pragma once

#include <iosfwd>

#include "transport/engine.hpp"

namespace transport {

/// One executed command (or registration event).
struct RunEntry {
  std::string status;   // PASS | FAIL | INAPPLICABLE | ERROR
  std::string command;  // e.g. "check zpos_bad"
  std::string detail;
  ValueSeq witness;
  std::string dump_json;  // serialized JSON object; empty when absent
};

/// Deterministic outcome of running a declaration file: byte-identical
/// across runs for identical input (no timestamps in either format).
struct RunReport {
  std::vector<RunEntry> entries;

  bool ok() const;
  int exit_code() const { return ok() ? 0 : 1; }
};

struct RunOptions {
  std::size_t cap = kDefaultCap;
  std::size_t list_bound = kDefaultListBound;
};

/// Parses and executes a declaration document (JSON text). Parse and
/// reference errors throw ParseError/NotFound with positions; command-level
/// failures become FAIL/ERROR entries.
RunReport run_document_text(const std::string& json_text, const RunOptions& opts = {});
RunReport run_file(const std::string& path, const RunOptions& opts = {});

enum class ReportFormat { text, structured };

std::string emit_report(const RunReport& report, ReportFormat format);

/// Inverse of the structured format; emit(parse(bytes)) == bytes.
RunReport parse_structured_report(const std::string& bytes);

}  // namespace transport
