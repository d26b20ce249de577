#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "transport/document.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite-model transport engine: checks, closures and term transport"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  std::size_t cap = transport::kDefaultCap;
  std::size_t list_bound = transport::kDefaultListBound;

  CLI::App* run = app.add_subcommand("run", "Execute a declaration file");
  run->add_option("file", path, "Declaration document (JSON)")->required();
  run->add_option("--format", format, "Report format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  run->add_option("--cap", cap, "Function-space materialization cap");
  run->add_option("--list-bound", list_bound, "Global list length bound");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto start = std::chrono::steady_clock::now();
    transport::RunReport report = transport::run_file(path, {cap, list_bound});
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cout << transport::emit_report(report, format == "text"
                                                    ? transport::ReportFormat::text
                                                    : transport::ReportFormat::structured);
    std::cerr << "completed in " << elapsed.count() << " ms\n";
    return report.exit_code();
  } catch (const transport::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
