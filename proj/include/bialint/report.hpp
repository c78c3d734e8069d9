#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bialint/integrals.hpp"
#include "bialint/presentation.hpp"

namespace bialint {

inline constexpr int kReportSchemaVersion = 1;

struct CheckResult {
  std::string name;
  /// The mathematical statement being checked.
  std::string claim;
  bool passed = false;
  std::string detail;
};

/// Result document of one command. Text and JSON renderings are
/// deterministic; timings are only rendered on request.
class Report {
 public:
  Report(std::string command, std::string target);

  void echo(const std::string& key, const std::string& value);
  /// Appends a line of human-readable output under a section heading.
  void add_line(const std::string& section, const std::string& line);
  /// Structured result for the JSON rendering.
  void set_value(const std::string& key, nlohmann::ordered_json value);
  void add_check(CheckResult check);
  void check(const std::string& name, const std::string& claim, bool passed, const std::string& detail = "");
  void add_timing(const std::string& name, double seconds);

  const std::string& command() const { return command_; }
  const std::string& target() const { return target_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool passed() const;

  std::string text(bool timings = false) const;
  std::string json(bool timings = false) const;

 private:
  std::string command_;
  std::string target_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::pair<std::string, std::vector<std::string>>> sections_;
  nlohmann::ordered_json values_ = nlohmann::ordered_json::object();
  std::vector<CheckResult> checks_;
  std::vector<std::pair<std::string, double>> timings_;
};

/// Options shared by the computing commands.
struct CommandOptions {
  int degree = 5;
  int slack = 2;
  int margin = 2;
  IntegralMode mode = IntegralMode::oslash_new;
  /// Echoed when given; catalog entries with a parameter use it.
  std::optional<Scalar> q;
};

/// Echoes d, slack, margin, mode and q into the report.
void echo_options(Report& report, const CommandOptions& options, bool with_mode);

Report basis_report(const Presentation& b, const CommandOptions& options);
Report oslash_space_report(const Presentation& b, const CommandOptions& options);
Report integrals_report(const Presentation& b, const CommandOptions& options);
Report antipode_report(const Presentation& b, const CommandOptions& options);
Report envelope_report(const Presentation& b, const CommandOptions& options);
/// Everything above in one document, every integral mode included.
Report full_report(const Presentation& b, const CommandOptions& options);
/// Catalog names with a one-line description.
Report list_report();

}  // namespace bialint
