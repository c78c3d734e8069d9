// bialint: command-line front end.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 input error,
// 3 a resource guard tripped.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bialint/catalog.hpp"
#include "bialint/errors.hpp"
#include "bialint/presentation_io.hpp"
#include "bialint/report.hpp"
#include "bialint/verify.hpp"

namespace {

using namespace bialint;

enum Exit { ok = 0, check_failed = 1, input_error = 2, resource_guard = 3 };

Presentation load_target(const std::string& target, const CommandOptions& opts) {
  const std::vector<std::string> names = catalog_names();
  if (std::find(names.begin(), names.end(), target) != names.end()) {
    CatalogParams params;
    if (opts.q) params.q = *opts.q;
    return catalog_load(target, params);
  }
  if (std::filesystem::exists(target)) return load_presentation_file(target);
  throw MalformedInput("'" + target + "' is neither a catalog name nor a readable file");
}

Report run(const std::string& verb, const std::string& target, const CommandOptions& opts) {
  if (verb == "list") return list_report();
  if (verb == "verify") {
    VerifyOptions v;
    v.q = opts.q;
    return run_verify(target, v);
  }
  const Presentation b = load_target(target, opts);
  if (verb == "basis") return basis_report(b, opts);
  if (verb == "oslash") return oslash_space_report(b, opts);
  if (verb == "integrals") return integrals_report(b, opts);
  if (verb == "antipode") return antipode_report(b, opts);
  if (verb == "envelope") return envelope_report(b, opts);
  return full_report(b, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrals and Hopf envelopes of finitely presented bialgebras"};
  std::string verb, target, mode = "new", q_text, out_path;
  CommandOptions opts;
  bool json = false, timings = false;

  app.add_option("verb", verb, "list, basis, oslash, integrals, antipode, envelope, verify or report")
      ->required()
      ->check(CLI::IsMember({"list", "basis", "oslash", "integrals", "antipode", "envelope", "verify", "report"}));
  app.add_option("target", target, "catalog name, presentation file, or verification suite");
  app.add_option("--degree", opts.degree, "trusted degree d")->check(CLI::NonNegativeNumber);
  app.add_option("--slack", opts.slack, "extra relation degrees above d")->check(CLI::NonNegativeNumber);
  app.add_option("--margin", opts.margin, "interior coordinates have degree <= d - margin")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--mode", mode, "integral mode")
      ->check(CLI::IsMember({"new", "augmented", "classical", "three_variable", "in_algebra"}));
  app.add_option("--q", q_text, "parameter for quantum catalog entries, e.g. 1/3");
  app.add_flag("--json", json, "emit the JSON report");
  app.add_option("--out", out_path, "write the report to a file");
  app.add_flag("--timings", timings, "include wall-clock timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }

  try {
    if (verb != "list" && target.empty()) throw MalformedInput(verb + " needs a target");
    if (opts.margin > opts.degree) throw MalformedInput("--margin must not exceed --degree");
    opts.mode = parse_integral_mode(mode);
    if (!q_text.empty()) {
      opts.q = Scalar::parse(q_text);
      if (opts.q->is_zero()) throw MalformedInput("q must be nonzero");
    }

    const auto start = std::chrono::steady_clock::now();
    Report report = run(verb, target, opts);
    report.add_timing("total", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    const std::string text = json ? report.json(timings) + "\n" : report.text(timings);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!(out << text)) throw MalformedInput("cannot write " + out_path);
    }
    return report.passed() ? ok : check_failed;
  } catch (const WindowOverflow& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return resource_guard;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return resource_guard;
  } catch (const NonTermination& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return resource_guard;
  } catch (const CompletionOverflow& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return resource_guard;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return check_failed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
}
