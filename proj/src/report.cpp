#include "bialint/report.hpp"

#include <algorithm>
#include <sstream>

#include "bialint/catalog.hpp"
#include "bialint/errors.hpp"
#include "bialint/hopf.hpp"
#include "bialint/oslash.hpp"
#include "bialint/presentation_io.hpp"

namespace bialint {

Report::Report(std::string command, std::string target) : command_(std::move(command)), target_(std::move(target)) {}

void Report::echo(const std::string& key, const std::string& value) {
  for (auto& kv : inputs_) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  inputs_.emplace_back(key, value);
}

void Report::add_line(const std::string& section, const std::string& line) {
  for (auto& [name, lines] : sections_) {
    if (name == section) {
      lines.push_back(line);
      return;
    }
  }
  sections_.push_back({section, {line}});
}

void Report::set_value(const std::string& key, nlohmann::ordered_json value) { values_[key] = std::move(value); }

void Report::add_check(CheckResult check) { checks_.push_back(std::move(check)); }

void Report::check(const std::string& name, const std::string& claim, bool passed, const std::string& detail) {
  checks_.push_back({name, claim, passed, detail});
}

void Report::add_timing(const std::string& name, double seconds) { timings_.emplace_back(name, seconds); }

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

std::string Report::text(bool timings) const {
  std::ostringstream out;
  out << "bialint " << command_ << " " << target_ << "\n";
  for (const auto& [k, v] : inputs_) out << "  " << k << " = " << v << "\n";
  for (const auto& [name, lines] : sections_) {
    out << "\n" << name << ":\n";
    for (const std::string& line : lines) out << "  " << line << "\n";
  }
  if (!checks_.empty()) {
    out << "\nchecks:\n";
    for (const CheckResult& c : checks_) {
      out << "  " << (c.passed ? "PASS" : "FAIL") << " " << c.name;
      if (!c.claim.empty()) out << " [" << c.claim << "]";
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
    const auto failed = std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; });
    out << "\n" << (checks_.size() - static_cast<std::size_t>(failed)) << "/" << checks_.size() << " checks passed\n";
  }
  if (timings && !timings_.empty()) {
    out << "\ntimings:\n";
    for (const auto& [name, s] : timings_) out << "  " << name << " " << s << " s\n";
  }
  return out.str();
}

std::string Report::json(bool timings) const {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command_;
  j["target"] = target_;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inputs_) inputs[k] = v;
  j["inputs"] = inputs;
  j["results"] = values_;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks_) {
    checks.push_back({{"name", c.name}, {"claim", c.claim}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  j["passed"] = passed();
  if (timings) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [name, s] : timings_) t[name] = s;
    j["timings"] = t;
  }
  return j.dump(2) + "\n";
}

void echo_options(Report& report, const CommandOptions& options, bool with_mode) {
  report.echo("d", std::to_string(options.degree));
  report.echo("slack", std::to_string(options.slack));
  report.echo("margin", std::to_string(options.margin));
  if (with_mode) report.echo("mode", to_string(options.mode));
  if (options.q) report.echo("q", options.q->to_string());
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string functional_text(const SolutionSpace& sol, const SparseVector& v) {
  std::vector<std::string> parts;
  for (const auto& [j, c] : v) parts.push_back(sol.labels.at(j) + " -> " + c.to_string());
  return parts.empty() ? "0" : join(parts, ", ");
}

OslashSpace build_space(const Presentation& b, const CommandOptions& options) {
  return OslashSpace::build(b, OslashOptions{options.degree, options.slack, true});
}

void add_basis(Report& r, const Presentation& b, const CommandOptions& options) {
  const bool finite = b.finite_dimensional();
  const std::vector<Word> words = finite ? b.full_basis() : b.basis(options.degree);
  std::map<int, std::size_t> per_degree;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Word& w : words) {
    ++per_degree[b.degree(w)];
    list.push_back(b.alphabet().format(w));
  }
  std::vector<std::string> counts;
  for (const auto& [d, n] : per_degree) counts.push_back(std::to_string(d) + ":" + std::to_string(n));
  r.add_line("basis", std::string(finite ? "finite, dimension " : "words of degree <= " + std::to_string(options.degree) +
                                                                        ", count ") +
                          std::to_string(words.size()));
  r.add_line("basis", "per degree " + join(counts, " "));
  std::vector<std::string> shown;
  for (const Word& w : words) shown.push_back(b.alphabet().format(w));
  r.add_line("basis", join(shown, ", "));
  r.set_value("basis", {{"finite", finite}, {"words", list}});

  if (b.backend() == Backend::free_algebra) {
    const ConfluenceResult conf = check_confluence(b.rules());
    r.check("confluence", "every overlap and inclusion ambiguity resolves", conf.confluent,
            std::to_string(conf.checked) + " ambiguities checked");
  }
  const int axiom_degree = finite ? b.top_degree() : std::min(options.degree, 4);
  const AxiomReport axioms = check_axioms(b, axiom_degree);
  r.check("bialgebra axioms", "coassociativity, counit, multiplicativity and bi-ideal conditions", axioms.passed(),
          axioms.passed() ? std::to_string(axioms.checked) + " identities up to degree " + std::to_string(axiom_degree)
                          : axioms.summary());
}

void add_oslash(Report& r, const OslashSpace& os) {
  const Presentation& b = os.presentation();
  const Alphabet& a = b.alphabet();
  const auto dims = os.dimensions_per_degree();
  std::vector<std::string> counts;
  nlohmann::ordered_json dims_json = nlohmann::ordered_json::array();
  for (std::size_t d = 0; d < dims.size(); ++d) {
    counts.push_back(std::to_string(d) + ":" + std::to_string(dims[d]));
    dims_json.push_back(dims[d]);
  }
  if (os.exact()) {
    r.add_line("B (/) B", "exact, dimension " + std::to_string(os.dimension()));
  } else {
    r.add_line("B (/) B", "window D = " + std::to_string(os.window()) + ", trusted up to degree " +
                              std::to_string(os.degree()) + ", " + (os.stable() ? "stable" : "NOT stable") +
                              " under a wider window");
  }
  r.add_line("B (/) B", "dimensions per degree " + join(counts, " "));
  std::vector<std::string> shown;
  nlohmann::ordered_json basis_json = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < os.dimension(); ++i) {
    if (!os.exact() && os.filtration_degree(i) > os.degree()) break;
    const std::string label = os.format(OslashElement(i));
    shown.push_back(label);
    basis_json.push_back(label);
  }
  r.add_line("B (/) B", "canonical basis: " + join(shown, ", "));

  const IBProbe probe = probe_iB(os);
  const std::vector<NcPoly> kernel = kernel_iB(os);
  r.add_line("i_B", std::string("injective: ") + (probe.injective ? "yes" : "no") +
                        ", surjective: " + (probe.surjective ? "yes" : "no"));
  if (!probe.note.empty()) r.add_line("i_B", probe.note);
  std::vector<std::string> ker;
  for (const NcPoly& k : kernel) ker.push_back(format_poly(k, a));
  if (!ker.empty()) r.add_line("i_B", "kernel: " + join(ker, ", "));
  r.set_value("oslash", {{"exact", os.exact()},
                         {"d", os.degree()},
                         {"D", os.window()},
                         {"stable", os.stable()},
                         {"dimension", os.dimension()},
                         {"dimensions_per_degree", dims_json},
                         {"canonical_basis", basis_json},
                         {"iB_injective", probe.injective},
                         {"iB_surjective", probe.surjective}});
  if (!os.exact()) {
    r.check("window stability", "per-degree dimensions agree at slack and slack + 1", os.stable());
  }
}

void add_integrals(Report& r, const OslashSpace& os, IntegralMode mode, const CommandOptions& options) {
  const SolutionSpace sol = solve_integrals(os, mode, SolveOptions{std::min(options.degree, os.window()), options.margin});
  const std::string section = "integrals (" + to_string(mode) + ")";
  r.add_line(section, "dimension " + std::to_string(sol.dimension()) + ", interior dimension " +
                          std::to_string(sol.interior_dimension()) + ", constraints " +
                          std::to_string(sol.num_constraints));
  for (std::size_t i = 0; i < sol.basis.size(); ++i) {
    r.add_line(section, "basis " + std::to_string(i) + ": " + functional_text(sol, sol.basis[i]));
  }
  for (std::size_t i = 0; i < sol.interior_basis.size() && !sol.exact; ++i) {
    r.add_line(section, "interior " + std::to_string(i) + ": " + functional_text(sol, sol.interior_basis[i]));
  }
  const auto untouched = std::count(sol.touched.begin(), sol.touched.end(), false);
  if (untouched) r.add_line(section, std::to_string(untouched) + " coordinates are untouched by any constraint");
  r.add_line(section, sol.total_integral ? "total integral: " + functional_text(sol, *sol.total_integral)
                                         : std::string("no total integral"));
  r.set_value(to_string(mode), nlohmann::ordered_json::parse(sol.to_json()));
}

}  // namespace

Report basis_report(const Presentation& b, const CommandOptions& options) {
  Report r("basis", b.name());
  echo_options(r, options, false);
  add_basis(r, b, options);
  return r;
}

Report oslash_space_report(const Presentation& b, const CommandOptions& options) {
  Report r("oslash", b.name());
  echo_options(r, options, false);
  add_oslash(r, build_space(b, options));
  return r;
}

Report integrals_report(const Presentation& b, const CommandOptions& options) {
  Report r("integrals", b.name());
  echo_options(r, options, true);
  const OslashSpace os = build_space(b, options);
  add_integrals(r, os, options.mode, options);
  return r;
}

namespace {

void add_antipode(Report& r, const Presentation& b, const CommandOptions& options) {
  const Alphabet& a = b.alphabet();
  if (b.finite_dimensional()) {
    const OslashSpace os = OslashSpace::build(b);
    nlohmann::ordered_json sides = nlohmann::ordered_json::object();
    for (AntipodeSide side : {AntipodeSide::two_sided, AntipodeSide::right, AntipodeSide::left}) {
      const AntipodeResult res = solve_antipode(b, side);
      const std::string section = "antipode (" + to_string(side) + ")";
      nlohmann::ordered_json entry = {{"exists", res.antipode.has_value()}, {"unique", res.unique}};
      if (res.antipode) {
        nlohmann::ordered_json images = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < res.antipode->basis.size(); ++i) {
          images[a.format(res.antipode->basis[i])] = format_poly(res.antipode->images[i], a);
        }
        entry["images"] = images;
      }
      if (!res.note.empty()) entry["note"] = res.note;
      sides[to_string(side)] = entry;
      r.set_value("antipode", sides);
      if (!res.antipode) {
        r.add_line(section, "none: " + res.note);
        continue;
      }
      r.add_line(section, res.unique ? "unique solution" : res.note);
      std::istringstream lines(res.antipode->format(a));
      for (std::string line; std::getline(lines, line);) r.add_line(section, line);
      if (side == AntipodeSide::two_sided) {
        const AntipodeReport props = check_antipode_properties(*res.antipode, os, 0);
        r.check("antipode properties", "S anti-multiplicative, anti-comultiplicative, x (/) y -> x S(y) inverts i_B",
                props.ok(), props.ok() ? std::to_string(props.pairs_checked) + " pairs" : props.failures.front());
      }
    }
    return;
  }
  try {
    const AntipodeResult res = solve_antipode(b, AntipodeSide::two_sided);
    r.add_line("antipode", "none: " + res.note);
  } catch (const UnsupportedMode& e) {
    r.add_line("antipode", e.what());
  }
  if (b.has_antipode()) {
    const OslashSpace os = build_space(b, options);
    const AntipodeReport props = check_antipode_properties(declared_antipode(b, os.degree()), os, os.degree());
    r.check("declared antipode", "S anti-multiplicative, anti-comultiplicative, x (/) y -> x S(y) inverts i_B",
            props.ok(), props.ok() ? std::to_string(props.pairs_checked) + " pairs" : props.failures.front());
  }
}

void add_envelope(Report& r, const Presentation& b) {
  if (!b.finite_dimensional()) {
    r.add_line("envelope", "only computed for finite-dimensional bialgebras");
    return;
  }
  const Envelope env = hopf_envelope_findim(b);
  const Alphabet& a = b.alphabet();
  std::vector<std::string> ker;
  for (const NcPoly& k : env.kernel) ker.push_back(format_poly(k, a));
  r.add_line("envelope", "dimension " + std::to_string(env.hopf.dimension()) + ", kernel of i_B: " +
                             (ker.empty() ? std::string("0") : join(ker, ", ")));
  const std::string text = serialize_presentation(env.hopf);
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) r.add_line("envelope", line);
  r.set_value("envelope", {{"dimension", env.hopf.dimension()}, {"presentation", text}});
  r.check("envelope axioms", "B / ker(i_B) is a bialgebra", env.axioms.passed());
  r.check("envelope antipode", "B / ker(i_B) has a two-sided antipode", env.antipode.antipode.has_value());
}

}  // namespace

Report antipode_report(const Presentation& b, const CommandOptions& options) {
  Report r("antipode", b.name());
  echo_options(r, options, false);
  add_antipode(r, b, options);
  return r;
}

Report envelope_report(const Presentation& b, const CommandOptions& options) {
  Report r("envelope", b.name());
  echo_options(r, options, false);
  add_envelope(r, b);
  return r;
}

Report full_report(const Presentation& b, const CommandOptions& options) {
  Report r("report", b.name());
  echo_options(r, options, false);
  add_basis(r, b, options);
  const OslashSpace os = build_space(b, options);
  add_oslash(r, os);
  for (IntegralMode mode : {IntegralMode::oslash_new, IntegralMode::oslash_augmented, IntegralMode::classical}) {
    add_integrals(r, os, mode, options);
  }
  add_antipode(r, b, options);
  add_envelope(r, b);
  return r;
}

Report list_report() {
  static const std::vector<std::pair<std::string, std::string>> descriptions = {
      {"poly_grouplike", "k[X] with X group-like"},
      {"laurent", "k[X, X^-1] with S(X) = X^-1"},
      {"quantum_plane", "k_q[x, y], yx = q xy (parameter q)"},
      {"quantum_laurent", "k_q[x, x^-1, y] with declared antipode (parameter q)"},
      {"matrix_bialgebra", "M(n), commutative, Delta(x_ij) = sum_k x_ik (x) x_kj (parameter n)"},
      {"sixdim", "six-dimensional quotient of the quantum plane at q = -1"},
      {"sweedler_h4", "Sweedler's four-dimensional Hopf algebra"},
      {"group_c2", "group algebra of the cyclic group of order 2"},
      {"a_times_k", "A x k with A = k^dim (parameter dim)"},
      {"trivial", "the ground field"},
  };
  Report r("list", "catalog");
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (const std::string& name : catalog_names()) {
    std::string desc;
    for (const auto& [n, d] : descriptions) {
      if (n == name) desc = d;
    }
    r.add_line("catalog", name + (desc.empty() ? "" : "  " + desc));
    names.push_back(name);
  }
  r.set_value("catalog", names);
  return r;
}

}  // namespace bialint
