#include "bialint/presentation_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "bialint/errors.hpp"

namespace bialint {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw MalformedInput(message + " at column " + std::to_string(pos_ + 1) + " of '" + std::string(text_) + "'");
  }

  std::optional<Scalar> number() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == pos_) return std::nullopt;
    if (end < text_.size() && text_[end] == '/') {
      ++end;
      const std::size_t den = end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end == den) fail("malformed rational");
    }
    const std::string_view token = text_.substr(pos_, end - pos_);
    pos_ = end;
    return Scalar::parse(token);
  }

  bool at_identifier() {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Word word() {
    std::vector<Letter> letters;
    while (true) {
      skip_space();
      std::size_t end = pos_;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
      if (end == pos_) fail("expected a generator");
      const std::string_view name = text_.substr(pos_, end - pos_);
      auto g = alphabet_.find(name);
      if (!g) fail("unknown generator '" + std::string(name) + "'");
      letters.push_back(*g);
      pos_ = end;
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        continue;
      }
      break;
    }
    return Word(std::move(letters));
  }

  // [number ['*']] [word]
  NcPoly term() {
    auto c = number();
    if (c) {
      accept("*");
      if (!at_identifier()) return NcPoly(Word{}, *c);
    }
    return NcPoly(word(), c.value_or(Scalar(1)));
  }

  NcPoly poly() {
    NcPoly out;
    Scalar sign(1);
    if (accept("-")) {
      sign = Scalar(-1);
    } else {
      accept("+");
    }
    out.add_scaled(term(), sign);
    while (true) {
      if (accept("+")) {
        out.add_scaled(term(), Scalar(1));
      } else if (peek() == '-') {
        accept("-");
        out.add_scaled(term(), Scalar(-1));
      } else {
        break;
      }
    }
    return out;
  }

  NcPoly factor() {
    // In factor position "(x)" is a parenthesised generator named x.
    if (peek() == '(') {
      accept("(");
      NcPoly p = poly();
      expect(")");
      return p;
    }
    return term();
  }

  TensorPoly tensor_term() {
    NcPoly left;
    Scalar coefficient(1);
    auto c = number();
    if (c) {
      accept("*");
      if (peek() == '(' && text_.substr(pos_, 3) == "(x)") {
        left = NcPoly(Word{}, *c);
      } else {
        coefficient = *c;
        left = factor();
      }
    } else {
      left = factor();
    }
    expect("(x)");
    NcPoly right = factor();
    return tensor(left, right) * coefficient;
  }

  TensorPoly tensor_sum() {
    TensorPoly out;
    Scalar sign(1);
    if (accept("-")) {
      sign = Scalar(-1);
    } else {
      accept("+");
    }
    out.add_scaled(tensor_term(), sign);
    while (true) {
      if (accept("+")) {
        out.add_scaled(tensor_term(), Scalar(1));
      } else if (peek() == '-') {
        accept("-");
        out.add_scaled(tensor_term(), Scalar(-1));
      } else {
        break;
      }
    }
    return out;
  }

 private:
  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// Splits "<head> = <body>".
std::pair<std::string, std::string> split_eq(std::string_view rest, std::size_t line) {
  const auto eq = rest.find('=');
  if (eq == std::string_view::npos) throw ParseError(line, "expected '='");
  return {std::string(trim(rest.substr(0, eq))), std::string(trim(rest.substr(eq + 1)))};
}

struct ParseState {
  PresentationData data;
  bool have_gens = false;
  bool structure = false;
  std::vector<Letter> precedence;
  std::vector<std::pair<std::size_t, std::string>> rule_lines, delta_lines, counit_lines, antipode_lines;
  std::vector<std::pair<std::size_t, std::string>> basis_lines, mult_lines;
};

}  // namespace

NcPoly parse_poly(std::string_view text, const Alphabet& alphabet) {
  Cursor c(text, alphabet);
  NcPoly p = c.poly();
  if (!c.at_end()) c.fail("unexpected trailing text");
  return p;
}

TensorPoly parse_tensor(std::string_view text, const Alphabet& alphabet) {
  Cursor c(text, alphabet);
  TensorPoly t = c.tensor_sum();
  if (!c.at_end()) c.fail("unexpected trailing text");
  return t;
}

namespace {

template <class F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

Presentation build_free(ParseState& st) {
  PresentationData& d = st.data;
  const Alphabet& a = d.alphabet;
  std::vector<int> weights(a.size(), 1);
  MonomialOrder order = st.precedence.empty() ? MonomialOrder::deglex(a.size())
                                              : MonomialOrder(st.precedence, weights);
  std::vector<Rule> rules;
  for (const auto& [line, text] : st.rule_lines) {
    at_line(line, [&] {
      const auto arrow = text.find("->");
      if (arrow == std::string::npos) throw ParseError(line, "expected '->'");
      Rule r{a.parse(trim(std::string_view(text).substr(0, arrow))),
             parse_poly(trim(std::string_view(text).substr(arrow + 2)), a)};
      for (const auto& [w, c] : r.rhs) {
        if (!order.less(w, r.lhs)) {
          throw ParseError(line, "rule " + format_rule(r, a) + " is not oriented by the monomial order");
        }
      }
      rules.push_back(std::move(r));
      return 0;
    });
  }
  d.rules = at_line(st.rule_lines.empty() ? 0 : st.rule_lines.front().first,
                    [&] { return ReductionSystem(rules, order); });
  for (const auto& [line, text] : st.delta_lines) {
    at_line(line, [&] {
      auto [head, body] = split_eq(text, line);
      const Letter g = a.at(head);
      if (d.delta.count(g)) throw ParseError(line, "second coproduct for " + head);
      d.delta[g] = parse_tensor(body, a);
      return 0;
    });
  }
  for (const auto& [line, text] : st.counit_lines) {
    at_line(line, [&] {
      auto [head, body] = split_eq(text, line);
      const Letter g = a.at(head);
      if (d.counit.count(g)) throw ParseError(line, "second counit for " + head);
      d.counit[g] = Scalar::parse(body);
      return 0;
    });
  }
  for (const auto& [line, text] : st.antipode_lines) {
    at_line(line, [&] {
      auto [head, body] = split_eq(text, line);
      const Letter g = a.at(head);
      if (d.antipode.count(g)) throw ParseError(line, "second antipode for " + head);
      d.antipode[g] = parse_poly(body, a);
      return 0;
    });
  }
  return at_line(0, [&] { return Presentation(d); });
}

Presentation build_structure(ParseState& st) {
  PresentationData& d = st.data;
  d.backend = Backend::structure_constants;
  const Alphabet& a = d.alphabet;
  std::vector<std::string> labels;
  std::vector<Word> words;
  for (const auto& [line, text] : st.basis_lines) {
    at_line(line, [&] {
      auto [head, body] = split_eq(text, line);
      if (!is_identifier(head)) throw ParseError(line, "invalid basis label '" + head + "'");
      if (std::find(labels.begin(), labels.end(), head) != labels.end()) {
        throw ParseError(line, "duplicate basis label '" + head + "'");
      }
      labels.push_back(head);
      words.push_back(a.parse(body));
      return 0;
    });
  }
  const Alphabet label_alphabet = at_line(0, [&] { return Alphabet(labels); });
  auto unit = std::find(words.begin(), words.end(), Word{});
  if (unit == words.end()) throw ParseError(0, "structure basis must contain 1");
  auto relabel_word = [&](const Word& w, std::size_t line) {
    if (w.empty()) return Word{};
    if (w.size() != 1) throw ParseError(line, "expected a single basis label");
    return words[w[0]];
  };
  auto relabel = [&](const NcPoly& p, std::size_t line) {
    NcPoly out;
    for (const auto& [w, c] : p) out.add_term(relabel_word(w, line), c);
    return out;
  };
  auto label_of = [&](const std::string& s, std::size_t line) {
    auto g = label_alphabet.find(s);
    if (!g) throw ParseError(line, "unknown basis label '" + s + "'");
    return words[*g];
  };
  d.basis = words;
  for (const auto& [line, text] : st.mult_lines) {
    at_line(line, [&] {
      auto [head, body] = split_eq(text, line);
      const auto dot = head.find('.');
      if (dot == std::string::npos) throw ParseError(line, "expected '<label>.<label>'");
      const TensorKey key{label_of(std::string(trim(std::string_view(head).substr(0, dot))), line),
                          label_of(std::string(trim(std::string_view(head).substr(dot + 1))), line)};
      if (d.mult.count(key)) throw ParseError(line, "second product for " + head);
      d.mult[key] = relabel(parse_poly(body, label_alphabet), line);
      return 0;
    });
  }
  for (const auto& [line, text] : st.delta_lines) {
    at_line(line, [&] {
      auto [head, body] = split_eq(text, line);
      const Word w = label_of(head, line);
      if (d.basis_delta.count(w)) throw ParseError(line, "second coproduct for " + head);
      TensorPoly t;
      for (const auto& [k, c] : parse_tensor(body, label_alphabet)) {
        t.add_term({relabel_word(k.first, line), relabel_word(k.second, line)}, c);
      }
      d.basis_delta[w] = t;
      return 0;
    });
  }
  for (const auto& [line, text] : st.counit_lines) {
    at_line(line, [&] {
      auto [head, body] = split_eq(text, line);
      const Word w = label_of(head, line);
      if (d.basis_counit.count(w)) throw ParseError(line, "second counit for " + head);
      d.basis_counit[w] = Scalar::parse(body);
      return 0;
    });
  }
  for (const auto& [line, text] : st.antipode_lines) {
    at_line(line, [&] {
      auto [head, body] = split_eq(text, line);
      const Word w = label_of(head, line);
      if (d.basis_antipode.count(w)) throw ParseError(line, "second antipode for " + head);
      d.basis_antipode[w] = relabel(parse_poly(body, label_alphabet), line);
      return 0;
    });
  }
  // Drop entries that only restate the unit.
  d.basis_delta.erase(Word{});
  d.basis_counit.erase(Word{});
  return at_line(0, [&] { return Presentation(d); });
}

}  // namespace

Presentation parse_presentation(std::string_view text, bool validate) {
  ParseState st;
  bool have_name = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto sp = line.find_first_of(" \t");
    const std::string keyword(line.substr(0, sp));
    const std::string rest(sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp)));

    if (keyword == "bialgebra") {
      if (have_name) throw ParseError(line_no, "second 'bialgebra' line");
      if (rest.empty()) throw ParseError(line_no, "missing name");
      st.data.name = rest;
      have_name = true;
      continue;
    }
    if (!have_name) throw ParseError(line_no, "expected 'bialgebra <name>' first");
    if (keyword == "q") {
      auto [head, body] = split_eq(line, line_no);
      if (st.data.q) throw ParseError(line_no, "second 'q' line");
      st.data.q = at_line(line_no, [&] { return Scalar::parse(body); });
      if (st.data.q->is_zero()) throw ParseError(line_no, "q must be nonzero");
    } else if (keyword == "gens") {
      if (st.have_gens) throw ParseError(line_no, "second 'gens' line");
      st.data.alphabet = at_line(line_no, [&] { return Alphabet(split_ws(rest)); });
      st.have_gens = true;
    } else if (keyword == "structure") {
      st.structure = true;
    } else if (keyword == "flags") {
      for (const std::string& f : split_ws(rest)) {
        if (f == "commutative") {
          st.data.flags.commutative = true;
        } else if (f == "cocommutative") {
          st.data.flags.cocommutative = true;
        } else if (f == "finite") {
          st.data.flags.finite = true;
        } else {
          throw ParseError(line_no, "unknown flag '" + f + "'");
        }
      }
    } else {
      if (!st.have_gens) throw ParseError(line_no, "'gens' must come before '" + keyword + "'");
      if (keyword == "order") {
        const auto tokens = split_ws(rest);
        if (tokens.empty() || tokens[0] != "deglex") throw ParseError(line_no, "only 'order deglex' is supported");
        std::vector<Letter> precedence;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          if (i % 2 == 0) {
            if (tokens[i] != "<") throw ParseError(line_no, "expected '<'");
            continue;
          }
          precedence.push_back(at_line(line_no, [&] { return st.data.alphabet.at(tokens[i]); }));
        }
        if (precedence.size() != st.data.alphabet.size()) throw ParseError(line_no, "order must list every generator");
        at_line(line_no, [&] { return MonomialOrder(precedence, std::vector<int>(precedence.size(), 1)); });
        st.precedence = std::move(precedence);
      } else if (keyword == "rule") {
        st.rule_lines.emplace_back(line_no, rest);
      } else if (keyword == "delta") {
        st.delta_lines.emplace_back(line_no, rest);
      } else if (keyword == "counit") {
        st.counit_lines.emplace_back(line_no, rest);
      } else if (keyword == "antipode") {
        st.antipode_lines.emplace_back(line_no, rest);
      } else if (keyword == "basis") {
        st.basis_lines.emplace_back(line_no, rest);
      } else if (keyword == "mult") {
        st.mult_lines.emplace_back(line_no, rest);
      } else {
        throw ParseError(line_no, "unknown keyword '" + keyword + "'");
      }
    }
  }
  if (!have_name) throw ParseError(line_no, "empty presentation");
  if (!st.have_gens) throw ParseError(line_no, "missing 'gens' line");
  if (st.structure && !st.rule_lines.empty()) throw ParseError(st.rule_lines.front().first, "rules need the free backend");
  if (!st.structure && (!st.basis_lines.empty() || !st.mult_lines.empty())) {
    throw ParseError(st.basis_lines.empty() ? st.mult_lines.front().first : st.basis_lines.front().first,
                     "'basis' and 'mult' need a 'structure' line");
  }

  Presentation p = st.structure ? build_structure(st) : build_free(st);
  if (!validate) return p;

  std::vector<std::string> problems;
  if (p.backend() == Backend::free_algebra) {
    ReductionSystem rs = p.rules();
    ConfluenceResult conf = rs.check_confluence();
    if (!conf.confluent) {
      const auto& f = *conf.counterexample;
      problems.push_back("rules are not confluent: " + p.alphabet().format(f.overlap.word) + " reduces to " +
                         format_poly(f.first, p.alphabet()) + " and to " + format_poly(f.second, p.alphabet()));
    }
  }
  const int degree = p.finite_dimensional() ? p.top_degree() : 4;
  AxiomReport axioms = check_axioms(p, degree);
  std::string message;
  for (const AxiomFailure& f : axioms.failures) message += "\n  " + f.identity + ": " + f.witness;
  for (const std::string& s : problems) message += "\n  " + s;
  if (!message.empty()) throw ValidationError("presentation '" + p.name() + "' is not a bialgebra:" + message);
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  const PresentationData& d = p.data();
  const Alphabet& a = d.alphabet;
  std::ostringstream os;
  os << "bialgebra " << d.name << "\n";
  if (d.q) os << "q = " << d.q->to_string() << "\n";
  os << "gens";
  for (const std::string& n : a.names()) os << " " << n;
  os << "\n";
  if (d.backend == Backend::free_algebra) {
    if (a.size() > 0) {
      os << "order deglex";
      const auto& prec = d.rules.order().precedence();
      for (std::size_t i = 0; i < prec.size(); ++i) os << (i ? " < " : " ") << a.name(prec[i]);
      os << "\n";
    }
    for (const Rule& r : d.rules.rules()) os << "rule " << format_rule(r, a) << "\n";
    for (const auto& [g, t] : d.delta) os << "delta " << a.name(g) << " = " << format_tensor(t, a) << "\n";
    for (const auto& [g, c] : d.counit) os << "counit " << a.name(g) << " = " << c.to_string() << "\n";
    for (const auto& [g, s] : d.antipode) os << "antipode " << a.name(g) << " = " << format_poly(s, a) << "\n";
  } else {
    os << "structure\n";
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d.basis.size(); ++i) labels.push_back("b" + std::to_string(i));
    const Alphabet la(labels);
    auto label = [&](const Word& w) {
      return static_cast<Letter>(std::lower_bound(d.basis.begin(), d.basis.end(), w) - d.basis.begin());
    };
    auto relabel = [&](const NcPoly& poly) {
      NcPoly out;
      for (const auto& [w, c] : poly) out.add_term(Word{label(w)}, c);
      return out;
    };
    for (std::size_t i = 0; i < d.basis.size(); ++i) os << "basis " << labels[i] << " = " << a.format(d.basis[i]) << "\n";
    for (const auto& [k, poly] : d.mult) {
      os << "mult " << labels[label(k.first)] << "." << labels[label(k.second)] << " = " << format_poly(relabel(poly), la)
         << "\n";
    }
    for (const auto& [w, t] : d.basis_delta) {
      TensorPoly r;
      for (const auto& [k, c] : t) r.add_term({Word{label(k.first)}, Word{label(k.second)}}, c);
      os << "delta " << labels[label(w)] << " = " << format_tensor(r, la) << "\n";
    }
    for (const auto& [w, c] : d.basis_counit) os << "counit " << labels[label(w)] << " = " << c.to_string() << "\n";
    for (const auto& [w, s] : d.basis_antipode) {
      os << "antipode " << labels[label(w)] << " = " << format_poly(relabel(s), la) << "\n";
    }
  }
  if (d.flags.commutative || d.flags.cocommutative || d.flags.finite) {
    os << "flags";
    if (d.flags.commutative) os << " commutative";
    if (d.flags.cocommutative) os << " cocommutative";
    if (d.flags.finite) os << " finite";
    os << "\n";
  }
  return os.str();
}

Presentation load_presentation_file(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str(), validate);
}

}  // namespace bialint
