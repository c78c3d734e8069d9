#include "bialint/rewrite.hpp"

#include <cstdlib>
#include <deque>
#include <map>

#include "bialint/errors.hpp"

namespace bialint {

std::size_t default_reduction_guard() {
  static const std::size_t guard = [] {
    if (const char* env = std::getenv("BIALINT_GUARD")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1000000};
  }();
  return guard;
}

ReductionSystem::ReductionSystem(std::vector<Rule> rules, MonomialOrder order)
    : rules_(std::move(rules)), order_(std::move(order)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    if (r.lhs.empty()) throw MalformedInput("rule with empty left-hand side");
    for (std::size_t j = 0; j < i; ++j) {
      if (rules_[j].lhs == r.lhs) throw MalformedInput("two rules share a left-hand side");
    }
    order_.degree(r.lhs);
    for (const auto& [w, c] : r.rhs) {
      if (!order_.less(w, r.lhs)) throw NonTermination("rule rhs is not below its lhs in the monomial order");
    }
  }
}

std::optional<std::pair<std::size_t, std::size_t>> ReductionSystem::find_redex(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (!w.matches_at(rules_[i].lhs, pos)) continue;
      if (!best || rules_[i].lhs.size() < rules_[*best].lhs.size()) best = i;
    }
    if (best) return std::make_pair(*best, pos);
  }
  return std::nullopt;
}

NcPoly ReductionSystem::normal_form(const NcPoly& p, std::size_t guard) const {
  // Every rewrite replaces the greatest pending monomial by strictly smaller
  // ones, so a monomial moved to the result never comes back.
  std::map<Word, Scalar, OrderLess> pending(OrderLess{&order_});
  for (const auto& [w, c] : p) pending.emplace(w, c);
  NcPoly result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    auto redex = find_redex(w);
    if (!redex) {
      result.add_term(w, c);
      continue;
    }
    if (++steps > guard) throw NonTermination("reduction exceeded " + std::to_string(guard) + " steps");
    const Rule& rule = rules_[redex->first];
    const Word left = w.prefix(redex->second);
    const Word right = w.suffix_from(redex->second + rule.lhs.size());
    for (const auto& [m, cm] : rule.rhs) {
      auto [it, inserted] = pending.try_emplace(left * m * right, c * cm);
      if (!inserted) {
        it->second += c * cm;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return result;
}

NcPoly ReductionSystem::normal_form(const Word& w, std::size_t guard) const { return normal_form(NcPoly(w), guard); }

std::vector<Overlap> ReductionSystem::find_overlaps() const {
  std::vector<Overlap> out;
  for (std::size_t a = 0; a < rules_.size(); ++a) {
    const Word& la = rules_[a].lhs;
    for (std::size_t b = 0; b < rules_.size(); ++b) {
      const Word& lb = rules_[b].lhs;
      const std::size_t max_len = std::min(la.size(), lb.size());
      for (std::size_t len = 1; len < max_len; ++len) {
        if (!la.matches_at(lb.prefix(len), la.size() - len)) continue;
        Overlap o;
        o.rule_a = a;
        o.rule_b = b;
        o.word = la * lb.suffix_from(len);
        o.length = len;
        out.push_back(std::move(o));
      }
      if (a == b || lb.size() >= la.size()) continue;
      for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
        if (!la.matches_at(lb, pos)) continue;
        Overlap o;
        o.rule_a = a;
        o.rule_b = b;
        o.word = la;
        o.inclusion = true;
        o.offset = pos;
        o.length = lb.size();
        out.push_back(std::move(o));
      }
    }
  }
  return out;
}

std::pair<NcPoly, NcPoly> ReductionSystem::resolve(const Overlap& o) const {
  const Rule& a = rules_.at(o.rule_a);
  const Rule& b = rules_.at(o.rule_b);
  if (o.inclusion) {
    const NcPoly second = nc_mul(nc_mul(NcPoly(a.lhs.prefix(o.offset)), b.rhs),
                                 NcPoly(a.lhs.suffix_from(o.offset + b.lhs.size())));
    return {a.rhs, second};
  }
  const NcPoly first = nc_mul(a.rhs, NcPoly(b.lhs.suffix_from(o.length)));
  const NcPoly second = nc_mul(NcPoly(a.lhs.prefix(a.lhs.size() - o.length)), b.rhs);
  return {first, second};
}

ConfluenceResult ReductionSystem::check_confluence() {
  ConfluenceResult result = bialint::check_confluence(*this);
  status_ = result.confluent ? ConfluenceStatus::certified : ConfluenceStatus::refuted;
  return result;
}

ConfluenceResult check_confluence(const ReductionSystem& rs) {
  std::size_t checked = 0;
  for (const Overlap& o : rs.find_overlaps()) {
    ++checked;
    auto [r1, r2] = rs.resolve(o);
    NcPoly n1 = rs.normal_form(r1);
    NcPoly n2 = rs.normal_form(r2);
    if (n1 != n2) return {false, ConfluenceFailure{o, std::move(n1), std::move(n2)}, checked};
  }
  return {true, std::nullopt, checked};
}

std::string format_rule(const Rule& rule, const Alphabet& alphabet) {
  return alphabet.format(rule.lhs) + " -> " + format_poly(rule.rhs, alphabet);
}

std::string ReductionSystem::format(const Alphabet& alphabet) const {
  std::string out;
  for (const Rule& r : rules_) out += format_rule(r, alphabet) + "\n";
  return out;
}

namespace {

Word leading_word(const NcPoly& p, const MonomialOrder& order) {
  const Word* best = nullptr;
  for (const auto& [w, c] : p) {
    if (!best || order.less(*best, w)) best = &w;
  }
  return *best;
}

}  // namespace

ReductionSystem complete_bounded(const std::vector<NcPoly>& relations, const MonomialOrder& order, int max_degree,
                                 std::size_t rule_guard) {
  std::vector<Rule> rules;
  std::deque<NcPoly> pending(relations.begin(), relations.end());

  auto add_relation = [&](const NcPoly& raw) {
    NcPoly p = ReductionSystem(rules, order).normal_form(raw);
    if (p.is_zero()) return;
    const Word lead = leading_word(p, order);
    p *= p.coefficient(lead).inverse();
    NcPoly rhs = -p;
    rhs.erase(lead);
    std::vector<Rule> kept;
    for (Rule& r : rules) {
      if (r.lhs.find(lead)) {
        NcPoly back(r.lhs);
        back -= r.rhs;
        pending.push_back(std::move(back));
      } else {
        kept.push_back(std::move(r));
      }
    }
    kept.push_back(Rule{lead, std::move(rhs)});
    if (kept.size() > rule_guard) {
      throw CompletionOverflow("completion exceeded " + std::to_string(rule_guard) + " rules");
    }
    const ReductionSystem current(kept, order);
    for (Rule& r : kept) r.rhs = current.normal_form(r.rhs);
    rules = std::move(kept);
  };

  while (true) {
    while (!pending.empty()) {
      NcPoly p = std::move(pending.front());
      pending.pop_front();
      add_relation(p);
    }
    const ReductionSystem current(rules, order);
    for (const Overlap& o : current.find_overlaps()) {
      if (order.degree(o.word) > max_degree) continue;
      auto [r1, r2] = current.resolve(o);
      NcPoly diff = current.normal_form(r1) - current.normal_form(r2);
      if (!diff.is_zero()) pending.push_back(std::move(diff));
    }
    if (pending.empty()) break;
  }
  return ReductionSystem(std::move(rules), order);
}

}  // namespace bialint
