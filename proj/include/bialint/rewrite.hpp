#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bialint/linear_combination.hpp"
#include "bialint/monomial_order.hpp"

namespace bialint {

/// Monic rewrite rule lhs -> rhs with every rhs monomial below lhs.
struct Rule {
  Word lhs;
  NcPoly rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// An ambiguity between two rules. For an overlap, the suffix of rule_a's lhs
/// of length `length` equals the prefix of rule_b's lhs and word is their
/// union. For an inclusion, rule_b's lhs occurs inside rule_a's lhs at
/// `offset` and word is rule_a's lhs.
struct Overlap {
  std::size_t rule_a = 0;
  std::size_t rule_b = 0;
  Word word;
  bool inclusion = false;
  std::size_t offset = 0;
  std::size_t length = 0;

  friend bool operator==(const Overlap&, const Overlap&) = default;
};

/// Two different normal forms reached from the same ambiguity.
struct ConfluenceFailure {
  Overlap overlap;
  NcPoly first;
  NcPoly second;
};

struct ConfluenceResult {
  bool confluent = true;
  std::optional<ConfluenceFailure> counterexample;
  /// Ambiguities resolved before stopping.
  std::size_t checked = 0;
};

enum class ConfluenceStatus { unknown, certified, refuted };

/// Step limit for a single normal form computation. BIALINT_GUARD overrides
/// the default of 1e6.
std::size_t default_reduction_guard();

/// Finite set of monic rules oriented by a monomial order.
class ReductionSystem {
 public:
  ReductionSystem() = default;
  /// Throws NonTermination if some rhs monomial is not below its lhs, and
  /// MalformedInput on duplicate or empty left-hand sides.
  ReductionSystem(std::vector<Rule> rules, MonomialOrder order);

  const std::vector<Rule>& rules() const { return rules_; }
  const MonomialOrder& order() const { return order_; }
  ConfluenceStatus status() const { return status_; }

  /// Leftmost redex of w: smallest start position, then shortest lhs, then
  /// rule index. Returns (rule index, position).
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const;
  bool is_irreducible(const Word& w) const { return !find_redex(w); }

  /// Unique normal form when the system is confluent. Throws NonTermination
  /// after `guard` rewrite steps.
  NcPoly normal_form(const NcPoly& p, std::size_t guard = default_reduction_guard()) const;
  NcPoly normal_form(const Word& w, std::size_t guard = default_reduction_guard()) const;

  /// All overlap and inclusion ambiguities, in rule order.
  std::vector<Overlap> find_overlaps() const;
  /// The two one-step reductions of an ambiguity word.
  std::pair<NcPoly, NcPoly> resolve(const Overlap& o) const;

  /// Resolves every ambiguity and records the outcome in status().
  ConfluenceResult check_confluence();

  /// "lhs -> rhs" lines.
  std::string format(const Alphabet& alphabet) const;

  friend bool operator==(const ReductionSystem& a, const ReductionSystem& b) {
    return a.rules_ == b.rules_ && a.order_ == b.order_;
  }

 private:
  std::vector<Rule> rules_;
  MonomialOrder order_;
  ConfluenceStatus status_ = ConfluenceStatus::unknown;
};

/// Free-function forms.
inline NcPoly normal_form(const NcPoly& p, const ReductionSystem& rs) { return rs.normal_form(p); }
inline std::vector<Overlap> find_overlaps(const ReductionSystem& rs) { return rs.find_overlaps(); }
ConfluenceResult check_confluence(const ReductionSystem& rs);

/// Orients each relation by its leading monomial, inter-reduces and resolves
/// ambiguities whose word has degree <= max_degree until nothing new appears.
/// Throws CompletionOverflow past rule_guard rules.
ReductionSystem complete_bounded(const std::vector<NcPoly>& relations, const MonomialOrder& order, int max_degree,
                                 std::size_t rule_guard = 10000);

/// "lhs -> rhs".
std::string format_rule(const Rule& rule, const Alphabet& alphabet);

}  // namespace bialint
