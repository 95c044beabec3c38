#ifndef COMPMACH_RULES_HPP
#define COMPMACH_RULES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace compmach {

/// The four local transition rules of a machine. Each is encoded as an
/// elementary-cellular-automaton style rule number: for input states
/// (s1, ..., sk) the next state is bit (s1*2^(k-1) + ... + sk) of the rule
/// number, so the all-ones input reads the highest bit.
///
/// delta1 drives arrows with no neighbours (1 input, value in [0,3]).
/// delta2 drives arrows with only a right neighbour (inputs: own state,
/// right state; value in [0,15]). delta3 drives arrows with only a left
/// neighbour (inputs: left state, own state; value in [0,15]). delta4
/// drives arrows with both (inputs: left, own, right; value in [0,255]).
struct RuleSet {
  unsigned delta1 = 0;
  unsigned delta2 = 0;
  unsigned delta3 = 0;
  unsigned delta4 = 0;

  /// Builds a rule set, throwing Error if any number is out of range.
  static RuleSet make(unsigned d1, unsigned d2, unsigned d3, unsigned d4);

  int isolated(int own) const;
  int right_only(int own, int right) const;
  int left_only(int left, int own) const;
  int both(int left, int own, int right) const;
};

/// Which of the four rules a value or name is meant for, identified by the
/// number of input states it consumes: 1 (delta1), 2 (delta2 or delta3) or
/// 3 (delta4).
struct RuleFragment {
  unsigned arity = 0;
  unsigned value = 0;
};

/// Resolves a rule name: "NOT" and "ID" are unary; "XOR", "OR" and "AND"
/// are binary; "RULE<n>" with n in [0,255] is ternary. Matching is exact
/// (upper case). Throws UnknownRuleNameError otherwise.
RuleFragment named_rule(std::string_view name);

/// One line of a rule's truth table: input states (first input first) and
/// the resulting state.
struct RuleTableRow {
  std::vector<int> inputs;
  int output = 0;
};

/// Expands a rule number over `inputs` input states into its full truth
/// table, rows ordered by descending encoded input (all-ones first), the
/// usual presentation for numbered rules.
std::vector<RuleTableRow> expand_rule(unsigned value, std::size_t inputs);

/// Inverse of expand_rule: recovers the rule number from a full table.
/// Row order does not matter, but every input pattern must appear exactly
/// once; throws Error otherwise.
unsigned encode_rule_table(const std::vector<RuleTableRow>& rows);

enum class RuleSlot { isolated, right_only, left_only, both };

/// Truth table of the selected rule of a rule set.
std::vector<RuleTableRow> rule_table(const RuleSet& rules, RuleSlot slot);

}  // namespace compmach

#endif  // COMPMACH_RULES_HPP
