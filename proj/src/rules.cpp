#include "compmach/rules.hpp"

#include <charconv>

#include "compmach/errors.hpp"

namespace compmach {

namespace {

int bit_of(unsigned value, unsigned index) {
  return static_cast<int>((value >> index) & 1u);
}

void check_state(int s) {
  if (s != 0 && s != 1) throw Error("states must be 0 or 1");
}

}  // namespace

RuleSet RuleSet::make(unsigned d1, unsigned d2, unsigned d3, unsigned d4) {
  if (d1 > 3) throw Error("delta1 must be in [0, 3]");
  if (d2 > 15) throw Error("delta2 must be in [0, 15]");
  if (d3 > 15) throw Error("delta3 must be in [0, 15]");
  if (d4 > 255) throw Error("delta4 must be in [0, 255]");
  return RuleSet{d1, d2, d3, d4};
}

int RuleSet::isolated(int own) const {
  check_state(own);
  return bit_of(delta1, static_cast<unsigned>(own));
}

int RuleSet::right_only(int own, int right) const {
  check_state(own);
  check_state(right);
  return bit_of(delta2, static_cast<unsigned>(2 * own + right));
}

int RuleSet::left_only(int left, int own) const {
  check_state(left);
  check_state(own);
  return bit_of(delta3, static_cast<unsigned>(2 * left + own));
}

int RuleSet::both(int left, int own, int right) const {
  check_state(left);
  check_state(own);
  check_state(right);
  return bit_of(delta4, static_cast<unsigned>(4 * left + 2 * own + right));
}

RuleFragment named_rule(std::string_view name) {
  if (name == "NOT") return {1, 1};
  if (name == "ID") return {1, 2};
  if (name == "XOR") return {2, 6};
  if (name == "OR") return {2, 14};
  if (name == "AND") return {2, 8};
  if (name.size() > 4 && name.substr(0, 4) == "RULE") {
    auto digits = name.substr(4);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(),
                                     digits.data() + digits.size(), value);
    if (ec == std::errc() && ptr == digits.data() + digits.size() &&
        value <= 255) {
      return {3, value};
    }
  }
  throw UnknownRuleNameError("unknown rule name '" + std::string(name) +
                             "'; expected NOT, ID, XOR, OR, AND or RULE<n> "
                             "with n in [0, 255]");
}

std::vector<RuleTableRow> expand_rule(unsigned value, std::size_t inputs) {
  if (inputs == 0 || inputs > 3) {
    throw Error("rule tables support 1 to 3 inputs");
  }
  const unsigned patterns = 1u << inputs;
  if (value >= (1u << patterns)) throw Error("rule number out of range");
  std::vector<RuleTableRow> rows;
  rows.reserve(patterns);
  for (unsigned p = patterns; p-- > 0;) {
    RuleTableRow row;
    for (std::size_t i = 0; i < inputs; ++i) {
      row.inputs.push_back(bit_of(p, static_cast<unsigned>(inputs - 1 - i)));
    }
    row.output = bit_of(value, p);
    rows.push_back(std::move(row));
  }
  return rows;
}

unsigned encode_rule_table(const std::vector<RuleTableRow>& rows) {
  if (rows.empty()) throw Error("empty rule table");
  const std::size_t inputs = rows.front().inputs.size();
  if (inputs == 0 || inputs > 3) {
    throw Error("rule tables support 1 to 3 inputs");
  }
  const unsigned patterns = 1u << inputs;
  if (rows.size() != patterns) {
    throw Error("rule table must list every input pattern exactly once");
  }
  std::vector<bool> seen(patterns, false);
  unsigned value = 0;
  for (const auto& row : rows) {
    if (row.inputs.size() != inputs) {
      throw Error("rule table rows disagree on input count");
    }
    unsigned index = 0;
    for (int s : row.inputs) {
      check_state(s);
      index = 2 * index + static_cast<unsigned>(s);
    }
    if (seen[index]) {
      throw Error("rule table repeats an input pattern");
    }
    seen[index] = true;
    check_state(row.output);
    if (row.output == 1) value |= 1u << index;
  }
  return value;
}

std::vector<RuleTableRow> rule_table(const RuleSet& rules, RuleSlot slot) {
  switch (slot) {
    case RuleSlot::isolated:
      return expand_rule(rules.delta1, 1);
    case RuleSlot::right_only:
      return expand_rule(rules.delta2, 2);
    case RuleSlot::left_only:
      return expand_rule(rules.delta3, 2);
    case RuleSlot::both:
      return expand_rule(rules.delta4, 3);
  }
  throw Error("invalid rule slot");
}

}  // namespace compmach
