#include "compmach/configuration.hpp"

#include "compmach/errors.hpp"

namespace compmach {

Configuration::Configuration(std::vector<int> states) {
  for (int s : states) {
    if (s != 0 && s != 1) {
      throw Error("configuration states must be 0 or 1");
    }
  }
  states_ = std::move(states);
}

Configuration Configuration::parse(std::string_view bits) {
  std::vector<int> states;
  states.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(std::string("configuration strings may only contain '0' "
                              "and '1', found '") +
                  c + "'");
    }
    states.push_back(c - '0');
  }
  return Configuration(std::move(states));
}

std::string Configuration::to_string() const {
  std::string out;
  out.reserve(states_.size());
  for (int s : states_) out += static_cast<char>('0' + s);
  return out;
}

}  // namespace compmach
