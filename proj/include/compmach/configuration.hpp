#ifndef COMPMACH_CONFIGURATION_HPP
#define COMPMACH_CONFIGURATION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace compmach {

/// A total assignment of a state (0 = dead, 1 = alive) to every arrow of a
/// quiver, stored in arrow declaration order. The canonical text form is a
/// string of '1'/'0' characters in that same order; it is the interchange
/// and comparison key used throughout.
class Configuration {
 public:
  Configuration() = default;

  /// From explicit states; every entry must be 0 or 1 (throws Error).
  explicit Configuration(std::vector<int> states);

  /// From the canonical text form; only '0' and '1' are accepted.
  static Configuration parse(std::string_view bits);

  std::size_t size() const { return states_.size(); }
  int at(std::size_t index) const { return states_[index]; }
  const std::vector<int>& states() const { return states_; }

  std::string to_string() const;

  bool operator==(const Configuration& other) const {
    return states_ == other.states_;
  }

 private:
  std::vector<int> states_;
};

}  // namespace compmach

#endif  // COMPMACH_CONFIGURATION_HPP
