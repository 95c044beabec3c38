#include "compmach/evolution.hpp"

#include <string>
#include <unordered_map>

#include "compmach/errors.hpp"

namespace compmach {

Configuration step(const Machine& m, const Configuration& c) {
  const Quiver& q = m.quiver();
  if (c.size() != q.arrow_count()) {
    throw IncompleteConfigurationError(
        "configuration covers " + std::to_string(c.size()) +
        " arrows but the machine has " + std::to_string(q.arrow_count()));
  }
  const RuleSet& rules = m.rules();
  std::vector<int> next(q.arrow_count(), 0);
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Neighbourhood& n = m.neighbourhoods().of(a);
    switch (n.kind) {
      case NeighbourhoodKind::isolated:
        next[a] = rules.isolated(c.at(a));
        break;
      case NeighbourhoodKind::right_only:
        next[a] = rules.right_only(c.at(a), c.at(*n.right));
        break;
      case NeighbourhoodKind::left_only:
        next[a] = rules.left_only(c.at(*n.left), c.at(a));
        break;
      case NeighbourhoodKind::both:
        next[a] = rules.both(c.at(*n.left), c.at(a), c.at(*n.right));
        break;
    }
  }
  return Configuration(std::move(next));
}

std::vector<Configuration> orbit(const Machine& m, const Configuration& c0,
                                 std::size_t steps) {
  std::vector<Configuration> trajectory;
  trajectory.reserve(steps + 1);
  trajectory.push_back(c0);
  for (std::size_t t = 0; t < steps; ++t) {
    trajectory.push_back(step(m, trajectory.back()));
  }
  return trajectory;
}

std::optional<CycleReport> detect_cycle(const Machine& m,
                                        const Configuration& c0,
                                        std::size_t max_steps) {
  std::unordered_map<std::string, std::size_t> first_seen;
  Configuration current = c0;
  first_seen.emplace(current.to_string(), 0);
  for (std::size_t t = 1; t <= max_steps; ++t) {
    current = step(m, current);
    auto [it, inserted] = first_seen.emplace(current.to_string(), t);
    if (!inserted) {
      return CycleReport{it->second, t - it->second};
    }
  }
  return std::nullopt;
}

}  // namespace compmach
