#ifndef COMPMACH_EVOLUTION_HPP
#define COMPMACH_EVOLUTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "compmach/configuration.hpp"
#include "compmach/machine.hpp"

namespace compmach {

/// One synchronous update: every arrow's next state is computed from the
/// current configuration only, using the rule matching its neighbourhood
/// (isolated / right-only / left-only / both). Pure; throws
/// IncompleteConfigurationError when `c` does not cover the arrow set.
Configuration step(const Machine& m, const Configuration& c);

/// The first `steps`+1 configurations of the trajectory from c0:
/// result[0] = c0 and result[k+1] = step(m, result[k]).
std::vector<Configuration> orbit(const Machine& m, const Configuration& c0,
                                 std::size_t steps);

/// Exact cycle shape of a trajectory: the configuration at time
/// `preperiod` is the first to recur, and it recurs every `period` steps.
struct CycleReport {
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

/// Iterates from c0 recording first-seen times; on the first revisit
/// returns {first seen, distance}. Returns nullopt when no repeat occurs
/// within `max_steps` iterations. With max_steps >= 2^(arrow count) + 1 a
/// report is guaranteed (finitely many configurations).
std::optional<CycleReport> detect_cycle(const Machine& m,
                                        const Configuration& c0,
                                        std::size_t max_steps);

}  // namespace compmach

#endif  // COMPMACH_EVOLUTION_HPP
