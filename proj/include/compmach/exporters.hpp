#ifndef COMPMACH_EXPORTERS_HPP
#define COMPMACH_EXPORTERS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compmach/configuration.hpp"
#include "compmach/evolution.hpp"
#include "compmach/machine.hpp"
#include "compmach/program_space.hpp"
#include "compmach/quiver.hpp"

namespace compmach {

/// DOT digraph of a quiver: one node per vertex, one labelled edge per
/// arrow, in declaration order. Byte-stable for identical inputs.
std::string export_quiver_dot(const Quiver& q,
                              std::string_view graph_name = "quiver");

/// DOT digraph of a program space: one node per present data type, one
/// edge per primitive or composite morphism labelled with its display form
/// (composites dashed). Identities are omitted. Node and edge order follow
/// the space's deterministic ordering; byte-stable.
std::string export_space_dot(const ProgramSpace& ps);

/// Space-time diagram of a trajectory: one line per step, exactly
/// `t=<decimal><TAB><canonical configuration>`, each newline-terminated.
std::string render_diagram(const std::vector<Configuration>& trajectory);

/// Human-oriented listing of a space: data types, morphisms with their
/// typings, and summary counts. A pure function of the space, so two equal
/// spaces render identically.
std::string render_space_text(const ProgramSpace& ps);

/// Program space as JSON text (two-space indent, trailing newline).
std::string space_json(const ProgramSpace& ps);

/// Trajectory report as JSON text: step count, canonical configurations,
/// the first in-window cycle (or null), and per-step space summaries.
std::string orbit_report_json(const Machine& m,
                              const std::vector<Configuration>& trajectory,
                              const std::optional<CycleReport>& cycle);

/// First revisit within an already-computed trajectory, if any.
std::optional<CycleReport> cycle_within(
    const std::vector<Configuration>& trajectory);

}  // namespace compmach

#endif  // COMPMACH_EXPORTERS_HPP
