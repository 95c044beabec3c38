#include "compmach/exporters.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace compmach {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string quote(std::string_view id) {
  std::string out = "\"";
  out += id;  // ids match [A-Za-z_][A-Za-z0-9_]*, no escaping needed
  out += '"';
  return out;
}

}  // namespace

std::string export_quiver_dot(const Quiver& q, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  rankdir=LR;\n";
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    out << "  " << quote(q.vertex_id(v)) << ";\n";
  }
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    out << "  " << quote(q.vertex_id(q.source(a))) << " -> "
        << quote(q.vertex_id(q.target(a))) << " [label="
        << quote(q.arrow_id(a)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_space_dot(const ProgramSpace& ps) {
  std::ostringstream out;
  out << "digraph program_space {\n";
  out << "  rankdir=LR;\n";
  for (const std::string& id : ps.data_types) {
    out << "  " << quote(id) << ";\n";
  }
  for (const Morphism& mo : ps.morphisms) {
    if (mo.kind == MorphismKind::identity) continue;
    out << "  " << quote(mo.input) << " -> " << quote(mo.output)
        << " [label=" << quote(mo.display());
    if (mo.kind == MorphismKind::composite) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_diagram(const std::vector<Configuration>& trajectory) {
  std::string out;
  for (std::size_t t = 0; t < trajectory.size(); ++t) {
    out += "t=" + std::to_string(t) + "\t" + trajectory[t].to_string() +
           "\n";
  }
  return out;
}

std::string render_space_text(const ProgramSpace& ps) {
  std::ostringstream out;
  out << "data types:";
  for (const std::string& id : ps.data_types) out << ' ' << id;
  out << '\n';
  out << "morphisms:\n";
  for (const Morphism& mo : ps.morphisms) {
    out << "  " << mo.display() << " : " << mo.input << " -> " << mo.output
        << '\n';
  }
  const SpaceStats stats = space_stats(ps);
  out << "identities=" << stats.identities << " primitives="
      << stats.primitives << " composites=" << stats.composites
      << " total=" << stats.total << " max_composite_length="
      << stats.max_composite_length << '\n';
  return out.str();
}

namespace {

ordered_json stats_json(const SpaceStats& stats) {
  return ordered_json{{"identities", stats.identities},
                      {"primitives", stats.primitives},
                      {"composites", stats.composites},
                      {"total", stats.total},
                      {"max_composite_length", stats.max_composite_length}};
}

}  // namespace

std::string space_json(const ProgramSpace& ps) {
  ordered_json doc;
  doc["data_types"] = ps.data_types;
  doc["morphisms"] = ordered_json::array();
  for (const Morphism& mo : ps.morphisms) {
    ordered_json entry;
    switch (mo.kind) {
      case MorphismKind::identity:
        entry["kind"] = "identity";
        break;
      case MorphismKind::primitive:
        entry["kind"] = "primitive";
        break;
      case MorphismKind::composite:
        entry["kind"] = "composite";
        break;
    }
    entry["display"] = mo.display();
    if (mo.kind == MorphismKind::identity) {
      entry["data_type"] = mo.data_type;
    } else {
      entry["computons"] = mo.computons;
    }
    entry["input"] = mo.input;
    entry["output"] = mo.output;
    doc["morphisms"].push_back(std::move(entry));
  }
  doc["stats"] = stats_json(space_stats(ps));
  return doc.dump(2) + "\n";
}

std::optional<CycleReport> cycle_within(
    const std::vector<Configuration>& trajectory) {
  std::map<std::string, std::size_t> first_seen;
  for (std::size_t t = 0; t < trajectory.size(); ++t) {
    auto [it, inserted] = first_seen.emplace(trajectory[t].to_string(), t);
    if (!inserted) {
      return CycleReport{it->second, t - it->second};
    }
  }
  return std::nullopt;
}

std::string orbit_report_json(const Machine& m,
                              const std::vector<Configuration>& trajectory,
                              const std::optional<CycleReport>& cycle) {
  ordered_json doc;
  doc["steps"] = trajectory.empty() ? 0 : trajectory.size() - 1;
  doc["configurations"] = ordered_json::array();
  for (const Configuration& c : trajectory) {
    doc["configurations"].push_back(c.to_string());
  }
  if (cycle) {
    doc["cycle"] = ordered_json{{"preperiod", cycle->preperiod},
                                {"period", cycle->period}};
  } else {
    doc["cycle"] = nullptr;
  }
  doc["space_stats"] = ordered_json::array();
  for (std::size_t t = 0; t < trajectory.size(); ++t) {
    const ProgramSpace space =
        build_space(m, alive_quiver(m, trajectory[t], t));
    const ordered_json stats = stats_json(space_stats(space));
    ordered_json entry;
    entry["t"] = t;
    for (const auto& [key, value] : stats.items()) {
      entry[key] = value;
    }
    doc["space_stats"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace compmach
