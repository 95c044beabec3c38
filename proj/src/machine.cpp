#include "compmach/machine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace compmach {

std::string Diagnostic::format() const {
  std::string out = code;
  out += '(';
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    if (i > 0) out += ", ";
    out += subjects[i];
  }
  out += ')';
  if (!detail.empty()) {
    out += ": ";
    out += detail;
  }
  return out;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream out;
  out << "machine validation failed with " << diagnostics.size()
      << (diagnostics.size() == 1 ? " finding:" : " findings:");
  for (const auto& d : diagnostics) out << "\n  " << d.format();
  return out.str();
}

}  // namespace

MachineValidationError::MachineValidationError(
    std::vector<Diagnostic> diagnostics)
    : Error(join_diagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

NeighbourhoodTable derive_neighbourhoods(const Quiver& quiver) {
  std::vector<Neighbourhood> entries(quiver.arrow_count());
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    const auto& lefts = quiver.in_arrows(quiver.source(a));
    const auto& rights = quiver.out_arrows(quiver.target(a));
    if (lefts.size() > 1) {
      throw AmbiguousNeighbourhoodError(
          "arrow '" + quiver.arrow_id(a) + "' has " +
          std::to_string(lefts.size()) + " left neighbours");
    }
    if (rights.size() > 1) {
      throw AmbiguousNeighbourhoodError(
          "arrow '" + quiver.arrow_id(a) + "' has " +
          std::to_string(rights.size()) + " right neighbours");
    }
    Neighbourhood& n = entries[a];
    if (!lefts.empty()) n.left = lefts.front();
    if (!rights.empty()) n.right = rights.front();
    if (n.left && n.right) {
      n.kind = NeighbourhoodKind::both;
    } else if (n.left) {
      n.kind = NeighbourhoodKind::left_only;
    } else if (n.right) {
      n.kind = NeighbourhoodKind::right_only;
    } else {
      n.kind = NeighbourhoodKind::isolated;
    }
  }
  return NeighbourhoodTable(std::move(entries));
}

namespace {

void check_tokens(const MachineDescription& desc,
                  std::vector<Diagnostic>& out) {
  auto bad_id = [&out](const std::string& id, const std::string& what) {
    if (!is_valid_identifier(id)) {
      out.push_back({diag::InvalidIdentifier,
                     {id},
                     what + " ids must match [A-Za-z_][A-Za-z0-9_]*"});
    }
  };
  auto dup = [&out](std::set<std::string>& seen, const std::string& id,
                    const std::string& what) {
    if (!seen.insert(id).second) {
      out.push_back(
          {diag::DuplicateId, {id}, "duplicate " + what + " id"});
    }
  };

  std::set<std::string> seen;
  for (const auto& d : desc.data_types) {
    bad_id(d.id, "data type");
    dup(seen, d.id, "data type");
    if (d.semantics && *d.semantics != "abstract" &&
        *d.semantics != "integer") {
      out.push_back({diag::InvalidSemantics,
                     {d.id},
                     "semantics must be \"abstract\" or \"integer\", got \"" +
                         *d.semantics + "\""});
    }
  }
  seen.clear();
  for (const auto& f : desc.computons) {
    bad_id(f.id, "computon");
    dup(seen, f.id, "computon");
  }
  seen.clear();
  for (const auto& v : desc.vertices) {
    bad_id(v.id, "vertex");
    dup(seen, v.id, "vertex");
  }
  seen.clear();
  for (const auto& a : desc.arrows) {
    bad_id(a.id, "arrow");
    dup(seen, a.id, "arrow");
  }
}

void check_references(const MachineDescription& desc,
                      std::vector<Diagnostic>& out) {
  std::set<std::string> data_types, computons, vertices, arrows;
  for (const auto& d : desc.data_types) data_types.insert(d.id);
  for (const auto& f : desc.computons) computons.insert(f.id);
  for (const auto& v : desc.vertices) vertices.insert(v.id);
  for (const auto& a : desc.arrows) arrows.insert(a.id);

  auto require = [&out](const std::set<std::string>& known,
                        const std::string& id, const std::string& owner,
                        const std::string& role) {
    if (!known.count(id)) {
      out.push_back({diag::UnknownReference,
                     {owner},
                     role + " references unknown id '" + id + "'"});
    }
  };

  for (const auto& f : desc.computons) {
    require(data_types, f.dom, f.id, "computon domain");
    require(data_types, f.cod, f.id, "computon codomain");
  }
  for (const auto& v : desc.vertices) {
    require(data_types, v.data_type, v.id, "vertex data type");
  }
  for (const auto& a : desc.arrows) {
    require(vertices, a.source, a.id, "arrow source");
    require(vertices, a.target, a.id, "arrow target");
    require(computons, a.computon, a.id, "arrow computon");
  }
  std::set<std::string> config_seen;
  for (const auto& [arrow_id, state] : desc.initial_states) {
    if (!arrows.count(arrow_id)) {
      out.push_back({diag::UnknownReference,
                     {arrow_id},
                     "initial configuration names an unknown arrow"});
    }
    if (!config_seen.insert(arrow_id).second) {
      out.push_back({diag::DuplicateConfigurationEntry,
                     {arrow_id},
                     "initial configuration assigns this arrow twice"});
    }
    if (state != 0 && state != 1) {
      out.push_back({diag::InvalidState,
                     {arrow_id},
                     "states must be 0 or 1, got " + std::to_string(state)});
    }
  }
}

void check_rule_ranges(const RuleSet& rules, std::vector<Diagnostic>& out) {
  auto check = [&out](unsigned value, unsigned max, const char* name) {
    if (value > max) {
      out.push_back({diag::RuleOutOfRange,
                     {name},
                     "value " + std::to_string(value) +
                         " exceeds the maximum " + std::to_string(max)});
    }
  };
  check(rules.delta1, 3, "delta1");
  check(rules.delta2, 15, "delta2");
  check(rules.delta3, 15, "delta3");
  check(rules.delta4, 255, "delta4");
}

Quiver build_quiver(const MachineDescription& desc) {
  Quiver q;
  for (const auto& v : desc.vertices) q.add_vertex(v.id);
  for (const auto& a : desc.arrows) q.add_arrow(a.id, a.source, a.target);
  return q;
}

void check_structure(const MachineDescription& desc, const Quiver& quiver,
                     std::vector<Diagnostic>& out) {
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    if (quiver.source(a) == quiver.target(a)) {
      out.push_back({diag::ArrowLoop,
                     {quiver.arrow_id(a)},
                     "arrows must not start and end at the same vertex"});
    }
  }
  if (!is_acyclic(quiver)) {
    out.push_back({diag::CyclicQuiver,
                   {},
                   "the quiver contains a directed cycle; the path set "
                   "would be infinite"});
  }
  for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) {
    const auto& in = quiver.in_arrows(v);
    if (in.size() > 1) {
      Diagnostic d{diag::DuplicateTarget, {}, ""};
      for (ArrowIndex a : in) d.subjects.push_back(quiver.arrow_id(a));
      d.detail = "arrows share the target vertex '" + quiver.vertex_id(v) +
                 "'; targets must be pairwise distinct";
      out.push_back(std::move(d));
    }
  }
  std::map<std::string, std::vector<std::string>> by_cod;
  for (const auto& f : desc.computons) by_cod[f.cod].push_back(f.id);
  for (const auto& f : desc.computons) {
    if (f.dom == f.cod) {
      out.push_back({diag::DomainEqualsCodomain,
                     {f.id},
                     "computon domain and codomain must differ"});
    }
  }
  for (const auto& [cod, ids] : by_cod) {
    if (ids.size() > 1) {
      out.push_back({diag::DuplicateCodomain, ids,
                     "computons share the codomain '" + cod + "'"});
    }
  }
}

void check_bijections(const MachineDescription& desc,
                      std::vector<Diagnostic>& out) {
  std::map<std::string, std::vector<std::string>> type_users;
  for (const auto& v : desc.vertices) {
    type_users[v.data_type].push_back(v.id);
  }
  for (const auto& [type_id, users] : type_users) {
    if (users.size() > 1) {
      Diagnostic d{diag::Mu0NotInjective, {type_id}, ""};
      d.detail = "vertices";
      for (std::size_t i = 0; i < users.size(); ++i) {
        d.detail += (i == 0 ? " " : ", ") + users[i];
      }
      d.detail += " all map to this data type";
      out.push_back(std::move(d));
    }
  }
  for (const auto& dt : desc.data_types) {
    if (!type_users.count(dt.id)) {
      out.push_back({diag::Mu0NotSurjective,
                     {dt.id},
                     "no vertex maps to this data type"});
    }
  }
  std::map<std::string, std::vector<std::string>> computon_users;
  for (const auto& a : desc.arrows) {
    computon_users[a.computon].push_back(a.id);
  }
  for (const auto& [computon_id, users] : computon_users) {
    if (users.size() > 1) {
      Diagnostic d{diag::Mu1NotInjective, {computon_id}, ""};
      d.detail = "arrows";
      for (std::size_t i = 0; i < users.size(); ++i) {
        d.detail += (i == 0 ? " " : ", ") + users[i];
      }
      d.detail += " all map to this computon";
      out.push_back(std::move(d));
    }
  }
  for (const auto& f : desc.computons) {
    if (!computon_users.count(f.id)) {
      out.push_back({diag::Mu1NotSurjective,
                     {f.id},
                     "no arrow maps to this computon"});
    }
  }
}

void check_typing(const MachineDescription& desc,
                  std::vector<Diagnostic>& out) {
  std::map<std::string, std::string> vertex_type;
  for (const auto& v : desc.vertices) vertex_type[v.id] = v.data_type;
  std::map<std::string, const Computon*> computon_by_id;
  for (const auto& f : desc.computons) computon_by_id[f.id] = &f;

  for (const auto& a : desc.arrows) {
    const Computon* f = computon_by_id[a.computon];
    const std::string& source_type = vertex_type[a.source];
    const std::string& target_type = vertex_type[a.target];
    if (f->dom != source_type || f->cod != target_type) {
      out.push_back({diag::TypeMismatch,
                     {a.id},
                     "arrow runs " + source_type + " -> " + target_type +
                         " but computon '" + f->id + "' runs " + f->dom +
                         " -> " + f->cod});
    }
  }
}

void check_neighbour_multiplicity(const Quiver& quiver,
                                  std::vector<Diagnostic>& out) {
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    const auto& lefts = quiver.in_arrows(quiver.source(a));
    const auto& rights = quiver.out_arrows(quiver.target(a));
    if (lefts.size() > 1) {
      out.push_back({diag::AmbiguousNeighbourhood,
                     {quiver.arrow_id(a)},
                     "arrow has " + std::to_string(lefts.size()) +
                         " left neighbours; at most one is allowed"});
    }
    if (rights.size() > 1) {
      out.push_back({diag::AmbiguousNeighbourhood,
                     {quiver.arrow_id(a)},
                     "arrow has " + std::to_string(rights.size()) +
                         " right neighbours; at most one is allowed"});
    }
  }
}

void check_configuration_totality(const MachineDescription& desc,
                                  std::vector<Diagnostic>& out) {
  std::set<std::string> assigned;
  for (const auto& [arrow_id, state] : desc.initial_states) {
    (void)state;
    assigned.insert(arrow_id);
  }
  Diagnostic d{diag::IncompleteConfiguration, {}, ""};
  for (const auto& a : desc.arrows) {
    if (!assigned.count(a.id)) d.subjects.push_back(a.id);
  }
  if (!d.subjects.empty()) {
    d.detail = "the initial configuration assigns no state to these arrows";
    out.push_back(std::move(d));
  }
}

void check_expressions(const MachineDescription& desc,
                       std::vector<Diagnostic>& out) {
  for (const auto& f : desc.computons) {
    if (!f.expr) continue;
    try {
      Expression::parse(*f.expr);
    } catch (const SyntaxError& e) {
      out.push_back({diag::ExpressionSyntax,
                     {f.id},
                     std::string(e.what()) + " at position " +
                         std::to_string(e.position())});
    }
  }
}

}  // namespace

std::vector<Diagnostic> check_machine(const MachineDescription& desc) {
  std::vector<Diagnostic> out;
  if (desc.data_types.empty()) {
    out.push_back(
        {diag::EmptyDataTypes, {}, "at least one data type is required"});
  }
  if (desc.computons.empty()) {
    out.push_back(
        {diag::EmptyComputons, {}, "at least one computon is required"});
  }
  check_tokens(desc, out);
  check_references(desc, out);
  check_rule_ranges(desc.rules, out);
  check_expressions(desc, out);
  if (!out.empty()) return out;  // later phases assume resolvable names

  const Quiver quiver = build_quiver(desc);
  check_structure(desc, quiver, out);
  check_bijections(desc, out);
  check_typing(desc, out);
  check_neighbour_multiplicity(quiver, out);
  check_configuration_totality(desc, out);
  return out;
}

Machine validate_machine(const MachineDescription& desc) {
  auto diagnostics = check_machine(desc);
  if (!diagnostics.empty()) {
    throw MachineValidationError(std::move(diagnostics));
  }

  Machine m;
  m.data_types_ = desc.data_types;
  m.computons_ = desc.computons;
  for (const auto& f : desc.computons) {
    if (f.expr) {
      m.expressions_.emplace_back(Expression::parse(*f.expr));
    } else {
      m.expressions_.emplace_back(std::nullopt);
    }
  }
  m.quiver_ = build_quiver(desc);
  for (const auto& v : desc.vertices) {
    m.mu0_.push_back(*m.find_data_type(v.data_type));
  }
  for (const auto& a : desc.arrows) {
    m.mu1_.push_back(*m.find_computon(a.computon));
  }
  m.rules_ = RuleSet::make(desc.rules.delta1, desc.rules.delta2,
                           desc.rules.delta3, desc.rules.delta4);
  m.neighbourhoods_ = derive_neighbourhoods(m.quiver_);

  std::vector<int> states(m.quiver_.arrow_count(), 0);
  for (const auto& [arrow_id, state] : desc.initial_states) {
    states[*m.quiver_.find_arrow(arrow_id)] = state;
  }
  m.initial_configuration_ = Configuration(std::move(states));
  return m;
}

std::optional<std::size_t> Machine::find_data_type(
    std::string_view id) const {
  for (std::size_t i = 0; i < data_types_.size(); ++i) {
    if (data_types_[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Machine::find_computon(std::string_view id) const {
  for (std::size_t i = 0; i < computons_.size(); ++i) {
    if (computons_[i].id == id) return i;
  }
  return std::nullopt;
}

const Expression* Machine::computon_expression(
    std::size_t computon_index) const {
  const auto& slot = expressions_[computon_index];
  return slot ? &*slot : nullptr;
}

}  // namespace compmach
