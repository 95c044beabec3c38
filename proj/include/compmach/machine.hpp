#ifndef COMPMACH_MACHINE_HPP
#define COMPMACH_MACHINE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compmach/configuration.hpp"
#include "compmach/errors.hpp"
#include "compmach/expression.hpp"
#include "compmach/quiver.hpp"
#include "compmach/rules.hpp"

namespace compmach {

/// A named value domain. `semantics` is an optional tag ("abstract" or
/// "integer") describing what the values of the type are; it does not
/// affect the dynamics.
struct DataType {
  std::string id;
  std::optional<std::string> semantics;
};

/// A unary program fragment from one data type to another. `expr` is
/// optional executable semantics (see Expression); machines without
/// expressions support everything except evaluation.
struct Computon {
  std::string id;
  std::string dom;
  std::string cod;
  std::optional<std::string> expr;
};

/// Raw, unvalidated machine description as decoded from a file or built in
/// code. `vertex.data_type` defines the vertex-to-data-type correspondence
/// and `arrow.computon` the arrow-to-computon correspondence.
struct MachineDescription {
  struct Vertex {
    std::string id;
    std::string data_type;
  };
  struct Arrow {
    std::string id;
    std::string source;
    std::string target;
    std::string computon;
  };

  std::vector<DataType> data_types;
  std::vector<Computon> computons;
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;
  RuleSet rules;
  /// Arrow id -> state entries, in the order given by the source document.
  std::vector<std::pair<std::string, int>> initial_states;
};

/// One validation finding: a stable code, the offending ids, and a human
/// explanation. Formatted as "Code(id1, id2): detail".
struct Diagnostic {
  std::string code;
  std::vector<std::string> subjects;
  std::string detail;

  std::string format() const;
};

/// Stable diagnostic codes emitted by check_machine.
namespace diag {
inline constexpr const char* EmptyDataTypes = "EmptyDataTypes";
inline constexpr const char* EmptyComputons = "EmptyComputons";
inline constexpr const char* InvalidIdentifier = "InvalidIdentifier";
inline constexpr const char* DuplicateId = "DuplicateId";
inline constexpr const char* UnknownReference = "UnknownReference";
inline constexpr const char* CyclicQuiver = "CyclicQuiver";
inline constexpr const char* ArrowLoop = "ArrowLoop";
inline constexpr const char* DuplicateTarget = "DuplicateTarget";
inline constexpr const char* DuplicateCodomain = "DuplicateCodomain";
inline constexpr const char* DomainEqualsCodomain = "DomainEqualsCodomain";
inline constexpr const char* Mu0NotInjective = "Mu0NotInjective";
inline constexpr const char* Mu0NotSurjective = "Mu0NotSurjective";
inline constexpr const char* Mu1NotInjective = "Mu1NotInjective";
inline constexpr const char* Mu1NotSurjective = "Mu1NotSurjective";
inline constexpr const char* TypeMismatch = "TypeMismatch";
inline constexpr const char* AmbiguousNeighbourhood = "AmbiguousNeighbourhood";
inline constexpr const char* IncompleteConfiguration =
    "IncompleteConfiguration";
inline constexpr const char* DuplicateConfigurationEntry =
    "DuplicateConfigurationEntry";
inline constexpr const char* InvalidState = "InvalidState";
inline constexpr const char* InvalidSemantics = "InvalidSemantics";
inline constexpr const char* RuleOutOfRange = "RuleOutOfRange";
inline constexpr const char* ExpressionSyntax = "ExpressionSyntax";
}  // namespace diag

/// Thrown by validate_machine; carries every finding.
class MachineValidationError : public Error {
 public:
  explicit MachineValidationError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

enum class NeighbourhoodKind { isolated, right_only, left_only, both };

/// The local context of one arrow. An arrow l is the left neighbour of a
/// iff target(l) == source(a); r is the right neighbour iff
/// target(a) == source(r). `left`/`right` are set exactly when the kind
/// says they exist.
struct Neighbourhood {
  NeighbourhoodKind kind = NeighbourhoodKind::isolated;
  std::optional<ArrowIndex> left;
  std::optional<ArrowIndex> right;
};

/// Per-arrow neighbourhood classification; a partition of the arrow set.
class NeighbourhoodTable {
 public:
  NeighbourhoodTable() = default;
  explicit NeighbourhoodTable(std::vector<Neighbourhood> entries)
      : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const Neighbourhood& of(ArrowIndex a) const { return entries_[a]; }

 private:
  std::vector<Neighbourhood> entries_;
};

/// Classifies every arrow of a quiver by the presence of left/right
/// neighbours. Throws AmbiguousNeighbourhoodError if an arrow has two or
/// more neighbours on one side (the local rules are then undefined).
NeighbourhoodTable derive_neighbourhoods(const Quiver& quiver);

/// Checks a description against every machine constraint and returns all
/// findings (empty = valid):
///   (a) data types and computons nonempty,
///   (b) quiver acyclic, (c) no loops, (d) arrow targets pairwise distinct,
///   (e) computon codomains pairwise distinct, (f) dom != cod per computon,
///   (g) vertex->data-type and arrow->computon maps are bijections,
///   (h) each arrow's computon has dom/cod matching its endpoints' types,
///   (i) every arrow has at most one neighbour per side,
///   (j) the initial configuration covers every arrow exactly once,
/// plus well-formedness of ids, references and computon expressions.
std::vector<Diagnostic> check_machine(const MachineDescription& desc);

class Machine;

/// check_machine, then either a validated Machine or
/// MachineValidationError carrying the findings.
Machine validate_machine(const MachineDescription& desc);

/// A validated machine: data types, computons, an acyclic quiver whose
/// arrows have pairwise distinct targets and no loops, the two structure
/// bijections, the four local rules, derived neighbourhoods, and the
/// stored initial configuration. Immutable after construction.
class Machine {
 public:
  const std::vector<DataType>& data_types() const { return data_types_; }
  const std::vector<Computon>& computons() const { return computons_; }
  const Quiver& quiver() const { return quiver_; }
  const RuleSet& rules() const { return rules_; }
  const NeighbourhoodTable& neighbourhoods() const { return neighbourhoods_; }
  const Configuration& initial_configuration() const {
    return initial_configuration_;
  }

  std::optional<std::size_t> find_data_type(std::string_view id) const;
  std::optional<std::size_t> find_computon(std::string_view id) const;

  /// The data type attached to a vertex (the vertex->data-type bijection).
  const DataType& vertex_data_type(VertexIndex v) const {
    return data_types_[mu0_[v]];
  }
  /// The computon attached to an arrow (the arrow->computon bijection).
  const Computon& arrow_computon(ArrowIndex a) const {
    return computons_[mu1_[a]];
  }

  /// Parsed expression of a computon, or nullptr if it has none.
  const Expression* computon_expression(std::size_t computon_index) const;

 private:
  friend Machine validate_machine(const MachineDescription& desc);
  Machine() = default;

  std::vector<DataType> data_types_;
  std::vector<Computon> computons_;
  std::vector<std::optional<Expression>> expressions_;
  Quiver quiver_;
  std::vector<std::size_t> mu0_;  // VertexIndex -> index into data_types_
  std::vector<std::size_t> mu1_;  // ArrowIndex  -> index into computons_
  RuleSet rules_;
  NeighbourhoodTable neighbourhoods_;
  Configuration initial_configuration_;
};

}  // namespace compmach

#endif  // COMPMACH_MACHINE_HPP
