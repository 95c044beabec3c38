#ifndef COMPMACH_QUIVER_HPP
#define COMPMACH_QUIVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace compmach {

using VertexIndex = std::size_t;
using ArrowIndex = std::size_t;

/// Identifiers are nonempty tokens matching [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_identifier(std::string_view id);

/// A directed multigraph with loops allowed: vertices, arrows and total
/// source/target functions. Declaration order of vertices and arrows is
/// preserved and defines the deterministic ordering of every downstream
/// enumeration and export.
///
/// Build with add_vertex/add_arrow, then treat as immutable; all operations
/// take const references and are pure.
class Quiver {
 public:
  Quiver() = default;

  /// Declares a vertex. Throws Error on a malformed or duplicate id.
  VertexIndex add_vertex(std::string id);

  /// Declares an arrow source -> target. Endpoints must already be declared.
  ArrowIndex add_arrow(std::string id, std::string_view source,
                       std::string_view target);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t arrow_count() const { return arrow_ids_.size(); }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_[v]; }
  const std::string& arrow_id(ArrowIndex a) const { return arrow_ids_[a]; }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<ArrowIndex> find_arrow(std::string_view id) const;

  VertexIndex source(ArrowIndex a) const { return sources_[a]; }
  VertexIndex target(ArrowIndex a) const { return targets_[a]; }

  /// Arrows leaving / entering a vertex, in arrow declaration order.
  const std::vector<ArrowIndex>& out_arrows(VertexIndex v) const {
    return out_arrows_[v];
  }
  const std::vector<ArrowIndex>& in_arrows(VertexIndex v) const {
    return in_arrows_[v];
  }

  bool operator==(const Quiver& other) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> arrow_ids_;
  std::vector<VertexIndex> sources_;
  std::vector<VertexIndex> targets_;
  std::vector<std::vector<ArrowIndex>> out_arrows_;
  std::vector<std::vector<ArrowIndex>> in_arrows_;
};

/// A path in a quiver. Non-trivial paths store their arrows in application
/// order (first-executed first); a trivial path stores only its base vertex
/// and has length 0. Endpoints are cached so concatenation needs no quiver
/// lookup. Paths from different quivers must not be mixed.
class Path {
 public:
  /// The trivial path sitting at a vertex.
  static Path trivial(VertexIndex base);

  /// A non-trivial path from an arrow sequence in application order.
  /// Throws NotComposableError if consecutive arrows do not chain
  /// (target of each must equal source of the next), or Error if empty.
  Path(const Quiver& quiver, std::vector<ArrowIndex> arrows);

  bool is_trivial() const { return arrows_.empty(); }
  std::size_t length() const { return arrows_.size(); }
  const std::vector<ArrowIndex>& arrows() const { return arrows_; }

  VertexIndex source() const { return source_; }
  VertexIndex target() const { return target_; }

  bool operator==(const Path& other) const;

 private:
  Path() = default;

  friend Path concatenate(const Path& first, const Path& second);

  std::vector<ArrowIndex> arrows_;
  VertexIndex source_ = 0;
  VertexIndex target_ = 0;
};

/// True iff the quiver has no directed cycle; a loop (source == target)
/// counts as a cycle. Acyclicity is exactly the condition under which the
/// set of all paths is finite.
bool is_acyclic(const Quiver& quiver);

/// Every path of length >= min_length, each exactly once. With
/// min_length == 0 the trivial paths (one per vertex, in vertex declaration
/// order) come first. Ordering is deterministic: length ascending, then
/// lexicographic on the arrow-declaration-index sequence.
/// Throws CyclicQuiverError if the quiver has a cycle, since enumeration
/// would not terminate.
std::vector<Path> enumerate_paths(const Quiver& quiver,
                                  std::size_t min_length = 0);

/// Concatenation: `first` runs, then `second`. Requires
/// first.target() == second.source(); trivial paths act as identities.
/// Throws NotComposableError otherwise.
Path concatenate(const Path& first, const Path& second);

/// The subquiver induced by a set of kept arrows: exactly those arrows plus
/// the vertices incident to at least one of them, both in original
/// declaration order. Throws UnknownArrowError for an out-of-range index.
Quiver subquiver(const Quiver& quiver,
                 const std::vector<ArrowIndex>& keep_arrows);

}  // namespace compmach

#endif  // COMPMACH_QUIVER_HPP
