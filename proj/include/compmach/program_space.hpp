#ifndef COMPMACH_PROGRAM_SPACE_HPP
#define COMPMACH_PROGRAM_SPACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compmach/configuration.hpp"
#include "compmach/machine.hpp"
#include "compmach/quiver.hpp"

namespace compmach {

/// The subquiver carrying exactly the alive arrows of a configuration plus
/// their endpoint vertices. `time` is metadata recording when it was
/// extracted. The index vectors map back into the machine quiver: alive
/// vertex/arrow i corresponds to machine vertex `machine_vertices[i]` /
/// machine arrow `machine_arrows[i]`.
struct AliveQuiver {
  Quiver quiver;
  std::size_t time = 0;
  std::vector<VertexIndex> machine_vertices;
  std::vector<ArrowIndex> machine_arrows;
};

enum class MorphismKind { identity, primitive, composite };

/// One inhabitant of a program space. Identities carry the data type they
/// sit on; primitives and composites carry their computon id sequence in
/// application order (first-executed first, so "f2∘f1" stores {f1, f2}).
/// `input`/`output` are the domain and codomain data types.
struct Morphism {
  MorphismKind kind = MorphismKind::identity;
  std::string data_type;               // identity only
  std::vector<std::string> computons;  // primitive: one id; composite: >= 2
  std::string input;
  std::string output;

  /// "id:d1" for identities, "f1" for primitives, "f3∘f2∘f1" for
  /// composites (rightmost runs first).
  std::string display() const;

  bool operator==(const Morphism& other) const;
};

/// The emergent program space over an alive quiver: the data types present
/// and every morphism — one identity per alive vertex's data type, one
/// primitive or composite per non-trivial path. `data_types` follows
/// machine declaration order; `morphisms` lists identities first (in
/// data-type declaration order), then path morphisms in path enumeration
/// order (length ascending, then lexicographic).
struct ProgramSpace {
  std::vector<std::string> data_types;
  std::vector<Morphism> morphisms;
};

/// Summary counts of a space.
struct SpaceStats {
  std::size_t identities = 0;
  std::size_t primitives = 0;
  std::size_t composites = 0;
  std::size_t total = 0;
  std::size_t max_composite_length = 0;
};

/// Extracts the alive subquiver of `c` (arrows in state 1 plus incident
/// vertices). Throws IncompleteConfigurationError on size mismatch.
AliveQuiver alive_quiver(const Machine& m, const Configuration& c,
                         std::size_t t);

/// The morphism presented by one path of an alive quiver: an identity for
/// a trivial path, otherwise the arrow-wise computon sequence.
Morphism path_morphism(const Machine& m, const AliveQuiver& aq,
                       const Path& path);

/// Composition in a program space: `second` after `first` (first runs
/// first). Identities are units. Throws NotComposableError when
/// first.output != second.input.
Morphism compose_morphisms(const Morphism& first, const Morphism& second);

/// Materialises the program space presented by an alive quiver.
ProgramSpace build_space(const Machine& m, const AliveQuiver& aq);

/// The space of the all-alive configuration: every program the machine can
/// ever make available. Every reachable space is a subset of it.
ProgramSpace maximal_space(const Machine& m);

SpaceStats space_stats(const ProgramSpace& ps);

/// Extensional equality: same data-type set and same morphism set,
/// ignoring order.
bool spaces_equal(const ProgramSpace& a, const ProgramSpace& b);

/// Resolves a morphism selector against the machine's declarations:
/// "id:d1" names an identity, "f1" a primitive, and "f3∘f2∘f1" (or the
/// ASCII spelling "f3.f2.f1") a composite, rightmost computon first.
/// Checks that consecutive computons chain (cod = next dom); throws
/// Error subclasses on unknown ids or non-composable chains.
Morphism resolve_selector(const Machine& m, std::string_view selector);

/// True iff the space contains this exact morphism.
bool space_contains(const ProgramSpace& ps, const Morphism& mo);

}  // namespace compmach

#endif  // COMPMACH_PROGRAM_SPACE_HPP
