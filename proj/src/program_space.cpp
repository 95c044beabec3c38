#include "compmach/program_space.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "compmach/errors.hpp"

namespace compmach {

std::string Morphism::display() const {
  switch (kind) {
    case MorphismKind::identity:
      return "id:" + data_type;
    case MorphismKind::primitive:
      return computons.front();
    case MorphismKind::composite: {
      std::string out;
      for (auto it = computons.rbegin(); it != computons.rend(); ++it) {
        if (!out.empty()) out += "∘";  // ∘, rightmost runs first
        out += *it;
      }
      return out;
    }
  }
  return {};
}

bool Morphism::operator==(const Morphism& other) const {
  return kind == other.kind && data_type == other.data_type &&
         computons == other.computons && input == other.input &&
         output == other.output;
}

AliveQuiver alive_quiver(const Machine& m, const Configuration& c,
                         std::size_t t) {
  const Quiver& q = m.quiver();
  if (c.size() != q.arrow_count()) {
    throw IncompleteConfigurationError(
        "configuration covers " + std::to_string(c.size()) +
        " arrows but the machine has " + std::to_string(q.arrow_count()));
  }
  AliveQuiver aq;
  aq.time = t;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    if (c.at(a) == 1) aq.machine_arrows.push_back(a);
  }
  std::vector<bool> used(q.vertex_count(), false);
  for (ArrowIndex a : aq.machine_arrows) {
    used[q.source(a)] = true;
    used[q.target(a)] = true;
  }
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (used[v]) aq.machine_vertices.push_back(v);
  }
  aq.quiver = subquiver(q, aq.machine_arrows);
  return aq;
}

ProgramSpace build_space(const Machine& m, const AliveQuiver& aq) {
  ProgramSpace space;

  // Present data types, in declaration order. The vertex->data-type map is
  // a bijection, so "present" means: its vertex is an endpoint of an alive
  // arrow.
  std::set<std::size_t> present_types;
  for (VertexIndex v : aq.machine_vertices) {
    present_types.insert(*m.find_data_type(m.vertex_data_type(v).id));
  }
  for (std::size_t i = 0; i < m.data_types().size(); ++i) {
    if (present_types.count(i)) {
      space.data_types.push_back(m.data_types()[i].id);
    }
  }

  // Identities first, one per present data type, declaration order.
  for (const std::string& id : space.data_types) {
    Morphism mo;
    mo.kind = MorphismKind::identity;
    mo.data_type = id;
    mo.input = id;
    mo.output = id;
    space.morphisms.push_back(std::move(mo));
  }

  // Then one morphism per non-trivial path of the alive quiver, in path
  // enumeration order (length ascending, then lexicographic).
  for (const Path& path : enumerate_paths(aq.quiver, 1)) {
    space.morphisms.push_back(path_morphism(m, aq, path));
  }
  return space;
}

Morphism path_morphism(const Machine& m, const AliveQuiver& aq,
                       const Path& path) {
  Morphism mo;
  if (path.is_trivial()) {
    mo.kind = MorphismKind::identity;
    mo.data_type =
        m.vertex_data_type(aq.machine_vertices[path.source()]).id;
    mo.input = mo.data_type;
    mo.output = mo.data_type;
    return mo;
  }
  mo.kind = path.length() == 1 ? MorphismKind::primitive
                               : MorphismKind::composite;
  for (ArrowIndex alive_arrow : path.arrows()) {
    const ArrowIndex machine_arrow = aq.machine_arrows[alive_arrow];
    mo.computons.push_back(m.arrow_computon(machine_arrow).id);
  }
  mo.input = m.vertex_data_type(aq.machine_vertices[path.source()]).id;
  mo.output = m.vertex_data_type(aq.machine_vertices[path.target()]).id;
  return mo;
}

Morphism compose_morphisms(const Morphism& first, const Morphism& second) {
  if (first.output != second.input) {
    throw NotComposableError("morphisms '" + first.display() + "' and '" +
                             second.display() + "' do not compose: " +
                             first.output + " != " + second.input);
  }
  if (first.kind == MorphismKind::identity) return second;
  if (second.kind == MorphismKind::identity) return first;
  Morphism combined;
  combined.kind = MorphismKind::composite;
  combined.computons = first.computons;
  combined.computons.insert(combined.computons.end(),
                            second.computons.begin(),
                            second.computons.end());
  combined.input = first.input;
  combined.output = second.output;
  return combined;
}

ProgramSpace maximal_space(const Machine& m) {
  Configuration all_alive(
      std::vector<int>(m.quiver().arrow_count(), 1));
  return build_space(m, alive_quiver(m, all_alive, 0));
}

SpaceStats space_stats(const ProgramSpace& ps) {
  SpaceStats stats;
  for (const Morphism& mo : ps.morphisms) {
    switch (mo.kind) {
      case MorphismKind::identity:
        ++stats.identities;
        break;
      case MorphismKind::primitive:
        ++stats.primitives;
        break;
      case MorphismKind::composite:
        ++stats.composites;
        stats.max_composite_length =
            std::max(stats.max_composite_length, mo.computons.size());
        break;
    }
  }
  stats.total = ps.morphisms.size();
  return stats;
}

namespace {

std::string morphism_key(const Morphism& mo) {
  std::string key;
  switch (mo.kind) {
    case MorphismKind::identity:
      key = "I";
      break;
    case MorphismKind::primitive:
      key = "P";
      break;
    case MorphismKind::composite:
      key = "C";
      break;
  }
  key += '|' + mo.data_type;
  for (const auto& f : mo.computons) key += '|' + f;
  key += '|' + mo.input + '|' + mo.output;
  return key;
}

}  // namespace

bool spaces_equal(const ProgramSpace& a, const ProgramSpace& b) {
  std::set<std::string> types_a(a.data_types.begin(), a.data_types.end());
  std::set<std::string> types_b(b.data_types.begin(), b.data_types.end());
  if (types_a != types_b) return false;
  std::multiset<std::string> keys_a, keys_b;
  for (const auto& mo : a.morphisms) keys_a.insert(morphism_key(mo));
  for (const auto& mo : b.morphisms) keys_b.insert(morphism_key(mo));
  return keys_a == keys_b;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Morphism resolve_selector(const Machine& m, std::string_view selector) {
  std::string text(trim(selector));
  if (text.empty()) throw Error("empty morphism selector");

  if (text.rfind("id:", 0) == 0) {
    std::string type_id(trim(text.substr(3)));
    if (!m.find_data_type(type_id)) {
      throw Error("unknown data type '" + type_id + "' in selector");
    }
    Morphism mo;
    mo.kind = MorphismKind::identity;
    mo.data_type = type_id;
    mo.input = type_id;
    mo.output = type_id;
    return mo;
  }

  // Accept the composition sign and its ASCII stand-in interchangeably.
  std::string normalised;
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, 3, "∘") == 0) {
      normalised += '.';
      i += 3;
    } else {
      normalised += text[i];
      ++i;
    }
  }

  std::vector<std::string> display_order;  // as written: last-applied first
  std::size_t start = 0;
  for (std::size_t i = 0; i <= normalised.size(); ++i) {
    if (i == normalised.size() || normalised[i] == '.') {
      std::string token(trim(
          std::string_view(normalised).substr(start, i - start)));
      if (token.empty()) {
        throw Error("malformed morphism selector '" + std::string(selector) +
                    "'");
      }
      display_order.push_back(std::move(token));
      start = i + 1;
    }
  }

  Morphism mo;
  mo.kind = display_order.size() == 1 ? MorphismKind::primitive
                                      : MorphismKind::composite;
  // Rightmost component runs first.
  for (auto it = display_order.rbegin(); it != display_order.rend(); ++it) {
    if (!m.find_computon(*it)) {
      throw Error("unknown computon '" + *it + "' in selector");
    }
    mo.computons.push_back(*it);
  }
  for (std::size_t i = 0; i + 1 < mo.computons.size(); ++i) {
    const Computon& here = m.computons()[*m.find_computon(mo.computons[i])];
    const Computon& next =
        m.computons()[*m.find_computon(mo.computons[i + 1])];
    if (here.cod != next.dom) {
      throw NotComposableError("computons '" + here.id + "' and '" +
                               next.id + "' do not chain: " + here.cod +
                               " != " + next.dom);
    }
  }
  mo.input = m.computons()[*m.find_computon(mo.computons.front())].dom;
  mo.output = m.computons()[*m.find_computon(mo.computons.back())].cod;
  return mo;
}

bool space_contains(const ProgramSpace& ps, const Morphism& mo) {
  return std::any_of(ps.morphisms.begin(), ps.morphisms.end(),
                     [&mo](const Morphism& other) { return other == mo; });
}

}  // namespace compmach
