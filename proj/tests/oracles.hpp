#ifndef COMPMACH_TESTS_ORACLES_HPP
#define COMPMACH_TESTS_ORACLES_HPP

// Shared helpers for the test suite: an independent brute-force path
// oracle, random structure generators, and in-code machine descriptions
// used across several test files.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "compmach/machine.hpp"
#include "compmach/program_space.hpp"
#include "compmach/quiver.hpp"

namespace compmach::testing {

/// Brute-force path oracle: all non-trivial paths as arrow-index
/// sequences, found by plain recursive extension. Independent of
/// enumerate_paths (no shared traversal code, no ordering guarantees).
inline std::vector<std::vector<ArrowIndex>> oracle_paths(const Quiver& q) {
  std::vector<std::vector<ArrowIndex>> found;
  std::vector<ArrowIndex> current;
  auto extend = [&](auto&& self, VertexIndex at) -> void {
    for (ArrowIndex a : q.out_arrows(at)) {
      current.push_back(a);
      found.push_back(current);
      self(self, q.target(a));
      current.pop_back();
    }
  };
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) extend(extend, v);
  return found;
}

/// A random DAG: vertices are ranked and every arrow goes from a lower to
/// a strictly higher rank, so acyclicity holds by construction. Parallel
/// arrows are allowed. Not necessarily machine-shaped.
inline Quiver random_dag(std::mt19937& rng, std::size_t max_vertices = 8,
                         std::size_t max_arrows = 12) {
  std::uniform_int_distribution<std::size_t> vertex_count(2, max_vertices);
  const std::size_t n = vertex_count(rng);
  Quiver q;
  for (std::size_t v = 0; v < n; ++v) q.add_vertex("v" + std::to_string(v));
  std::uniform_int_distribution<std::size_t> arrow_count(0, max_arrows);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t m = arrow_count(rng);
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t s = pick(rng);
    std::size_t t = pick(rng);
    if (s == t) continue;  // keep ranks strict
    if (s > t) std::swap(s, t);
    q.add_arrow("e" + std::to_string(a), "v" + std::to_string(s),
                "v" + std::to_string(t));
  }
  return q;
}

/// A random machine description: a disjoint union of chains (every such
/// quiver satisfies the structural constraints), with random rules and a
/// random initial configuration. Occasionally one chain forks at its root,
/// which is still valid (the shared vertex is nobody's target).
inline MachineDescription random_machine(std::mt19937& rng,
                                         std::size_t max_arrows = 10) {
  MachineDescription desc;
  std::uniform_int_distribution<std::size_t> arrows_dist(1, max_arrows);
  const std::size_t total_arrows = arrows_dist(rng);

  std::size_t made_arrows = 0;
  std::size_t vertex_serial = 0;
  std::uniform_int_distribution<int> coin(0, 3);

  auto new_vertex = [&]() {
    const std::string v = "v" + std::to_string(vertex_serial);
    const std::string d = "d" + std::to_string(vertex_serial);
    ++vertex_serial;
    desc.data_types.push_back({d, std::nullopt});
    desc.vertices.push_back({v, d});
    return v;
  };
  auto add_arrow = [&](const std::string& from, const std::string& to) {
    const std::string id = "a" + std::to_string(made_arrows);
    const std::string f = "f" + std::to_string(made_arrows);
    ++made_arrows;
    std::string dom, cod;
    for (const auto& v : desc.vertices) {
      if (v.id == from) dom = v.data_type;
      if (v.id == to) cod = v.data_type;
    }
    desc.computons.push_back({f, dom, cod, std::nullopt});
    desc.arrows.push_back({id, from, to, f});
  };

  while (made_arrows < total_arrows) {
    std::string chain_root = new_vertex();
    std::string at = chain_root;
    std::uniform_int_distribution<std::size_t> len_dist(
        1, total_arrows - made_arrows);
    const std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i) {
      std::string next = new_vertex();
      add_arrow(at, next);
      at = next;
    }
    // Sometimes fork once at the root: a second outgoing chain is legal
    // because the root is not the target of any arrow.
    if (made_arrows < total_arrows && coin(rng) == 0) {
      add_arrow(chain_root, new_vertex());
    }
  }

  desc.rules.delta1 = std::uniform_int_distribution<unsigned>(0, 3)(rng);
  desc.rules.delta2 = std::uniform_int_distribution<unsigned>(0, 15)(rng);
  desc.rules.delta3 = std::uniform_int_distribution<unsigned>(0, 15)(rng);
  desc.rules.delta4 = std::uniform_int_distribution<unsigned>(0, 255)(rng);
  std::uniform_int_distribution<int> state(0, 1);
  for (const auto& a : desc.arrows) {
    desc.initial_states.emplace_back(a.id, state(rng));
  }
  return desc;
}

/// The 13-vertex / 10-arrow showcase machine: a 6-chain, an isolated
/// arrow, and a 3-chain. Rule numbers are the caller's choice.
inline MachineDescription showcase_machine(unsigned delta1, unsigned delta2,
                                           unsigned delta3, unsigned delta4,
                                           const std::string& c0 =
                                               "1101101001") {
  MachineDescription desc;
  for (int i = 1; i <= 13; ++i) {
    desc.data_types.push_back({"d" + std::to_string(i), std::nullopt});
    desc.vertices.push_back(
        {"x" + std::to_string(i), "d" + std::to_string(i)});
  }
  auto computon = [&desc](int f, int dom, int cod) {
    desc.computons.push_back({"f" + std::to_string(f),
                              "d" + std::to_string(dom),
                              "d" + std::to_string(cod), std::nullopt});
  };
  auto arrow = [&desc](int a, int s, int t, int f) {
    desc.arrows.push_back({"a" + std::to_string(a),
                           "x" + std::to_string(s),
                           "x" + std::to_string(t),
                           "f" + std::to_string(f)});
  };
  for (int i = 1; i <= 6; ++i) computon(i, i, i + 1);
  computon(7, 8, 9);
  computon(8, 10, 11);
  computon(9, 11, 12);
  computon(10, 12, 13);
  for (int i = 1; i <= 6; ++i) arrow(i, i, i + 1, i);
  arrow(7, 8, 9, 7);
  arrow(8, 10, 11, 8);
  arrow(9, 11, 12, 9);
  arrow(10, 12, 13, 10);
  desc.rules = RuleSet{delta1, delta2, delta3, delta4};
  for (std::size_t i = 0; i < desc.arrows.size(); ++i) {
    desc.initial_states.emplace_back(desc.arrows[i].id, c0[i] - '0');
  }
  return desc;
}

/// The eight-vertex walkthrough quiver: a 3-chain x1..x4, a side arrow
/// x1 -> x5, and a 2-chain x6..x8; all arrows alive.
inline MachineDescription walkthrough_machine() {
  MachineDescription desc;
  for (int i = 1; i <= 8; ++i) {
    desc.data_types.push_back({"dt" + std::to_string(i), std::nullopt});
    desc.vertices.push_back(
        {"x" + std::to_string(i), "dt" + std::to_string(i)});
  }
  auto link = [&desc](int f, int s, int t) {
    desc.computons.push_back({"f" + std::to_string(f),
                              "dt" + std::to_string(s),
                              "dt" + std::to_string(t), std::nullopt});
    desc.arrows.push_back({"al" + std::to_string(f),
                           "x" + std::to_string(s), "x" + std::to_string(t),
                           "f" + std::to_string(f)});
  };
  link(1, 1, 2);
  link(2, 2, 3);
  link(3, 3, 4);
  link(4, 1, 5);
  link(5, 6, 7);
  link(6, 7, 8);
  desc.rules = RuleSet{1, 6, 6, 54};
  for (const auto& a : desc.arrows) {
    desc.initial_states.emplace_back(a.id, 1);
  }
  return desc;
}

/// Display strings of every morphism of a space, as a multiset.
inline std::multiset<std::string> display_set(const ProgramSpace& ps) {
  std::multiset<std::string> out;
  for (const auto& mo : ps.morphisms) out.insert(mo.display());
  return out;
}

}  // namespace compmach::testing

#endif  // COMPMACH_TESTS_ORACLES_HPP
