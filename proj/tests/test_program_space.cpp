#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "compmach/errors.hpp"
#include "compmach/evolution.hpp"
#include "compmach/program_space.hpp"
#include "oracles.hpp"

using namespace compmach;
using compmach::testing::display_set;
using compmach::testing::showcase_machine;
using compmach::testing::walkthrough_machine;

namespace {

Machine xor_rules_machine() {
  return validate_machine(showcase_machine(1, 6, 6, 54));
}

std::vector<std::string> displays(const ProgramSpace& ps) {
  std::vector<std::string> out;
  for (const auto& mo : ps.morphisms) out.push_back(mo.display());
  return out;
}

}  // namespace

TEST_CASE("the alive quiver keeps exactly the alive arrows and their "
          "endpoints") {
  const Machine m = xor_rules_machine();
  const AliveQuiver aq = alive_quiver(m, m.initial_configuration(), 0);
  CHECK(aq.time == 0);
  CHECK(aq.quiver.arrow_count() == 6);
  CHECK(aq.quiver.vertex_count() == 10);
  CHECK(aq.machine_arrows ==
        std::vector<ArrowIndex>{0, 1, 3, 4, 6, 9});  // a1 a2 a4 a5 a7 a10
  for (std::size_t i = 0; i < aq.quiver.arrow_count(); ++i) {
    CHECK(aq.quiver.arrow_id(i) ==
          m.quiver().arrow_id(aq.machine_arrows[i]));
  }
  for (std::size_t i = 0; i < aq.quiver.vertex_count(); ++i) {
    CHECK(aq.quiver.vertex_id(i) ==
          m.quiver().vertex_id(aq.machine_vertices[i]));
  }
  CHECK_THROWS_AS(alive_quiver(m, Configuration::parse("1"), 0),
                  IncompleteConfigurationError);
}

TEST_CASE("the all-alive walkthrough space lists every program in a fixed "
          "order") {
  const Machine m = validate_machine(walkthrough_machine());
  const ProgramSpace ps =
      build_space(m, alive_quiver(m, m.initial_configuration(), 0));

  CHECK(ps.data_types ==
        std::vector<std::string>{"dt1", "dt2", "dt3", "dt4", "dt5", "dt6",
                                 "dt7", "dt8"});
  CHECK(displays(ps) ==
        std::vector<std::string>{
            "id:dt1", "id:dt2", "id:dt3", "id:dt4", "id:dt5", "id:dt6",
            "id:dt7", "id:dt8",                      // one per alive vertex
            "f1", "f2", "f3", "f4", "f5", "f6",      // length-1 paths
            "f2∘f1", "f3∘f2", "f6∘f5",               // length-2 paths
            "f3∘f2∘f1"});                            // length-3 path

  const SpaceStats stats = space_stats(ps);
  CHECK(stats.identities == 8);
  CHECK(stats.primitives == 6);
  CHECK(stats.composites == 4);
  CHECK(stats.total == 18);
  CHECK(stats.max_composite_length == 3);

  const Morphism& longest = ps.morphisms.back();
  CHECK(longest.kind == MorphismKind::composite);
  CHECK(longest.computons == std::vector<std::string>{"f1", "f2", "f3"});
  CHECK(longest.input == "dt1");
  CHECK(longest.output == "dt4");
}

TEST_CASE("the initial showcase space has ten identities, six primitives "
          "and two composites") {
  const Machine m = xor_rules_machine();
  const ProgramSpace ps =
      build_space(m, alive_quiver(m, m.initial_configuration(), 0));
  CHECK(ps.data_types ==
        std::vector<std::string>{"d1", "d2", "d3", "d4", "d5", "d6", "d8",
                                 "d9", "d12", "d13"});
  CHECK(displays(ps) ==
        std::vector<std::string>{"id:d1", "id:d2", "id:d3", "id:d4",
                                 "id:d5", "id:d6", "id:d8", "id:d9",
                                 "id:d12", "id:d13", "f1", "f2", "f4",
                                 "f5", "f7", "f10", "f2∘f1", "f5∘f4"});
}

TEST_CASE("space statistics track the orbit of the showcase machine") {
  const Machine m = xor_rules_machine();
  const auto trajectory = orbit(m, m.initial_configuration(), 2);
  const SpaceStats at2 =
      space_stats(build_space(m, alive_quiver(m, trajectory[2], 2)));
  CHECK(at2.identities == 10);
  CHECK(at2.primitives == 7);
  CHECK(at2.composites == 10);
  CHECK(at2.total == 27);
  CHECK(at2.max_composite_length == 5);
}

TEST_CASE("the maximal space is the all-alive space") {
  const Machine m = xor_rules_machine();
  const ProgramSpace maximal = maximal_space(m);
  const SpaceStats stats = space_stats(maximal);
  CHECK(stats.identities == 13);
  CHECK(stats.primitives == 10);
  CHECK(stats.composites == 18);
  CHECK(stats.total == 41);
  CHECK(stats.max_composite_length == 6);

  const ProgramSpace all_alive =
      build_space(m, alive_quiver(m, Configuration::parse("1111111111"), 0));
  CHECK(spaces_equal(maximal, all_alive));

  // Every space along the orbit stays inside the maximal one.
  for (const auto& c : orbit(m, m.initial_configuration(), 9)) {
    const ProgramSpace ps = build_space(m, alive_quiver(m, c, 0));
    for (const auto& mo : ps.morphisms) {
      CHECK(space_contains(maximal, mo));
    }
  }
}

TEST_CASE("an all-dead configuration presents the empty space") {
  const Machine m = xor_rules_machine();
  const ProgramSpace ps =
      build_space(m, alive_quiver(m, Configuration::parse("0000000000"), 0));
  CHECK(ps.data_types.empty());
  CHECK(ps.morphisms.empty());
  CHECK(space_stats(ps).total == 0);
}

TEST_CASE("space equality is extensional") {
  const Machine m = xor_rules_machine();
  const auto trajectory = orbit(m, m.initial_configuration(), 9);
  auto space_at = [&](std::size_t t) {
    return build_space(m, alive_quiver(m, trajectory[t], t));
  };
  // The orbit enters a period-4 cycle after five steps, so the spaces at
  // t = 5 and t = 9 coincide even though the extraction times differ.
  CHECK(spaces_equal(space_at(5), space_at(9)));
  CHECK_FALSE(spaces_equal(space_at(0), space_at(1)));
  CHECK_FALSE(spaces_equal(space_at(0), maximal_space(m)));
  CHECK(spaces_equal(space_at(0), space_at(0)));
}

TEST_CASE("total programs = alive vertices + non-trivial paths") {
  std::mt19937 rng(550123);
  for (int round = 0; round < 40; ++round) {
    const Machine m =
        validate_machine(compmach::testing::random_machine(rng));
    const AliveQuiver aq = alive_quiver(m, m.initial_configuration(), 0);
    const SpaceStats stats = space_stats(build_space(m, aq));
    const auto paths = compmach::testing::oracle_paths(aq.quiver);
    CHECK(stats.identities == aq.quiver.vertex_count());
    CHECK(stats.primitives + stats.composites == paths.size());
    CHECK(stats.total == aq.quiver.vertex_count() + paths.size());
  }
}

TEST_CASE("trivial and single-arrow paths present identities and "
          "primitives") {
  const Machine m = xor_rules_machine();
  const AliveQuiver aq = alive_quiver(m, m.initial_configuration(), 0);

  const Morphism id = path_morphism(m, aq, Path::trivial(0));
  CHECK(id.kind == MorphismKind::identity);
  CHECK(id.data_type == m.vertex_data_type(aq.machine_vertices[0]).id);
  CHECK(id.input == id.output);

  const Morphism prim = path_morphism(m, aq, Path(aq.quiver, {0}));
  CHECK(prim.kind == MorphismKind::primitive);
  CHECK(prim.computons == std::vector<std::string>{"f1"});
  CHECK(prim.input == "d1");
  CHECK(prim.output == "d2");

  const Morphism comp = path_morphism(m, aq, Path(aq.quiver, {0, 1}));
  CHECK(comp.kind == MorphismKind::composite);
  CHECK(comp.display() == "f2∘f1");
  CHECK(comp.input == "d1");
  CHECK(comp.output == "d3");
}

TEST_CASE("composition concatenates programs and treats identities as "
          "units") {
  const Machine m = validate_machine(walkthrough_machine());
  const Morphism f1 = resolve_selector(m, "f1");
  const Morphism f2 = resolve_selector(m, "f2");
  const Morphism f3 = resolve_selector(m, "f3");
  const Morphism id1 = resolve_selector(m, "id:dt1");
  const Morphism id2 = resolve_selector(m, "id:dt2");

  const Morphism f21 = compose_morphisms(f1, f2);  // f2 after f1
  CHECK(f21.kind == MorphismKind::composite);
  CHECK(f21.display() == "f2∘f1");
  CHECK(f21.input == "dt1");
  CHECK(f21.output == "dt3");

  CHECK(compose_morphisms(id1, f1) == f1);
  CHECK(compose_morphisms(f1, id2) == f1);
  CHECK(compose_morphisms(id1, id1) == id1);

  const Morphism left = compose_morphisms(compose_morphisms(f1, f2), f3);
  const Morphism right = compose_morphisms(f1, compose_morphisms(f2, f3));
  CHECK(left == right);
  CHECK(left.display() == "f3∘f2∘f1");

  CHECK_THROWS_AS(compose_morphisms(f1, f1), NotComposableError);
  CHECK_THROWS_AS(compose_morphisms(f2, id1), NotComposableError);
}

TEST_CASE("every composable pair in a space composes back into the space") {
  const Machine m = validate_machine(walkthrough_machine());
  const ProgramSpace ps = maximal_space(m);
  std::size_t checked = 0;
  for (const auto& first : ps.morphisms) {
    for (const auto& second : ps.morphisms) {
      if (first.output != second.input) continue;
      CHECK(space_contains(ps, compose_morphisms(first, second)));
      ++checked;
    }
  }
  CHECK(checked > ps.morphisms.size());  // identities alone pair this often
}

TEST_CASE("selectors resolve identities, primitives and composites") {
  const Machine m = validate_machine(walkthrough_machine());

  const Morphism id = resolve_selector(m, "id:dt3");
  CHECK(id.kind == MorphismKind::identity);
  CHECK(id.data_type == "dt3");

  const Morphism prim = resolve_selector(m, " f4 ");
  CHECK(prim.kind == MorphismKind::primitive);
  CHECK(prim.computons == std::vector<std::string>{"f4"});

  const Morphism comp = resolve_selector(m, "f3∘f2∘f1");
  CHECK(comp.kind == MorphismKind::composite);
  CHECK(comp.computons == std::vector<std::string>{"f1", "f2", "f3"});
  CHECK(comp.input == "dt1");
  CHECK(comp.output == "dt4");
  CHECK(resolve_selector(m, "f3.f2.f1") == comp);  // ASCII spelling

  CHECK_THROWS_AS(resolve_selector(m, "f9"), Error);
  CHECK_THROWS_AS(resolve_selector(m, "id:dt99"), Error);
  CHECK_THROWS_AS(resolve_selector(m, ""), Error);
  // f1 after f2 does not chain: f2 lands in dt3 but f1 needs dt1.
  CHECK_THROWS_AS(resolve_selector(m, "f1∘f2"), NotComposableError);
}

TEST_CASE("space membership is exact") {
  const Machine m = xor_rules_machine();
  const ProgramSpace ps =
      build_space(m, alive_quiver(m, m.initial_configuration(), 0));
  CHECK(space_contains(ps, resolve_selector(m, "f2∘f1")));
  CHECK(space_contains(ps, resolve_selector(m, "id:d8")));
  CHECK_FALSE(space_contains(ps, resolve_selector(m, "f3")));
  CHECK_FALSE(space_contains(ps, resolve_selector(m, "id:d7")));
  CHECK_FALSE(space_contains(ps, resolve_selector(m, "f3∘f2∘f1")));
}
