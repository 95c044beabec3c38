#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "compmach/errors.hpp"
#include "compmach/evolution.hpp"
#include "compmach/exporters.hpp"
#include "compmach/execution.hpp"
#include "compmach/machine.hpp"
#include "compmach/machine_io.hpp"
#include "compmach/program_space.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;   // validation or IO problem
constexpr int kExitRefused = 2;   // semantically impossible request
constexpr int kExitUsage = 64;

using compmach::Configuration;
using compmach::Machine;
using ordered_json = nlohmann::ordered_json;

Configuration initial_configuration(const Machine& m,
                                    const std::optional<std::string>& bits) {
  if (!bits) return m.initial_configuration();
  Configuration c = Configuration::parse(*bits);
  if (c.size() != m.quiver().arrow_count()) {
    throw compmach::IncompleteConfigurationError(
        "--initial has " + std::to_string(c.size()) +
        " states but the machine has " +
        std::to_string(m.quiver().arrow_count()) + " arrows");
  }
  return c;
}

int do_validate(const std::string& path) {
  try {
    compmach::load_machine(path);
  } catch (const compmach::MachineValidationError& e) {
    for (const auto& d : e.diagnostics()) {
      std::cerr << d.format() << "\n";
    }
    return kExitInvalid;
  }
  std::cout << "OK\n";
  return kExitOk;
}

int do_run(const std::string& path, std::size_t steps,
           const std::optional<std::string>& initial) {
  const Machine m = compmach::load_machine(path);
  const auto trajectory = compmach::orbit(m, initial_configuration(m, initial), steps);
  std::cout << compmach::orbit_report_json(m, trajectory,
                                           compmach::cycle_within(trajectory));
  return kExitOk;
}

int do_diagram(const std::string& path, std::size_t steps) {
  const Machine m = compmach::load_machine(path);
  std::cout << compmach::render_diagram(
      compmach::orbit(m, m.initial_configuration(), steps));
  return kExitOk;
}

int do_cycle(const std::string& path, std::size_t max_steps) {
  const Machine m = compmach::load_machine(path);
  const auto report =
      compmach::detect_cycle(m, m.initial_configuration(), max_steps);
  ordered_json out;
  if (report) {
    out["preperiod"] = report->preperiod;
    out["period"] = report->period;
  } else {
    out["not_found_within"] = max_steps;
  }
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int do_space(const std::string& path, std::size_t at, bool maximal,
             const std::string& format) {
  const Machine m = compmach::load_machine(path);
  compmach::ProgramSpace space;
  if (maximal) {
    space = compmach::maximal_space(m);
  } else {
    const auto trajectory =
        compmach::orbit(m, m.initial_configuration(), at);
    space = compmach::build_space(
        m, compmach::alive_quiver(m, trajectory.back(), at));
  }
  if (format == "json") {
    std::cout << compmach::space_json(space);
  } else if (format == "dot") {
    std::cout << compmach::export_space_dot(space);
  } else {
    std::cout << compmach::render_space_text(space);
  }
  return kExitOk;
}

int do_eval(const std::string& path, const std::string& selector,
            std::int64_t input, const std::optional<std::size_t>& at) {
  const Machine m = compmach::load_machine(path);
  try {
    const compmach::Morphism mo = compmach::resolve_selector(m, selector);
    if (at) {
      const auto trajectory =
          compmach::orbit(m, m.initial_configuration(), *at);
      const compmach::ProgramSpace space = compmach::build_space(
          m, compmach::alive_quiver(m, trajectory.back(), *at));
      if (!compmach::space_contains(space, mo)) {
        std::cerr << "refused: morphism '" << mo.display()
                  << "' is not in the program space at t=" << *at << "\n";
        return kExitRefused;
      }
    }
    const compmach::Value result = compmach::eval_morphism(
        m, mo, compmach::Value{input, mo.input});
    ordered_json out;
    out["morphism"] = mo.display();
    out["input"] = input;
    out["input_type"] = mo.input;
    out["output"] = result.value;
    out["output_type"] = result.data_type;
    std::cout << out.dump() << "\n";
    return kExitOk;
  } catch (const compmach::Error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"composition machine: evolve quivers of programs and "
               "inspect the program spaces they span"};
  app.require_subcommand(1);

  std::string file;
  std::size_t steps = 0;
  std::size_t max_steps = 10000;
  std::size_t at = 0;
  bool maximal = false;
  std::string format = "text";
  std::string selector;
  std::int64_t input = 0;
  std::string initial_bits;

  auto* validate =
      app.add_subcommand("validate", "check a machine file; print OK or "
                                     "every constraint violation");
  validate->add_option("file", file, "machine file (JSON)")->required();

  auto* run = app.add_subcommand(
      "run", "evolve the machine and print a JSON trajectory report");
  run->add_option("file", file, "machine file (JSON)")->required();
  run->add_option("--steps", steps, "number of update steps")->required();
  auto* initial_opt = run->add_option(
      "--initial", initial_bits,
      "override the stored initial configuration ('1'/'0' string)");

  auto* diagram = app.add_subcommand(
      "diagram", "print the space-time diagram of the trajectory");
  diagram->add_option("file", file, "machine file (JSON)")->required();
  diagram->add_option("--steps", steps, "number of update steps")
      ->required();

  auto* cycle = app.add_subcommand(
      "cycle", "find the preperiod and period of the trajectory");
  cycle->add_option("file", file, "machine file (JSON)")->required();
  cycle->add_option("--max-steps", max_steps,
                    "stop searching after this many steps");

  auto* space = app.add_subcommand(
      "space", "print the program space at a time step (or the maximal "
               "one)");
  space->add_option("file", file, "machine file (JSON)")->required();
  auto* at_opt =
      space->add_option("--at", at, "time step of the space (default 0)");
  auto* maximal_flag = space->add_flag(
      "--maximal", maximal, "the space of the all-alive configuration");
  at_opt->excludes(maximal_flag);
  maximal_flag->excludes(at_opt);
  space->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));

  auto* eval = app.add_subcommand(
      "eval", "apply a morphism of the program space to an integer");
  eval->add_option("file", file, "machine file (JSON)")->required();
  eval->add_option("--morphism", selector,
                   "selector: \"f1\", \"f3∘f2∘f1\" (or "
                   "\"f3.f2.f1\"), \"id:d1\"")
      ->required();
  eval->add_option("--input", input, "integer input value")->required();
  auto* eval_at =
      eval->add_option("--at", at, "require the morphism to be present in "
                                   "the space at this time step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate) return do_validate(file);
    if (*run) {
      std::optional<std::string> initial;
      if (*initial_opt) initial = initial_bits;
      return do_run(file, steps, initial);
    }
    if (*diagram) return do_diagram(file, steps);
    if (*cycle) return do_cycle(file, max_steps);
    if (*space) return do_space(file, at, maximal, format);
    if (*eval) {
      std::optional<std::size_t> eval_time;
      if (*eval_at) eval_time = at;
      return do_eval(file, selector, input, eval_time);
    }
  } catch (const compmach::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}
