#include "doctest.h"

#include <algorithm>
#include <string>

#include "compmach/errors.hpp"
#include "compmach/machine_io.hpp"

using namespace compmach;

namespace {

std::string fixture(const std::string& name) {
  return std::string(COMPMACH_FIXTURE_DIR) + "/" + name;
}

std::string test_data(const std::string& name) {
  return std::string(COMPMACH_TEST_DATA_DIR) + "/" + name;
}

/// A complete single-arrow document with substitutable rules and
/// configuration sections (empty `config` drops the key entirely).
std::string one_arrow_doc(
    const std::string& rules =
        R"({"delta1": 1, "delta2": 6, "delta3": 6, "delta4": 54})",
    const std::string& config = R"("1")") {
  std::string doc = R"({
  "data_types": [{"id": "d1"}, {"id": "d2"}],
  "computons": [{"id": "f1", "dom": "d1", "cod": "d2"}],
  "quiver": {
    "vertices": [{"id": "v1", "data_type": "d1"},
                 {"id": "v2", "data_type": "d2"}],
    "arrows": [{"id": "a1", "source": "v1", "target": "v2",
                "computon": "f1"}]
  },
  "rules": )";
  doc += rules;
  if (!config.empty()) doc += ",\n  \"initial_configuration\": " + config;
  return doc + "\n}";
}

bool has_code(const std::vector<Diagnostic>& ds, const std::string& code) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) {
    return d.code == code;
  });
}

}  // namespace

TEST_CASE("the bundled example machines load") {
  const Machine m1 = load_machine(fixture("example1.json"));
  CHECK(m1.data_types().size() == 13);
  CHECK(m1.computons().size() == 10);
  CHECK(m1.quiver().vertex_count() == 13);
  CHECK(m1.quiver().arrow_count() == 10);
  CHECK(m1.rules().delta1 == 1);   // NOT
  CHECK(m1.rules().delta2 == 6);   // XOR
  CHECK(m1.rules().delta3 == 6);   // XOR
  CHECK(m1.rules().delta4 == 54);  // RULE54
  CHECK(m1.initial_configuration().to_string() == "1101101001");
  CHECK(m1.vertex_data_type(0).id == "d1");
  CHECK(m1.arrow_computon(9).id == "f10");
  CHECK_FALSE(m1.data_types()[0].semantics.has_value());

  const Machine m2 = load_machine(fixture("example2.json"));
  CHECK(m2.rules().delta1 == 2);    // ID
  CHECK(m2.rules().delta2 == 14);   // OR
  CHECK(m2.rules().delta3 == 14);   // OR
  CHECK(m2.rules().delta4 == 122);  // RULE122
  CHECK(m2.initial_configuration().to_string() == "1101101001");
}

TEST_CASE("object-form configurations and expression fields survive "
          "loading") {
  const Machine m = load_machine(test_data("chain3.json"));
  CHECK(m.initial_configuration().to_string() == "111");
  CHECK(m.data_types()[0].semantics == "integer");
  CHECK(m.computons()[0].expr == "x + 1");
  CHECK(m.computons()[1].expr == "x * 2");
  CHECK(m.rules().delta4 == 204);
}

TEST_CASE("canonical serialisation round-trips byte for byte") {
  for (const std::string& path :
       {fixture("example1.json"), fixture("example2.json"),
        test_data("chain3.json")}) {
    CAPTURE(path);
    const std::string once = machine_json(load_machine(path));
    const std::string twice =
        machine_json(validate_machine(decode_machine(once)));
    CHECK(once == twice);
  }
  const std::string text = machine_json(load_machine(fixture("example1.json")));
  CHECK(text.find("\"initial_configuration\": \"1101101001\"") !=
        std::string::npos);
  CHECK(text.find("\"delta4\": 54") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("rule names in documents resolve to their numbers") {
  const std::string doc = one_arrow_doc(
      R"({"delta1": "NOT", "delta2": "AND", "delta3": "OR", "delta4": "RULE204"})");
  const MachineDescription desc = decode_machine(doc);
  CHECK(desc.rules.delta1 == 1);
  CHECK(desc.rules.delta2 == 8);
  CHECK(desc.rules.delta3 == 14);
  CHECK(desc.rules.delta4 == 204);
}

TEST_CASE("malformed documents are rejected while decoding") {
  CHECK_THROWS_AS(decode_machine("not json {"), DecodeError);
  CHECK_THROWS_AS(decode_machine("[]"), DecodeError);
  CHECK_THROWS_AS(decode_machine("{}"), DecodeError);

  // Unknown and missing keys, at top level and nested.
  std::string extra_key = one_arrow_doc();
  extra_key.insert(1, "\n  \"extra\": 1,");
  CHECK_THROWS_AS(decode_machine(extra_key), DecodeError);
  CHECK_THROWS_AS(
      decode_machine(
          R"({"data_types": [], "computons": [], "quiver": {"vertices": [], "arrows": []}})"),
      DecodeError);  // no rules
  CHECK_THROWS_AS(
      decode_machine(one_arrow_doc(
          R"({"delta1": 1, "delta2": 6, "delta3": 6})")),
      DecodeError);  // missing delta4

  // Rule slots: wrong arity, unknown name, negative number, non-number.
  CHECK_THROWS_AS(
      decode_machine(one_arrow_doc(
          R"({"delta1": "XOR", "delta2": 6, "delta3": 6, "delta4": 54})")),
      DecodeError);
  CHECK_THROWS_AS(
      decode_machine(one_arrow_doc(
          R"({"delta1": 1, "delta2": "NAND", "delta3": 6, "delta4": 54})")),
      DecodeError);
  CHECK_THROWS_AS(
      decode_machine(one_arrow_doc(
          R"({"delta1": -1, "delta2": 6, "delta3": 6, "delta4": 54})")),
      DecodeError);
  CHECK_THROWS_AS(
      decode_machine(one_arrow_doc(
          R"({"delta1": true, "delta2": 6, "delta3": 6, "delta4": 54})")),
      DecodeError);

  // Configurations: too long, bad character, wrong JSON type, non-integer
  // state in object form.
  CHECK_THROWS_AS(
      decode_machine(one_arrow_doc(
          R"({"delta1": 1, "delta2": 6, "delta3": 6, "delta4": 54})",
          R"("11")")),
      DecodeError);
  CHECK_THROWS_AS(
      decode_machine(one_arrow_doc(
          R"({"delta1": 1, "delta2": 6, "delta3": 6, "delta4": 54})",
          R"("x")")),
      DecodeError);
  CHECK_THROWS_AS(
      decode_machine(one_arrow_doc(
          R"({"delta1": 1, "delta2": 6, "delta3": 6, "delta4": 54})",
          "42")),
      DecodeError);
  CHECK_THROWS_AS(
      decode_machine(one_arrow_doc(
          R"({"delta1": 1, "delta2": 6, "delta3": 6, "delta4": 54})",
          R"({"a1": "1"})")),
      DecodeError);
}

TEST_CASE("decoding checks shape only; constraints surface in validation") {
  // A reference to a computon that does not exist decodes fine.
  std::string doc = one_arrow_doc();
  const std::size_t at = doc.find("\"computon\": \"f1\"");
  REQUIRE(at != std::string::npos);
  doc.replace(at, 16, "\"computon\": \"f9\"");
  const MachineDescription desc = decode_machine(doc);
  CHECK(desc.arrows[0].computon == "f9");
  CHECK(has_code(check_machine(desc), diag::UnknownReference));
  CHECK_THROWS_AS(validate_machine(desc), MachineValidationError);

  // A configuration string shorter than the arrow list covers a prefix;
  // the gap is a validation finding, not a decode error.
  const MachineDescription partial = decode_machine(one_arrow_doc(
      R"({"delta1": 1, "delta2": 6, "delta3": 6, "delta4": 54})", R"("")"));
  CHECK(partial.initial_states.empty());
  CHECK(has_code(check_machine(partial), diag::IncompleteConfiguration));

  // So is a missing configuration key.
  const MachineDescription absent = decode_machine(one_arrow_doc(
      R"({"delta1": 1, "delta2": 6, "delta3": 6, "delta4": 54})", ""));
  CHECK(has_code(check_machine(absent), diag::IncompleteConfiguration));
}

TEST_CASE("unreadable files are reported") {
  CHECK_THROWS_AS(load_machine("/no/such/file.json"), DecodeError);
}
