#include "compmach/machine_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "compmach/errors.hpp"
#include "compmach/rules.hpp"

namespace compmach {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw DecodeError(where + ": " + what);
}

void expect_keys(const ordered_json& obj, const std::string& where,
                 const std::set<std::string>& required,
                 const std::set<std::string>& optional) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!required.count(key) && !optional.count(key)) {
      fail(where, "unknown key \"" + key + "\"");
    }
  }
  for (const std::string& key : required) {
    if (!obj.contains(key)) fail(where, "missing key \"" + key + "\"");
  }
}

std::string get_string(const ordered_json& obj, const std::string& where,
                       const std::string& key) {
  const auto& value = obj.at(key);
  if (!value.is_string()) fail(where + "." + key, "expected a string");
  return value.get<std::string>();
}

unsigned decode_rule(const ordered_json& rules, const std::string& key,
                     unsigned expected_arity) {
  const std::string where = "rules." + key;
  if (!rules.contains(key)) fail("rules", "missing key \"" + key + "\"");
  const auto& value = rules.at(key);
  if (value.is_number_integer()) {
    const auto n = value.get<std::int64_t>();
    if (n < 0) fail(where, "rule numbers must be non-negative");
    return static_cast<unsigned>(n);
  }
  if (value.is_string()) {
    RuleFragment fragment;
    try {
      fragment = named_rule(value.get<std::string>());
    } catch (const UnknownRuleNameError& e) {
      fail(where, e.what());
    }
    if (fragment.arity != expected_arity) {
      fail(where, "rule name \"" + value.get<std::string>() + "\" takes " +
                      std::to_string(fragment.arity) +
                      " input(s) but this slot needs " +
                      std::to_string(expected_arity));
    }
    return fragment.value;
  }
  fail(where, "expected an integer or a rule name");
}

void decode_initial_configuration(const ordered_json& value,
                                  MachineDescription& desc) {
  const std::string where = "initial_configuration";
  if (value.is_string()) {
    const std::string bits = value.get<std::string>();
    if (bits.size() > desc.arrows.size()) {
      fail(where, "configuration string has " +
                      std::to_string(bits.size()) +
                      " entries but there are only " +
                      std::to_string(desc.arrows.size()) + " arrows");
    }
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1') {
        fail(where, std::string("only '0' and '1' are allowed, found '") +
                        bits[i] + "'");
      }
      desc.initial_states.emplace_back(desc.arrows[i].id, bits[i] - '0');
    }
    return;
  }
  if (value.is_object()) {
    for (const auto& [arrow_id, state] : value.items()) {
      if (!state.is_number_integer()) {
        fail(where + "." + arrow_id, "expected 0 or 1");
      }
      desc.initial_states.emplace_back(
          arrow_id, static_cast<int>(state.get<std::int64_t>()));
    }
    return;
  }
  fail(where, "expected a '1'/'0' string or an arrow-to-state object");
}

}  // namespace

MachineDescription decode_machine(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DecodeError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  expect_keys(doc, "document",
              {"data_types", "computons", "quiver", "rules"},
              {"initial_configuration"});

  MachineDescription desc;

  const auto& data_types = doc.at("data_types");
  if (!data_types.is_array()) fail("data_types", "expected an array");
  for (std::size_t i = 0; i < data_types.size(); ++i) {
    const std::string where = "data_types[" + std::to_string(i) + "]";
    const auto& entry = data_types.at(i);
    if (!entry.is_object()) fail(where, "expected an object");
    expect_keys(entry, where, {"id"}, {"semantics"});
    DataType d;
    d.id = get_string(entry, where, "id");
    if (entry.contains("semantics")) {
      d.semantics = get_string(entry, where, "semantics");
    }
    desc.data_types.push_back(std::move(d));
  }

  const auto& computons = doc.at("computons");
  if (!computons.is_array()) fail("computons", "expected an array");
  for (std::size_t i = 0; i < computons.size(); ++i) {
    const std::string where = "computons[" + std::to_string(i) + "]";
    const auto& entry = computons.at(i);
    if (!entry.is_object()) fail(where, "expected an object");
    expect_keys(entry, where, {"id", "dom", "cod"}, {"expr"});
    Computon f;
    f.id = get_string(entry, where, "id");
    f.dom = get_string(entry, where, "dom");
    f.cod = get_string(entry, where, "cod");
    if (entry.contains("expr")) {
      f.expr = get_string(entry, where, "expr");
    }
    desc.computons.push_back(std::move(f));
  }

  const auto& quiver = doc.at("quiver");
  if (!quiver.is_object()) fail("quiver", "expected an object");
  expect_keys(quiver, "quiver", {"vertices", "arrows"}, {});

  const auto& vertices = quiver.at("vertices");
  if (!vertices.is_array()) fail("quiver.vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "quiver.vertices[" + std::to_string(i) + "]";
    const auto& entry = vertices.at(i);
    if (!entry.is_object()) fail(where, "expected an object");
    expect_keys(entry, where, {"id", "data_type"}, {});
    desc.vertices.push_back({get_string(entry, where, "id"),
                             get_string(entry, where, "data_type")});
  }

  const auto& arrows = quiver.at("arrows");
  if (!arrows.is_array()) fail("quiver.arrows", "expected an array");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string where = "quiver.arrows[" + std::to_string(i) + "]";
    const auto& entry = arrows.at(i);
    if (!entry.is_object()) fail(where, "expected an object");
    expect_keys(entry, where, {"id", "source", "target", "computon"}, {});
    desc.arrows.push_back({get_string(entry, where, "id"),
                           get_string(entry, where, "source"),
                           get_string(entry, where, "target"),
                           get_string(entry, where, "computon")});
  }

  const auto& rules = doc.at("rules");
  if (!rules.is_object()) fail("rules", "expected an object");
  expect_keys(rules, "rules", {"delta1", "delta2", "delta3", "delta4"}, {});
  desc.rules.delta1 = decode_rule(rules, "delta1", 1);
  desc.rules.delta2 = decode_rule(rules, "delta2", 2);
  desc.rules.delta3 = decode_rule(rules, "delta3", 2);
  desc.rules.delta4 = decode_rule(rules, "delta4", 3);

  if (doc.contains("initial_configuration")) {
    decode_initial_configuration(doc.at("initial_configuration"), desc);
  }
  return desc;
}

Machine load_machine(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecodeError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return validate_machine(decode_machine(buffer.str()));
}

std::string machine_json(const Machine& m) {
  ordered_json doc;

  doc["data_types"] = ordered_json::array();
  for (const DataType& d : m.data_types()) {
    ordered_json entry{{"id", d.id}};
    if (d.semantics) entry["semantics"] = *d.semantics;
    doc["data_types"].push_back(std::move(entry));
  }

  doc["computons"] = ordered_json::array();
  for (const Computon& f : m.computons()) {
    ordered_json entry{{"id", f.id}, {"dom", f.dom}, {"cod", f.cod}};
    if (f.expr) entry["expr"] = *f.expr;
    doc["computons"].push_back(std::move(entry));
  }

  const Quiver& q = m.quiver();
  doc["quiver"]["vertices"] = ordered_json::array();
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    doc["quiver"]["vertices"].push_back(
        ordered_json{{"id", q.vertex_id(v)},
                     {"data_type", m.vertex_data_type(v).id}});
  }
  doc["quiver"]["arrows"] = ordered_json::array();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    doc["quiver"]["arrows"].push_back(
        ordered_json{{"id", q.arrow_id(a)},
                     {"source", q.vertex_id(q.source(a))},
                     {"target", q.vertex_id(q.target(a))},
                     {"computon", m.arrow_computon(a).id}});
  }

  doc["rules"] = ordered_json{{"delta1", m.rules().delta1},
                              {"delta2", m.rules().delta2},
                              {"delta3", m.rules().delta3},
                              {"delta4", m.rules().delta4}};
  doc["initial_configuration"] = m.initial_configuration().to_string();
  return doc.dump(2) + "\n";
}

}  // namespace compmach
