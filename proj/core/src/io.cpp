#include "prefalloc/io.hpp"

#include <json.hpp>

#include "prefalloc/error.hpp"

namespace prefalloc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
}

const json& require_member(const json& object, const std::string& key, const std::string& where) {
  if (!object.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) throw ParseError(where.empty() ? "/" : where, "missing member \"" + key + "\"");
  return *it;
}

std::string require_string(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where, "expected a string");
  return value.get<std::string>();
}

const json& require_array(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where, "expected an array");
  return value;
}

std::vector<std::string> string_list(const json& value, const std::string& where) {
  std::vector<std::string> result;
  const auto& array = require_array(value, where);
  for (std::size_t i = 0; i < array.size(); ++i) {
    result.push_back(require_string(array[i], where + "/" + std::to_string(i)));
  }
  return result;
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  InstanceSpec spec;
  spec.items = string_list(require_member(doc, "items", ""), "/items");

  const auto& agents = require_array(require_member(doc, "agents", ""), "/agents");
  for (std::size_t a = 0; a < agents.size(); ++a) {
    const std::string where = "/agents/" + std::to_string(a);
    const auto& entry = agents[a];
    AgentSpec agent;
    agent.id = require_string(require_member(entry, "id", where), where + "/id");
    agent.items = string_list(require_member(entry, "items", where), where + "/items");
    if (entry.contains("arcs")) {
      const auto& arcs = require_array(entry["arcs"], where + "/arcs");
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const std::string at = where + "/arcs/" + std::to_string(i);
        if (!arcs[i].is_array() || arcs[i].size() != 2) throw ParseError(at, "an arc is a two-element array [from, to]");
        agent.arcs.emplace_back(require_string(arcs[i][0], at + "/0"), require_string(arcs[i][1], at + "/1"));
      }
    }
    spec.agents.push_back(std::move(agent));
  }

  ParsedInstance parsed;
  parsed.instance = make_instance(spec, &parsed.warnings);
  return parsed;
}

std::string serialize_instance(const Instance& inst) {
  ordered_json doc;
  doc["items"] = ordered_json::array();
  for (const auto& name : inst.items()) doc["items"].push_back(name);
  doc["agents"] = ordered_json::array();
  for (const auto& agent : inst.agents()) {
    ordered_json entry;
    entry["id"] = agent.id;
    entry["items"] = ordered_json::array();
    for (ItemIndex v : agent.graph.items()) entry["items"].push_back(inst.item_name(v));
    entry["arcs"] = ordered_json::array();
    for (const Arc& arc : agent.graph.arcs()) {
      entry["arcs"].push_back(ordered_json::array({inst.item_name(arc.from), inst.item_name(arc.to)}));
    }
    doc["agents"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

NamedAllocation parse_allocation(std::string_view text) {
  const json doc = parse_json(text);
  const auto& body = require_member(doc, "allocation", "");
  if (!body.is_object()) throw ParseError("/allocation", "expected an object");
  NamedAllocation result;
  for (const auto& [agent, items] : body.items()) {
    auto& bundle = result[agent];
    for (auto& name : string_list(items, "/allocation/" + agent)) bundle.push_back(std::move(name));
  }
  return result;
}

std::string serialize_allocation(const Instance& inst, const Allocation& alloc) {
  ordered_json body = ordered_json::object();
  for (const auto& [agent, items] : to_named(inst, alloc)) body[agent] = items;
  ordered_json doc;
  doc["allocation"] = std::move(body);
  return doc.dump(2) + "\n";
}

std::string serialize_profile(const Instance& inst, const DissatisfactionProfile& profile) {
  ordered_json values = ordered_json::object();
  for (AgentIndex a = 0; a < profile.values.size(); ++a) values[inst.agent_id(a)] = profile.values[a];
  ordered_json doc;
  doc["profile"] = std::move(values);
  doc["sum"] = profile.sum();
  doc["max"] = profile.max();
  return doc.dump(2) + "\n";
}

}  // namespace prefalloc
