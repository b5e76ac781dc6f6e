#include "multispace/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace multispace::io {
namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument(std::string(what) + ": input is not valid JSON");
  }
  if (!j.is_object()) {
    throw std::invalid_argument(std::string(what) + ": top-level JSON value must be an object");
  }
  return j;
}

const json& field(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string(what) + ": missing required key '" + key + "'");
  }
  return *it;
}

std::vector<double> number_list(const json& j, const char* what) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(what) + ": expected an array of numbers");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number()) {
      throw std::invalid_argument(std::string(what) + ": expected an array of numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::string id_string(const json& j, const char* what) {
  if (!j.is_string()) {
    throw std::invalid_argument(std::string(what) + ": expected a string identifier");
  }
  return j.get<std::string>();
}

}  // namespace

graphphase::GraphPhase graph_from_json(const std::string& text) {
  const json j = parse(text, "graph input");
  std::vector<graphphase::Brane> branes;
  const json& jb = field(j, "branes", "graph input");
  if (!jb.is_array()) throw std::invalid_argument("graph input: 'branes' must be an array");
  for (const json& b : jb) {
    if (!b.is_object()) {
      throw std::invalid_argument("graph input: each brane must be an object");
    }
    branes.push_back({id_string(field(b, "id", "graph brane"), "graph brane"),
                      number_list(field(b, "omega", "graph brane"), "graph brane omega")});
  }
  std::vector<graphphase::Interaction> interactions;
  const auto it = j.find("interactions");
  if (it != j.end()) {
    if (!it->is_array()) {
      throw std::invalid_argument("graph input: 'interactions' must be an array");
    }
    for (const json& e : *it) {
      if (!e.is_object()) {
        throw std::invalid_argument("graph input: each interaction must be an object");
      }
      interactions.push_back(
          {id_string(field(e, "a", "graph interaction"), "graph interaction"),
           id_string(field(e, "b", "graph interaction"), "graph interaction"),
           number_list(field(e, "lambda", "graph interaction"), "graph interaction lambda")});
    }
  }
  return graphphase::build_graph_phase(branes, interactions);
}

std::string graph_to_json(const graphphase::GraphPhase& g) {
  json out;
  out["branes"] = json::array();
  for (const auto& v : g.vertices) {
    out["branes"].push_back({{"id", v}, {"omega", g.omega.at(v)}});
  }
  out["interactions"] = json::array();
  for (const auto& e : g.edges) {
    out["interactions"].push_back(
        {{"a", e.first}, {"b", e.second}, {"lambda", g.lambda.at(e)}});
  }
  return out.dump(2) + "\n";
}

multicosmos::MultiCosmosModel model_from_json(const std::string& text) {
  const json j = parse(text, "cosmos input");
  multicosmos::MultiCosmosModel m;

  const json& js = field(j, "subcosmoses", "cosmos input");
  if (!js.is_array()) {
    throw std::invalid_argument("cosmos input: 'subcosmoses' must be an array");
  }
  for (const json& s : js) {
    if (!s.is_object()) {
      throw std::invalid_argument("cosmos input: each sub-cosmos must be an object");
    }
    multicosmos::SubCosmos sc;
    sc.id = id_string(field(s, "id", "sub-cosmos"), "sub-cosmos");
    const json& carrier = field(s, "carrier", "sub-cosmos");
    if (!carrier.is_array()) {
      throw std::invalid_argument("cosmos input: 'carrier' must be an array of strings");
    }
    for (const json& e : carrier) sc.carrier.push_back(id_string(e, "carrier element"));
    const auto tt = s.find("time_tag");
    if (tt != s.end()) {
      if (!tt->is_number_integer()) {
        throw std::invalid_argument("cosmos input: 'time_tag' must be an integer");
      }
      sc.time_tag = tt->get<int>();
    }
    m.subcosmoses.push_back(std::move(sc));
  }

  const auto jo = j.find("order");
  if (jo != j.end()) {
    if (!jo->is_array()) throw std::invalid_argument("cosmos input: 'order' must be an array");
    for (const json& p : *jo) {
      if (!p.is_array() || p.size() != 2) {
        throw std::invalid_argument("cosmos input: each order entry must be [super, sub]");
      }
      m.order.insert({id_string(p[0], "order pair"), id_string(p[1], "order pair")});
    }
  }

  const auto jr = j.find("restrictions");
  if (jr != j.end()) {
    if (!jr->is_array()) {
      throw std::invalid_argument("cosmos input: 'restrictions' must be an array");
    }
    for (const json& r : *jr) {
      if (!r.is_object()) {
        throw std::invalid_argument("cosmos input: each restriction must be an object");
      }
      multicosmos::Restriction rest;
      rest.src = id_string(field(r, "src", "restriction"), "restriction");
      rest.dst = id_string(field(r, "dst", "restriction"), "restriction");
      const json& map = field(r, "map", "restriction");
      if (!map.is_object()) {
        throw std::invalid_argument("cosmos input: restriction 'map' must be an object");
      }
      for (const auto& [key, value] : map.items()) {
        rest.map[key] = id_string(value, "restriction target");
      }
      m.restrictions.push_back(std::move(rest));
    }
  }

  const auto ji = j.find("intersections");
  if (ji != j.end()) {
    if (!ji->is_array()) {
      throw std::invalid_argument("cosmos input: 'intersections' must be an array");
    }
    for (const json& x : *ji) {
      if (!x.is_object()) {
        throw std::invalid_argument("cosmos input: each intersection must be an object");
      }
      const json& pair = field(x, "pair", "intersection");
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("cosmos input: intersection 'pair' must be [idA, idB]");
      }
      std::string a = id_string(pair[0], "intersection pair");
      std::string b = id_string(pair[1], "intersection pair");
      if (b < a) std::swap(a, b);
      m.intersections[{a, b}] = id_string(field(x, "meet", "intersection"), "intersection");
    }
  }

  multicosmos::validate_model(m);
  return m;
}

std::string model_to_json(const multicosmos::MultiCosmosModel& m) {
  json out;
  out["subcosmoses"] = json::array();
  for (const auto& s : m.subcosmoses) {
    out["subcosmoses"].push_back(
        {{"id", s.id}, {"carrier", s.carrier}, {"time_tag", s.time_tag}});
  }
  out["order"] = json::array();
  for (const auto& [super, sub] : m.order) {
    out["order"].push_back(json::array({super, sub}));
  }
  out["restrictions"] = json::array();
  for (const auto& r : m.restrictions) {
    json map = json::object();
    for (const auto& [k, v] : r.map) map[k] = v;
    out["restrictions"].push_back({{"src", r.src}, {"dst", r.dst}, {"map", std::move(map)}});
  }
  out["intersections"] = json::array();
  for (const auto& [pair, meet] : m.intersections) {
    out["intersections"].push_back(
        {{"pair", json::array({pair.first, pair.second})}, {"meet", meet}});
  }
  return out.dump(2) + "\n";
}

}  // namespace multispace::io
