#include "invcover/instance.hpp"

#include "invcover/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace invcover {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json &value, const std::string &where) {
  if (!value.is_array()) fail(ErrorCode::InvalidArgument, where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto &item : value) {
    if (!item.is_string()) fail(ErrorCode::InvalidArgument, where + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Vertex lookup(const Hypergraph &h, const std::string &id, const std::string &where) {
  auto v = h.find(id);
  if (!v) fail(ErrorCode::InvalidArgument, where + " names unknown vertex '" + id + "'");
  return *v;
}

}  // namespace

Instance parse_instance(const std::string &json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::InvalidArgument, "instance must be a JSON object");
  for (const auto &[key, value] : doc.items()) {
    if (key != "vertices" && key != "edges" && key != "parts" && key != "group") {
      fail(ErrorCode::InvalidArgument, "unknown instance key '" + key + "'");
    }
  }
  if (!doc.contains("vertices") || !doc.contains("edges")) {
    fail(ErrorCode::InvalidArgument, "instance needs \"vertices\" and \"edges\"");
  }

  RawHypergraph raw;
  raw.vertices = string_list(doc["vertices"], "\"vertices\"");
  if (!doc["edges"].is_array()) fail(ErrorCode::InvalidArgument, "\"edges\" must be an array");
  for (const auto &edge : doc["edges"]) raw.edges.push_back(string_list(edge, "each edge"));

  ValidationReport report = validate(raw);
  if (!report.ok()) {
    for (const auto &entry : report.entries) {
      if (entry.severity == Severity::Error) fail(ErrorCode::InvalidArgument, entry.message);
    }
  }

  Instance instance;
  instance.graph = std::move(*report.hypergraph);
  instance.diagnostics = std::move(report.entries);
  const Hypergraph &h = instance.graph;

  if (doc.contains("parts")) {
    const json &parts = doc["parts"];
    if (!parts.is_object()) fail(ErrorCode::InvalidArgument, "\"parts\" must be an object");
    std::vector<std::pair<std::string, VertexSet>> list;
    for (const auto &[name, members] : parts.items()) {
      VertexSet set;
      for (const auto &id : string_list(members, "part '" + name + "'")) {
        set.push_back(lookup(h, id, "part '" + name + "'"));
      }
      list.emplace_back(name, std::move(set));
    }
    instance.parts.emplace(h, std::move(list));
  }

  std::vector<Permutation> generators;
  if (doc.contains("group")) {
    const json &group = doc["group"];
    if (!group.is_object()) fail(ErrorCode::InvalidArgument, "\"group\" must be an object");
    for (const auto &[key, value] : group.items()) {
      if (key != "generators") fail(ErrorCode::InvalidArgument, "unknown group key '" + key + "'");
    }
    const json &gens = group.value("generators", json::array());
    if (!gens.is_array()) fail(ErrorCode::InvalidArgument, "\"generators\" must be an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string where = "generator " + std::to_string(i);
      if (!gens[i].is_object()) fail(ErrorCode::InvalidArgument, where + " must be an object");
      std::vector<Vertex> image(h.num_vertices());
      for (Vertex v = 0; v < image.size(); ++v) image[v] = v;
      for (const auto &[from, to] : gens[i].items()) {
        if (!to.is_string()) fail(ErrorCode::InvalidArgument, where + " must map ids to ids");
        image[lookup(h, from, where)] = lookup(h, to.get<std::string>(), where);
      }
      try {
        generators.emplace_back(std::move(image));
      } catch (const Error &) {
        fail(ErrorCode::InvalidArgument, where + " is not a bijection");
      }
    }
  }
  instance.action = GroupAction(h.num_vertices(), std::move(generators));
  return instance;
}

Instance load_instance(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str());
}

std::string serialize_instance(const Instance &instance) {
  const Hypergraph &h = instance.graph;
  json doc;
  doc["vertices"] = h.ids();
  json edges = json::array();
  for (const auto &e : h.edges()) edges.push_back(h.names(e));
  doc["edges"] = std::move(edges);
  if (instance.parts) {
    json parts = json::object();
    for (std::size_t i = 0; i < instance.parts->size(); ++i) {
      parts[instance.parts->name(i)] = h.names(instance.parts->part(i));
    }
    doc["parts"] = std::move(parts);
  }
  if (!instance.action.generators().empty()) {
    json gens = json::array();
    for (const auto &g : instance.action.generators()) {
      json map = json::object();
      for (Vertex v = 0; v < g.degree(); ++v) {
        if (g(v) != v) map[h.id(v)] = h.id(g(v));
      }
      gens.push_back(std::move(map));
    }
    doc["group"] = json{{"generators", std::move(gens)}};
  }
  return doc.dump(2) + "\n";
}

namespace {

Instance build(const std::vector<std::string> &ids,
               const std::vector<std::vector<std::string>> &edges,
               const std::vector<std::pair<std::string, std::vector<std::string>>> &parts,
               const std::vector<std::map<std::string, std::string>> &generators) {
  json doc;
  doc["vertices"] = ids;
  doc["edges"] = edges;
  if (!parts.empty()) {
    json p = json::object();
    for (const auto &[name, members] : parts) p[name] = members;
    doc["parts"] = std::move(p);
  }
  if (!generators.empty()) doc["group"] = json{{"generators", generators}};
  return parse_instance(doc.dump());
}

// Δ is the 6-cycle v1..v6 with edge vertices f1..f6, f_i joining v_i and
// v_{i+1}. Colours repeat with period 3 (v: r g b, f: b r g), so every
// triple {v_i, f_i, v_{i+1}} is rainbow and the half-turn preserves colours.
Instance fig1() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 6; ++i) ids.push_back("v" + std::to_string(i));
  for (int i = 1; i <= 6; ++i) ids.push_back("f" + std::to_string(i));
  auto v = [](int i) { return "v" + std::to_string((i - 1) % 6 + 1); };
  auto f = [](int i) { return "f" + std::to_string((i - 1) % 6 + 1); };
  std::vector<std::vector<std::string>> edges;
  for (int i = 1; i <= 6; ++i) edges.push_back({v(i), f(i), v(i + 1)});
  const std::vector<std::pair<std::string, std::vector<std::string>>> parts{
      {"red", {v(1), v(4), f(2), f(5)}},
      {"green", {v(2), v(5), f(3), f(6)}},
      {"blue", {v(3), v(6), f(1), f(4)}},
  };
  std::map<std::string, std::string> half_turn;
  for (int i = 1; i <= 6; ++i) {
    half_turn[v(i)] = v(i + 3);
    half_turn[f(i)] = f(i + 3);
  }
  return build(ids, edges, parts, {half_turn});
}

std::string bits(int x) {
  return {static_cast<char>('0' + (x >> 2 & 1)), static_cast<char>('0' + (x >> 1 & 1)),
          static_cast<char>('0' + (x & 1))};
}

// {0,1}^3 with the coordinate rotation and the first-bit flip.
std::vector<std::map<std::string, std::string>> cube_generators() {
  std::map<std::string, std::string> rotation, flip;
  for (int x = 0; x < 8; ++x) {
    const std::string s = bits(x);
    rotation[s] = std::string{s[1], s[2], s[0]};
    flip[s] = std::string{s[0] == '0' ? '1' : '0', s[1], s[2]};
  }
  return {rotation, flip};
}

std::vector<std::string> cube_vertices() {
  std::vector<std::string> ids;
  for (int x = 0; x < 8; ++x) ids.push_back(bits(x));
  return ids;
}

Instance cube_faces() {
  std::vector<std::vector<std::string>> edges;
  for (int axis = 0; axis < 3; ++axis) {
    for (char side : {'0', '1'}) {
      std::vector<std::string> face;
      for (const auto &s : cube_vertices()) {
        if (s[axis] == side) face.push_back(s);
      }
      edges.push_back(std::move(face));
    }
  }
  return build(cube_vertices(), edges, {}, cube_generators());
}

Instance cube_edges() {
  std::vector<std::vector<std::string>> edges;
  for (int x = 0; x < 8; ++x) {
    for (int bit = 0; bit < 3; ++bit) {
      const int y = x ^ (1 << bit);
      if (x < y) edges.push_back({bits(x), bits(y)});
    }
  }
  return build(cube_vertices(), edges, {}, cube_generators());
}

}  // namespace

std::vector<std::string> fixture_names() { return {"cube_edges", "cube_faces", "fig1"}; }

Instance fixture(const std::string &name) {
  if (name == "fig1") return fig1();
  if (name == "cube_faces") return cube_faces();
  if (name == "cube_edges") return cube_edges();
  fail(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
}

}  // namespace invcover
