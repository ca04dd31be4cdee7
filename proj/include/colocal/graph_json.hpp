#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "colocal/graph.hpp"
#include "json.hpp"

namespace colocal {

using json = nlohmann::json;

// Interchange format:
//   {"nodes":[{"id":0,"colour":"black"|"white"|null}, ...],
//    "edges":[{"u":0,"v":1,"port_u":1,"port_v":1,"dir":"uv"|"vu"|null}, ...]}
// Colours and directions are all-present or all-absent within one graph.

inline json graph_to_json(const Graph& g) {
  json nodes = json::array();
  for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v) {
    json node = {{"id", v}};
    if (auto c = g.colour(v))
      node["colour"] = std::string(to_string(*c));
    else
      node["colour"] = nullptr;
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const EdgeSpec& s : g.edge_specs()) {
    json e = {{"u", s.u}, {"v", s.v}, {"port_u", s.port_u}, {"port_v", s.port_v}};
    if (s.dir)
      e["dir"] = *s.dir == EdgeDirection::UtoV ? "uv" : "vu";
    else
      e["dir"] = nullptr;
    edges.push_back(std::move(e));
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

inline Colour parse_colour(const json& j) {
  if (j == "black") return Colour::Black;
  if (j == "white") return Colour::White;
  throw Error(ErrorCode::ParseError, "bad colour " + j.dump());
}

inline Graph graph_from_json(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
      throw Error(ErrorCode::ParseError, "graph document needs \"nodes\" and \"edges\"");
    const auto& nodes = doc.at("nodes");
    const auto n = nodes.size();
    std::vector<std::optional<Colour>> colour(n);
    std::vector<bool> seen(n, false);
    std::size_t coloured = 0;
    for (const auto& node : nodes) {
      const auto id = node.at("id").get<long long>();
      if (id < 0 || static_cast<std::size_t>(id) >= n || seen[static_cast<std::size_t>(id)])
        throw Error(ErrorCode::ParseError, "node ids must be a permutation of 0..n-1");
      seen[static_cast<std::size_t>(id)] = true;
      if (node.contains("colour") && !node.at("colour").is_null()) {
        colour[static_cast<std::size_t>(id)] = parse_colour(node.at("colour"));
        ++coloured;
      }
    }
    if (coloured != 0 && coloured != n)
      throw Error(ErrorCode::PartialLabels, "colours must be given for all nodes or none");
    std::optional<std::vector<Colour>> colours;
    if (coloured == n && n > 0) {
      colours.emplace();
      for (const auto& c : colour) colours->push_back(*c);
    }

    std::vector<EdgeSpec> specs;
    for (const auto& e : doc.at("edges")) {
      EdgeSpec s{e.at("u").get<NodeId>(), e.at("v").get<NodeId>(), e.at("port_u").get<Port>(),
                 e.at("port_v").get<Port>(), std::nullopt};
      if (e.contains("dir") && !e.at("dir").is_null()) {
        const auto d = e.at("dir").get<std::string>();
        if (d == "uv")
          s.dir = EdgeDirection::UtoV;
        else if (d == "vu")
          s.dir = EdgeDirection::VtoU;
        else
          throw Error(ErrorCode::ParseError, "bad edge direction \"" + d + "\"");
      }
      specs.push_back(s);
    }
    return build_graph(n, std::move(colours), specs);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

inline Graph read_graph_file(const std::string& path) { return graph_from_json(read_json_file(path)); }

inline std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(); }

inline Graph parse_graph(const std::string& text) { return graph_from_json(parse_json_text(text)); }

}  // namespace colocal
