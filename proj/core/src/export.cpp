#include <sstream>

#include <nlohmann/json.hpp>

#include "rwgraph/wordgraph.hpp"

namespace rwg {

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const WordGraph& g) {
  const auto& arr = arrangement_for(g.spec());
  std::ostringstream out;
  out << "graph G {\n";
  out << "  label=" << dot_quote("G(w) for w = " + g.element().to_string() + " in " + g.spec().name()) << ";\n";
  out << "  node [shape=plaintext];\n";
  for (const auto& v : g.vertices()) out << "  " << dot_quote(v.to_string()) << ";\n";
  for (const auto& e : g.edges()) {
    // Commutation edges (two-member flats) drawn bold.
    bool commutation = arr.flat_members(e.flat).size() == 2;
    out << "  " << dot_quote(g.vertices()[e.u].to_string()) << " -- " << dot_quote(g.vertices()[e.v].to_string())
        << " [label=" << dot_quote(arr.flat(e.flat).name()) << (commutation ? ", style=bold" : "") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const WordGraph& g, std::optional<DiameterResult> diameter) {
  const auto& arr = arrangement_for(g.spec());
  nlohmann::ordered_json doc;
  doc["spec"] = {{"family", g.spec().family() == Family::A ? "A" : "B"}, {"n", g.spec().n()}};
  doc["element"] = g.element().to_string();
  auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v.to_string());
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"label", arr.flat(e.flat).name()}});
  }
  nlohmann::ordered_json stats = {{"vertexCount", g.vertex_count()}, {"edgeCount", g.edge_count()}};
  if (diameter) {
    stats["diameter"] = diameter->value;
    stats["diameterExhaustive"] = diameter->exhaustive;
  }
  doc["stats"] = std::move(stats);
  return doc.dump(2) + "\n";
}

}  // namespace rwg
