#include "weyltab/json_io.hpp"

#include <sstream>

namespace weyltab {

std::vector<int> root_simple_coords(const RootSystem& rs, int pos_idx) {
  return rs.simple_coords(pos_idx);
}

int root_from_simple_coords(const RootSystem& rs, const std::vector<int>& sc) {
  if (static_cast<int>(sc.size()) != rs.num_simple())
    throw InvalidInput("root coordinates must have one entry per simple root");
  Coords c(rs.ambient(), 0);
  for (int i = 0; i < rs.num_simple(); ++i)
    for (int k = 0; k < rs.ambient(); ++k) c[k] += sc[i] * rs.simple(i)[k];
  int id = rs.lookup(c);
  if (id <= 0) throw InvalidInput("coordinates do not name a positive root");
  return id - 1;
}

Json shape_to_json(const PlacedShape& s) {
  Json j;
  j["type"] = std::string(1, static_cast<char>(s.rs->family()));
  j["rank"] = s.rs->rank();
  Json gamma = Json::array();
  for (const auto& g : s.gamma) gamma.push_back(rat_to_string(g));
  j["gamma"] = gamma;
  Json J = Json::array();
  for (int p : s.J.indices()) J.push_back(root_simple_coords(*s.rs, p));
  j["J"] = J;
  return j;
}

PlacedShape shape_from_json(const Json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type.size() != 1) throw InvalidInput("bad type: " + type);
  auto rs = RootSystem::build(family_from_char(type[0]), j.at("rank").get<int>());
  Weight gamma;
  for (const auto& g : j.at("gamma")) gamma.push_back(rat_from_string(g.get<std::string>()));
  RootSet J;
  if (j.contains("J"))
    for (const auto& root : j.at("J"))
      J.set(root_from_simple_coords(*rs, root.get<std::vector<int>>()));
  return PlacedShape::make(rs, std::move(gamma), J);
}

Json tableau_set_to_json(const TableauSet& ts) {
  Json j;
  j["shape"] = shape_to_json(ts.shape);
  j["count"] = ts.elements.size();
  Json elems = Json::array();
  for (const auto& w : ts.elements) elems.push_back(w.one_line());
  j["elements"] = elems;
  return j;
}

Json config_to_json(const BoxConfig& c) {
  Json boxes = Json::array();
  for (const auto& b : c.boxes) {
    Json jb;
    jb["index"] = b.index;
    jb["row"] = b.row;
    jb["col"] = b.col;
    jb["content"] = rat_to_string(b.content);
    boxes.push_back(jb);
  }
  Json j;
  j["page"] = rat_to_string(c.page);
  j["boxes"] = boxes;
  return j;
}

Json book_to_json(const Book& b) {
  Json j;
  j["family"] = std::string(1, static_cast<char>(b.family));
  Json arranged = Json::array();
  for (const auto& g : b.arranged) arranged.push_back(rat_to_string(g));
  j["arranged"] = arranged;
  Json pages = Json::array();
  for (const auto& p : b.pages) pages.push_back(config_to_json(p));
  j["pages"] = pages;
  return j;
}

Json graph_to_json(const CalibrationGraph& g) {
  Json j;
  j["gamma"] = weight_to_string(g.gamma);
  j["vertices"] = g.vertices.size();
  j["edges"] = g.edges.size();
  Json comps = Json::array();
  for (int c = 0; c < g.num_components(); ++c) {
    Json jc;
    jc["size"] = g.component_sizes[c];
    Json label = Json::array();
    for (int p : g.component_labels[c].indices())
      label.push_back(root_simple_coords(*g.rs, p));
    jc["J"] = label;
    comps.push_back(jc);
  }
  j["components"] = comps;
  return j;
}

std::string graph_to_dot(const CalibrationGraph& g) {
  static const char* palette[] = {"lightblue", "lightsalmon", "palegreen",
                                  "khaki",     "plum",        "lightgray",
                                  "orange",    "cyan"};
  std::ostringstream os;
  os << "graph calibration {\n  node [style=filled];\n";
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    os << "  v" << v << " [label=\"" << weight_to_string(g.vertices[v]) << "\"";
    if (!g.component.empty())
      os << ", fillcolor=\"" << palette[g.component[v] % 8] << "\"";
    os << "];\n";
  }
  for (auto [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace weyltab
