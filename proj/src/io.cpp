#include "liftdiam/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace liftdiam::io {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(where + ": missing field '" + key + "'");
  return j.at(key);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw InvalidInput(where + ": expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InvalidInput(where + ": expected an integer");
  return j.get<int>();
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) throw InvalidInput(where + ": expected a string");
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array");
  return j;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << body;
}

MetricGraph graph_from_json(const json& j) {
  std::vector<std::string> names;
  for (const auto& v : array(field(j, "vertices", "graph"), "graph.vertices"))
    names.push_back(text(v, "graph.vertices"));
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], static_cast<int>(i));

  std::vector<Edge> edges;
  const json& list = array(field(j, "edges", "graph"), "graph.edges");
  for (std::size_t k = 0; k < list.size(); ++k) {
    const json& e = list[k];
    std::string where = "graph.edges[" + std::to_string(k) + "]";
    Edge out;
    out.id = text(field(e, "id", where), where + ".id");
    where = "edge '" + out.id + "'";
    for (auto [key, slot] : {std::pair{"u", &out.u}, std::pair{"v", &out.v}}) {
      std::string name = text(field(e, key, where), where);
      auto it = index.find(name);
      if (it == index.end()) throw InvalidInput(where + " references unknown vertex '" + name + "'");
      *slot = it->second;
    }
    out.length = number(field(e, "length", where), where + ".length");
    if (!(out.length > 0.0)) throw InvalidInput(where + " has nonpositive length");
    edges.push_back(std::move(out));
  }
  MetricGraph g(std::move(names), std::move(edges));
  g.require_connected();
  return g;
}

json graph_to_json(const MetricGraph& g) {
  json j;
  j["vertices"] = g.vertex_names();
  j["edges"] = json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({{"id", e.id},
                          {"u", g.vertex_names()[static_cast<std::size_t>(e.u)]},
                          {"v", g.vertex_names()[static_cast<std::size_t>(e.v)]},
                          {"length", e.length}});
  return j;
}

Voltage voltage_from_json(const json& j, const MetricGraph& g) {
  Voltage v;
  v.sheets = integer(field(j, "sheets", "voltage"), "voltage.sheets");
  if (v.sheets < 1) throw InvalidInput("voltage.sheets must be positive");
  const json& map = field(j, "voltages", "voltage");
  if (!map.is_object()) throw InvalidInput("voltage.voltages: expected an object");
  v.assignment.assign(static_cast<std::size_t>(g.edge_count()), identity_permutation(v.sheets));
  std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& [id, perm] : map.items()) {
    const int e = g.edge_index(id);
    Permutation p;
    for (const auto& x : array(perm, "voltage for edge '" + id + "'")) p.push_back(integer(x, "voltage for edge '" + id + "'"));
    if (!is_permutation(p, v.sheets))
      throw InvalidInput("voltage for edge '" + id + "' is not a permutation of 0.." + std::to_string(v.sheets - 1));
    v.assignment[static_cast<std::size_t>(e)] = std::move(p);
    seen[static_cast<std::size_t>(e)] = 1;
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!seen[static_cast<std::size_t>(e)]) throw InvalidInput("edge '" + g.edge(e).id + "' has no voltage");
  return v;
}

json voltage_to_json(const Voltage& v, const MetricGraph& g) {
  json j;
  j["sheets"] = v.sheets;
  j["voltages"] = json::object();
  for (int e = 0; e < g.edge_count(); ++e) j["voltages"][g.edge(e).id] = v.assignment.at(static_cast<std::size_t>(e));
  return j;
}

Presentation presentation_from_json(const json& j) {
  const int gens = integer(field(j, "generators", "presentation"), "presentation.generators");
  std::vector<Word> relators;
  for (const auto& r : array(field(j, "relators", "presentation"), "presentation.relators"))
    relators.push_back(parse_word(text(r, "presentation.relators"), gens));
  return make_presentation(gens, std::move(relators));
}

json presentation_to_json(const Presentation& p) {
  json j;
  j["generators"] = p.generator_count;
  j["relators"] = json::array();
  for (const auto& r : p.relators) j["relators"].push_back(format_word(r));
  return j;
}

SimplicialComplex2 complex_from_json(const json& j) {
  std::vector<std::string> names;
  for (const auto& v : array(field(j, "vertices", "complex"), "complex.vertices"))
    names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  auto read_simplex = [&](const json& s, std::size_t arity, const std::string& where) {
    if (!s.is_array() || s.size() != arity) throw InvalidInput(where + ": expected " + std::to_string(arity) + " vertex indices");
    std::vector<int> out;
    for (const auto& x : s) out.push_back(integer(x, where));
    return out;
  };
  std::vector<SimplexTriangle> tris;
  if (j.contains("triangles"))
    for (const auto& t : array(j.at("triangles"), "complex.triangles")) {
      auto v = read_simplex(t, 3, "complex.triangles");
      tris.push_back({v[0], v[1], v[2]});
    }
  std::vector<SimplexEdge> edges;
  if (j.contains("extra_edges"))
    for (const auto& e : array(j.at("extra_edges"), "complex.extra_edges")) {
      auto v = read_simplex(e, 2, "complex.extra_edges");
      edges.push_back({v[0], v[1]});
    }
  SimplicialComplex2 k(static_cast<int>(names.size()), edges, tris);
  k.vertex_names = std::move(names);
  if (j.contains("lengths")) {
    std::vector<double> lengths(k.edges().size(), 1.0);
    for (const auto& l : array(j.at("lengths"), "complex.lengths")) {
      if (!l.is_array() || l.size() != 3) throw InvalidInput("complex.lengths: expected [a, b, length]");
      int e = k.edge_index(integer(l[0], "complex.lengths"), integer(l[1], "complex.lengths"));
      if (e < 0) throw InvalidInput("complex.lengths: " + l.dump() + " is not an edge");
      lengths[static_cast<std::size_t>(e)] = number(l[2], "complex.lengths");
    }
    k.set_edge_lengths(std::move(lengths));
  }
  return k;
}

json complex_to_json(const SimplicialComplex2& k) {
  json j;
  if (k.vertex_names.size() == static_cast<std::size_t>(k.vertex_count())) {
    j["vertices"] = k.vertex_names;
  } else {
    j["vertices"] = json::array();
    for (int v = 0; v < k.vertex_count(); ++v) j["vertices"].push_back("v" + std::to_string(v));
  }
  j["triangles"] = k.triangles();
  std::set<SimplexEdge> in_triangle;
  for (const auto& t : k.triangles()) {
    in_triangle.insert({t[0], t[1]});
    in_triangle.insert({t[1], t[2]});
    in_triangle.insert({t[0], t[2]});
  }
  j["extra_edges"] = json::array();
  for (const auto& e : k.edges())
    if (!in_triangle.count(e)) j["extra_edges"].push_back(e);
  if (!k.edge_lengths().empty()) {
    j["lengths"] = json::array();
    for (std::size_t e = 0; e < k.edges().size(); ++e)
      j["lengths"].push_back({k.edges()[e][0], k.edges()[e][1], k.edge_lengths()[e]});
  }
  return j;
}

PathRoute route_from_json(const json& j, const MetricGraph& g) {
  PathRoute r;
  const json& start = field(j, "start", "route");
  r.start = {g.edge_index(text(field(start, "edge", "route.start"), "route.start.edge")),
             number(field(start, "offset", "route.start"), "route.start.offset")};
  if (j.contains("segments"))
    for (const auto& s : array(j.at("segments"), "route.segments"))
      r.segments.push_back({g.edge_index(text(field(s, "edge", "route segment"), "route segment edge")),
                            number(field(s, "from", "route segment"), "route segment from"),
                            number(field(s, "to", "route segment"), "route segment to")});
  validate_route(g, r);
  return r;
}

json route_to_json(const PathRoute& r, const MetricGraph& g) {
  json j;
  j["start"] = point_to_json(r.start, g);
  j["segments"] = json::array();
  for (const auto& s : r.segments) j["segments"].push_back({{"edge", g.edge(s.edge).id}, {"from", s.from}, {"to", s.to}});
  j["length"] = r.length();
  return j;
}

json point_to_json(const EdgePoint& x, const MetricGraph& g) {
  return {{"edge", g.edge(x.edge).id}, {"offset", x.offset}};
}

json diameter_to_json(const Diameter& d, const MetricGraph& g) {
  return {{"value", d.value}, {"first", point_to_json(d.first, g)}, {"second", point_to_json(d.second, g)}};
}

}  // namespace liftdiam::io
