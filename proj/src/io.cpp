#include "chipfire/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chipfire {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw std::invalid_argument(std::string("malformed ") + what + " document");
  return j;
}

IntVector int_vector_field(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw std::invalid_argument(std::string("missing '") + field + "' list");
  IntVector out(j[field].size());
  Eigen::Index i = 0;
  for (const auto& x : j[field]) {
    if (!x.is_number_integer())
      throw std::invalid_argument(std::string("'") + field + "' must hold integers");
    out(i++) = x.get<Int>();
  }
  return out;
}

}  // namespace

std::string graph_to_json(const Multigraph& g) {
  json j;
  j["num_vertices"] = g.num_vertices();
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump(2) + "\n";
}

Multigraph graph_from_json(const std::string& text) {
  json j = parse(text, "graph");
  if (!j.contains("num_vertices") || !j["num_vertices"].is_number_integer())
    throw std::invalid_argument("graph document needs integer 'num_vertices'");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("graph document needs an 'edges' list");
  std::vector<Multigraph::Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("each edge must be a 2-element integer list");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Multigraph(j["num_vertices"].get<int>(), std::move(edges));
}

std::string divisor_to_json(const Divisor& d) {
  json j;
  j["values"] = std::vector<Int>(d.data(), d.data() + d.size());
  return j.dump(2) + "\n";
}

Divisor divisor_from_json(const std::string& text) {
  return int_vector_field(parse(text, "divisor"), "values");
}

std::string script_to_json(const FiringScript& s) {
  json j;
  j["counts"] = std::vector<Int>(s.data(), s.data() + s.size());
  return j.dump(2) + "\n";
}

FiringScript script_from_json(const std::string& text) {
  return int_vector_field(parse(text, "script"), "counts");
}

std::string marks_to_json(const std::map<std::string, std::vector<VertexId>>& marks) {
  json j = json::object();
  for (const auto& [name, verts] : marks) j[name] = verts;
  return j.dump(2) + "\n";
}

std::map<std::string, std::vector<VertexId>> marks_from_json(const std::string& text) {
  json j = parse(text, "marks");
  std::map<std::string, std::vector<VertexId>> out;
  for (const auto& [name, verts] : j.items()) {
    if (!verts.is_array()) throw std::invalid_argument("marks must map to lists");
    out[name] = verts.get<std::vector<VertexId>>();
  }
  return out;
}

std::string to_dot(const Multigraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Multigraph load_graph(const std::string& path) {
  return graph_from_json(read_file(path));
}

Divisor load_divisor(const std::string& path) {
  return divisor_from_json(read_file(path));
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

}  // namespace chipfire
