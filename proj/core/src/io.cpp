#include "sct/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sct/errors.hpp"

namespace sct {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& err) {
    throw Error(ErrorCode::ParseError, err.what());
  }
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Triangulation parse_triangulation(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("d") || !j.contains("chambers"))
    throw Error(ErrorCode::ParseError,
                "expected an object with fields 'd' and 'chambers'");
  int d = as_int(j["d"], "'d'");
  if (!j["chambers"].is_array())
    throw Error(ErrorCode::ParseError, "'chambers' must be an array");
  std::vector<Cell> chambers;
  for (const json& tuple : j["chambers"]) {
    if (!tuple.is_array())
      throw Error(ErrorCode::ParseError, "each chamber must be an array");
    Cell c;
    for (const json& v : tuple) c.push_back(as_int(v, "vertex id"));
    chambers.push_back(std::move(c));
  }
  return build_triangulation(d, std::move(chambers));
}

Triangulation read_triangulation_file(const std::string& path) {
  return parse_triangulation(read_text_file(path));
}

std::string triangulation_json(const Triangulation& t) {
  std::vector<Cell> sorted = t.chambers;
  std::sort(sorted.begin(), sorted.end());
  json j;
  j["d"] = t.dim;
  j["chambers"] = sorted;
  return j.dump() + "\n";
}

VertexColouring parse_vertex_colouring(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("k") || !j.contains("colours"))
    throw Error(ErrorCode::ParseError,
                "expected an object with fields 'k' and 'colours'");
  VertexColouring psi;
  psi.k = as_int(j["k"], "'k'");
  if (!j["colours"].is_array())
    throw Error(ErrorCode::ParseError, "'colours' must be an array");
  for (const json& c : j["colours"]) psi.colours.push_back(as_int(c, "colour"));
  return psi;
}

VertexColouring read_vertex_colouring_file(const std::string& path) {
  return parse_vertex_colouring(read_text_file(path));
}

std::string vertex_colouring_json(const VertexColouring& psi) {
  json j;
  j["k"] = psi.k;
  j["colours"] = psi.colours;
  return j.dump() + "\n";
}

std::string edge_colouring_json(const EdgeColouring& colouring) {
  json rows = json::array();
  for (const auto& [edge, c] : colouring.colour)  // map order = lexicographic
    rows.push_back({edge[0], edge[1], c});
  json j;
  j["k"] = colouring.k;
  j["edges"] = rows;
  return j.dump() + "\n";
}

std::string face_colouring_json(const FaceColouring& colouring) {
  json rows = json::array();
  for (const auto& [face, c] : colouring.colour)
    rows.push_back({face[0], face[1], face[2], c});
  json j;
  j["faces"] = rows;
  return j.dump() + "\n";
}

std::string gains_json(const DualGraph& g, const GainAssignment& gains) {
  json rows = json::array();
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    json row;
    row["s"] = g.edges[e].s;
    row["t"] = g.edges[e].t;
    row["cell"] = g.edges[e].cell;
    row["rho"] = gains.gain(e, true).images();
    rows.push_back(std::move(row));
  }
  json j;
  j["edges"] = rows;
  return j.dump() + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(ErrorCode::ParseError, "cannot open file for writing: " + path);
  out << text;
  if (!out)
    throw Error(ErrorCode::ParseError, "write failed: " + path);
}

}  // namespace sct
