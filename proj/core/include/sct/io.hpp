#pragma once

#include <string>

#include "sct/edge_face.hpp"
#include "sct/gains.hpp"
#include "sct/graph.hpp"
#include "sct/triangulation.hpp"

namespace sct {

// Wire formats (all verbatim JSON, one object per file):
//   triangulation   {"chambers": [[v,...], ...], "d": d}
//   vertex colours  {"colours": [c,...], "k": k}
//   edge colours    {"edges": [[u,v,c], ...], "k": k}
//   face colours    {"faces": [[u,v,w,c], ...]}
//   gains (debug)   {"edges": [{"cell": [...], "rho": [...], "s": i, "t": j}, ...]}
//
// Readers accept unsorted chamber tuples (they are sorted on build); writers
// emit sorted tuples, lexicographically sorted lists, and compact JSON with a
// trailing newline, so serialization is canonical: write(read(write(x))) is
// byte-identical to write(x).

Triangulation parse_triangulation(const std::string& text);
Triangulation read_triangulation_file(const std::string& path);
std::string triangulation_json(const Triangulation& t);

VertexColouring parse_vertex_colouring(const std::string& text);
VertexColouring read_vertex_colouring_file(const std::string& path);
std::string vertex_colouring_json(const VertexColouring& psi);

std::string edge_colouring_json(const EdgeColouring& colouring);
std::string face_colouring_json(const FaceColouring& colouring);

std::string gains_json(const DualGraph& g, const GainAssignment& gains);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sct
