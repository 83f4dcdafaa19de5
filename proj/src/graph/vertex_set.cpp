#include "connsets/vertex_set.hpp"

namespace connsets {

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (Vertex v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v);
    first_item = false;
  }
  out += '}';
  return out;
}

}  // namespace connsets
