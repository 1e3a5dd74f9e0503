#include "arbor/dot.hpp"

#include <sstream>

namespace arbor {

namespace {

// palette for part / hyperplane coloring, cycled
const char* kColors[] = {"crimson",   "steelblue", "darkgreen", "darkorange",
                         "purple",    "teal",      "saddlebrown", "deeppink",
                         "olive",     "navy"};

const char* color(std::size_t i) { return kColors[i % (sizeof(kColors) / sizeof(*kColors))]; }

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string tree_to_dot(const RealizedTree& t) {
  std::ostringstream os;
  os << "digraph realized_tree {\n  rankdir=LR;\n  node [shape=point];\n";
  for (std::int32_t v = 0; v < t.vertex_count(); ++v)
    os << "  v" << v << " [xlabel=" << quote(t.vertex_name(v)) << "];\n";
  for (ElemId e = 0; e < t.elements.size(); e += 2) {
    os << "  v" << t.tail(e) << " -> v" << t.head(e) << " [label="
       << quote(t.elements.name(e)) << ", color=" << color(t.part_of_pair[pair_of(e)])
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string cubing_to_dot(const CubeComplex& c, const Pocset& p) {
  std::ostringstream os;
  os << "graph cubing {\n  node [shape=circle, fontsize=8];\n";
  for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
    std::string label;
    for (ElemId e : c.vertices[v].chosen) {
      if (!label.empty()) label += ' ';
      label += p.name(e);
    }
    os << "  v" << v << " [label=" << quote(label) << "];\n";
  }
  for (const auto& e : c.edges)
    os << "  v" << e.u << " -- v" << e.v << " [color=" << color(e.hyperplane)
       << ", label=" << quote(p.elements.base_name(e.pair)) << "];\n";
  os << "}\n";
  return os.str();
}

std::string arn_to_dot(const BipartiteTree& t, const Decomposition& d,
                       const CubeComplex& cubing) {
  std::ostringstream os;
  os << "graph arn {\n";
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    const auto& v = t.vertices[i];
    if (v.color == BipartiteVertex::V0) {
      std::string tip = "subcubing";
      for (std::int32_t h : d.hyperplanes_of[v.origin]) tip += " h" + std::to_string(h);
      os << "  n" << i << " [shape=box, label=\"V0#" << i << "\", tooltip=" << quote(tip)
         << "];\n";
    } else {
      std::string tip = "cut vertex " + std::to_string(v.origin);
      os << "  n" << i << " [shape=circle, label=\"V1#" << i << "\", tooltip=" << quote(tip)
         << "];\n";
    }
  }
  for (auto [a, b] : t.edges) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace arbor
