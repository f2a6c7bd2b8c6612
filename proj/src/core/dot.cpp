#include <cctype>
#include <sstream>

#include "beliefnet/core/model_io.hpp"

namespace beliefnet {
namespace {

std::string dot_id(const std::string& name) {
  bool plain = !name.empty() &&
               (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') plain = false;
  }
  if (plain) return name;
  std::string quoted = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string export_dot(const Dag& dag,
                       const std::map<std::string, std::string>& node_colors) {
  std::ostringstream out;
  out << "digraph beliefnet {\n";
  out << "  node [shape=ellipse, fontname=\"Helvetica\"];\n";
  for (const auto& name : dag.nodes()) {
    out << "  " << dot_id(name);
    if (auto it = node_colors.find(name); it != node_colors.end()) {
      out << " [style=filled, fillcolor=\"" << it->second << "\"]";
    }
    out << ";\n";
  }
  for (const auto& arc : dag.arcs()) {
    out << "  " << dot_id(dag.name(arc.from)) << " -> "
        << dot_id(dag.name(arc.to)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace beliefnet
