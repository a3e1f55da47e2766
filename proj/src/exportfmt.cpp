#include "lsg/exportfmt.hpp"

#include <cmath>
#include <sstream>

namespace lsg {

namespace {

std::string dot_quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string tex_escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (std::string("#$%&_{}^~\\").find(c) != std::string::npos) {
      out += '\\';
      if (c == '\\' || c == '^' || c == '~') {
        out += "char";
        out += std::to_string(static_cast<int>(c));
      } else {
        out += c;
      }
    } else {
      out += c;
    }
  }
  return out;
}

} // namespace

std::string export_dot(const Graph &g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto &v : g.vertices()) os << "  " << dot_quote(v) << ";\n";
  for (const auto &e : g.edges()) {
    std::string from = e.src.empty() ? e.u : e.src;
    std::string to = from == e.u ? e.v : e.u;
    os << "  " << dot_quote(from) << " -> " << dot_quote(to) << " [label=" << dot_quote(e.id);
    if (e.src.empty()) os << ", dir=none";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const Picture &p) {
  MapIndex idx(p.map);
  std::ostringstream os;
  os << "digraph picture {\n";
  for (const auto &[v, rot] : p.map.rotation) {
    std::string label = p.system.row_label(p.row.at(v)) + " : k=" + p.k.at(v).str();
    os << "  " << dot_quote(v) << " [label=" << dot_quote(label) << "];\n";
  }
  for (const auto &[eid, darts] : p.map.edges) {
    const VertexId &from = idx.origin.at(p.src.at(eid));
    const VertexId &to = idx.origin.at(idx.mate.at(p.src.at(eid)));
    std::string label = p.system.col_label(p.col.at(eid)) + " : " + p.a.at(eid).str();
    os << "  " << dot_quote(from) << " -> " << dot_quote(to) << " [label=" << dot_quote(label)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

std::map<std::string, std::pair<double, double>> circle_layout(const std::vector<VertexId> &vs) {
  std::map<std::string, std::pair<double, double>> pos;
  const double n = static_cast<double>(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    double t = 2.0 * M_PI * static_cast<double>(i) / std::max(1.0, n);
    pos[vs[i]] = {4.0 * std::cos(t), 4.0 * std::sin(t)};
  }
  return pos;
}

} // namespace

std::string export_tikz(const Graph &g) {
  auto pos = circle_layout(g.vertices());
  std::ostringstream os;
  os << "\\begin{tikzpicture}\n";
  for (const auto &v : g.vertices())
    os << "  \\node[draw, circle] (" << v << ") at (" << pos[v].first << ", " << pos[v].second
       << ") {" << tex_escape(v) << "};\n";
  for (const auto &e : g.edges()) {
    std::string from = e.src.empty() ? e.u : e.src;
    std::string to = from == e.u ? e.v : e.u;
    os << "  \\draw[" << (e.src.empty() ? "" : "->") << "] (" << from << ") to node[auto] {"
       << tex_escape(e.id) << "} (" << to << ");\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string export_tikz(const Picture &p) {
  MapIndex idx(p.map);
  std::vector<VertexId> vs;
  for (const auto &[v, rot] : p.map.rotation) vs.push_back(v);
  auto pos = circle_layout(vs);
  std::ostringstream os;
  os << "\\begin{tikzpicture}\n";
  for (const auto &v : vs)
    os << "  \\node[draw, circle] (" << v << ") at (" << pos[v].first << ", " << pos[v].second
       << ") {" << tex_escape(p.system.row_label(p.row.at(v))) << "$|$"
       << tex_escape(p.k.at(v).str()) << "};\n";
  int bend = 0;
  for (const auto &[eid, darts] : p.map.edges) {
    const VertexId &from = idx.origin.at(p.src.at(eid));
    const VertexId &to = idx.origin.at(idx.mate.at(p.src.at(eid)));
    os << "  \\draw[->] (" << from << ") to[bend left=" << (bend++ % 3) * 10 << "] node[auto] {"
       << tex_escape(p.system.col_label(p.col.at(eid))) << "$|$"
       << tex_escape(p.a.at(eid).str()) << "} (" << to << ");\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

} // namespace lsg
