#include "lsg/io.hpp"

#include <fstream>

namespace lsg::io {

json int_to_json(const Int &x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return static_cast<std::int64_t>(x);
  return x.str();
}

Int int_from_json(const json &j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer (number or string): " + j.dump());
}

json modulus_to_json(const Modulus &p) {
  if (p.is_inf()) return "inf";
  return int_to_json(p.value());
}

Modulus modulus_from_json(const json &j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Modulus::inf();
  return Modulus::finite(int_from_json(j));
}

Modulus modulus_from_string(const std::string &s) {
  if (s == "inf") return Modulus::inf();
  return Modulus::finite(Int(s));
}

json system_to_json(const LinearSystem &sys) {
  json a = json::array();
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < sys.cols(); ++j) row.push_back(int_to_json(sys.a.at(i, j)));
    a.push_back(row);
  }
  json b = json::array();
  for (const Int &x : sys.b) b.push_back(int_to_json(x));
  json out{{"A", a}, {"b", b}, {"p", modulus_to_json(sys.p)}};
  if (!sys.name.empty()) out["name"] = sys.name;
  if (!sys.row_names.empty()) out["rows"] = sys.row_names;
  if (!sys.col_names.empty()) out["cols"] = sys.col_names;
  return out;
}

LinearSystem system_from_json(const json &j) {
  LinearSystem sys;
  const json &a = j.at("A");
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a.at(0).size();
  sys.a = IntMatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a.at(i).size() != cols) throw std::invalid_argument("system: ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) sys.a.at(i, c) = int_from_json(a.at(i).at(c));
  }
  for (const json &x : j.at("b")) sys.b.push_back(int_from_json(x));
  sys.p = modulus_from_json(j.at("p"));
  if (j.contains("name")) sys.name = j.at("name").get<std::string>();
  if (j.contains("rows")) sys.row_names = j.at("rows").get<std::vector<std::string>>();
  if (j.contains("cols")) sys.col_names = j.at("cols").get<std::vector<std::string>>();
  sys.check_shape();
  return sys;
}

json graph_to_json(const Graph &g) {
  json edges = json::array();
  for (const auto &e : g.edges()) {
    json ej{{"id", e.id}, {"ends", {e.u, e.v}}};
    if (!e.src.empty()) ej["src"] = e.src;
    edges.push_back(ej);
  }
  return json{{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from_json(const json &j) {
  Graph g;
  for (const json &v : j.at("vertices")) g.add_vertex(v.get<std::string>());
  for (const json &e : j.at("edges")) {
    std::string src = e.contains("src") ? e.at("src").get<std::string>() : "";
    g.add_edge(e.at("id").get<std::string>(), e.at("ends").at(0).get<std::string>(),
               e.at("ends").at(1).get<std::string>(), src);
  }
  return g;
}

PlaneMap graph_rotation_from_json(const Graph &g, const json &rotation) {
  PlaneMap m;
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    m.edges[static_cast<int>(i)] = {static_cast<int>(2 * i), static_cast<int>(2 * i + 1)};
  for (const auto &[v, order] : rotation.items()) {
    for (const json &eid : order.get<std::vector<std::string>>()) {
      std::size_t i = g.edge_index(eid.get<std::string>());
      const GraphEdge &e = g.edges()[i];
      if (e.u != v && e.v != v)
        throw std::invalid_argument("rotation: edge " + eid.get<std::string>() +
                                    " is not incident to " + v);
      m.rotation[v].push_back(static_cast<int>(2 * i + (e.u == v ? 0 : 1)));
    }
  }
  m.validate();
  return m;
}

json graph_rotation_to_json(const Graph &g, const PlaneMap &m) {
  json out = json::object();
  for (const auto &[v, rot] : m.rotation) {
    json order = json::array();
    for (int d : rot) order.push_back(g.edges()[d / 2].id);
    out[v] = order;
  }
  return out;
}

json colouring_to_json(const ZColouring &b) {
  json entries = json::object();
  for (const auto &[v, x] : b.b) entries[v] = int_to_json(x);
  return json{{"b", entries}};
}

ZColouring colouring_from_json(const json &j) {
  ZColouring b;
  for (const auto &[v, x] : j.at("b").items()) b.b[v] = int_from_json(x);
  return b;
}

json map_to_json(const PlaneMap &m) {
  json darts = json::array();
  json pairing = json::array();
  for (const auto &[eid, pair] : m.edges) {
    darts.push_back(pair.first);
    darts.push_back(pair.second);
    pairing.push_back({pair.first, pair.second});
  }
  std::sort(darts.begin(), darts.end());
  json rotation = json::object();
  for (const auto &[v, rot] : m.rotation) rotation[v] = rot;
  return json{{"darts", darts}, {"pairing", pairing}, {"rotation", rotation}};
}

PlaneMap map_from_json(const json &j) {
  PlaneMap m;
  int eid = 0;
  for (const json &pair : j.at("pairing")) {
    m.edges[eid++] = {pair.at(0).get<int>(), pair.at(1).get<int>()};
  }
  for (const auto &[v, rot] : j.at("rotation").items())
    m.rotation[v] = rot.get<std::vector<int>>();
  m.validate();
  return m;
}

json picture_to_json(const Picture &p) {
  // Edges are renumbered to their positions in the pairing array so labels
  // key stably across a round trip.
  std::map<int, int> position;
  for (const auto &[eid, pair] : p.map.edges) {
    int next = static_cast<int>(position.size());
    position[eid] = next;
  }

  json direction = json::object(), he = json::object(), a = json::object();
  for (const auto &[eid, pair] : p.map.edges) {
    std::string key = std::to_string(position.at(eid));
    direction[key] = p.src.at(eid);
    he[key] = p.col.at(eid);
    a[key] = int_to_json(p.a.at(eid));
  }
  json hv = json::object(), k = json::object();
  for (const auto &[v, row] : p.row) hv[v] = row;
  for (const auto &[v, kv] : p.k) k[v] = int_to_json(kv);

  PlaneMap renumbered;
  for (const auto &[eid, pair] : p.map.edges) renumbered.edges[position.at(eid)] = pair;
  renumbered.rotation = p.map.rotation;

  return json{{"map", map_to_json(renumbered)}, {"direction", direction}, {"hV", hv},
              {"hE", he},                       {"a", a},                 {"k", k},
              {"system", system_to_json(p.system)}};
}

Picture picture_from_json(const json &j) {
  Picture p;
  p.map = map_from_json(j.at("map"));
  p.system = system_from_json(j.at("system"));
  for (const auto &[key, val] : j.at("direction").items()) p.src[std::stoi(key)] = val.get<int>();
  for (const auto &[key, val] : j.at("hE").items())
    p.col[std::stoi(key)] = val.get<std::size_t>();
  for (const auto &[key, val] : j.at("a").items()) p.a[std::stoi(key)] = int_from_json(val);
  for (const auto &[key, val] : j.at("hV").items()) p.row[key] = val.get<std::size_t>();
  for (const auto &[key, val] : j.at("k").items()) p.k[key] = int_from_json(val);
  p.check_labels();
  return p;
}

CoverMap cover_from_json(const json &j, const std::function<json(const std::string &)> &loader) {
  CoverMap c;
  auto load_graph = [&](const json &field) {
    return field.is_string() ? graph_from_json(loader(field.get<std::string>()))
                             : graph_from_json(field);
  };
  c.h = load_graph(j.at("H"));
  c.g = load_graph(j.at("G"));
  for (const auto &[hv, gv] : j.at("phi").items()) c.phi[hv] = gv.get<std::string>();
  json hdoc = j.at("H").is_string() ? loader(j.at("H").get<std::string>()) : j.at("H");
  if (hdoc.contains("rotation")) c.embedding = graph_rotation_from_json(c.h, hdoc.at("rotation"));
  if (j.contains("rotation")) c.embedding = graph_rotation_from_json(c.h, j.at("rotation"));
  return c;
}

json assignment_to_json(const OperatorAssignment &a) {
  json ops = json::object();
  for (const auto &[j, op] : a.ops)
    ops[std::to_string(j)] = json{{"perm", op.perm}, {"phase", op.phase}};
  return json{{"dim", a.dim}, {"q", a.q}, {"ops", ops}, {"system", system_to_json(a.system)}};
}

OperatorAssignment assignment_from_json(const json &j) {
  OperatorAssignment a;
  a.dim = j.at("dim").get<long>();
  a.q = j.at("q").get<long>();
  a.system = system_from_json(j.at("system"));
  for (const auto &[key, op] : j.at("ops").items()) {
    MonomialOperator m;
    m.dim = a.dim;
    m.q = a.q;
    m.perm = op.at("perm").get<std::vector<long>>();
    m.phase = op.at("phase").get<std::vector<long>>();
    m.check();
    a.ops[std::stoul(key)] = m;
  }
  return a;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

json read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_file(const std::string &path, const json &j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << dump(j);
}

} // namespace lsg::io
