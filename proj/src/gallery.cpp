#include "lsg/gallery.hpp"

#include <algorithm>
#include <cmath>

namespace lsg {

PlaneMap embed_by_angles(const Graph &g, const EmbedSpec &spec) {
  PlaneMap m;
  struct DartAngle {
    int dart;
    double angle;
  };
  std::map<std::string, std::vector<DartAngle>> at;

  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const GraphEdge &e = g.edges()[i];
    auto pu = spec.pos.at(e.u), pv = spec.pos.at(e.v);
    double chord = std::atan2(pv.second - pu.second, pv.first - pu.first) * 180.0 / M_PI;
    double au = chord, av = chord + 180.0;
    auto ov = spec.angle_override.find(e.id);
    if (ov != spec.angle_override.end()) {
      au = ov->second.first;
      av = ov->second.second;
    }
    int du = static_cast<int>(2 * i), dv = du + 1;
    m.edges[static_cast<int>(i)] = {du, dv};
    at[e.u].push_back({du, std::fmod(std::fmod(au, 360.0) + 360.0, 360.0)});
    at[e.v].push_back({dv, std::fmod(std::fmod(av, 360.0) + 360.0, 360.0)});
  }
  for (auto &[v, darts] : at) {
    std::sort(darts.begin(), darts.end(), [](const DartAngle &a, const DartAngle &b) {
      return a.angle != b.angle ? a.angle < b.angle : a.dart < b.dart;
    });
    for (const DartAngle &d : darts) m.rotation[v].push_back(d.dart);
  }
  m.validate();
  return m;
}

namespace instances {

Graph k33() {
  Graph g;
  for (char l : {'a', 'b', 'c'})
    for (char d : {'1', '2', '3'})
      g.add_edge(std::string{l, d}, std::string{l}, std::string{d}, std::string{l});
  return g;
}

Graph k5() {
  Graph g;
  for (char u = '1'; u <= '5'; ++u)
    for (char v = static_cast<char>(u + 1); v <= '5'; ++v)
      g.add_edge(std::string{u, v}, std::string{u}, std::string{v}, std::string{u});
  return g;
}

Graph d17() {
  Graph g;
  const std::string digits = "1234", letters = "abcd";
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      g.add_edge({digits[i], digits[j]}, {digits[i]}, {digits[j]}, {digits[i]});
      g.add_edge({letters[i], letters[j]}, {letters[i]}, {letters[j]}, {letters[i]});
    }
  for (int i = 0; i < 4; ++i)
    g.add_edge({digits[i], letters[i]}, {digits[i]}, {letters[i]}, {digits[i]});
  return g;
}

namespace {
std::string pad2(int i) { return (i < 10 ? "v0" : "v") + std::to_string(i); }
} // namespace

Graph heawood() {
  Graph g;
  for (int i = 0; i < 14; ++i) {
    std::string id = (i < 10 ? "c0" : "c") + std::to_string(i);
    g.add_edge(id, pad2(i), pad2((i + 1) % 14), pad2(i));
  }
  for (int i = 0; i < 14; i += 2) {
    std::string id = (i < 10 ? "d0" : "d") + std::to_string(i);
    g.add_edge(id, pad2(i), pad2((i + 5) % 14), pad2(i));
  }
  return g;
}

Graph k44() {
  Graph g;
  for (char l : {'a', 'b', 'c', 'd'})
    for (char d : {'1', '2', '3', '4'})
      g.add_edge(std::string{l, d}, std::string{l}, std::string{d}, std::string{l});
  return g;
}

Graph petersen() {
  Graph g;
  for (int i = 0; i < 5; ++i) {
    g.add_edge("o" + std::to_string(i), "u" + std::to_string(i), "u" + std::to_string((i + 1) % 5));
    g.add_edge("i" + std::to_string(i), "w" + std::to_string(i), "w" + std::to_string((i + 2) % 5));
    g.add_edge("s" + std::to_string(i), "u" + std::to_string(i), "w" + std::to_string(i));
  }
  return g;
}

Graph cube() {
  Graph g;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (__builtin_popcount(i ^ j) == 1)
        g.add_edge("q" + std::to_string(i) + std::to_string(j), "n" + std::to_string(i),
                   "n" + std::to_string(j));
  return g;
}

Graph octahedron() {
  Graph g;
  const std::vector<std::string> vs{"t0", "t1", "t2", "u0", "u1", "u2"};
  auto opposite = [](const std::string &a, const std::string &b) {
    return a.substr(1) == b.substr(1) && a[0] != b[0];
  };
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!opposite(vs[i], vs[j])) g.add_edge(vs[i] + vs[j], vs[i], vs[j]);
  return g;
}

Graph cycle(int n) {
  Graph g;
  auto name = [](int i) { return "r" + std::to_string(i); };
  for (int i = 0; i < n; ++i)
    g.add_edge("e" + std::to_string(i), name(i), name((i + 1) % n));
  return g;
}

Graph complete(int n) {
  Graph g;
  auto name = [](int i) { return "k" + std::to_string(i); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.add_edge("e" + std::to_string(i) + std::to_string(j), name(i), name(j));
  return g;
}

namespace {

std::pair<double, double> polar(double radius, double degrees) {
  return {radius * std::cos(degrees * M_PI / 180.0), radius * std::sin(degrees * M_PI / 180.0)};
}

} // namespace

CoverMap k33_double_cover() {
  CoverMap c;
  c.g = k33();
  // Hexagonal prism: outer and inner hexagons plus aligned spokes.
  const std::vector<std::pair<std::string, double>> outer{{"1o", 0},   {"ao", 60},  {"2o", 120},
                                                          {"bo", 180}, {"3o", 240}, {"co", 300}};
  const std::vector<std::pair<std::string, double>> inner{{"bi", 0},   {"3i", 60},  {"ci", 120},
                                                          {"1i", 180}, {"ai", 240}, {"2i", 300}};
  EmbedSpec spec;
  for (const auto &[v, deg] : outer) spec.pos[v] = polar(2.0, deg);
  for (const auto &[v, deg] : inner) spec.pos[v] = polar(1.0, deg);

  auto ring_edges = [&](const std::vector<std::pair<std::string, double>> &ring) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const std::string &u = ring[i].first, &w = ring[(i + 1) % ring.size()].first;
      c.h.add_edge(std::min(u, w) + std::max(u, w), u, w);
    }
  };
  ring_edges(outer);
  ring_edges(inner);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const std::string &u = outer[i].first, &w = inner[i].first;
    c.h.add_edge(std::min(u, w) + std::max(u, w), u, w);
  }
  for (const auto &[v, deg] : outer) c.phi[v] = v.substr(0, 1);
  for (const auto &[v, deg] : inner) c.phi[v] = v.substr(0, 1);
  c.embedding = embed_by_angles(c.h, spec);
  return c;
}

CoverMap identity_cover(const Graph &g, const EmbedSpec &spec) {
  CoverMap c;
  c.g = g;
  c.h = g;
  for (const auto &v : g.vertices()) c.phi[v] = v;
  c.embedding = embed_by_angles(g, spec);
  return c;
}

EmbedSpec cube_embedding() {
  // Outer square 0,1,3,2; inner square 4,5,7,6 (gray-code rings).
  EmbedSpec spec;
  const std::vector<int> ring{0, 1, 3, 2};
  for (std::size_t i = 0; i < 4; ++i) {
    spec.pos["n" + std::to_string(ring[i])] = polar(2.0, 45 + 90.0 * static_cast<double>(i));
    spec.pos["n" + std::to_string(ring[i] + 4)] = polar(1.0, 45 + 90.0 * static_cast<double>(i));
  }
  return spec;
}

EmbedSpec octahedron_embedding() {
  // Antipodal pairs (t_i, u_i) sit on opposite sides so every inner vertex
  // joins its two nearest outer vertices.
  EmbedSpec spec;
  for (int i = 0; i < 3; ++i) {
    spec.pos["t" + std::to_string(i)] = polar(2.0, 90 + 120.0 * i);
    spec.pos["u" + std::to_string(i)] = polar(1.0, 270 + 120.0 * i);
  }
  return spec;
}

EmbedSpec cycle_embedding(int n) {
  EmbedSpec spec;
  for (int i = 0; i < n; ++i) spec.pos["r" + std::to_string(i)] = polar(2.0, 360.0 * i / n);
  return spec;
}

EmbedSpec k4_embedding() {
  EmbedSpec spec;
  for (int i = 1; i < 4; ++i) spec.pos["k" + std::to_string(i)] = polar(2.0, 90 + 120.0 * (i - 1));
  spec.pos["k0"] = {0.0, 0.0};
  return spec;
}

Picture k33_picture(const ZColouring &b, const Modulus &p) {
  return cover_to_picture(k33_double_cover(), b, p);
}

namespace {

struct Fig7Edge {
  std::string u, v;
  // optional departure-angle overrides (degrees), NaN = straight
  double au = NAN, av = NAN;
};

} // namespace

Picture d17_picture(const ZColouring &b, const Modulus &p) {
  Graph base = d17();

  // Node grid of the drawing; names are D17 labels with a copy index.
  const std::map<std::string, std::pair<double, double>> pos{
      {"c1", {0, 0}},   {"31", {1, 0}},   {"11", {2, 0}},  {"a1", {3, 0}},  {"b2", {-1, 0}},
      {"d2", {4, 0}},   {"41", {0, -1}},  {"21", {1, -1}}, {"42", {2, -1}}, {"22", {3, -1}},
      {"d1", {-1, -1}}, {"b1", {4, -1}},  {"a2", {-1, -2}}, {"12", {0, -2}}, {"32", {1, -2}},
      {"13", {2, -2}},  {"33", {3, -2}},  {"c2", {4, -2}}, {"23", {1, -3}}, {"43", {2, -3}},
      {"c3", {-1, 1}},  {"a3", {4, 1}},   {"b3", {-2, 1}}, {"d3", {5, 1}}};

  auto chord = [&](const std::string &u, const std::string &v) {
    auto pu = pos.at(u), pv = pos.at(v);
    return std::atan2(pv.second - pu.second, pv.first - pu.first) * 180.0 / M_PI;
  };
  auto bend = [&](const std::string &u, const std::string &v, double sign) {
    // tikz bend: depart chord -/+ 30, arrive at the mirrored offset
    return Fig7Edge{u, v, chord(u, v) - sign * 30.0, chord(v, u) + sign * 30.0};
  };
  const double right = 1.0, left = -1.0;

  std::vector<Fig7Edge> edges{
      {"c1", "31"},       {"31", "11"},     {"11", "a1"},     bend("a1", "c1", right),
      {"41", "31"},       {"21", "41"},     {"21", "31"},     {"42", "21"},
      {"42", "11"},       {"22", "42"},     {"22", "11"},     {"d1", "41"},
      {"d1", "c1"},       {"b1", "a1"},     {"b1", "22"},     {"a2", "d1"},
      {"12", "a2"},       {"12", "41"},     {"32", "12"},     {"32", "21"},
      {"13", "32"},       {"13", "42"},     {"33", "13"},     {"33", "22"},
      {"c2", "33"},       {"c2", "b1"},     {"23", "12"},     {"23", "32"},
      {"43", "13"},       {"43", "33"},     {"43", "23"},     {"b2", "c1"},
      {"b2", "d1"},       {"d2", "a1"},     {"d2", "b1"},     bend("d2", "b2", right),
      bend("c3", "a2", right), {"c3", "b2"}, {"a3", "d2"},    bend("a3", "c2", left),
      {"a3", "c3"},       bend("b3", "a2", right), {"b3", "c3"}, bend("d3", "b3", right),
      {"d3", "a3"},       bend("d3", "c2", left)};
  // The two long sweeps with explicit tikz out/in angles.
  edges.push_back({"b3", "23", -120.0, 180.0});
  edges.push_back({"d3", "43", -60.0, 0.0});

  Graph pic_graph;
  EmbedSpec spec;
  for (const auto &[v, xy] : pos) spec.pos[v] = xy;
  int next = 0;
  for (const auto &e : edges) {
    std::string id = (next < 10 ? "f0" : "f") + std::to_string(next);
    ++next;
    pic_graph.add_edge(id, e.u, e.v);
    if (!std::isnan(e.au)) spec.angle_override[id] = {e.au, e.av};
  }

  PlaneMap map = embed_by_angles(pic_graph, spec);

  const std::set<std::string> fold{"21", "42", "32", "13", "b2", "d2", "c3", "a3"};
  Picture pic;
  pic.map = map;
  pic.system = incidence_system(base, b, p);
  for (const auto &[v, rot] : map.rotation) {
    std::string label = v.substr(0, 1);
    pic.row[v] = base.vertex_index(label);
    Int kv = 0;
    if (!fold.count(v)) {
      auto it = b.b.find(label);
      kv = it == b.b.end() ? Int(0) : it->second;
    }
    pic.k[v] = p.reduce(kv);
  }
  for (const auto &[eid, darts] : map.edges) {
    const GraphEdge &pe = pic_graph.edges()[eid];
    std::string lu = pe.u.substr(0, 1), lv = pe.v.substr(0, 1);
    auto gid = base.edge_between(lu, lv);
    if (!gid) throw std::logic_error("d17_picture: edge image missing");
    const GraphEdge &ge = base.edge(*gid);
    pic.col[eid] = base.edge_index(*gid);
    pic.a[eid] = 1;
    pic.src[eid] = lu == ge.src ? darts.first : darts.second;
  }
  return pic;
}

std::vector<std::string> d17_picture_fold_vertices() {
  return {"13", "21", "32", "42", "a3", "b2", "c3", "d2"};
}

OperatorAssignment mermin_square() {
  auto [x, z] = weyl_generators(2, 4);
  MonomialOperator i2 = MonomialOperator::identity(2, 4);
  MonomialOperator y = multiply(x, z);
  for (auto &ph : y.phase) ph = (ph + 1) % 4; // Y = omega_4 X Z

  ZColouring b;
  b.b["3"] = 1;
  OperatorAssignment assignment;
  assignment.system = incidence_system(k33(), b, Modulus::finite(2));
  assignment.system.name = "K33";
  assignment.dim = 4;
  assignment.q = 4;

  // Columns in sorted edge order a1..c3; the square rows are the letters.
  std::vector<MonomialOperator> grid{
      tensor(x, i2), tensor(i2, x), tensor(x, x),  // a1 a2 a3
      tensor(i2, z), tensor(z, i2), tensor(z, z),  // b1 b2 b3
      tensor(x, z),  tensor(z, x),  tensor(y, y)}; // c1 c2 c3
  for (std::size_t j = 0; j < grid.size(); ++j) assignment.ops[j] = grid[j];
  return assignment;
}

} // namespace instances

GalleryBundle gallery(const std::string &name, const Modulus &p) {
  GalleryBundle bundle;
  bundle.name = name;
  if (name == "K33") {
    bundle.graph = instances::k33();
    bundle.default_b.b["3"] = 1;
    bundle.cover = instances::k33_double_cover();
    bundle.picture = instances::k33_picture(bundle.default_b, p);
  } else if (name == "K5") {
    bundle.graph = instances::k5();
    bundle.default_b.b["1"] = 1;
  } else if (name == "D17") {
    bundle.graph = instances::d17();
    bundle.default_b.b["1"] = 1;
    bundle.picture = instances::d17_picture(bundle.default_b, p);
  } else if (name == "HEAWOOD") {
    bundle.graph = instances::heawood();
    bundle.default_b.b["v00"] = 1;
  } else if (name == "K44") {
    bundle.graph = instances::k44();
    bundle.default_b.b["1"] = 1;
  } else {
    throw std::invalid_argument("gallery: unknown instance " + name);
  }
  bundle.graph = bundle.graph.with_default_orientation();
  return bundle;
}

} // namespace lsg
