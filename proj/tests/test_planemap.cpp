#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "lsg/gallery.hpp"
#include "lsg/graph.hpp"
#include "lsg/planemap.hpp"

using namespace lsg;

namespace {

PlaneMap embedded(const Graph &g, const EmbedSpec &spec) { return embed_by_angles(g, spec); }

PlaneMap triangle_map() { return embedded(instances::cycle(3), instances::cycle_embedding(3)); }

// Outerplanar map: a cycle with nested non-crossing chords, embedded from the
// circle layout.
PlaneMap random_outerplanar(std::mt19937 &rng, int n) {
  Graph g = instances::cycle(n);
  int chord = 0;
  std::function<void(int, int)> split = [&](int lo, int hi) {
    if (hi - lo < 2) return;
    std::uniform_int_distribution<int> mid(lo + 1, hi - 1);
    int m = mid(rng);
    if (m - lo >= 2 && rng() % 2 == 0)
      g.add_edge("ch" + std::to_string(chord++), "r" + std::to_string(lo),
                 "r" + std::to_string(m));
    if (rng() % 2 == 0) {
      split(lo, m);
      split(m, hi);
    }
  };
  split(0, n - 1);
  return embedded(g, instances::cycle_embedding(n));
}

PlaneMap grid_map(int rows, int cols) {
  Graph g;
  EmbedSpec spec;
  auto name = [&](int r, int c) { return "g" + std::to_string(r) + "_" + std::to_string(c); };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      spec.pos[name(r, c)] = {static_cast<double>(c), static_cast<double>(-r)};
      if (c + 1 < cols) g.add_edge("h" + name(r, c), name(r, c), name(r, c + 1));
      if (r + 1 < rows) g.add_edge("v" + name(r, c), name(r, c), name(r + 1, c));
    }
  return embedded(g, spec);
}

long total_face_size(const PlaneMap &m) {
  long total = 0;
  for (const auto &f : trace_faces(m).faces) total += static_cast<long>(f.size());
  return total;
}

} // namespace

TEST_CASE("face tracing on small maps") {
  PlaneMap tri = triangle_map();
  FaceTrace faces = trace_faces(tri);
  REQUIRE(faces.faces.size() == 2);
  CHECK(faces.faces[0].size() == 3);
  CHECK(faces.faces[1].size() == 3);

  Graph single;
  single.add_edge("e", "a", "b");
  EmbedSpec spec;
  spec.pos["a"] = {0, 0};
  spec.pos["b"] = {1, 0};
  PlaneMap edge = embedded(single, spec);
  faces = trace_faces(edge);
  REQUIRE(faces.faces.size() == 1);
  CHECK(faces.faces[0].size() == 2);

  PlaneMap k4 = embedded(instances::complete(4), instances::k4_embedding());
  CHECK(trace_faces(k4).faces.size() == 4);
}

TEST_CASE("planarity via the euler count") {
  CHECK(check_planar_embedding(PlaneMap{}));
  CHECK(check_planar_embedding(triangle_map()));
  CHECK(check_planar_embedding(grid_map(3, 4)));
  CHECK(check_planar_embedding(embedded(instances::cube(), instances::cube_embedding())));
  CHECK(
      check_planar_embedding(embedded(instances::octahedron(), instances::octahedron_embedding())));

  // No rotation of K5 passes; sample a few hundred.
  Graph k5 = instances::complete(5);
  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    PlaneMap m;
    for (std::size_t i = 0; i < k5.edges().size(); ++i) {
      const GraphEdge &e = k5.edges()[i];
      m.edges[static_cast<int>(i)] = {static_cast<int>(2 * i), static_cast<int>(2 * i + 1)};
      m.rotation[e.u].push_back(static_cast<int>(2 * i));
      m.rotation[e.v].push_back(static_cast<int>(2 * i + 1));
    }
    for (auto &[v, rot] : m.rotation) std::shuffle(rot.begin(), rot.end(), rng);
    m.validate();
    CHECK_FALSE(check_planar_embedding(m));
  }

  // Disjoint planar components are accepted.
  PlaneMap two = triangle_map();
  PlaneMap other = grid_map(2, 2);
  int dart_base = two.fresh_dart_id(), edge_base = two.fresh_edge_id();
  for (const auto &[eid, darts] : other.edges)
    two.edges[edge_base + eid] = {dart_base + darts.first, dart_base + darts.second};
  for (const auto &[v, rot] : other.rotation) {
    for (int d : rot) two.rotation["x" + v].push_back(dart_base + d);
  }
  two.validate();
  CHECK(check_planar_embedding(two));
}

TEST_CASE("face sizes sum to twice the edge count") {
  std::mt19937 rng(6);
  for (int t = 0; t < 50; ++t) {
    PlaneMap m = random_outerplanar(rng, 5 + t % 7);
    CHECK(total_face_size(m) == 2 * static_cast<long>(m.edge_count()));
    CHECK(check_planar_embedding(m));
  }
  PlaneMap tri = triangle_map();
  auto faces = trace_faces(tri).faces;
  CHECK(face_size(tri, faces[0]) == 3);
  CHECK_THROWS_AS(face_size(tri, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("boundary simple cycle") {
  PlaneMap tri = triangle_map();
  for (const auto &face : trace_faces(tri).faces) {
    auto cycle = boundary_simple_cycle(tri, face);
    REQUIRE(cycle);
    CHECK(cycle->vertices.size() == 3);
  }

  // Theta graph: two vertices, three parallel edges; every face has a 2-cycle
  // in its boundary.
  PlaneMap theta;
  theta.edges[0] = {0, 1};
  theta.edges[1] = {2, 3};
  theta.edges[2] = {4, 5};
  theta.rotation["a"] = {0, 2, 4};
  theta.rotation["b"] = {5, 3, 1};
  theta.validate();
  REQUIRE(check_planar_embedding(theta));
  auto faces = trace_faces(theta).faces;
  REQUIRE(faces.size() == 3);
  for (const auto &face : faces) {
    auto cycle = boundary_simple_cycle(theta, face);
    REQUIRE(cycle);
    CHECK(cycle->vertices.size() == 2);
  }

  // Trees have one face and no cycle.
  PlaneMap path = grid_map(1, 4);
  auto faces2 = trace_faces(path).faces;
  REQUIRE(faces2.size() == 1);
  CHECK_FALSE(boundary_simple_cycle(path, faces2[0]));

  // A tree hanging off a triangle: pruning the bridge keeps the cycle.
  Graph g = instances::cycle(3);
  g.add_edge("tail", "r0", "t");
  EmbedSpec spec = instances::cycle_embedding(3);
  spec.pos["t"] = {3.0, 0.5};
  PlaneMap lollipop = embedded(g, spec);
  for (const auto &face : trace_faces(lollipop).faces) {
    auto cycle = boundary_simple_cycle(lollipop, face);
    REQUIRE(cycle);
    CHECK(cycle->vertices.size() == 3);
    std::set<VertexId> vs(cycle->vertices.begin(), cycle->vertices.end());
    CHECK(vs.size() == 3);
    CHECK_FALSE(vs.count("t"));
  }
}

TEST_CASE("small-cancellation witness on fixtures") {
  PlaneMap tri = triangle_map();
  ScWitness w = sc_witness(tri, 3, 6);
  REQUIRE(w.low_degree_vertex);

  PlaneMap cube = embedded(instances::cube(), instances::cube_embedding());
  w = sc_witness(cube, 4, 4);
  REQUIRE(w.low_degree_vertex); // 3-regular

  PlaneMap oct = embedded(instances::octahedron(), instances::octahedron_embedding());
  w = sc_witness(oct, 4, 4);
  CHECK_FALSE(w.low_degree_vertex); // 4-regular
  REQUIRE(w.small_face);            // triangular faces
  CHECK(w.small_face->size() == 3);

  CHECK_THROWS_AS(sc_witness(PlaneMap{}, 4, 4), std::invalid_argument);
}

TEST_CASE("small-cancellation witness never contradicts on random planar maps") {
  std::mt19937 rng(7);
  const std::vector<std::pair<int, int>> pairs{{6, 3}, {4, 4}, {3, 6}};
  for (int t = 0; t < 510; ++t) {
    PlaneMap m;
    switch (t % 3) {
    case 0: m = random_outerplanar(rng, 4 + t % 9); break;
    case 1: m = grid_map(2 + t % 3, 2 + t % 4); break;
    default:
      m = t % 2 ? embedded(instances::cube(), instances::cube_embedding())
                : embedded(instances::octahedron(), instances::octahedron_embedding());
    }
    for (auto [a, b] : pairs) {
      ScWitness w = sc_witness(m, a, b); // throws std::logic_error on failure
      if (w.low_degree_vertex)
        CHECK(m.rotation.at(*w.low_degree_vertex).size() < static_cast<std::size_t>(a));
      else {
        REQUIRE(w.small_face);
        CHECK(w.small_face->size() < static_cast<std::size_t>(b));
      }
    }
  }
}

TEST_CASE("map validation rejects broken structures") {
  PlaneMap loopback;
  loopback.edges[0] = {0, 0};
  loopback.rotation["v"] = {0, 0};
  CHECK_THROWS_AS(loopback.validate(), std::invalid_argument);

  PlaneMap isolated;
  isolated.edges[0] = {0, 1};
  isolated.rotation["a"] = {0, 1};
  isolated.rotation["b"] = {};
  CHECK_THROWS_AS(isolated.validate(), std::invalid_argument);

  PlaneMap uncovered;
  uncovered.edges[0] = {0, 1};
  uncovered.rotation["a"] = {0};
  CHECK_THROWS_AS(uncovered.validate(), std::invalid_argument);
}
