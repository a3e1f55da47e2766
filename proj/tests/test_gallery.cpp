#include <doctest.h>

#include <random>

#include "lsg/gallery.hpp"
#include "lsg/graph.hpp"
#include "lsg/hypergraph.hpp"

using namespace lsg;

TEST_CASE("gallery bundles") {
  GalleryBundle k33 = gallery("K33");
  CHECK(k33.graph.vertices().size() == 6);
  CHECK(k33.graph.edges().size() == 9);
  REQUIRE(k33.picture);
  CHECK(k33.picture->map.vertex_count() == 12);
  CHECK(k33.picture->map.edge_count() == 18);

  GalleryBundle d17 = gallery("D17");
  CHECK(d17.graph.vertices().size() == 8);
  CHECK(d17.graph.edges().size() == 16);
  for (const auto &v : d17.graph.vertices()) CHECK(d17.graph.neighbours(v).size() == 4);
  REQUIRE(d17.picture);
  CHECK(d17.picture->map.vertex_count() == 24);
  CHECK(d17.picture->map.edge_count() == 48);

  GalleryBundle heawood = gallery("HEAWOOD");
  CHECK(heawood.graph.vertices().size() == 14);
  CHECK(heawood.graph.edges().size() == 21);
  auto girth = berge_girth(incidence_hypergraph(heawood.graph));
  REQUIRE(girth.girth);
  CHECK(*girth.girth == 6);

  CHECK(gallery("K5").graph.edges().size() == 10);
  CHECK(gallery("K44").graph.edges().size() == 16);
  CHECK_THROWS_AS(gallery("NOPE"), std::invalid_argument);
}

TEST_CASE("K33 double-cover picture verifies with phase 2 for every modulus") {
  ZColouring b;
  b.b["3"] = 1;
  for (const Modulus &p : {Modulus::finite(2), Modulus::finite(3), Modulus::finite(4),
                           Modulus::finite(5), Modulus::finite(6), Modulus::inf()}) {
    Picture pic = instances::k33_picture(b, p);
    CHECK(verify(pic).empty());
    CHECK(phase(pic) == p.reduce(2));
  }
}

TEST_CASE("K33 picture phase is twice the colouring total") {
  std::mt19937 rng(41);
  Graph k33 = instances::k33();
  for (int t = 0; t < 10; ++t) {
    ZColouring b;
    Int total = 0;
    for (const auto &v : k33.vertices()) {
      long x = static_cast<long>(rng() % 7) - 3;
      if (x != 0) b.b[v] = x;
      total += x;
    }
    Modulus p = Modulus::finite(2 + t % 5);
    Picture pic = instances::k33_picture(b, p);
    CHECK(verify(pic).empty());
    CHECK(phase(pic) == p.reduce(2 * total));
  }
}

TEST_CASE("the K33 picture reduction outcome is pinned") {
  ZColouring b;
  b.b["3"] = 1;
  Picture pic = instances::k33_picture(b, Modulus::finite(5));
  // No loops, zero edges, repeated rows on a face, low degrees, or
  // monochromatic cycles: the engine gets stuck immediately.
  CHECK_FALSE(find_violation(pic));
  ReductionTrace trace = reduce(pic);
  CHECK(trace.outcome == ReduceOutcome::Stuck);
  CHECK(trace.steps.empty());
}

TEST_CASE("D17 picture verifies with phase 2|b|") {
  std::mt19937 rng(42);
  Graph d17 = instances::d17();
  for (int t = 0; t < 20; ++t) {
    ZColouring b;
    Int total = 0;
    for (const auto &v : d17.vertices()) {
      long x = static_cast<long>(rng() % 9) - 4;
      if (x != 0) b.b[v] = x;
      total += x;
    }
    Modulus p = t % 5 == 4 ? Modulus::inf() : Modulus::finite(2 + t % 5);
    Picture pic = instances::d17_picture(b, p);
    CHECK(verify(pic).empty());
    CHECK(phase(pic) == p.reduce(2 * total));
  }
}

TEST_CASE("D17 picture local-cover structure") {
  ZColouring b;
  b.b["1"] = 1;
  Picture pic = instances::d17_picture(b, Modulus::finite(3));
  Graph d17 = instances::d17();
  MapIndex idx(pic.map);

  auto folds = instances::d17_picture_fold_vertices();
  std::set<std::string> fold_set(folds.begin(), folds.end());
  CHECK(fold_set.size() == 8);

  int fold_hits = 0;
  for (const auto &[v, rot] : pic.map.rotation) {
    std::string label = v.substr(0, 1);
    std::set<std::string> image;
    for (int d : rot) {
      const VertexId &other = idx.origin.at(idx.mate.at(d));
      image.insert(other.substr(0, 1));
    }
    auto ng = d17.neighbours(label);
    std::set<std::string> target(ng.begin(), ng.end());
    if (fold_set.count(v)) {
      // Folds cover exactly two of the four base neighbours.
      CHECK(image.size() == 2);
      ++fold_hits;
    } else {
      CHECK(image == target);
      CHECK(rot.size() == 4);
    }
    for (const auto &w : image) CHECK(target.count(w));
  }
  CHECK(fold_hits == 8);

  // Every base vertex has exactly one fold and two clean copies.
  std::map<std::string, int> copies;
  for (const auto &[v, rot] : pic.map.rotation) ++copies[v.substr(0, 1)];
  for (const auto &[label, n] : copies) CHECK(n == 3);
}

TEST_CASE("mermin square verifies") {
  OperatorAssignment square = instances::mermin_square();
  auto report = verify_operator_solution(square);
  CHECK(report.passed);
  CHECK(report.failures.empty());
}
