#include <doctest.h>

#include <random>

#include "lsg/gallery.hpp"
#include "lsg/graph.hpp"
#include "lsg/picture.hpp"
#include "picture_builders.hpp"

using namespace lsg;
using namespace lsg::testpic;

namespace {

LinearSystem c3_system(const Modulus &p) {
  ZColouring b; // zero colouring
  return incidence_system(instances::cycle(3), b, p);
}

LinearSystem k44_system(const Modulus &p, const Int &btotal) {
  ZColouring b;
  b.b["1"] = btotal;
  return incidence_system(instances::k44(), b, p);
}

// Hub with three same-column spokes into a triangle of distinct vertices;
// valid over I(C3) with zero colouring.  Exercises the degree-3 rewiring with
// three distinct far endpoints.
Picture wheel_picture(const Modulus &p) {
  LinearSystem sys = c3_system(p);
  Picture pic;
  pic.system = sys;
  // columns: e0 = {r0,r1}, e1 = {r1,r2}, e2 = {r2,r0}
  const std::size_t e0 = 0, e1 = 1;
  // edges 0..2: spokes h->y_i (col e0); 3..5: triangle y1->y2->y3->y1 (col e1)
  pic.map.edges[0] = {0, 1};
  pic.map.edges[1] = {2, 3};
  pic.map.edges[2] = {4, 5};
  pic.map.edges[3] = {6, 7};
  pic.map.edges[4] = {8, 9};
  pic.map.edges[5] = {10, 11};
  pic.map.rotation["h"] = {0, 2, 4};
  pic.map.rotation["y1"] = {6, 1, 11}; // ccw from the hub drawing
  pic.map.rotation["y2"] = {8, 3, 7};
  pic.map.rotation["y3"] = {10, 5, 9};
  pic.src[0] = 0;
  pic.src[1] = 2;
  pic.src[2] = 4;
  pic.src[3] = 6;
  pic.src[4] = 8;
  pic.src[5] = 10;
  pic.col[0] = pic.col[1] = pic.col[2] = e0;
  pic.col[3] = pic.col[4] = pic.col[5] = e1;
  pic.a[0] = p.reduce(1);
  pic.a[1] = p.reduce(1);
  pic.a[2] = p.reduce(-2);
  pic.a[3] = p.reduce(0);  // t1
  pic.a[4] = p.reduce(1);  // t2
  pic.a[5] = p.reduce(-1); // t3
  for (const char *v : {"h", "y1", "y2", "y3"}) pic.k[v] = 0;
  pic.row["h"] = 0;  // r0
  pic.row["y1"] = 1; // r1
  pic.row["y2"] = 1;
  pic.row["y3"] = 1;
  pic.check_labels();
  return pic;
}

void check_sound_move(const Picture &before, const Violation &move) {
  Int ph = phase(before);
  Picture after = apply_move(before, move);
  CHECK(verify(after).empty());
  CHECK(phase(after) == ph);
  CHECK(after.size() < before.size());
}

} // namespace

TEST_CASE("empty picture is valid with phase zero") {
  Picture p;
  p.system = c3_system(Modulus::finite(3));
  CHECK(verify(p).empty());
  CHECK(phase(p) == 0);
  Certificate cert = certify(p);
  CHECK(cert.certified_phase == 0);
  CHECK(reduce(p).outcome == ReduceOutcome::Empty);
}

TEST_CASE("relation bigon is valid and contracts to empty") {
  for (const Modulus &p : {Modulus::finite(2), Modulus::finite(6), Modulus::inf()}) {
    LinearSystem sys = k44_system(p, 1);
    Picture pic = relation_bigon(sys, 0, "t");
    CHECK(verify(pic).empty());
    CHECK(phase(pic) == 0);

    auto viol = find_violation(pic);
    REQUIRE(viol);
    CHECK(viol->kind == ViolationKind::SameLabelFacePair);
    check_sound_move(pic, *viol);

    ReductionTrace trace = reduce(pic);
    CHECK(trace.outcome == ReduceOutcome::Empty);
    CHECK(phase(trace.final) == 0);
  }
}

TEST_CASE("mono bigon reduces through the cycle and zero-edge moves") {
  LinearSystem sys = c3_system(Modulus::finite(5));
  Picture pic = mono_bigon(sys, 0, 1, 0, 2, "m");
  CHECK(verify(pic).empty());

  auto viol = find_violation(pic);
  REQUIRE(viol);
  CHECK(viol->kind == ViolationKind::MonoCycle);
  CHECK(viol->cycle_vertices.size() == 2);
  check_sound_move(pic, *viol);

  Picture after = apply_move(pic, *viol);
  auto next = find_violation(after);
  REQUIRE(next);
  CHECK(next->kind == ViolationKind::ZeroEdge);

  ReductionTrace trace = reduce(pic);
  CHECK(trace.outcome == ReduceOutcome::Empty);
}

TEST_CASE("subdivision creates a degree-2 move that restores the edge") {
  LinearSystem sys = c3_system(Modulus::finite(7));
  Picture pic = mono_bigon(sys, 0, 1, 0, 3, "s");
  Picture sub = subdivide(pic, 0, "szz"); // name sorts after sv, sw
  CHECK(verify(sub).empty());
  CHECK(sub.map.vertex_count() == 3);

  auto viol = find_violation(sub);
  REQUIRE(viol);
  CHECK(viol->kind == ViolationKind::LowDegree);
  CHECK(viol->vertex == "szz");
  check_sound_move(sub, *viol);

  Picture merged = apply_move(sub, *viol);
  CHECK(merged.map.vertex_count() == 2);
  CHECK(merged.map.edge_count() == 2);
  CHECK(verify(merged).empty());
}

TEST_CASE("loops and zero parallels are valid and removable") {
  LinearSystem sys = k44_system(Modulus::finite(4), 0);
  Picture pic = relation_bigon(sys, 2, "t");
  pic = add_loop(pic, "tv", sys.support(2)[1], 3);
  pic = add_zero_parallel(pic, 0);
  CHECK(verify(pic).empty());

  auto viol = find_violation(pic);
  REQUIRE(viol);
  CHECK(viol->kind == ViolationKind::Loop);
  check_sound_move(pic, *viol);

  Picture noloop = apply_move(pic, *viol);
  auto viol2 = find_violation(noloop);
  REQUIRE(viol2);
  CHECK(viol2->kind == ViolationKind::ZeroEdge);
  check_sound_move(noloop, *viol2);

  ReductionTrace trace = reduce(pic);
  CHECK(trace.outcome == ReduceOutcome::Empty);
  CHECK(phase(trace.final) == 0);
}

TEST_CASE("degree-3 rewiring with distinct far endpoints stays planar") {
  for (const Modulus &p : {Modulus::finite(5), Modulus::finite(6), Modulus::inf()}) {
    Picture pic = wheel_picture(p);
    REQUIRE(verify(pic).empty());

    Violation manual;
    manual.kind = ViolationKind::LowDegree;
    manual.vertex = "h";
    Picture after = apply_move(pic, manual);
    CHECK(verify(after).empty());
    CHECK(phase(after) == 0);
    CHECK(after.map.vertex_count() == 3);
    CHECK(after.map.edge_count() == 5);
  }
}

TEST_CASE("degree-3 rewiring with coincident far endpoints (theta)") {
  // Three parallel same-column edges with exponent sum zero become two loops.
  LinearSystem sys = c3_system(Modulus::finite(7));
  Picture pic;
  pic.system = sys;
  pic.map.edges[0] = {0, 1};
  pic.map.edges[1] = {2, 3};
  pic.map.edges[2] = {4, 5};
  pic.map.rotation["v"] = {0, 2, 4};
  pic.map.rotation["w"] = {5, 3, 1};
  pic.src[0] = 0;
  pic.src[1] = 2;
  pic.src[2] = 4;
  pic.col[0] = pic.col[1] = pic.col[2] = 0;
  pic.a[0] = 1;
  pic.a[1] = 2;
  pic.a[2] = sys.p.reduce(-3);
  pic.row["v"] = 0;
  pic.row["w"] = 1;
  pic.k["v"] = pic.k["w"] = 0;
  REQUIRE(verify(pic).empty());

  Violation manual;
  manual.kind = ViolationKind::LowDegree;
  manual.vertex = "v";
  Picture after = apply_move(pic, manual);
  CHECK(verify(after).empty());
  CHECK(after.map.vertex_count() == 1);
  CHECK(after.map.edge_count() == 2);
  ReductionTrace trace = reduce(after);
  CHECK(trace.outcome == ReduceOutcome::Empty);
}

TEST_CASE("flip orientation preserves validity and phase") {
  std::mt19937 rng(21);
  LinearSystem sys = k44_system(Modulus::finite(6), 2);
  Picture pic = relation_bigon(sys, 5, "f");
  Int ph = phase(pic);
  for (int t = 0; t < 20; ++t) {
    pic = random_flips(pic, rng);
    CHECK(verify(pic).empty());
    CHECK(phase(pic) == ph);
  }
  // Flipping twice is the identity.
  std::set<int> all;
  for (const auto &[eid, darts] : pic.map.edges) all.insert(eid);
  Picture twice = flip_orientation(flip_orientation(pic, all), all);
  CHECK(twice.src == pic.src);
  CHECK(twice.a == pic.a);

  CHECK_THROWS_AS(flip_orientation(pic, std::set<int>{999}), std::invalid_argument);
}

TEST_CASE("verify reports labelled violations") {
  LinearSystem sys = c3_system(Modulus::finite(5));
  Picture pic = mono_bigon(sys, 0, 1, 0, 2, "z");

  SUBCASE("incidence violation") {
    Picture bad = pic;
    bad.col[0] = 1; // column e1 is not in row r0's support
    auto v = verify(bad);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().kind == ViolationKind::Incidence);
    CHECK(v.front().vertex == "zv");
  }
  SUBCASE("vertex equation violation") {
    Picture bad = pic;
    bad.a[1] = 1; // exponents no longer cancel
    auto v = verify(bad);
    REQUIRE_FALSE(v.empty());
    for (const auto &viol : v) CHECK(viol.kind == ViolationKind::VertexEquation);
  }
  SUBCASE("k label violation") {
    Picture bad = pic;
    bad.k["zv"] = 1; // J^1 is not in the local cyclic subgroup
    auto v = verify(bad);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().kind == ViolationKind::VertexEquation);
  }
  SUBCASE("non-planar embedding") {
    // Two vertices, four parallel edges with crossed rotations on K44 row.
    LinearSystem k = k44_system(Modulus::finite(2), 0);
    Picture bad = relation_bigon(k, 0, "x");
    auto &rot = bad.map.rotation.at("xw");
    std::swap(rot[0], rot[1]); // introduces a crossing
    auto v = verify(bad);
    REQUIRE_FALSE(v.empty());
    bool nonplanar = false;
    for (const auto &viol : v) nonplanar |= viol.kind == ViolationKind::NotPlanar;
    CHECK(nonplanar);
  }
}

TEST_CASE("serial and parallel verification agree") {
  std::mt19937 rng(22);
  LinearSystem sys = k44_system(Modulus::finite(6), 1);
  Picture pic = relation_bigon(sys, 0, "a");
  pic = disjoint_union(pic, relation_bigon(sys, 3, "b"), "");
  pic = disjoint_union(pic, mono_bigon(sys, 0, 4, sys.support(0)[0], 2, "c"), "");
  pic = random_flips(pic, rng);
  auto fast = verify(pic);
  auto slow = verify_serial(pic);
  REQUIRE(fast.size() == slow.size());
  for (std::size_t i = 0; i < fast.size(); ++i) {
    CHECK(fast[i].kind == slow[i].kind);
    CHECK(fast[i].vertex == slow[i].vertex);
  }

  Picture bad = pic;
  bad.a[0] = bad.system.p.reduce(bad.a[0] + 1);
  fast = verify(bad);
  slow = verify_serial(bad);
  REQUIRE(fast.size() == slow.size());
  for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].vertex == slow[i].vertex);
}

TEST_CASE("isolated vertex handling at the end of deletion") {
  LinearSystem sys = c3_system(Modulus::finite(5));
  // A single loop on a vertex with k = 0 disappears entirely.
  Picture pic;
  pic.system = sys;
  pic.map.edges[0] = {0, 1};
  pic.map.rotation["v"] = {0, 1};
  pic.src[0] = 0;
  pic.col[0] = 0;
  pic.a[0] = 2;
  pic.row["v"] = 0;
  pic.k["v"] = 0;
  REQUIRE(verify(pic).empty());
  ReductionTrace trace = reduce(pic);
  CHECK(trace.outcome == ReduceOutcome::Empty);

  // With composite p the vertex relation can force k != 0; the unit is then
  // irreducible and reduce reports it.
  LinearSystem doubled = sys;
  doubled.p = Modulus::finite(4);
  for (std::size_t i = 0; i < doubled.rows(); ++i)
    for (std::size_t j = 0; j < doubled.cols(); ++j) doubled.a.at(i, j) *= 2;
  doubled.b.assign(doubled.rows(), 1);
  Picture stuck;
  stuck.system = doubled;
  stuck.map.edges[0] = {0, 1};
  stuck.map.rotation["v"] = {0, 1};
  stuck.src[0] = 0;
  stuck.col[0] = 0;
  stuck.a[0] = 1;
  stuck.row["v"] = 0;
  stuck.k["v"] = 2; // lambda = 2 annihilates the doubled row and doubles b
  REQUIRE(verify(stuck).empty());
  ReductionTrace t = reduce(stuck);
  CHECK(t.outcome == ReduceOutcome::Stuck);
  CHECK_FALSE(t.stuck_reason.empty());
}

TEST_CASE("randomized move soundness and termination") {
  std::mt19937 rng(23);
  const std::vector<Modulus> moduli{Modulus::finite(2), Modulus::finite(3), Modulus::finite(4),
                                    Modulus::finite(6), Modulus::inf()};
  LinearSystem heawood = incidence_system(instances::heawood(), ZColouring{}, Modulus::finite(2));
  LinearSystem k44 = k44_system(Modulus::finite(2), 1);

  for (int t = 0; t < 120; ++t) {
    const Modulus &p = moduli[t % moduli.size()];
    LinearSystem sys = t % 2 ? heawood : k44;
    sys.p = p;

    std::uniform_int_distribution<int> row(0, static_cast<int>(sys.rows()) - 1);
    Picture pic = relation_bigon(sys, row(rng), "a");
    if (t % 3 == 0) pic = disjoint_union(pic, relation_bigon(sys, row(rng), "b"), "");
    if (t % 4 == 0) {
      std::size_t r = row(rng);
      pic = disjoint_union(pic, mono_bigon(sys, r, r == 0 ? 1 : 0, sys.support(r)[0], 1 + t % 3, "c"),
                           "");
    }
    if (t % 5 == 0) pic = subdivide(pic, 0, "azz");
    if (t % 7 == 0) pic = add_loop(pic, "av", sys.support(pic.row["av"])[0], t % 4);
    if (t % 6 == 0) pic = add_zero_parallel(pic, 1);
    pic = random_flips(pic, rng);
    REQUIRE(verify(pic).empty());
    CHECK(phase(pic) == 0);

    // Every step must be sound, and qualifying systems with phase 0 die out.
    Picture cur = pic;
    int steps = 0;
    for (;;) {
      auto viol = find_violation(cur);
      if (!viol) break;
      Picture next = apply_move(cur, *viol);
      CHECK(verify(next).empty());
      CHECK(phase(next) == phase(cur));
      CHECK(next.size() < cur.size());
      cur = next;
      REQUIRE(++steps < 500);
    }
    CHECK(cur.map.vertex_count() == 0);
  }
}
