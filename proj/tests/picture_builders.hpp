#pragma once

// Test-only constructions of valid pictures and mutations that stay valid:
// relation bigons, parallel zero edges, loops, subdivisions, disjoint unions.

#include <random>
#include <set>

#include "lsg/picture.hpp"

namespace lsg::testpic {

/// Two vertices labelled by the same row, joined by one parallel edge per
/// support column.  Phase 0.
inline Picture relation_bigon(const LinearSystem &sys, std::size_t row, const std::string &tag) {
  Picture p;
  p.system = sys;
  auto support = sys.support(row);
  if (support.empty()) throw std::invalid_argument("relation_bigon: empty row");
  std::string v = tag + "v", w = tag + "w";
  std::vector<int> rot_v, rot_w;
  for (std::size_t i = 0; i < support.size(); ++i) {
    int eid = static_cast<int>(i);
    int d1 = static_cast<int>(2 * i), d2 = static_cast<int>(2 * i + 1);
    p.map.edges[eid] = {d1, d2};
    rot_v.push_back(d1);
    rot_w.push_back(d2);
    p.src[eid] = d1; // v -> w
    p.col[eid] = support[i];
    p.a[eid] = sys.p.reduce(sys.a.at(row, support[i]));
  }
  std::reverse(rot_w.begin(), rot_w.end());
  p.map.rotation[v] = rot_v;
  p.map.rotation[w] = rot_w;
  p.row[v] = p.row[w] = row;
  p.k[v] = sys.p.reduce(-sys.b[row]);
  p.k[w] = sys.p.reduce(sys.b[row]);
  return p;
}

/// Two vertices with distinct rows sharing a column, joined by two parallel
/// edges carrying that column with opposite exponents.  Phase 0.
inline Picture mono_bigon(const LinearSystem &sys, std::size_t row_v, std::size_t row_w,
                          std::size_t col, const Int &a, const std::string &tag) {
  Picture p;
  p.system = sys;
  std::string v = tag + "v", w = tag + "w";
  p.map.edges[0] = {0, 1};
  p.map.edges[1] = {2, 3};
  p.map.rotation[v] = {0, 2};
  p.map.rotation[w] = {3, 1};
  p.src[0] = 0;
  p.src[1] = 2; // both v -> w
  p.col[0] = p.col[1] = col;
  p.a[0] = sys.p.reduce(a);
  p.a[1] = sys.p.reduce(-a);
  p.row[v] = row_v;
  p.row[w] = row_w;
  p.k[v] = p.k[w] = 0;
  return p;
}

/// Split an edge with a fresh degree-2 vertex carrying the row of one
/// endpoint; both halves keep the column and exponent.
inline Picture subdivide(const Picture &p, int eid, const std::string &new_vertex) {
  MapIndex idx(p.map);
  Picture out = p;
  auto darts = p.map.edges.at(eid);
  int d_src = p.src.at(eid);
  int d_tgt = d_src == darts.first ? darts.second : darts.first;

  int n1 = out.map.fresh_dart_id();
  int n2 = n1 + 1;
  int e1 = out.map.fresh_edge_id();
  int e2 = e1 + 1;
  out.map.edges.erase(eid);
  out.map.edges[e1] = {d_src, n1}; // source .. new vertex
  out.map.edges[e2] = {n2, d_tgt}; // new vertex .. target
  out.map.rotation[new_vertex] = {n1, n2};

  out.src[e1] = d_src;
  out.src[e2] = n2;
  out.col[e1] = out.col[e2] = p.col.at(eid);
  out.a[e1] = out.a[e2] = p.a.at(eid);
  out.src.erase(eid);
  out.col.erase(eid);
  out.a.erase(eid);

  out.row[new_vertex] = p.row.at(idx.origin.at(d_src));
  out.k[new_vertex] = 0;
  return out;
}

/// Attach a loop at a vertex; the column must lie in the vertex row's support.
inline Picture add_loop(const Picture &p, const VertexId &v, std::size_t col, const Int &a) {
  Picture out = p;
  int n1 = out.map.fresh_dart_id();
  int n2 = n1 + 1;
  int eid = out.map.fresh_edge_id();
  out.map.edges[eid] = {n1, n2};
  auto &rot = out.map.rotation.at(v);
  rot.push_back(n1);
  rot.push_back(n2); // consecutive darts: the loop bounds a face of its own
  out.src[eid] = n1;
  out.col[eid] = col;
  out.a[eid] = out.system.p.reduce(a);
  return out;
}

/// Add a parallel copy of an edge with exponent zero (a bigon face between
/// old and new).
inline Picture add_zero_parallel(const Picture &p, int eid) {
  Picture out = p;
  auto darts = p.map.edges.at(eid);
  int n1 = out.map.fresh_dart_id();
  int n2 = n1 + 1;
  int fresh = out.map.fresh_edge_id();
  out.map.edges[fresh] = {n1, n2};

  MapIndex idx(p.map);
  auto &rot_u = out.map.rotation.at(idx.origin.at(darts.first));
  rot_u.insert(std::next(std::find(rot_u.begin(), rot_u.end(), darts.first)), n1);
  auto &rot_w = out.map.rotation.at(idx.origin.at(darts.second));
  rot_w.insert(std::find(rot_w.begin(), rot_w.end(), darts.second), n2);

  out.src[fresh] = n1;
  out.col[fresh] = p.col.at(eid);
  out.a[fresh] = 0;
  return out;
}

/// Disjoint union; the right side's ids get a suffix and fresh dart numbers.
inline Picture disjoint_union(const Picture &a, const Picture &b, const std::string &suffix) {
  if (!(a.system.p == b.system.p)) throw std::invalid_argument("disjoint_union: moduli differ");
  Picture out = a;
  int dart_base = out.map.fresh_dart_id();
  int edge_base = out.map.fresh_edge_id();
  std::map<int, int> dart_map;
  for (const auto &[eid, darts] : b.map.edges) {
    dart_map[darts.first] = dart_base + 2 * eid;
    dart_map[darts.second] = dart_base + 2 * eid + 1;
  }
  for (const auto &[eid, darts] : b.map.edges) {
    int ne = edge_base + eid;
    out.map.edges[ne] = {dart_map[darts.first], dart_map[darts.second]};
    out.src[ne] = dart_map[b.src.at(eid)];
    out.col[ne] = b.col.at(eid);
    out.a[ne] = b.a.at(eid);
  }
  for (const auto &[v, rot] : b.map.rotation) {
    std::vector<int> nrot;
    for (int d : rot) nrot.push_back(dart_map.at(d));
    out.map.rotation[v + suffix] = nrot;
    out.row[v + suffix] = b.row.at(v);
    out.k[v + suffix] = b.k.at(v);
  }
  return out;
}

/// Flip a random subset of edges (validity- and phase-preserving).
inline Picture random_flips(const Picture &p, std::mt19937 &rng) {
  std::set<int> flip;
  for (const auto &[eid, darts] : p.map.edges)
    if (rng() % 2 == 0) flip.insert(eid);
  return flip_orientation(p, flip);
}

} // namespace lsg::testpic
