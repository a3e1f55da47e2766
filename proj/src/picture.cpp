#include "lsg/picture.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lsg {

void Picture::check_labels() const {
  map.validate();
  system.check_shape();
  for (const auto &[v, rot] : map.rotation) {
    auto r = row.find(v);
    if (r == row.end()) throw std::invalid_argument("Picture: vertex without row label: " + v);
    if (r->second >= system.rows()) throw std::invalid_argument("Picture: row label out of range");
    if (!k.count(v)) throw std::invalid_argument("Picture: vertex without k label: " + v);
  }
  for (const auto &[eid, darts] : map.edges) {
    auto s = src.find(eid);
    if (s == src.end() || (s->second != darts.first && s->second != darts.second))
      throw std::invalid_argument("Picture: edge without valid direction");
    auto c = col.find(eid);
    if (c == col.end() || c->second >= system.cols())
      throw std::invalid_argument("Picture: edge without valid column label");
    if (!a.count(eid)) throw std::invalid_argument("Picture: edge without exponent label");
  }
}

namespace {

// Validity checks local to one vertex: incident labels lie in the row's
// support, and the net exponent vector is a multiple of the row relation.
std::vector<Violation> check_vertex(const Picture &p, const MapIndex &idx, const VertexId &v) {
  std::vector<Violation> out;
  const std::size_t r = p.row.at(v);
  const auto support = p.system.support(r);

  std::map<std::size_t, Int> net;
  bool labels_ok = true;
  for (int d : p.map.rotation.at(v)) {
    const int eid = idx.edge_of.at(d);
    const std::size_t j = p.col.at(eid);
    if (p.system.a.at(r, j) == 0) {
      Violation viol;
      viol.kind = ViolationKind::Incidence;
      viol.vertex = v;
      viol.edge = eid;
      out.push_back(viol);
      labels_ok = false;
      continue;
    }
    if (p.src.at(eid) == d)
      net[j] -= p.a.at(eid); // outgoing
    else
      net[j] += p.a.at(eid); // incoming
  }
  if (!labels_ok) return out;

  IntVector gen, target;
  gen.reserve(support.size() + 1);
  target.reserve(support.size() + 1);
  for (std::size_t j : support) {
    gen.push_back(p.system.a.at(r, j));
    auto it = net.find(j);
    target.push_back(it == net.end() ? Int(0) : it->second);
  }
  gen.push_back(-p.system.b[r]);
  target.push_back(-p.k.at(v));
  if (!cyclic_membership(gen, target, p.system.p)) {
    Violation viol;
    viol.kind = ViolationKind::VertexEquation;
    viol.vertex = v;
    out.push_back(viol);
  }
  return out;
}

std::vector<Violation> verify_impl(const Picture &p, bool parallel) {
  p.check_labels();
  MapIndex idx(p.map);

  std::vector<VertexId> verts;
  verts.reserve(p.map.rotation.size());
  for (const auto &[v, rot] : p.map.rotation) verts.push_back(v);

  std::vector<std::vector<Violation>> per_vertex(verts.size());
  const int n = static_cast<int>(verts.size());
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < n; ++i) per_vertex[i] = check_vertex(p, idx, verts[i]);
  } else {
    for (int i = 0; i < n; ++i) per_vertex[i] = check_vertex(p, idx, verts[i]);
  }

  std::vector<Violation> out;
  for (auto &vs : per_vertex)
    for (auto &v : vs) out.push_back(std::move(v));
  if (!check_planar_embedding(p.map)) {
    Violation viol;
    viol.kind = ViolationKind::NotPlanar;
    out.push_back(viol);
  }
  return out;
}

} // namespace

std::vector<Violation> verify(const Picture &p) { return verify_impl(p, true); }
std::vector<Violation> verify_serial(const Picture &p) { return verify_impl(p, false); }

Int phase(const Picture &p) {
  Int sum = 0;
  for (const auto &[v, kv] : p.k)
    if (p.map.rotation.count(v)) sum += kv;
  return p.system.p.reduce(sum);
}

std::uint64_t picture_hash(const Picture &p) {
  std::ostringstream os;
  os << p.system.rows() << 'x' << p.system.cols() << '|' << p.system.p.str() << '|';
  for (std::size_t i = 0; i < p.system.rows(); ++i) {
    for (std::size_t j = 0; j < p.system.cols(); ++j) os << p.system.a.at(i, j) << ',';
    os << ';' << p.system.b[i] << '|';
  }
  for (const auto &[eid, darts] : p.map.edges)
    os << 'e' << eid << ':' << darts.first << ',' << darts.second << ',' << p.src.at(eid) << ','
       << p.col.at(eid) << ',' << p.a.at(eid) << '|';
  for (const auto &[v, rot] : p.map.rotation) {
    os << 'v' << v << ':' << p.row.at(v) << ',' << p.k.at(v) << ':';
    for (int d : rot) os << d << ',';
    os << '|';
  }
  std::uint64_t h = 1469598103934665603ull; // FNV-1a 64
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Certificate certify(const Picture &p) {
  if (!verify(p).empty()) throw std::invalid_argument("certify: picture is not valid");
  Certificate cert;
  cert.system_label = p.system.name.empty()
                          ? std::to_string(p.system.rows()) + "x" + std::to_string(p.system.cols())
                          : p.system.name;
  cert.p = p.system.p;
  cert.certified_phase = phase(p);
  cert.picture_hash = picture_hash(p);
  std::ostringstream os;
  os << "J^" << cert.certified_phase << " = 1 in the solution group of " << cert.system_label
     << " over Z_" << cert.p.str();
  cert.conclusion = os.str();
  return cert;
}

Picture flip_orientation(const Picture &p, const std::set<int> &edge_ids) {
  Picture out = p;
  for (int eid : edge_ids) {
    auto e = out.map.edges.find(eid);
    if (e == out.map.edges.end())
      throw std::invalid_argument("flip_orientation: unknown edge " + std::to_string(eid));
    int s = out.src.at(eid);
    out.src[eid] = s == e->second.first ? e->second.second : e->second.first;
    out.a[eid] = out.system.p.reduce(-out.a.at(eid));
  }
  return out;
}

namespace {

std::optional<Violation> find_loop(const Picture &p, const MapIndex &idx) {
  for (const auto &[eid, darts] : p.map.edges)
    if (idx.origin.at(darts.first) == idx.origin.at(darts.second)) {
      Violation v;
      v.kind = ViolationKind::Loop;
      v.edge = eid;
      v.vertex = idx.origin.at(darts.first);
      return v;
    }
  return std::nullopt;
}

std::optional<Violation> find_zero_edge(const Picture &p) {
  for (const auto &[eid, darts] : p.map.edges)
    if (p.system.p.reduce(p.a.at(eid)) == 0) {
      Violation v;
      v.kind = ViolationKind::ZeroEdge;
      v.edge = eid;
      return v;
    }
  return std::nullopt;
}

std::optional<Violation> find_face_pair(const Picture &p, const MapIndex &idx) {
  FaceTrace trace = trace_faces(p.map);
  std::optional<std::tuple<VertexId, VertexId, int>> best;
  for (std::size_t f = 0; f < trace.faces.size(); ++f) {
    std::vector<VertexId> verts;
    for (int d : trace.faces[f]) verts.push_back(idx.origin.at(d));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (p.row.at(verts[i]) == p.row.at(verts[j])) {
          std::tuple<VertexId, VertexId, int> cand{verts[i], verts[j], static_cast<int>(f)};
          if (!best || cand < *best) best = cand;
        }
  }
  if (!best) return std::nullopt;
  Violation v;
  v.kind = ViolationKind::SameLabelFacePair;
  v.vertex = std::get<0>(*best);
  v.vertex2 = std::get<1>(*best);
  v.face = std::get<2>(*best);
  return v;
}

std::optional<Violation> find_low_degree(const Picture &p) {
  for (const auto &[v, rot] : p.map.rotation) {
    std::size_t need = std::min<std::size_t>(4, p.system.support(p.row.at(v)).size());
    if (rot.size() < need) {
      Violation viol;
      viol.kind = ViolationKind::LowDegree;
      viol.vertex = v;
      return viol;
    }
  }
  return std::nullopt;
}

// Union-find forest over one edge-label class; the first edge closing a
// cycle yields the witness.
std::optional<Violation> find_mono_cycle(const Picture &p, const MapIndex &idx) {
  std::map<std::size_t, std::vector<int>> by_col;
  for (const auto &[eid, darts] : p.map.edges) by_col[p.col.at(eid)].push_back(eid);

  for (auto &[colv, eids] : by_col) {
    std::sort(eids.begin(), eids.end());
    std::map<VertexId, VertexId> parent;
    std::map<VertexId, std::vector<std::pair<VertexId, int>>> forest;
    auto find_root = [&](VertexId x) {
      while (parent.count(x) && parent[x] != x) x = parent[x];
      return x;
    };
    for (int eid : eids) {
      const auto &darts = p.map.edges.at(eid);
      VertexId u = idx.origin.at(darts.first);
      VertexId w = idx.origin.at(darts.second);
      if (!parent.count(u)) parent[u] = u;
      if (!parent.count(w)) parent[w] = w;
      if (find_root(u) != find_root(w)) {
        parent[find_root(u)] = find_root(w);
        forest[u].push_back({w, eid});
        forest[w].push_back({u, eid});
        continue;
      }
      // Path u -> w in the forest plus eid closes a simple cycle.
      std::map<VertexId, std::pair<VertexId, int>> back;
      std::vector<VertexId> stack{u};
      back[u] = {u, -1};
      while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (const auto &[y, f] : forest[x])
          if (!back.count(y)) {
            back[y] = {x, f};
            stack.push_back(y);
          }
      }
      Violation v;
      v.kind = ViolationKind::MonoCycle;
      std::vector<VertexId> path_vs;
      std::vector<int> path_es;
      for (VertexId x = w; x != u; x = back[x].first) {
        path_vs.push_back(x);
        path_es.push_back(back[x].second);
      }
      path_vs.push_back(u);
      std::reverse(path_vs.begin(), path_vs.end());
      std::reverse(path_es.begin(), path_es.end());
      v.cycle_vertices = std::move(path_vs); // u .. w
      v.cycle_edges = std::move(path_es);    // path edges, then the closer
      v.cycle_edges.push_back(eid);
      return v;
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<Violation> find_violation(const Picture &p) {
  MapIndex idx(p.map);
  if (auto v = find_loop(p, idx)) return v;
  if (auto v = find_zero_edge(p)) return v;
  if (auto v = find_face_pair(p, idx)) return v;
  if (auto v = find_low_degree(p)) return v;
  if (auto v = find_mono_cycle(p, idx)) return v;
  return std::nullopt;
}

namespace {

void remove_dart(PlaneMap &map, const MapIndex &idx, int dart) {
  auto &rot = map.rotation.at(idx.origin.at(dart));
  rot.erase(std::find(rot.begin(), rot.end(), dart));
}

// Delete an edge; endpoints left dartless are removed when their k label
// vanishes and are irreducible otherwise.
void delete_edge(Picture &p, const MapIndex &idx, int eid) {
  auto darts = p.map.edges.at(eid);
  remove_dart(p.map, idx, darts.first);
  remove_dart(p.map, idx, darts.second);
  p.map.edges.erase(eid);
  p.src.erase(eid);
  p.col.erase(eid);
  p.a.erase(eid);
  for (int d : {darts.first, darts.second}) {
    const VertexId &v = idx.origin.at(d);
    auto it = p.map.rotation.find(v);
    if (it == p.map.rotation.end() || !it->second.empty()) continue;
    if (p.system.p.reduce(p.k.at(v)) != 0)
      throw MoveError("edge deletion isolates vertex " + v + " with nonzero k");
    p.map.rotation.erase(it);
    p.row.erase(v);
    p.k.erase(v);
  }
}

std::vector<int> rotated_to(const std::vector<int> &rot, int start) {
  auto it = std::find(rot.begin(), rot.end(), start);
  std::vector<int> out(it, rot.end());
  out.insert(out.end(), rot.begin(), it);
  return out;
}

Picture contract_face_pair(const Picture &p, const Violation &v) {
  if (v.vertex == v.vertex2) throw MoveError("contraction needs two distinct vertices");
  if (p.row.at(v.vertex) != p.row.at(v.vertex2))
    throw MoveError("contraction needs equal row labels");

  MapIndex idx(p.map);
  FaceTrace trace = trace_faces(p.map);
  if (v.face < 0 || v.face >= static_cast<int>(trace.faces.size()))
    throw MoveError("contraction face index out of range");
  const auto &face = trace.faces[v.face];

  int dv = -1, dw = -1; // smallest face darts at each vertex
  for (int d : face) {
    const VertexId &o = idx.origin.at(d);
    if (o == v.vertex && (dv < 0 || d < dv)) dv = d;
    if (o == v.vertex2 && (dw < 0 || d < dw)) dw = d;
  }
  if (dv < 0 || dw < 0) throw MoveError("vertices not on the given face");

  Picture out = p;
  std::vector<int> merged = rotated_to(out.map.rotation.at(v.vertex), dv);
  std::vector<int> tail = rotated_to(out.map.rotation.at(v.vertex2), dw);
  merged.insert(merged.end(), tail.begin(), tail.end());
  out.map.rotation[v.vertex] = std::move(merged);
  out.map.rotation.erase(v.vertex2);
  out.k[v.vertex] = out.system.p.reduce(out.k.at(v.vertex) + out.k.at(v.vertex2));
  out.k.erase(v.vertex2);
  out.row.erase(v.vertex2);
  return out;
}

Picture remove_low_degree(const Picture &p, const Violation &viol) {
  MapIndex idx(p.map);
  const VertexId &v = viol.vertex;
  auto rot_it = p.map.rotation.find(v);
  if (rot_it == p.map.rotation.end()) throw MoveError("low-degree vertex not found");
  std::vector<int> rot = rot_it->second;
  if (rot.size() != 2 && rot.size() != 3)
    throw MoveError("low-degree move needs degree 2 or 3 at " + v);

  std::set<int> flips;
  std::optional<std::size_t> shared_col;
  for (int d : rot) {
    int eid = idx.edge_of.at(d);
    if (idx.origin.at(idx.mate.at(d)) == v) throw MoveError("low-degree move forbids loops");
    if (shared_col && p.col.at(eid) != *shared_col)
      throw MoveError("low-degree move needs a single edge label at " + v);
    shared_col = p.col.at(eid);
    if (p.src.at(eid) == d) flips.insert(eid); // make every edge incoming at v
  }
  Picture q = flip_orientation(p, flips);

  Int sum = 0;
  for (int d : rot) sum += q.a.at(idx.edge_of.at(d));
  if (q.system.p.reduce(sum) != 0)
    throw MoveError("low-degree move needs vanishing exponent sum at " + v);
  if (q.system.p.reduce(q.k.at(v)) != 0)
    throw MoveError("low-degree move needs k = 0 at " + v);

  // Start the rotation at the smallest dart for a deterministic rewiring.
  rot = rotated_to(rot, *std::min_element(rot.begin(), rot.end()));

  Picture out = q;
  auto erase_edge_labels = [&](int eid) {
    out.map.edges.erase(eid);
    out.src.erase(eid);
    out.col.erase(eid);
    out.a.erase(eid);
  };

  if (rot.size() == 2) {
    int e1 = idx.edge_of.at(rot[0]), e2 = idx.edge_of.at(rot[1]);
    int far1 = idx.mate.at(rot[0]), far2 = idx.mate.at(rot[1]);
    Int a1 = out.a.at(e1);
    int fresh = out.map.fresh_edge_id();
    erase_edge_labels(e1);
    erase_edge_labels(e2);
    out.map.edges[fresh] = {far1, far2};
    out.src[fresh] = far1;
    out.col[fresh] = *shared_col;
    out.a[fresh] = a1;
  } else {
    int e1 = idx.edge_of.at(rot[0]), e2 = idx.edge_of.at(rot[1]), e3 = idx.edge_of.at(rot[2]);
    int far1 = idx.mate.at(rot[0]), far2 = idx.mate.at(rot[1]), far3 = idx.mate.at(rot[2]);
    Int a1 = out.a.at(e1), a2 = out.a.at(e2);
    const VertexId u3 = idx.origin.at(far3);

    int g1 = out.map.fresh_dart_id();
    int g2 = g1 + 1;
    int f1 = out.map.fresh_edge_id();
    int f2 = f1 + 1;
    erase_edge_labels(e1);
    erase_edge_labels(e2);
    erase_edge_labels(e3);
    out.map.edges[f1] = {far1, g1};
    out.map.edges[f2] = {far2, g2};
    out.src[f1] = far1;
    out.src[f2] = far2;
    out.col[f1] = out.col[f2] = *shared_col;
    out.a[f1] = a1;
    out.a[f2] = a2;

    // The two incoming curves land where e3 arrived; f1 hugs the clockwise
    // side of the old corridor, so the counterclockwise order at u3 is
    // (f1, f2).
    auto &rot3 = out.map.rotation.at(u3);
    auto pos = std::find(rot3.begin(), rot3.end(), far3);
    pos = rot3.erase(pos);
    pos = rot3.insert(pos, g2);
    rot3.insert(pos, g1);
  }

  out.map.rotation.erase(v);
  out.row.erase(v);
  out.k.erase(v);
  return out;
}

Picture delete_mono_cycle(const Picture &p, const Violation &viol) {
  const auto &vs = viol.cycle_vertices;
  const auto &es = viol.cycle_edges;
  if (vs.size() < 2 || es.size() != vs.size()) throw MoveError("malformed cycle witness");

  MapIndex idx(p.map);
  std::optional<std::size_t> shared_col;
  for (int eid : es) {
    if (!p.map.edges.count(eid)) throw MoveError("cycle references unknown edge");
    if (shared_col && p.col.at(eid) != *shared_col)
      throw MoveError("cycle is not monochromatic");
    shared_col = p.col.at(eid);
  }

  // Orient e_i as v_i -> v_{i+1} for i < k, and the closing edge as v_1 -> v_k.
  std::set<int> flips;
  const std::size_t k = vs.size();
  for (std::size_t i = 0; i < k; ++i) {
    int eid = es[i];
    const VertexId &want = i + 1 < k ? vs[i] : vs[0];
    if (idx.origin.at(p.src.at(eid)) != want) flips.insert(eid);
  }
  Picture q = flip_orientation(p, flips);

  int closer = es.back();
  Int ak = q.a.at(closer);
  MapIndex qidx(q.map);
  delete_edge(q, qidx, closer);
  for (std::size_t i = 0; i + 1 < k; ++i) q.a[es[i]] = q.system.p.reduce(q.a.at(es[i]) + ak);
  return q;
}

} // namespace

Picture apply_move(const Picture &p, const Violation &v) {
  switch (v.kind) {
  case ViolationKind::Loop: {
    MapIndex idx(p.map);
    const auto &darts = p.map.edges.at(v.edge);
    if (idx.origin.at(darts.first) != idx.origin.at(darts.second))
      throw MoveError("edge is not a loop");
    Picture out = p;
    delete_edge(out, idx, v.edge);
    return out;
  }
  case ViolationKind::ZeroEdge: {
    if (p.system.p.reduce(p.a.at(v.edge)) != 0) throw MoveError("edge exponent is nonzero");
    MapIndex idx(p.map);
    Picture out = p;
    delete_edge(out, idx, v.edge);
    return out;
  }
  case ViolationKind::SameLabelFacePair: return contract_face_pair(p, v);
  case ViolationKind::LowDegree: return remove_low_degree(p, v);
  case ViolationKind::MonoCycle: return delete_mono_cycle(p, v);
  default: throw MoveError("violation kind has no reduction move");
  }
}

ReductionTrace reduce(const Picture &p) {
  ReductionTrace trace{ReduceOutcome::Stuck, {}, p, ""};
  for (;;) {
    if (trace.final.map.vertex_count() == 0) {
      trace.outcome = ReduceOutcome::Empty;
      return trace;
    }
    auto viol = find_violation(trace.final);
    if (!viol) {
      trace.outcome = ReduceOutcome::Stuck;
      return trace;
    }
    std::size_t before = trace.final.size();
    Picture next;
    try {
      next = apply_move(trace.final, *viol);
    } catch (const MoveError &err) {
      trace.outcome = ReduceOutcome::Stuck;
      trace.stuck_reason = err.what();
      return trace;
    }
    if (next.size() >= before) throw std::logic_error("reduce: move did not shrink the picture");
    trace.steps.push_back({*viol, next.size()});
    trace.final = std::move(next);
  }
}

std::string to_string(ViolationKind k) {
  switch (k) {
  case ViolationKind::Incidence: return "INCIDENCE";
  case ViolationKind::VertexEquation: return "VERTEX_EQUATION";
  case ViolationKind::NotPlanar: return "NOT_PLANAR";
  case ViolationKind::Loop: return "LOOP";
  case ViolationKind::ZeroEdge: return "ZERO_EDGE";
  case ViolationKind::SameLabelFacePair: return "SAME_LABEL_FACE_PAIR";
  case ViolationKind::LowDegree: return "LOW_DEGREE";
  case ViolationKind::MonoCycle: return "MONO_CYCLE";
  }
  return "?";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  if (!vertex.empty()) os << " vertex=" << vertex;
  if (!vertex2.empty()) os << "," << vertex2;
  if (edge >= 0) os << " edge=" << edge;
  if (face >= 0) os << " face=" << face;
  if (!cycle_vertices.empty()) {
    os << " cycle=";
    for (std::size_t i = 0; i < cycle_vertices.size(); ++i)
      os << (i ? "-" : "") << cycle_vertices[i];
  }
  return os.str();
}

} // namespace lsg
