#include "lsg/planemap.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lsg {

int PlaneMap::fresh_edge_id() const { return edges.empty() ? 0 : edges.rbegin()->first + 1; }

int PlaneMap::fresh_dart_id() const {
  int best = -1;
  for (const auto &entry : edges)
    best = std::max({best, entry.second.first, entry.second.second});
  return best + 1;
}

void PlaneMap::validate() const {
  std::set<int> darts;
  for (const auto &[eid, pair] : edges) {
    if (pair.first == pair.second)
      throw std::invalid_argument("PlaneMap: edge pairing must be fixed-point-free");
    if (!darts.insert(pair.first).second || !darts.insert(pair.second).second)
      throw std::invalid_argument("PlaneMap: dart appears in two edges");
  }
  std::set<int> seen;
  for (const auto &[v, rot] : rotation) {
    if (rot.empty()) throw std::invalid_argument("PlaneMap: isolated vertex " + v);
    for (int d : rot) {
      if (!darts.count(d)) throw std::invalid_argument("PlaneMap: rotation has unknown dart");
      if (!seen.insert(d).second)
        throw std::invalid_argument("PlaneMap: dart appears in two rotations");
    }
  }
  if (seen.size() != darts.size())
    throw std::invalid_argument("PlaneMap: rotations do not cover all darts");
}

MapIndex::MapIndex(const PlaneMap &m) {
  for (const auto &[eid, pair] : m.edges) {
    mate[pair.first] = pair.second;
    mate[pair.second] = pair.first;
    edge_of[pair.first] = eid;
    edge_of[pair.second] = eid;
  }
  for (const auto &[v, rot] : m.rotation)
    for (int d : rot) origin[d] = v;
}

int MapIndex::rot_next(const PlaneMap &m, int dart) const {
  const auto &rot = m.rotation.at(origin.at(dart));
  auto it = std::find(rot.begin(), rot.end(), dart);
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

int MapIndex::face_next(const PlaneMap &m, int dart) const {
  return rot_next(m, mate.at(dart));
}

FaceTrace trace_faces(const PlaneMap &m) {
  MapIndex idx(m);
  std::set<int> pending;
  for (const auto &[d, v] : idx.origin) pending.insert(d);

  FaceTrace out;
  while (!pending.empty()) {
    int start = *pending.begin();
    std::vector<int> orbit;
    int d = start;
    do {
      orbit.push_back(d);
      pending.erase(d);
      d = idx.face_next(m, d);
    } while (d != start);
    out.faces.push_back(std::move(orbit));
  }
  return out;
}

namespace {

// Vertex partition into connected components (via edges).
std::map<VertexId, int> components(const PlaneMap &m, const MapIndex &idx, int &count) {
  std::map<VertexId, int> comp;
  count = 0;
  for (const auto &[v, rot] : m.rotation) {
    if (comp.count(v)) continue;
    std::vector<VertexId> stack{v};
    comp[v] = count;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (int d : m.rotation.at(x)) {
        const VertexId &y = idx.origin.at(idx.mate.at(d));
        if (!comp.count(y)) {
          comp[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return comp;
}

} // namespace

bool check_planar_embedding(const PlaneMap &m) {
  if (m.rotation.empty()) return true;
  MapIndex idx(m);
  int ncomp = 0;
  auto comp = components(m, idx, ncomp);

  std::vector<long> verts(ncomp, 0), edges(ncomp, 0), faces(ncomp, 0);
  for (const auto &[v, c] : comp) ++verts[c];
  for (const auto &[eid, pair] : m.edges) ++edges[comp.at(idx.origin.at(pair.first))];
  for (const auto &face : trace_faces(m).faces) ++faces[comp.at(idx.origin.at(face.front()))];

  for (int c = 0; c < ncomp; ++c)
    if (verts[c] - edges[c] + faces[c] != 2) return false;
  return true;
}

int face_size(const PlaneMap &m, const std::vector<int> &face) {
  for (const auto &f : trace_faces(m).faces)
    if (f == face) return static_cast<int>(face.size());
  throw std::invalid_argument("face_size: face is not an orbit of this map");
}

std::optional<SimpleCycle> boundary_simple_cycle(const PlaneMap &m, const std::vector<int> &face) {
  if (face.empty()) throw std::invalid_argument("boundary_simple_cycle: empty face");
  MapIndex midx(m);
  for (const auto &[eid, pair] : m.edges)
    if (midx.origin.at(pair.first) == midx.origin.at(pair.second))
      throw std::invalid_argument("boundary_simple_cycle: map has loops");
  FaceTrace all = trace_faces(m);
  if (all.faces.size() < 2) return std::nullopt;

  // Delete every edge bordering only one face.  Face count is unchanged and
  // the pruned boundary of our face stays inside the original boundary.
  std::map<int, int> orbit_of; // dart -> face index
  for (std::size_t f = 0; f < all.faces.size(); ++f)
    for (int d : all.faces[f]) orbit_of[d] = static_cast<int>(f);

  PlaneMap pruned = m;
  for (const auto &[eid, pair] : m.edges) {
    if (orbit_of[pair.first] != orbit_of[pair.second]) continue;
    pruned.edges.erase(eid);
    for (int d : {pair.first, pair.second}) {
      for (auto &[v, rot] : pruned.rotation) {
        auto it = std::find(rot.begin(), rot.end(), d);
        if (it != rot.end()) {
          rot.erase(it);
          break;
        }
      }
    }
  }
  for (auto it = pruned.rotation.begin(); it != pruned.rotation.end();)
    it = it->second.empty() ? pruned.rotation.erase(it) : std::next(it);

  // Locate the pruned face containing this one and walk its boundary.
  int start = -1;
  for (int d : face)
    if (orbit_of[d] != orbit_of[midx.mate.at(d)]) {
      start = d;
      break;
    }
  if (start < 0) throw std::logic_error("boundary_simple_cycle: face lost all boundary edges");

  MapIndex idx(pruned);
  std::vector<int> walk;
  int d = start;
  do {
    walk.push_back(d);
    d = idx.face_next(pruned, d);
  } while (d != start);

  // First vertex repetition with minimal separation gives a simple cycle.
  std::size_t n = walk.size();
  std::vector<VertexId> vs(n + 1);
  for (std::size_t i = 0; i < n; ++i) vs[i] = idx.origin.at(walk[i]);
  vs[n] = vs[0];

  std::size_t best_i = 0, best_j = n + 1;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (vs[i] == vs[j] && j - i < best_j - best_i) {
        best_i = i;
        best_j = j;
      }
  if (best_j > n) throw std::logic_error("boundary_simple_cycle: no repetition on closed walk");

  SimpleCycle cycle;
  for (std::size_t i = best_i; i < best_j; ++i) {
    cycle.vertices.push_back(vs[i]);
    cycle.edges.push_back(idx.edge_of.at(walk[i]));
  }
  return cycle;
}

ScWitness sc_witness(const PlaneMap &m, int a, int b) {
  if (m.rotation.empty()) throw std::invalid_argument("sc_witness: empty map");
  if (!check_planar_embedding(m)) throw std::invalid_argument("sc_witness: map is not planar");
  for (const auto &[v, rot] : m.rotation)
    if (static_cast<int>(rot.size()) < a) return {v, std::nullopt};
  for (const auto &face : trace_faces(m).faces)
    if (static_cast<int>(face.size()) < b) return {std::nullopt, face};
  throw std::logic_error("sc_witness: degree and size bounds both met on a planar map");
}

} // namespace lsg
