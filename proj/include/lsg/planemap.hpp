#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsg/ints.hpp"

namespace lsg {

using VertexId = std::string;

/// Combinatorial map: an embedding given by dart pairs (edges) and a
/// counterclockwise rotation of outgoing darts at each vertex.  Isolated
/// vertices (empty rotations) are rejected; callers remove them first.
struct PlaneMap {
  std::map<int, std::pair<int, int>> edges;      // edge id -> dart pair
  std::map<VertexId, std::vector<int>> rotation; // vertex -> ccw darts

  std::size_t vertex_count() const { return rotation.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t dart_count() const { return 2 * edges.size(); }

  int fresh_edge_id() const;
  int fresh_dart_id() const;

  /// Structural invariants: fixed-point-free pairing, rotations partition the
  /// dart set, no empty rotation.  Throws std::invalid_argument on violation.
  void validate() const;
};

/// Lookup tables derived from a structurally valid map.
struct MapIndex {
  std::map<int, VertexId> origin; // dart -> vertex
  std::map<int, int> mate;        // dart -> paired dart
  std::map<int, int> edge_of;     // dart -> edge id

  explicit MapIndex(const PlaneMap &m);

  /// Rotation successor at the dart's own vertex.
  int rot_next(const PlaneMap &m, int dart) const;
  /// Face permutation: successor of the mate in the rotation at its vertex.
  int face_next(const PlaneMap &m, int dart) const;
};

struct FaceTrace {
  /// Dart cycles, each starting at its smallest dart, ordered by that dart.
  std::vector<std::vector<int>> faces;
};

FaceTrace trace_faces(const PlaneMap &m);

/// True when every connected component satisfies V - E + F = 2 with F counted
/// from that component's face orbits.  The empty map is planar.
bool check_planar_embedding(const PlaneMap &m);

/// Number of darts in the face cycle (bridges contribute both darts).
/// The face must come from trace_faces of the same map.
int face_size(const PlaneMap &m, const std::vector<int> &face);

struct SimpleCycle {
  std::vector<VertexId> vertices; // v1 .. vk (closes back to v1)
  std::vector<int> edges;         // e1 .. ek, edge i joins v_i and v_{i+1}
};

/// A simple cycle contained in the boundary of the given face, built by
/// deleting single-face edges, walking the remaining boundary, and cutting at
/// the first vertex repetition.  Absent when the map has a single face.
std::optional<SimpleCycle> boundary_simple_cycle(const PlaneMap &m, const std::vector<int> &face);

struct ScWitness {
  std::optional<VertexId> low_degree_vertex; // degree < a
  std::optional<std::vector<int>> small_face; // size < b
};

/// For (a,b) in {(6,3),(4,4),(3,6)} and a nonempty planar map, produces a
/// vertex of degree < a or a face of size < b.  Throws std::logic_error if
/// neither exists, which Euler counting rules out.
ScWitness sc_witness(const PlaneMap &m, int a, int b);

} // namespace lsg
