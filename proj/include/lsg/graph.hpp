#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsg/hypergraph.hpp"
#include "lsg/picture.hpp"
#include "lsg/planemap.hpp"
#include "lsg/system.hpp"

namespace lsg {

struct GraphEdge {
  std::string id;
  std::string u, v;
  std::string src; // one of u, v when oriented; empty otherwise
};

/// Finite multigraph without loops; edges may carry an orientation.
class Graph {
public:
  Graph() = default;

  void add_vertex(const std::string &v);
  void add_edge(const std::string &id, const std::string &u, const std::string &v,
                const std::string &src = "");

  const std::vector<std::string> &vertices() const { return vertices_; }
  const std::vector<GraphEdge> &edges() const { return edges_; }

  const GraphEdge &edge(const std::string &id) const;
  bool has_vertex(const std::string &v) const;

  std::size_t vertex_index(const std::string &v) const;
  std::size_t edge_index(const std::string &id) const;

  /// Neighbour multiplicity map; simple graphs have all multiplicities 1.
  std::vector<std::string> neighbours(const std::string &v) const;
  std::vector<std::string> incident_edges(const std::string &v) const;

  bool is_simple() const;
  bool is_connected() const;
  std::map<std::string, int> component_of() const;

  /// Copies with all edges oriented: existing orientations kept, the rest
  /// directed from the lexicographically smaller endpoint.
  Graph with_default_orientation() const;
  bool fully_oriented() const;

  /// Edge between two vertices in a simple graph.
  std::optional<std::string> edge_between(const std::string &u, const std::string &v) const;

private:
  std::vector<std::string> vertices_; // sorted
  std::vector<GraphEdge> edges_;      // sorted by id
  void sort_tables();
};

/// Z-colouring: integer weights on the vertices.
struct ZColouring {
  std::map<std::string, Int> b;

  Int total() const {
    Int s = 0;
    for (const auto &[v, x] : b) s += x;
    return s;
  }
};

/// Signed vertex-edge incidence matrix: entry (i, j) is +1 at the target of
/// edge j, -1 at its source.  Rows follow sorted vertex ids, columns sorted
/// edge ids.  Requires a total orientation.
IntMatrix incidence_matrix(const Graph &g);

/// Incidence system I(G) x = b over Z_p as a named LinearSystem.
LinearSystem incidence_system(const Graph &g, const ZColouring &b, const Modulus &p);

/// The vertex-edge hypergraph of the incidence matrix (equal to G).
Hypergraph incidence_hypergraph(const Graph &g);

struct SolveReport {
  bool solvable;
  std::optional<IntVector> x; // witness in column order when solvable
};

/// Per-component criterion: solvable iff the colouring sums to zero on every
/// component (mod p); the witness comes from the exact solver.
SolveReport incidence_solvable(const Graph &g, const ZColouring &b, const Modulus &p);

struct ColouringShift {
  std::string edge;
  Int lambda;
};

/// Push the whole colouring onto base via spanning-tree edge shifts, each
/// replacing b by b + lambda * b(e).  Preserves the total at every step.
std::pair<ZColouring, std::vector<ColouringShift>>
normalize_colouring(const Graph &g, const ZColouring &b, const std::string &base);

/// Graph homomorphism data for a covering map phi: H -> G, with an optional
/// plane embedding of H for picture building.
struct CoverMap {
  Graph h, g;
  std::map<std::string, std::string> phi;
  std::optional<PlaneMap> embedding;
};

/// Arity of the cover when phi is a surjective locally bijective homomorphism
/// of simple graphs with G connected; absent otherwise.
std::optional<int> verify_cover(const CoverMap &c);

/// Build the picture induced by a planar cover: vertices labelled by phi,
/// edges by their images, unit exponents, k(v) = b(phi(v)).  Its phase is
/// arity * |b|.
Picture cover_to_picture(const CoverMap &c, const ZColouring &b, const Modulus &p);

/// Canonical 2-cover on V x {0,1} with edges (u,i)-(v,1-i); second component
/// is the projection.
CoverMap bipartite_double_cover(const Graph &g);

/// Brute-force minor test by branch-set search.  Guarded to small graphs;
/// pass allow_large to override.  Runs top-level branches in parallel when
/// OpenMP is enabled.
bool has_minor(const Graph &g, const Graph &minor, bool allow_large = false);

} // namespace lsg
