#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsg/linalg.hpp"

namespace lsg {

/// Alternating closed sequence (v1, e1, ..., vk, ek, v1) with distinct
/// vertices and distinct edges; vertices/edges are indices into the
/// hypergraph's id tables.
struct BergeCycle {
  std::vector<int> vertices;
  std::vector<int> edges;
  int length() const { return static_cast<int>(vertices.size()); }
};

struct GirthReport {
  std::optional<int> girth;          // nullopt = acyclic (infinite girth)
  std::optional<BergeCycle> witness; // present iff girth is finite
};

/// Finite hypergraph: vertex and edge id sets plus an incidence relation
/// (a set of pairs, no multiplicity).
class Hypergraph {
public:
  Hypergraph() = default;
  Hypergraph(std::vector<std::string> vertex_ids, std::vector<std::string> edge_ids,
             std::vector<std::pair<std::string, std::string>> incidence);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string> &vertex_ids() const { return vertices_; }
  const std::vector<std::string> &edge_ids() const { return edges_; }

  /// Incidence pairs as (vertex index, edge index), sorted.
  const std::vector<std::pair<int, int>> &incidence() const { return inc_; }

  const std::vector<std::vector<int>> &vertex_edges() const { return vertex_edges_; }
  const std::vector<std::vector<int>> &edge_vertices() const { return edge_vertices_; }

  bool incident(int v, int e) const;

private:
  std::vector<std::string> vertices_, edges_;
  std::vector<std::pair<int, int>> inc_;
  std::vector<std::vector<int>> vertex_edges_, edge_vertices_;
};

/// H(A): vertices are row indices, edges column indices, vertex i incident to
/// edge j exactly when A(i, j) != 0.
Hypergraph hypergraph_from_matrix(const IntMatrix &a);

/// Minimum over vertices of the incident-edge count.  Throws on an empty
/// vertex set.
int min_degree(const Hypergraph &h);

/// Shortest Berge cycle via per-incidence BFS in the bipartite incidence
/// graph; deterministic witness.  The default entry point runs the incidence
/// scan in parallel when OpenMP is enabled; the serial variant is the
/// reference implementation.
GirthReport berge_girth(const Hypergraph &h);
GirthReport berge_girth_serial(const Hypergraph &h);

/// Exhaustive oracle: minimum length of a closed sequence with distinct
/// vertices whose edge list contains at least two different edges (edge
/// repetitions allowed).  Only intended for small inputs.
GirthReport brute_girth(const Hypergraph &h, int cap);

enum class TheoremHypothesis { No, Qualifies44, Qualifies36, QualifiesBoth };

/// (4,4)/(3,6) test: minimum degree >= d and girth >= g, infinite girth
/// counting as >= any g.
TheoremHypothesis theorem_hypothesis(const Hypergraph &h);

std::string to_string(TheoremHypothesis t);

} // namespace lsg
