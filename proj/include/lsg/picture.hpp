#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lsg/planemap.hpp"
#include "lsg/system.hpp"

namespace lsg {

/// Closed picture over a linear system: an embedded labelled digraph whose
/// every vertex satisfies the local abelian relation of its row.  A picture of
/// phase k witnesses J^k = 1 in the solution group.
struct Picture {
  PlaneMap map;
  LinearSystem system;
  std::map<int, int> src;              // edge -> dart at the source endpoint
  std::map<VertexId, std::size_t> row; // vertex -> row index (h_V)
  std::map<int, std::size_t> col;      // edge -> column index (h_E)
  std::map<int, Int> a;                // edge exponent, canonical mod p
  std::map<VertexId, Int> k;           // vertex phase contribution

  /// Structural completeness: labels total, src darts belong to their edges.
  /// Throws on violation.  Does not check the vertex relations; see verify.
  void check_labels() const;

  std::size_t size() const { return map.vertex_count() + map.edge_count(); }
};

enum class ViolationKind {
  Incidence,         // an incident edge's column is outside the vertex row's support
  VertexEquation,    // the local relation fails at a vertex
  NotPlanar,         // embedding fails the per-component Euler count
  Loop,              // reducibility: loop edge
  ZeroEdge,          // reducibility: a(e) == 0 (mod p)
  SameLabelFacePair, // reducibility: equal-row vertices on a common face
  LowDegree,         // reducibility: deg(v) < min(4, |support(row)|)
  MonoCycle          // reducibility: simple cycle with a single edge label
};

struct Violation {
  ViolationKind kind;
  VertexId vertex, vertex2;     // as applicable
  int edge = -1;                // as applicable
  int face = -1;                // index into trace_faces, as applicable
  std::vector<VertexId> cycle_vertices;
  std::vector<int> cycle_edges;

  std::string describe() const;
};

/// All validity violations, deterministically ordered by vertex.  Empty means
/// the picture is valid.  The default entry point checks vertices in parallel
/// when OpenMP is enabled; the serial variant is the reference.
std::vector<Violation> verify(const Picture &p);
std::vector<Violation> verify_serial(const Picture &p);

/// Sum of vertex labels, canonical mod p.
Int phase(const Picture &p);

struct Certificate {
  std::string system_label;
  Modulus p = Modulus::finite(2);
  Int certified_phase;
  std::uint64_t picture_hash = 0;
  std::string conclusion; // "J^k = 1 in the solution group over Z_p"
};

/// Certificate that J^phase = 1; requires verify(p) empty.
Certificate certify(const Picture &p);

/// Reverse the direction of the given edges and negate their exponents.
/// Preserves validity and phase.
Picture flip_orientation(const Picture &p, const std::set<int> &edge_ids);

/// First reducibility witness in the fixed order Loop, ZeroEdge,
/// SameLabelFacePair, LowDegree, MonoCycle (smallest ids within each kind), or
/// absent when the picture satisfies all four minimality conditions.
/// Requires a valid picture.
std::optional<Violation> find_violation(const Picture &p);

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Apply the reduction move for the given witness.  The result is a valid
/// picture with the same phase and strictly smaller V+E.  Throws MoveError
/// when the move's precondition fails (which can happen for composite moduli).
Picture apply_move(const Picture &p, const Violation &v);

enum class ReduceOutcome { Empty, Stuck };

struct ReduceStep {
  Violation move;
  std::size_t size_after; // V+E after the move
};

struct ReductionTrace {
  ReduceOutcome outcome;
  std::vector<ReduceStep> steps;
  Picture final;
  std::string stuck_reason; // set when a found witness had no applicable move
};

/// Repeatedly search and apply moves until the picture is empty or no move
/// applies.  Requires a valid picture; terminates since V+E decreases.
ReductionTrace reduce(const Picture &p);

std::string to_string(ViolationKind k);
std::uint64_t picture_hash(const Picture &p);

} // namespace lsg
