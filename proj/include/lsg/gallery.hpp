#pragma once

#include <optional>
#include <string>

#include "lsg/graph.hpp"
#include "lsg/pauli.hpp"

namespace lsg {

/// Plane embedding from vertex coordinates: darts sorted counterclockwise by
/// angle.  Curved edges may override the departure angle (degrees) at either
/// endpoint.  Map edge ids index the graph's sorted edge list; dart 2i sits at
/// edge i's u endpoint, dart 2i+1 at v.
struct EmbedSpec {
  std::map<std::string, std::pair<double, double>> pos;
  std::map<std::string, std::pair<double, double>> angle_override; // edge -> (at u, at v)
};

PlaneMap embed_by_angles(const Graph &g, const EmbedSpec &spec);

struct GalleryBundle {
  std::string name;
  Graph graph; // fully oriented
  ZColouring default_b;
  std::optional<CoverMap> cover;  // K33: planar double cover with its embedding
  std::optional<Picture> picture; // K33 and D17 ship transcribed pictures
};

/// Named instances: K33, K5, D17, HEAWOOD, K44.  The picture (when present)
/// is built over the bundle's default colouring and the given modulus.
GalleryBundle gallery(const std::string &name, const Modulus &p = Modulus::finite(2));

namespace instances {

Graph k33();     // oriented letters -> digits
Graph k5();
Graph d17();     // two K4s joined by a perfect matching
Graph heawood(); // 14 vertices, 21 edges, girth 6
Graph k44();
Graph petersen();
Graph cube();
Graph octahedron();
Graph cycle(int n);
Graph complete(int n);

/// Planar double cover of K33 (a hexagonal prism) with its embedding.
CoverMap k33_double_cover();

/// Identity cover of a planar graph, embedded from coordinates.
CoverMap identity_cover(const Graph &g, const EmbedSpec &spec);

/// Embeddings for the planar gallery graphs.
EmbedSpec cube_embedding();
EmbedSpec octahedron_embedding();
EmbedSpec cycle_embedding(int n);
EmbedSpec k4_embedding();

/// Transcribed double-cover picture of the K33 incidence system.
Picture k33_picture(const ZColouring &b, const Modulus &p);

/// Transcribed 24-vertex picture of the D17 incidence system, phase 2|b|.
/// The eight fold vertices carry k = 0.
Picture d17_picture(const ZColouring &b, const Modulus &p);

/// Vertices of the D17 picture where the labelling fails to be a local
/// cover (the fold vertices).
std::vector<std::string> d17_picture_fold_vertices();

/// Two-qubit monomial assignment for the K33 incidence system over Z_2
/// (rows multiply to the identity, one column to minus identity).
OperatorAssignment mermin_square();

} // namespace instances

} // namespace lsg
