#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "lsg/gallery.hpp"
#include "lsg/graph.hpp"
#include "lsg/pauli.hpp"
#include "lsg/picture.hpp"

namespace lsg::io {

using nlohmann::json;

json int_to_json(const Int &x);
Int int_from_json(const json &j);

json modulus_to_json(const Modulus &p);
Modulus modulus_from_json(const json &j);
Modulus modulus_from_string(const std::string &s);

json system_to_json(const LinearSystem &sys);
LinearSystem system_from_json(const json &j);

json graph_to_json(const Graph &g);
Graph graph_from_json(const json &j);

/// Optional edge-based rotation attached to a graph file: vertex -> incident
/// edge ids in counterclockwise order.  Dart 2i sits at edge i's u endpoint.
PlaneMap graph_rotation_from_json(const Graph &g, const json &rotation);
json graph_rotation_to_json(const Graph &g, const PlaneMap &m);

json colouring_to_json(const ZColouring &b);
ZColouring colouring_from_json(const json &j);

json map_to_json(const PlaneMap &m);
PlaneMap map_from_json(const json &j);

json picture_to_json(const Picture &p);
Picture picture_from_json(const json &j);

/// Cover file: {"H": <path or inline graph>, "G": ..., "phi": {...}}.
/// The loader resolves path strings into parsed graph documents.
CoverMap cover_from_json(const json &j, const std::function<json(const std::string &)> &loader);

json assignment_to_json(const OperatorAssignment &a);
OperatorAssignment assignment_from_json(const json &j);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json &j);

json read_file(const std::string &path);
void write_file(const std::string &path, const json &j);

} // namespace lsg::io
