#pragma once

#include <string>

#include "lsg/graph.hpp"
#include "lsg/picture.hpp"

namespace lsg {

/// DOT text for a graph; oriented edges become arcs.
std::string export_dot(const Graph &g);

/// DOT text for a picture: vertices labelled "row:k", edges "col:a".
std::string export_dot(const Picture &p);

/// Standalone TikZ picture on a circular layout; label text is escaped.
std::string export_tikz(const Graph &g);
std::string export_tikz(const Picture &p);

} // namespace lsg
