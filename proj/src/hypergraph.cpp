#include "lsg/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lsg {

Hypergraph::Hypergraph(std::vector<std::string> vertex_ids, std::vector<std::string> edge_ids,
                       std::vector<std::pair<std::string, std::string>> incidence)
    : vertices_(std::move(vertex_ids)), edges_(std::move(edge_ids)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::map<std::string, int> vidx, eidx;
  for (std::size_t i = 0; i < vertices_.size(); ++i) vidx[vertices_[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < edges_.size(); ++i) eidx[edges_[i]] = static_cast<int>(i);

  std::set<std::pair<int, int>> pairs;
  for (const auto &[v, e] : incidence) {
    auto vi = vidx.find(v);
    auto ei = eidx.find(e);
    if (vi == vidx.end() || ei == eidx.end())
      throw std::invalid_argument("Hypergraph: incidence references unknown id");
    pairs.insert({vi->second, ei->second});
  }
  inc_.assign(pairs.begin(), pairs.end());

  vertex_edges_.assign(vertices_.size(), {});
  edge_vertices_.assign(edges_.size(), {});
  for (const auto &[v, e] : inc_) {
    vertex_edges_[v].push_back(e);
    edge_vertices_[e].push_back(v);
  }
}

bool Hypergraph::incident(int v, int e) const {
  return std::binary_search(inc_.begin(), inc_.end(), std::make_pair(v, e));
}

Hypergraph hypergraph_from_matrix(const IntMatrix &a) {
  std::vector<std::string> vs, es;
  std::vector<std::pair<std::string, std::string>> inc;
  auto pad = [](std::size_t i, std::size_t total) {
    std::string s = std::to_string(i);
    std::size_t width = std::to_string(total == 0 ? 0 : total - 1).size();
    return std::string(width - s.size(), '0') + s;
  };
  for (std::size_t i = 0; i < a.rows(); ++i) vs.push_back(pad(i, a.rows()));
  for (std::size_t j = 0; j < a.cols(); ++j) es.push_back(pad(j, a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) inc.push_back({vs[i], es[j]});
  return Hypergraph(std::move(vs), std::move(es), std::move(inc));
}

int min_degree(const Hypergraph &h) {
  if (h.vertex_count() == 0) throw std::invalid_argument("min_degree: empty vertex set");
  std::size_t best = h.vertex_edges()[0].size();
  for (const auto &es : h.vertex_edges()) best = std::min(best, es.size());
  return static_cast<int>(best);
}

namespace {

// Bipartite incidence graph: nodes 0..nv-1 are hypergraph vertices,
// nv..nv+ne-1 hypergraph edges; arcs are the incidence pairs.
struct IncidenceGraph {
  int nv = 0, nn = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::pair<int, int>> arcs; // (vertex node, edge node), sorted

  explicit IncidenceGraph(const Hypergraph &h) {
    nv = static_cast<int>(h.vertex_count());
    nn = nv + static_cast<int>(h.edge_count());
    adj.assign(nn, {});
    for (const auto &[v, e] : h.incidence()) {
      adj[v].push_back(nv + e);
      adj[nv + e].push_back(v);
      arcs.push_back({v, nv + e});
    }
  }

  // Shortest path u -> w avoiding the arc {u, w} itself; empty when none.
  std::vector<int> path_avoiding(int u, int w) const {
    std::vector<int> parent(nn, -2);
    std::deque<int> queue{u};
    parent[u] = -1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (x == w) break;
      for (int y : adj[x]) {
        if (parent[y] != -2) continue;
        if ((x == u && y == w) || (x == w && y == u)) continue;
        parent[y] = x;
        queue.push_back(y);
      }
    }
    if (parent[w] == -2) return {};
    std::vector<int> path;
    for (int x = w; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
  }
};

// Cycle node sequence (alternating vertex/edge nodes, starting at a vertex
// node) -> BergeCycle.
BergeCycle to_berge(const IncidenceGraph &g, std::vector<int> cycle) {
  std::size_t start = 0;
  while (cycle[start] >= g.nv) ++start;
  std::rotate(cycle.begin(), cycle.begin() + start, cycle.end());
  BergeCycle out;
  for (std::size_t i = 0; i < cycle.size(); i += 2) {
    out.vertices.push_back(cycle[i]);
    out.edges.push_back(cycle[i + 1] - g.nv);
  }
  return out;
}

GirthReport girth_impl(const Hypergraph &h, bool parallel) {
  IncidenceGraph g(h);
  const int narcs = static_cast<int>(g.arcs.size());

  // Shortest cycle through arc (u, w) = 1 + shortest u-w path avoiding it.
  // Scanning every arc and taking the minimum is exact; witnesses follow
  // deterministically from the smallest qualifying arc index.
  std::vector<int> len(narcs, -1);
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < narcs; ++i) {
      auto [u, w] = g.arcs[i];
      auto path = g.path_avoiding(u, w);
      if (!path.empty()) len[i] = static_cast<int>(path.size());
    }
  } else {
    for (int i = 0; i < narcs; ++i) {
      auto [u, w] = g.arcs[i];
      auto path = g.path_avoiding(u, w);
      if (!path.empty()) len[i] = static_cast<int>(path.size());
    }
  }

  int best = -1;
  for (int i = 0; i < narcs; ++i)
    if (len[i] > 0 && (best < 0 || len[i] < len[best])) best = i;
  if (best < 0) return {};

  auto [u, w] = g.arcs[best];
  std::vector<int> cycle = g.path_avoiding(u, w); // closes with the arc itself
  GirthReport report;
  report.girth = static_cast<int>(cycle.size()) / 2;
  report.witness = to_berge(g, std::move(cycle));
  return report;
}

} // namespace

GirthReport berge_girth(const Hypergraph &h) { return girth_impl(h, true); }
GirthReport berge_girth_serial(const Hypergraph &h) { return girth_impl(h, false); }

namespace {

struct BruteSearch {
  const Hypergraph &h;
  int cap;
  int best = -1;
  BergeCycle best_cycle;
  std::vector<int> verts, edges;
  std::vector<bool> used_vertex;

  explicit BruteSearch(const Hypergraph &hg, int c)
      : h(hg), cap(c), used_vertex(hg.vertex_count(), false) {}

  void extend() {
    const int k = static_cast<int>(verts.size());
    const int cur = verts.back();
    const bool may_close = k >= 2 && k <= cap;
    const bool may_extend = k + 1 <= cap && (best < 0 || k + 1 < best);
    for (int e : h.vertex_edges()[cur]) {
      // Close the sequence back to the start; the edge list must contain at
      // least two different edges.
      if (may_close && (best < 0 || k < best) && h.incident(verts[0], e)) {
        bool two_edges = false;
        for (int f : edges)
          if (f != e) {
            two_edges = true;
            break;
          }
        if (two_edges) {
          best = k;
          best_cycle.vertices = verts;
          best_cycle.edges = edges;
          best_cycle.edges.push_back(e);
        }
      }
      if (!may_extend) continue;
      for (int v : h.edge_vertices()[e]) {
        if (used_vertex[v]) continue;
        used_vertex[v] = true;
        verts.push_back(v);
        edges.push_back(e);
        extend();
        edges.pop_back();
        verts.pop_back();
        used_vertex[v] = false;
      }
    }
  }

  GirthReport run() {
    for (std::size_t s = 0; s < h.vertex_count(); ++s) {
      verts = {static_cast<int>(s)};
      edges.clear();
      used_vertex.assign(h.vertex_count(), false);
      used_vertex[s] = true;
      extend();
    }
    if (best < 0) return {};
    return {best, best_cycle};
  }
};

} // namespace

GirthReport brute_girth(const Hypergraph &h, int cap) {
  BruteSearch search(h, cap);
  return search.run();
}

TheoremHypothesis theorem_hypothesis(const Hypergraph &h) {
  int d = min_degree(h);
  GirthReport g = berge_girth(h);
  auto girth_at_least = [&](int bound) { return !g.girth || *g.girth >= bound; };
  bool q44 = d >= 4 && girth_at_least(4);
  bool q36 = d >= 3 && girth_at_least(6);
  if (q44 && q36) return TheoremHypothesis::QualifiesBoth;
  if (q44) return TheoremHypothesis::Qualifies44;
  if (q36) return TheoremHypothesis::Qualifies36;
  return TheoremHypothesis::No;
}

std::string to_string(TheoremHypothesis t) {
  switch (t) {
  case TheoremHypothesis::No: return "NO";
  case TheoremHypothesis::Qualifies44: return "QUALIFIES_44";
  case TheoremHypothesis::Qualifies36: return "QUALIFIES_36";
  case TheoremHypothesis::QualifiesBoth: return "QUALIFIES_BOTH";
  }
  return "NO";
}

} // namespace lsg
