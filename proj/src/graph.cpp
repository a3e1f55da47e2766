#include "lsg/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <deque>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lsg {

void Graph::add_vertex(const std::string &v) {
  if (v.empty()) throw std::invalid_argument("Graph: empty vertex id");
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void Graph::add_edge(const std::string &id, const std::string &u, const std::string &v,
                     const std::string &src) {
  if (u == v) throw std::invalid_argument("Graph: loop edges are not allowed");
  if (!src.empty() && src != u && src != v)
    throw std::invalid_argument("Graph: src must be an endpoint");
  for (const auto &e : edges_)
    if (e.id == id) throw std::invalid_argument("Graph: duplicate edge id " + id);
  add_vertex(u);
  add_vertex(v);
  edges_.push_back({id, u, v, src});
  sort_tables();
}

void Graph::sort_tables() {
  std::sort(edges_.begin(), edges_.end(),
            [](const GraphEdge &a, const GraphEdge &b) { return a.id < b.id; });
}

const GraphEdge &Graph::edge(const std::string &id) const {
  for (const auto &e : edges_)
    if (e.id == id) return e;
  throw std::invalid_argument("Graph: unknown edge " + id);
}

bool Graph::has_vertex(const std::string &v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Graph::vertex_index(const std::string &v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw std::invalid_argument("Graph: unknown vertex " + v);
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::edge_index(const std::string &id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  throw std::invalid_argument("Graph: unknown edge " + id);
}

std::vector<std::string> Graph::neighbours(const std::string &v) const {
  std::vector<std::string> out;
  for (const auto &e : edges_) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Graph::incident_edges(const std::string &v) const {
  std::vector<std::string> out;
  for (const auto &e : edges_)
    if (e.u == v || e.v == v) out.push_back(e.id);
  return out;
}

bool Graph::is_simple() const {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto &e : edges_) {
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second) return false;
  }
  return true;
}

std::map<std::string, int> Graph::component_of() const {
  std::map<std::string, int> comp;
  int next = 0;
  for (const auto &v : vertices_) {
    if (comp.count(v)) continue;
    std::deque<std::string> queue{v};
    comp[v] = next;
    while (!queue.empty()) {
      std::string x = queue.front();
      queue.pop_front();
      for (const auto &n : neighbours(x))
        if (!comp.count(n)) {
          comp[n] = next;
          queue.push_back(n);
        }
    }
    ++next;
  }
  return comp;
}

bool Graph::is_connected() const {
  if (vertices_.empty()) return true;
  auto comp = component_of();
  for (const auto &[v, c] : comp)
    if (c != 0) return false;
  return true;
}

Graph Graph::with_default_orientation() const {
  Graph g = *this;
  for (auto &e : g.edges_)
    if (e.src.empty()) e.src = std::min(e.u, e.v);
  return g;
}

bool Graph::fully_oriented() const {
  for (const auto &e : edges_)
    if (e.src.empty()) return false;
  return true;
}

std::optional<std::string> Graph::edge_between(const std::string &u, const std::string &v) const {
  for (const auto &e : edges_)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.id;
  return std::nullopt;
}

IntMatrix incidence_matrix(const Graph &g) {
  if (!g.fully_oriented()) throw std::invalid_argument("incidence_matrix: orientation missing");
  IntMatrix m(g.vertices().size(), g.edges().size());
  for (std::size_t j = 0; j < g.edges().size(); ++j) {
    const GraphEdge &e = g.edges()[j];
    const std::string &tgt = e.src == e.u ? e.v : e.u;
    m.at(g.vertex_index(e.src), j) = -1;
    m.at(g.vertex_index(tgt), j) = 1;
  }
  return m;
}

LinearSystem incidence_system(const Graph &g, const ZColouring &b, const Modulus &p) {
  Graph oriented = g.with_default_orientation();
  LinearSystem sys;
  sys.a = incidence_matrix(oriented);
  sys.b.assign(g.vertices().size(), Int(0));
  for (const auto &[v, x] : b.b) sys.b[g.vertex_index(v)] = x;
  sys.p = p;
  sys.row_names = g.vertices();
  for (const auto &e : g.edges()) sys.col_names.push_back(e.id);
  return sys;
}

Hypergraph incidence_hypergraph(const Graph &g) {
  std::vector<std::pair<std::string, std::string>> inc;
  for (const auto &e : g.edges()) {
    inc.push_back({e.u, e.id});
    inc.push_back({e.v, e.id});
  }
  std::vector<std::string> es;
  for (const auto &e : g.edges()) es.push_back(e.id);
  return Hypergraph(g.vertices(), es, inc);
}

SolveReport incidence_solvable(const Graph &g, const ZColouring &b, const Modulus &p) {
  auto comp = g.component_of();
  std::map<int, Int> sums;
  for (const auto &[v, c] : comp) sums[c] = 0;
  for (const auto &[v, x] : b.b) {
    auto it = comp.find(v);
    if (it == comp.end()) throw std::invalid_argument("incidence_solvable: unknown vertex " + v);
    sums[it->second] += x;
  }
  bool solvable = true;
  for (const auto &[c, s] : sums)
    if (p.reduce(s) != 0) solvable = false;

  SolveReport report{solvable, std::nullopt};
  LinearSystem sys = incidence_system(g, b, p);
  auto x = solve_mod(sys.a, sys.b, p);
  if (x.has_value() != solvable)
    throw std::logic_error("incidence_solvable: component criterion disagrees with solver");
  report.x = x;
  return report;
}

std::pair<ZColouring, std::vector<ColouringShift>>
normalize_colouring(const Graph &g, const ZColouring &b, const std::string &base) {
  if (!g.is_connected()) throw std::invalid_argument("normalize_colouring: graph must be connected");
  if (!g.has_vertex(base)) throw std::invalid_argument("normalize_colouring: unknown base vertex");
  Graph oriented = g.with_default_orientation();

  // BFS tree from the base; shifting leaves-first drains every other vertex.
  std::map<std::string, std::string> tree_edge;
  std::vector<std::string> order{base};
  std::set<std::string> seen{base};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto &eid : oriented.incident_edges(order[i])) {
      const GraphEdge &e = oriented.edge(eid);
      const std::string &other = e.u == order[i] ? e.v : e.u;
      if (seen.insert(other).second) {
        tree_edge[other] = eid;
        order.push_back(other);
      }
    }
  }

  ZColouring cur = b;
  for (const auto &v : g.vertices())
    if (!cur.b.count(v)) cur.b[v] = 0;

  std::vector<ColouringShift> shifts;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::string &v = *it;
    if (v == base) continue;
    const GraphEdge &e = oriented.edge(tree_edge[v]);
    Int amount = cur.b[v];
    if (amount == 0) continue;
    // b(e) is -1 at the source and +1 at the target.
    Int lambda = e.src == v ? amount : -amount;
    const std::string &other = e.u == v ? e.v : e.u;
    cur.b[v] = 0;
    cur.b[other] += e.src == v ? lambda : -lambda;
    shifts.push_back({e.id, lambda});
  }
  return {cur, shifts};
}

std::optional<int> verify_cover(const CoverMap &c) {
  if (!c.h.is_simple() || !c.g.is_simple())
    throw std::invalid_argument("verify_cover: graphs must be simple");
  if (!c.g.is_connected()) throw std::invalid_argument("verify_cover: base graph must be connected");

  for (const auto &v : c.h.vertices())
    if (!c.phi.count(v)) return std::nullopt;

  std::map<std::string, int> fibre;
  for (const auto &v : c.g.vertices()) fibre[v] = 0;
  for (const auto &[hv, gv] : c.phi) {
    if (!c.g.has_vertex(gv)) return std::nullopt;
    ++fibre[gv];
  }
  for (const auto &[gv, n] : fibre)
    if (n == 0) return std::nullopt; // not surjective

  for (const auto &v : c.h.vertices()) {
    auto nh = c.h.neighbours(v);
    std::set<std::string> image;
    for (const auto &w : nh) image.insert(c.phi.at(w));
    auto ng = c.g.neighbours(c.phi.at(v));
    std::set<std::string> target(ng.begin(), ng.end());
    if (image.size() != nh.size()) return std::nullopt; // not injective on the star
    if (image != target) return std::nullopt;           // not onto the base star
  }

  int k = fibre.begin()->second;
  for (const auto &[gv, n] : fibre)
    if (n != k) return std::nullopt;
  return k;
}

Picture cover_to_picture(const CoverMap &c, const ZColouring &b, const Modulus &p) {
  auto arity = verify_cover(c);
  if (!arity) throw std::invalid_argument("cover_to_picture: not a cover");
  if (!c.embedding) throw std::invalid_argument("cover_to_picture: cover has no embedding");
  if (!check_planar_embedding(*c.embedding))
    throw std::invalid_argument("cover_to_picture: embedding is not planar");

  Graph g = c.g.with_default_orientation();
  Picture pic;
  pic.map = *c.embedding;
  pic.system = incidence_system(g, b, p);

  for (const auto &[eid, darts] : pic.map.edges) {
    if (eid < 0 || static_cast<std::size_t>(eid) >= c.h.edges().size())
      throw std::invalid_argument("cover_to_picture: embedding edge ids must index H's edges");
    const GraphEdge &he = c.h.edges()[eid]; // map edge ids index sorted H edges
    const std::string gu = c.phi.at(he.u), gv = c.phi.at(he.v);
    auto gid = g.edge_between(gu, gv);
    if (!gid) throw std::invalid_argument("cover_to_picture: image edge missing");
    pic.col[eid] = g.edge_index(*gid);
    pic.a[eid] = 1;
    // Orient the lift to match the base: the source dart sits at the endpoint
    // mapping to the base source.
    const GraphEdge &ge = g.edge(*gid);
    pic.src[eid] = c.phi.at(he.u) == ge.src ? darts.first : darts.second;
  }
  for (const auto &[v, rot] : pic.map.rotation) {
    pic.row[v] = g.vertex_index(c.phi.at(v));
    auto it = b.b.find(c.phi.at(v));
    pic.k[v] = p.reduce(it == b.b.end() ? Int(0) : it->second);
  }
  return pic;
}

CoverMap bipartite_double_cover(const Graph &g) {
  if (!g.is_simple()) throw std::invalid_argument("bipartite_double_cover: graph must be simple");
  CoverMap c;
  c.g = g;
  for (const auto &v : g.vertices()) {
    c.h.add_vertex(v + ".0");
    c.h.add_vertex(v + ".1");
    c.phi[v + ".0"] = v;
    c.phi[v + ".1"] = v;
  }
  for (const auto &e : g.edges()) {
    c.h.add_edge(e.id + ".0", e.u + ".0", e.v + ".1");
    c.h.add_edge(e.id + ".1", e.u + ".1", e.v + ".0");
  }
  return c;
}

namespace {

// Branch-set model search: each minor vertex gets a connected set of host
// vertices, pairwise disjoint, with a host edge between the sets of every
// minor edge.
struct MinorSearch {
  int n = 0;
  std::vector<std::uint32_t> adj;           // host adjacency masks
  std::vector<std::vector<int>> madj;       // minor adjacency, by search rank
  std::vector<std::uint32_t> branch;        // chosen branch sets
  int targets = 0;

  bool touches(std::uint32_t s, std::uint32_t t) const {
    for (std::uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[v] & t) return true;
    }
    return false;
  }

  std::uint32_t neighbourhood(std::uint32_t s) const {
    std::uint32_t out = 0;
    for (std::uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      out |= adj[v];
    }
    return out & ~s;
  }

  // Connected subsets of `allowed`, at most `cap` vertices, that meet the
  // already-placed neighbour requirements of target t.
  std::vector<std::uint32_t> candidates(int t, std::uint32_t allowed, int cap) const {
    std::vector<std::uint32_t> required;
    for (int u : madj[t])
      if (u < t) required.push_back(branch[u]);

    std::vector<std::uint32_t> out;
    std::set<std::uint32_t> seen;
    std::vector<std::uint32_t> queue;
    for (std::uint32_t rest = allowed; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      queue.push_back(1u << v);
      seen.insert(1u << v);
    }
    while (!queue.empty()) {
      std::uint32_t cur = queue.back();
      queue.pop_back();
      bool ok = true;
      for (std::uint32_t req : required)
        if (!touches(cur, req)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(cur);
      if (std::popcount(cur) >= cap) continue;
      for (std::uint32_t ext = neighbourhood(cur) & allowed; ext;) {
        int v = std::countr_zero(ext);
        ext &= ext - 1;
        std::uint32_t next = cur | (1u << v);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool place(int t, std::uint32_t remaining) {
    if (t == targets) return true;
    int cap = std::popcount(remaining) - (targets - t - 1);
    if (cap <= 0) return false;
    for (std::uint32_t s : candidates(t, remaining, cap)) {
      branch[t] = s;
      if (place(t + 1, remaining & ~s)) return true;
    }
    return false;
  }
};

} // namespace

bool has_minor(const Graph &g, const Graph &minor, bool allow_large) {
  if (g.vertices().size() > 12 && !allow_large)
    throw std::invalid_argument("has_minor: host graph above the size guard (pass allow_large)");
  if (g.vertices().size() > 31)
    throw std::invalid_argument("has_minor: host graph too large for bitmask search");
  if (minor.vertices().size() > g.vertices().size()) return false;

  MinorSearch search;
  search.n = static_cast<int>(g.vertices().size());
  search.adj.assign(search.n, 0);
  for (const auto &e : g.edges()) {
    int u = static_cast<int>(g.vertex_index(e.u));
    int v = static_cast<int>(g.vertex_index(e.v));
    search.adj[u] |= 1u << v;
    search.adj[v] |= 1u << u;
  }

  // Rank minor vertices by descending degree so tight constraints come first.
  std::vector<std::string> mverts = minor.vertices();
  std::stable_sort(mverts.begin(), mverts.end(), [&](const auto &a, const auto &b) {
    return minor.neighbours(a).size() > minor.neighbours(b).size();
  });
  std::map<std::string, int> rank;
  for (std::size_t i = 0; i < mverts.size(); ++i) rank[mverts[i]] = static_cast<int>(i);

  search.targets = static_cast<int>(mverts.size());
  search.madj.assign(search.targets, {});
  for (const auto &e : minor.edges()) {
    int u = rank[e.u], v = rank[e.v];
    if (u == v) continue;
    search.madj[u].push_back(v);
    search.madj[v].push_back(u);
  }
  search.branch.assign(search.targets, 0);

  if (search.targets == 0) return true;
  std::uint32_t all = search.n == 31 ? 0x7fffffffu : (1u << search.n) - 1;

  int cap0 = search.n - (search.targets - 1);
  auto level0 = search.candidates(0, all, cap0);

  std::atomic<bool> found{false};
  const auto total = static_cast<std::int64_t>(level0.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < total; ++i) {
    if (found.load(std::memory_order_relaxed)) continue;
    MinorSearch local = search;
    local.branch[0] = level0[i];
    if (local.place(1, all & ~level0[i])) found.store(true, std::memory_order_relaxed);
  }
  return found.load();
}

} // namespace lsg
