// Timing comparison between the serial reference kernels and the OpenMP
// parallel entry points, on inputs large enough to matter.

#include <chrono>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lsg/gallery.hpp"
#include "lsg/graph.hpp"
#include "lsg/hypergraph.hpp"
#include "lsg/picture.hpp"

using namespace lsg;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Hypergraph random_hypergraph(int nv, int ne, int incident_per_edge, std::mt19937 &rng) {
  std::vector<std::string> vs, es;
  for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(1000 + i));
  for (int i = 0; i < ne; ++i) es.push_back("e" + std::to_string(1000 + i));
  std::vector<std::pair<std::string, std::string>> inc;
  std::uniform_int_distribution<int> pick(0, nv - 1);
  for (int e = 0; e < ne; ++e)
    for (int k = 0; k < incident_per_edge; ++k) inc.push_back({vs[pick(rng)], es[e]});
  return Hypergraph(vs, es, inc);
}

// Large valid picture: many disjoint copies of the K33 double-cover picture.
Picture big_picture(int copies) {
  ZColouring b;
  b.b["3"] = 1;
  Picture unit = instances::k33_picture(b, Modulus::finite(5));
  Picture out = unit;
  for (int c = 1; c < copies; ++c) {
    int dart_base = out.map.fresh_dart_id();
    int edge_base = out.map.fresh_edge_id();
    std::string tag = "#" + std::to_string(c);
    std::map<int, int> dart_map;
    for (const auto &[eid, darts] : unit.map.edges) {
      dart_map[darts.first] = dart_base + 2 * eid;
      dart_map[darts.second] = dart_base + 2 * eid + 1;
    }
    for (const auto &[eid, darts] : unit.map.edges) {
      int ne = edge_base + eid;
      out.map.edges[ne] = {dart_map[darts.first], dart_map[darts.second]};
      out.src[ne] = dart_map[unit.src.at(eid)];
      out.col[ne] = unit.col.at(eid);
      out.a[ne] = unit.a.at(eid);
    }
    for (const auto &[v, rot] : unit.map.rotation) {
      std::vector<int> nrot;
      for (int d : rot) nrot.push_back(dart_map[d]);
      out.map.rotation[v + tag] = nrot;
      out.row[v + tag] = unit.row.at(v);
      out.k[v + tag] = unit.k.at(v);
    }
  }
  return out;
}

} // namespace

int main(int argc, char **argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; both columns run the serial path\n";
#endif

  std::mt19937 rng(7);
  {
    Hypergraph h = random_hypergraph(220 * scale, 320 * scale, 3, rng);
    auto t0 = Clock::now();
    GirthReport serial = berge_girth_serial(h);
    double t_serial = ms_since(t0);
    t0 = Clock::now();
    GirthReport parallel = berge_girth(h);
    double t_parallel = ms_since(t0);
    if ((serial.girth != parallel.girth))
      std::cerr << "MISMATCH in girth kernels\n";
    std::cout << "berge_girth      " << t_serial << " ms serial, " << t_parallel
              << " ms parallel (girth "
              << (serial.girth ? std::to_string(*serial.girth) : std::string("inf")) << ")\n";
  }
  {
    Picture p = big_picture(400 * scale);
    auto t0 = Clock::now();
    auto serial = verify_serial(p);
    double t_serial = ms_since(t0);
    t0 = Clock::now();
    auto parallel = verify(p);
    double t_parallel = ms_since(t0);
    if (serial.size() != parallel.size()) std::cerr << "MISMATCH in verify kernels\n";
    std::cout << "picture verify   " << t_serial << " ms serial, " << t_parallel
              << " ms parallel (" << p.map.vertex_count() << " vertices)\n";
  }
  {
    Graph petersen = instances::petersen();
    Graph k5 = instances::complete(5);
    auto t0 = Clock::now();
    bool found = has_minor(petersen, k5);
    double t = ms_since(t0);
    std::cout << "has_minor        " << t << " ms (petersen contains K5: " << std::boolalpha
              << found << ")\n";
  }
  return 0;
}
