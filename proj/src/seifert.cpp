#include "kc/seifert.hpp"

#include <map>
#include <numeric>
#include <vector>

namespace kc {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SeifertStats seifert_stats(const LinkDiagram& d) {
  validate(d);
  SeifertStats s;
  s.writhe = d.writhe();
  for (const auto& c : d.crossings) (c.sign > 0 ? s.c_plus : s.c_minus)++;

  auto arcs = d.arc_ids();
  std::map<int, int> idx;
  for (std::size_t i = 0; i < arcs.size(); ++i) idx[arcs[i]] = static_cast<int>(i);

  // Oriented smoothing joins each in-arc with the out-arc on its own side:
  // under-in with over-out, over-in with under-out.
  UnionFind circles(arcs.size());
  for (const auto& c : d.crossings) {
    circles.unite(idx[c.under_in], idx[c.over_out]);
    circles.unite(idx[c.over_in], idx[c.under_out]);
  }
  std::map<int, std::pair<bool, bool>> adj;  // circle root -> (pos, neg) adjacency
  for (std::size_t i = 0; i < arcs.size(); ++i) adj[circles.find(i)];
  for (const auto& c : d.crossings) {
    for (int arc : {c.under_in, c.under_out, c.over_in, c.over_out}) {
      auto& [pos, neg] = adj[circles.find(idx[arc])];
      (c.sign > 0 ? pos : neg) = true;
    }
  }
  s.circles = static_cast<int>(adj.size()) + d.free_loops;
  for (const auto& [root, a] : adj) {
    (void)root;
    if (a.first && !a.second) ++s.o_gt;
    if (a.second && !a.first) ++s.o_lt;
  }
  s.o_geq = s.circles - s.o_lt;
  s.o_leq = s.circles - s.o_gt;
  s.components = component_count(d);
  return s;
}

Json stats_to_json(const SeifertStats& s) {
  Json j;
  j["w"] = s.writhe;
  j["O"] = s.circles;
  j["c_plus"] = s.c_plus;
  j["c_minus"] = s.c_minus;
  j["O_gt"] = s.o_gt;
  j["O_lt"] = s.o_lt;
  j["O_geq"] = s.o_geq;
  j["O_leq"] = s.o_leq;
  j["components"] = s.components;
  return j;
}

}  // namespace kc
