#include "kc/labeling.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

namespace kc {

SegmentedGraph segment_graph(const ResolvedGraph& g) {
  SegmentedGraph sg;
  sg.bottom_segment.assign(g.strands, -1);

  // touches[s] = slice indices of wide edges meeting strand s+1, in order.
  std::vector<std::vector<int>> touches(g.strands);
  for (std::size_t i = 0; i < g.slices.size(); ++i) {
    const Slice& s = g.slices[i];
    if (s.kind != SliceKind::Wide) continue;
    if (s.pos < 1 || s.pos > g.strands - 1)
      throw std::invalid_argument("wide slice position out of range");
    touches[s.pos - 1].push_back(static_cast<int>(i));
    touches[s.pos].push_back(static_cast<int>(i));
  }

  // seg_at(strand, slice, entering?) lookup tables built on the fly.
  struct Key { int strand, slice; };
  std::vector<std::vector<std::pair<int, int>>> by_top(g.strands), by_bottom(g.strands);

  for (int s = 0; s < g.strands; ++s) {
    const auto& t = touches[s];
    if (t.empty()) {
      sg.bottom_segment[s] = static_cast<int>(sg.segments.size());
      sg.segments.push_back({s + 1, -1, -1});
      continue;
    }
    int k = static_cast<int>(t.size());
    for (int j = 0; j < k; ++j) {
      Segment seg;
      seg.strand = s + 1;
      seg.bottom = t[j];
      seg.top = t[(j + 1) % k];
      int id = static_cast<int>(sg.segments.size());
      sg.segments.push_back(seg);
      by_bottom[s].push_back({seg.bottom, id});
      by_top[s].push_back({seg.top, id});
      if (j == k - 1) sg.bottom_segment[s] = id;  // runs through the closure
    }
  }

  auto lookup = [](const std::vector<std::pair<int, int>>& v, int slice) {
    for (const auto& [sl, id] : v)
      if (sl == slice) return id;
    throw std::logic_error("segment lookup failed");
  };

  for (std::size_t i = 0; i < g.slices.size(); ++i) {
    const Slice& s = g.slices[i];
    if (s.kind != SliceKind::Wide) continue;
    WideIncidence w;
    w.slice_index = static_cast<int>(i);
    int left = s.pos - 1, right = s.pos;  // 0-based strands
    w.enter_left = lookup(by_top[left], static_cast<int>(i));
    w.enter_right = lookup(by_top[right], static_cast<int>(i));
    w.exit_left = lookup(by_bottom[left], static_cast<int>(i));
    w.exit_right = lookup(by_bottom[right], static_cast<int>(i));
    sg.wides.push_back(w);
  }
  return sg;
}

namespace {

bool conserved(const WideIncidence& w, const Labeling& f) {
  int in1 = (f[w.enter_left] == 1) + (f[w.enter_right] == 1);
  int out1 = (f[w.exit_left] == 1) + (f[w.exit_right] == 1);
  return in1 == out1;  // two labels, so label-2 counts match automatically
}

}  // namespace

std::vector<Labeling> enumerate_labelings(const ResolvedGraph& g, const Caps& caps) {
  SegmentedGraph sg = segment_graph(g);
  int nseg = static_cast<int>(sg.segments.size());
  if (nseg > caps.max_segments)
    throw CapError("labeling enumeration over " + std::to_string(nseg) +
                   " segments, above the cap of " + std::to_string(caps.max_segments));

  // check_at[v]: wide edges whose incident segments are all <= v.
  std::vector<std::vector<int>> check_at(std::max(nseg, 1));
  for (std::size_t wi = 0; wi < sg.wides.size(); ++wi) {
    const auto& w = sg.wides[wi];
    int hi = std::max({w.enter_left, w.enter_right, w.exit_left, w.exit_right});
    check_at[hi].push_back(static_cast<int>(wi));
  }

  std::vector<Labeling> out;
  Labeling f(nseg, 0);
  // Iterative backtracking, label 1 before 2.
  int v = 0;
  if (nseg == 0) return out;
  f[0] = 1;
  for (;;) {
    bool ok = true;
    for (int wi : check_at[v])
      if (!conserved(sg.wides[wi], f)) {
        ok = false;
        break;
      }
    if (ok && v + 1 == nseg) {
      out.push_back(f);
      ok = false;  // treat as dead end to trigger backtrack/advance
    }
    if (ok) {
      ++v;
      f[v] = 1;
    } else {
      while (v >= 0 && f[v] == 2) --v;
      if (v < 0) break;
      f[v] = 2;
    }
  }
  return out;
}

namespace {

std::array<int, 4> wide_labels(const SegmentedGraph& sg, const Labeling& f, int wi) {
  const auto& w = sg.wides.at(wi);
  return {f.at(w.enter_left), f.at(w.enter_right), f.at(w.exit_left), f.at(w.exit_right)};
}

int interaction_of(const std::array<int, 4>& l) {
  if (l == std::array<int, 4>{2, 1, 2, 1}) return +1;
  if (l == std::array<int, 4>{1, 2, 1, 2}) return -1;
  return 0;
}

}  // namespace

int local_interaction(const ResolvedGraph& g, const Labeling& f, int wide_index) {
  SegmentedGraph sg = segment_graph(g);
  return interaction_of(wide_labels(sg, f, wide_index));
}

int total_interaction(const ResolvedGraph& g, const Labeling& f) {
  SegmentedGraph sg = segment_graph(g);
  int total = 0;
  for (std::size_t wi = 0; wi < sg.wides.size(); ++wi)
    total += interaction_of(wide_labels(sg, f, static_cast<int>(wi)));
  return total;
}

int rotation_number(const ResolvedGraph& g) {
  if (g.strands == 0) return 0;
  SegmentedGraph sg = segment_graph(g);
  // successor through the wide-edge removal: same-side continuation.
  std::vector<int> next(sg.segments.size());
  for (std::size_t i = 0; i < sg.segments.size(); ++i) next[i] = static_cast<int>(i);
  for (const auto& w : sg.wides) {
    next[w.enter_left] = w.exit_left;
    next[w.enter_right] = w.exit_right;
  }
  std::vector<bool> seen(sg.segments.size(), false);
  int circles = 0;
  for (std::size_t i = 0; i < sg.segments.size(); ++i) {
    if (seen[i]) continue;
    ++circles;
    for (int j = static_cast<int>(i); !seen[j]; j = next[j]) seen[j] = true;
  }
  return circles;  // each circle winds once counterclockwise
}

SplitPair split(const ResolvedGraph& g, const Labeling& f) {
  SegmentedGraph sg = segment_graph(g);
  if (f.size() != sg.segments.size())
    throw std::invalid_argument("labeling size does not match segment count");

  SplitPair sp;
  sp.graph1.strands = 0;
  sp.graph2.strands = 0;

  // occ[p] = label of the curve at strand position p+1 at the sweep height.
  std::vector<int> occ(g.strands);
  for (int p = 0; p < g.strands; ++p) occ[p] = f[sg.bottom_segment[p]];
  for (int p = 0; p < g.strands; ++p)
    (occ[p] == 1 ? sp.graph1 : sp.graph2).strands++;

  for (const auto& w : sg.wides) {
    int el = f[w.enter_left], er = f[w.enter_right];
    int xl = f[w.exit_left], xr = f[w.exit_right];
    int p = g.slices[w.slice_index].pos;  // 1-based left position
    assert(occ[p - 1] == el && occ[p] == er);
    if (el == er && er == xl && xl == xr) {
      // keep the wide edge in the subgraph of its label
      ResolvedGraph& sub = (el == 1) ? sp.graph1 : sp.graph2;
      int rank = 0;
      for (int q = 0; q < p - 1; ++q) rank += (occ[q] == el);
      sub.slices.push_back({SliceKind::Wide, rank + 1, g.slices[w.slice_index].origin});
    } else if (el == xr && er == xl && el != er) {
      ++sp.crossings_between;  // transversal intersection, in neither part
    } else if (!(el == xl && er == xr && el != er)) {
      throw std::invalid_argument("labeling violates wide-edge conservation");
    }
    sp.interaction += interaction_of({el, er, xl, xr});
    occ[p - 1] = xl;
    occ[p] = xr;
  }

  for (int p = 0; p < g.strands; ++p)
    if (occ[p] != f[sg.bottom_segment[p]])
      throw std::logic_error("split occupancy does not close up");

  sp.r1 = rotation_number(sp.graph1);
  sp.r2 = rotation_number(sp.graph2);
  return sp;
}

int sigma(const ResolvedGraph& g, const Labeling& f, int m, int n) {
  SplitPair sp = split(g, f);
  return sp.interaction + m * sp.r1 - n * sp.r2;
}

Json labeling_to_json(const Labeling& f) {
  Json j = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i)
    j.push_back(Json::array({static_cast<int>(i), f[i]}));
  return j;
}

Json split_to_json(const SplitPair& sp) {
  Json j;
  j["graph1"] = graph_to_json(sp.graph1);
  j["graph2"] = graph_to_json(sp.graph2);
  j["interaction"] = sp.interaction;
  j["r1"] = sp.r1;
  j["r2"] = sp.r2;
  j["crossings_between"] = sp.crossings_between;
  return j;
}

}  // namespace kc
