#pragma once

#include <vector>

#include "kc/errors.hpp"
#include "kc/json_fwd.hpp"
#include "kc/resolution.hpp"

namespace kc {

/// A maximal piece of a strand between consecutive wide edges touching it.
/// bottom/top are slice indices; both -1 when no wide edge touches the
/// strand (the segment is the whole closed circle).  The piece running
/// through the closure line has bottom = last touch, top = first touch.
struct Segment {
  int strand = 1;  // 1-based
  int bottom = -1;
  int top = -1;
};

/// Segment indices incident to one wide edge, viewed with strands upward:
/// "left" is the lower strand position, "right" is position pos+1.
struct WideIncidence {
  int slice_index = 0;
  int enter_left = 0, enter_right = 0;
  int exit_left = 0, exit_right = 0;
};

/// Segment decomposition of a closed braid-like graph.
struct SegmentedGraph {
  std::vector<Segment> segments;
  std::vector<WideIncidence> wides;          // in slice order
  std::vector<int> bottom_segment;           // per strand (0-based index)
};

SegmentedGraph segment_graph(const ResolvedGraph& g);

/// A labeling assigns 1 or 2 to every segment, conserving each label
/// through every wide edge (entering multiset = exiting multiset).
using Labeling = std::vector<int>;

/// All labelings, enumerated by backtracking over segments in index order
/// (label 1 tried before 2).  Always contains the two constant labelings.
std::vector<Labeling> enumerate_labelings(const ResolvedGraph& g, const Caps& caps = {});

/// +1 when the wide edge sees label 2 entering and exiting on the left and
/// 1 on the right; -1 for the transposed pattern; 0 otherwise.
int local_interaction(const ResolvedGraph& g, const Labeling& f, int wide_index);

/// Sum of local interactions over all wide edges.
int total_interaction(const ResolvedGraph& g, const Labeling& f);

/// Removes wide edges (each entering strand turns back to the exiting
/// strand on its own side), traces the resulting disjoint circles and
/// returns the signed circle count; every circle of a closed braid-like
/// graph winds +1 under the counterclockwise closure convention.
int rotation_number(const ResolvedGraph& g);

/// Result of splitting a labeled graph into its label-1 and label-2 parts.
struct SplitPair {
  ResolvedGraph graph1, graph2;
  int interaction = 0;
  int r1 = 0, r2 = 0;
  int crossings_between = 0;  // transversal intersections created by swaps
};

/// Applies the three modification rules at each wide edge: a wide edge with
/// all four labels equal stays in that label's subgraph; same-side mixed
/// labels dissolve into parallel strands; side-swapping labels become a
/// transversal intersection belonging to neither subgraph.
SplitPair split(const ResolvedGraph& g, const Labeling& f);

/// Grading shift of the composition product:
/// total_interaction + m * r(graph1) - n * r(graph2).
int sigma(const ResolvedGraph& g, const Labeling& f, int m, int n);

Json labeling_to_json(const Labeling& f);
Json split_to_json(const SplitPair& sp);

}  // namespace kc
