#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "graph_family.hpp"
#include "kc/labeling.hpp"

using kc::enumerate_labelings;
using kc::Labeling;
using kc::named_graph;
using kc::ResolvedGraph;
using kc::split;
using kc::SplitPair;

TEST_CASE("labeling counts on the named graphs") {
  CHECK(enumerate_labelings(named_graph("circle")).size() == 2);

  // theta: closure forces one segment per strand; conservation allows all
  // four per-strand combinations
  auto theta = enumerate_labelings(named_graph("theta"));
  REQUIRE(theta.size() == 4);
  CHECK(theta[0] == Labeling{1, 1});
  CHECK(theta[1] == Labeling{1, 2});
  CHECK(theta[2] == Labeling{2, 1});
  CHECK(theta[3] == Labeling{2, 2});

  CHECK(enumerate_labelings(named_graph("theta2")).size() == 6);
}

TEST_CASE("every graph has both constant labelings") {
  for (const auto& g : graph_family(3, 3)) {
    auto ls = enumerate_labelings(g);
    CHECK(ls.size() >= 2);
    int segs = static_cast<int>(kc::segment_graph(g).segments.size());
    CHECK(std::count(ls.begin(), ls.end(), Labeling(segs, 1)) == 1);
    CHECK(std::count(ls.begin(), ls.end(), Labeling(segs, 2)) == 1);
  }
}

TEST_CASE("wide-edge conservation holds for every enumerated labeling") {
  for (const auto& g : graph_family(3, 3)) {
    auto sg = kc::segment_graph(g);
    for (const auto& f : enumerate_labelings(g)) {
      for (const auto& w : sg.wides) {
        int in1 = (f[w.enter_left] == 1) + (f[w.enter_right] == 1);
        int out1 = (f[w.exit_left] == 1) + (f[w.exit_right] == 1);
        CHECK(in1 == out1);
      }
    }
  }
}

TEST_CASE("local interaction table") {
  ResolvedGraph theta = named_graph("theta");
  // segment 0 is the left strand, segment 1 the right strand
  CHECK(kc::local_interaction(theta, {2, 1}, 0) == +1);
  CHECK(kc::local_interaction(theta, {1, 2}, 0) == -1);
  CHECK(kc::local_interaction(theta, {1, 1}, 0) == 0);
  CHECK(kc::local_interaction(theta, {2, 2}, 0) == 0);

  CHECK(kc::total_interaction(theta, {1, 1}) == 0);
  CHECK(kc::total_interaction(theta, {1, 2}) == -1);
  CHECK(kc::total_interaction(theta, {2, 1}) == +1);
}

TEST_CASE("rotation numbers") {
  CHECK(kc::rotation_number(named_graph("circle")) == 1);
  CHECK(kc::rotation_number(named_graph("theta")) == 2);
  CHECK(kc::rotation_number(named_graph("theta2")) == 2);
  ResolvedGraph empty;
  empty.strands = 0;
  CHECK(kc::rotation_number(empty) == 0);
  // wide-edge removal leaves one circle per strand
  for (const auto& g : graph_family(3, 3)) CHECK(kc::rotation_number(g) == g.strands);
}

TEST_CASE("split on theta") {
  ResolvedGraph theta = named_graph("theta");

  SplitPair all1 = split(theta, {1, 1});
  CHECK(all1.graph1 == theta);
  CHECK(all1.graph2.strands == 0);
  CHECK(all1.interaction == 0);
  CHECK(all1.r1 == 2);
  CHECK(all1.r2 == 0);
  CHECK(all1.crossings_between == 0);

  SplitPair mixed = split(theta, {1, 2});
  CHECK(mixed.graph1.strands == 1);
  CHECK(mixed.graph1.wide_count() == 0);
  CHECK(mixed.graph2.strands == 1);
  CHECK(mixed.interaction == -1);
  CHECK(mixed.r1 == 1);
  CHECK(mixed.r2 == 1);
  CHECK(mixed.crossings_between == 0);
}

TEST_CASE("split with side-swapping labels") {
  // theta2 with outer labels (1,2) and middle labels (2,1): both wide edges
  // become transversal intersections; each part closes into one circle.
  // Segment ids: 0 = middle left, 1 = outer left, 2 = middle right, 3 = outer right.
  ResolvedGraph theta2 = named_graph("theta2");
  SplitPair sp = split(theta2, {2, 1, 1, 2});
  CHECK(sp.crossings_between == 2);
  CHECK(sp.graph1.strands == 1);
  CHECK(sp.graph2.strands == 1);
  CHECK(sp.graph1.wide_count() == 0);
  CHECK(sp.graph2.wide_count() == 0);
  CHECK(sp.interaction == 0);
  CHECK(sp.r1 == 1);
  CHECK(sp.r2 == 1);
}

TEST_CASE("split on a three-strand graph with a spectator strand") {
  // one wide edge between strands 1 and 2; strand 3 untouched
  ResolvedGraph g;
  g.strands = 3;
  g.slices.push_back({kc::SliceKind::Wide, 1, kc::WideOrigin::Intrinsic});
  // segments: 0 = strand 1, 1 = strand 2, 2 = strand 3
  SplitPair sp = split(g, {1, 2, 1});
  CHECK(sp.graph1.strands == 2);  // strand 1 and the spectator circle
  CHECK(sp.graph1.wide_count() == 0);
  CHECK(sp.graph2.strands == 1);
  CHECK(sp.crossings_between == 0);
  CHECK(sp.r1 == 2);
  CHECK(sp.r2 == 1);
}

TEST_CASE("sigma on the worked theta examples") {
  ResolvedGraph theta = named_graph("theta");
  CHECK(kc::sigma(theta, {1, 1}, 1, 1) == 2);   // 0 + 1*2 - 1*0
  CHECK(kc::sigma(theta, {1, 2}, 1, 1) == -1);  // -1 + 1 - 1
  CHECK(kc::sigma(theta, {2, 1}, 1, 2) == 0);   // +1 + 1*1 - 2*1
}

TEST_CASE("rotation additivity, interaction bounds and label-swap symmetry") {
  for (const auto& g : graph_family(3, 3)) {
    int e = g.wide_count();
    for (const auto& f : enumerate_labelings(g)) {
      SplitPair sp = split(g, f);
      CHECK(kc::rotation_number(g) == sp.r1 + sp.r2);
      CHECK(sp.graph1.wide_count() + sp.graph2.wide_count() <= e);
      int slack1 = e - sp.graph1.wide_count();
      int both = e - sp.graph1.wide_count() - sp.graph2.wide_count();
      CHECK(std::abs(sp.interaction) <= slack1);
      CHECK(std::abs(sp.interaction) <= both);
      // the split subgraphs are closed braid-like graphs again
      CHECK(sp.r1 == sp.graph1.strands);
      CHECK(sp.r2 == sp.graph2.strands);

      // swapping labels 1 <-> 2 swaps the parts and negates the interaction
      Labeling swapped(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) swapped[i] = 3 - f[i];
      SplitPair sw = split(g, swapped);
      CHECK(sw.graph1 == sp.graph2);
      CHECK(sw.graph2 == sp.graph1);
      CHECK(sw.interaction == -sp.interaction);
      CHECK(sw.crossings_between == sp.crossings_between);
    }
  }
}

TEST_CASE("labeling cap") {
  kc::Caps caps;
  caps.max_segments = 3;
  CHECK_THROWS_AS(enumerate_labelings(named_graph("theta2"), caps), kc::CapError);
}

TEST_CASE("labeling json") {
  CHECK(kc::labeling_to_json({1, 2}).dump() == "[[0,1],[1,2]]");
}
