#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kc/braid.hpp"
#include "kc/diagram.hpp"
#include "kc/seifert.hpp"

using kc::braid_closure;
using kc::LinkDiagram;
using kc::parse_braid;
using kc::seifert_stats;

TEST_CASE("closure construction") {
  LinkDiagram unknot = braid_closure(parse_braid("1:"));
  CHECK(unknot.crossing_count() == 0);
  CHECK(unknot.free_loops == 1);
  CHECK(kc::component_count(unknot) == 1);

  LinkDiagram trefoil = braid_closure(parse_braid("2: 1 1 1"));
  CHECK(trefoil.crossing_count() == 3);
  for (const auto& c : trefoil.crossings) CHECK(c.sign == 1);

  LinkDiagram mixed = braid_closure(parse_braid("3: 1 -2"));
  CHECK(mixed.crossing_count() == 2);
  CHECK(mixed.crossings[0].sign == 1);
  CHECK(mixed.crossings[1].sign == -1);

  // a strand with no letters closes into a crossing-free circle
  LinkDiagram partial = braid_closure(parse_braid("3: 1"));
  CHECK(partial.crossing_count() == 1);
  CHECK(partial.free_loops == 1);
  CHECK(kc::component_count(partial) == 2);
}

TEST_CASE("diagram grammar") {
  // trefoil as a crossing list (closure of two-strand braid 1 1 1)
  const char* text =
      "# right trefoil\n"
      "X + 1 2 0 3\n"
      "X + 3 4 2 5\n"
      "X + 5 0 4 1\n";
  LinkDiagram d = kc::parse_diagram(text);
  CHECK(d.crossing_count() == 3);
  CHECK(d.writhe() == 3);
  CHECK(kc::component_count(d) == 1);
  CHECK(seifert_stats(d).circles == 2);

  // serialize/parse round trip
  CHECK(kc::parse_diagram(kc::to_text(d)) == d);

  CHECK_THROWS_AS(kc::parse_diagram("Y + 1 2 3 4\n"), kc::ParseError);
  CHECK_THROWS_AS(kc::parse_diagram("X * 1 2 3 4\n"), kc::ParseError);
  CHECK_THROWS_AS(kc::parse_diagram("X + 1 2 3\n"), kc::ParseError);
  CHECK_THROWS_AS(kc::parse_diagram("X + 1 2 3 4 5\n"), kc::ParseError);
  CHECK_THROWS_AS(kc::parse_diagram(""), kc::ParseError);
}

TEST_CASE("validation rejects inconsistent incidences") {
  // arc 0 occurs twice as an in-arc
  CHECK_THROWS_AS(kc::parse_diagram("X + 0 1 0 2\n"), kc::ParseError);
  // arc with a head but no tail
  CHECK_THROWS_AS(kc::parse_diagram("X + 1 2 0 3\nX + 3 4 2 5\nX + 5 0 4 7\n"),
                  kc::ParseError);
}

TEST_CASE("seifert statistics of the trefoil closure") {
  kc::SeifertStats s = seifert_stats(braid_closure(parse_braid("2: 1 1 1")));
  CHECK(s.writhe == 3);
  CHECK(s.circles == 2);
  CHECK(s.c_plus == 3);
  CHECK(s.c_minus == 0);
  CHECK(s.o_gt == 2);
  CHECK(s.o_lt == 0);
  CHECK(s.o_geq == 2);
  CHECK(s.o_leq == 0);
  CHECK(s.components == 1);
}

TEST_CASE("seifert statistics of a mixed closure") {
  // circle 1 touches only the positive crossing, circle 3 only the negative,
  // circle 2 touches both
  kc::SeifertStats s = seifert_stats(braid_closure(parse_braid("3: 1 -2")));
  CHECK(s.writhe == 0);
  CHECK(s.circles == 3);
  CHECK(s.c_plus == 1);
  CHECK(s.c_minus == 1);
  CHECK(s.o_gt == 1);
  CHECK(s.o_lt == 1);
  CHECK(s.o_geq == 2);
  CHECK(s.o_leq == 2);
  CHECK(s.components == 1);
}

TEST_CASE("crossing-free circles count in neither adjacency class") {
  kc::SeifertStats s = seifert_stats(braid_closure(parse_braid("1:")));
  CHECK(s.writhe == 0);
  CHECK(s.circles == 1);
  CHECK(s.c_plus == 0);
  CHECK(s.c_minus == 0);
  CHECK(s.o_gt == 0);
  CHECK(s.o_lt == 0);
  CHECK(s.components == 1);
}

TEST_CASE("stats invariants over a braid family") {
  for (const auto& w : kc::enumerate_braid_words(3, 4)) {
    kc::SeifertStats s = seifert_stats(braid_closure(w));
    CAPTURE(kc::to_text(w));
    CHECK(s.circles == w.strands);
    CHECK(s.writhe == w.writhe());
    CHECK(s.writhe == s.c_plus - s.c_minus);
    CHECK(s.o_gt + s.o_lt <= s.circles);
    CHECK(s.o_geq == s.circles - s.o_lt);
    CHECK(s.o_leq == s.circles - s.o_gt);
    CHECK(s.o_geq + s.o_leq == 2 * s.circles - s.o_gt - s.o_lt);
    CHECK(s.components == kc::closure_component_count(w));
  }
}

TEST_CASE("canonical key is relabel-invariant") {
  LinkDiagram d = braid_closure(parse_braid("2: 1 1 1"));
  LinkDiagram shifted = d;
  for (auto& c : shifted.crossings) {
    c.under_in += 10;
    c.under_out += 10;
    c.over_in += 10;
    c.over_out += 10;
  }
  CHECK(kc::canonical_key(d) == kc::canonical_key(shifted));
  CHECK(kc::canonical_key(d) !=
        kc::canonical_key(braid_closure(parse_braid("2: 1 1 -1"))));
}
