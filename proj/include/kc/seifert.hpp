#pragma once

#include "kc/diagram.hpp"
#include "kc/json_fwd.hpp"

namespace kc {

/// Diagram statistics produced by the Seifert algorithm.
struct SeifertStats {
  int writhe = 0;
  int circles = 0;  // O
  int c_plus = 0;
  int c_minus = 0;
  int o_gt = 0;   // circles adjacent to crossings, all of them positive
  int o_lt = 0;   // circles adjacent to crossings, all of them negative
  int o_geq = 0;  // O - o_lt
  int o_leq = 0;  // O - o_gt
  int components = 1;

  int crossing_count() const { return c_plus + c_minus; }
  bool operator==(const SeifertStats&) const = default;
};

/// Smooths every crossing respecting orientation, counts the resulting
/// circles and their crossing-sign adjacency.  Crossing-free circles count
/// in neither o_gt nor o_lt.
SeifertStats seifert_stats(const LinkDiagram& d);

Json stats_to_json(const SeifertStats& s);

}  // namespace kc
