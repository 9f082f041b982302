#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kc/braid.hpp"
#include "kc/errors.hpp"

namespace kc {

/// One crossing of an oriented link diagram.  Arc identifiers name the four
/// incident arcs; "in" arcs have their head here, "out" arcs their tail.
struct Crossing {
  int sign = +1;  // +1 or -1, part of the input (no over/under inference)
  int under_in = 0;
  int under_out = 0;
  int over_in = 0;
  int over_out = 0;

  bool operator==(const Crossing&) const = default;
};

/// An oriented link diagram as a crossing list plus crossing-free circles.
/// Valid diagrams have every arc id appearing exactly once as an in-arc and
/// exactly once as an out-arc.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int writhe() const;
  std::vector<int> arc_ids() const;  // sorted, deduplicated

  bool operator==(const LinkDiagram&) const = default;
};

/// Checks the arc-incidence invariants; throws ParseError on violation.
void validate(const LinkDiagram& d);

/// Grammar: one crossing per line,
///   "X <sign:+|-> <arc_in_under> <arc_out_under> <arc_in_over> <arc_out_over>"
/// Blank lines and '#' comments are ignored.
LinkDiagram parse_diagram(std::string_view text);

std::string to_text(const LinkDiagram& d);

/// The standard closed-braid diagram of b.  Strands untouched by any letter
/// close up into crossing-free circles.
LinkDiagram braid_closure(const BraidWord& b);

/// Number of link components (cycles of arc succession through crossings,
/// plus free loops).
int component_count(const LinkDiagram& d);

/// Serialization invariant under arc relabeling: arcs are renumbered in
/// traversal order from a lexicographically minimizing choice of component
/// order and basepoints.  Used as the skein memo key.
std::string canonical_key(const LinkDiagram& d);

}  // namespace kc
