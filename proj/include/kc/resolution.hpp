#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kc/braid.hpp"
#include "kc/errors.hpp"
#include "kc/json_fwd.hpp"

namespace kc {

enum class SliceKind { Identity, Wide };
enum class WideOrigin { FromPositive, FromNegative, Intrinsic };

/// One horizontal slice of a closed braid-like graph: either nothing
/// happens (Identity) or a wide edge joins strands pos and pos+1.
struct Slice {
  SliceKind kind = SliceKind::Identity;
  int pos = 1;  // 1-based, 1 <= pos <= strands-1
  WideOrigin origin = WideOrigin::Intrinsic;

  bool operator==(const Slice&) const = default;
};

/// A closed braid-like graph with wide edges: strand i runs bottom to top
/// and closes onto itself; slices are stacked in order.
struct ResolvedGraph {
  int strands = 1;
  std::vector<Slice> slices;

  int wide_count() const;
  int e_plus() const;   // wide edges from positive crossings
  int e_minus() const;  // wide edges from negative crossings
  std::vector<int> wide_positions() const;
  /// Indices into slices of the wide slices, in order.
  std::vector<int> wide_slice_indices() const;

  bool operator==(const ResolvedGraph&) const = default;
};

/// One crossing resolution of a braid word.
struct Resolution {
  ResolvedGraph graph;
  int e_plus = 0;
  int e_minus = 0;
  int hom_degree = 0;       // e_plus - e_minus
  std::uint64_t mask = 0;   // bit i set = letter i resolved wide
};

/// Graph for a single choice: bit i of mask set means letter i becomes a
/// wide edge, clear means the oriented smoothing (an identity slice).
ResolvedGraph resolution_graph(const BraidWord& b, std::uint64_t mask);

/// All 2^c resolutions in binary-counter order over the letters.
std::vector<Resolution> resolve_all(const BraidWord& b, const Caps& caps = {});

/// The resolution with no wide edges; its circle count equals strands.
ResolvedGraph oriented_resolution(const BraidWord& b);

/// Quantum-grading shift (n-1)w + e_plus - e_minus.
int grading_shift(int e_plus, int e_minus, int w, int n);

/// Built-in test graphs: "circle", "theta", "theta2".
ResolvedGraph named_graph(const std::string& name);

Json resolution_to_json(const Resolution& r);
Json graph_to_json(const ResolvedGraph& g);

}  // namespace kc
