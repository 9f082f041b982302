#pragma once

#include <optional>

#include "kc/errors.hpp"
#include "kc/json_fwd.hpp"
#include "kc/laurent.hpp"
#include "kc/resolution.hpp"

namespace kc {

/// Sign choice for the off-diagonal entries of the wide-edge operator.
/// The two choices are conjugate under the diagonal sign change
/// (-1)^{inversions} and therefore give the same value on every closed
/// graph; NegOffDiag is the frozen default, PosOffDiag stays available as
/// the test switch.
enum class WideConvention { NegOffDiag, PosOffDiag };

/// Graph polynomial of a closed braid-like graph: the graded dimension of
/// the rank-n graph space, evaluated as a quantum trace.  A circle gives
/// the quantum integer [n]; a graph with a wide edge gives 0 at n = 1; the
/// empty graph gives 1.
LaurentPoly1 moy(const ResolvedGraph& g, int n, const Caps& caps = {},
                 WideConvention conv = WideConvention::NegOffDiag);

struct CompositionReport {
  bool holds = false;
  LaurentPoly1 lhs, rhs;
};

/// Checks the composition product at (m, n): the rank-(m+n) value of g
/// equals the sum over labelings f of
///   q^{sigma_{m,n}(g,f)} * moy(graph1, n) * moy(graph2, m).
CompositionReport verify_composition(const ResolvedGraph& g, int m, int n,
                                     const Caps& caps = {});

struct SupportReport {
  std::optional<std::pair<int, int>> support;  // nullopt when moy = 0
  int lower_bound = 0, upper_bound = 0;        // +-((n-1)O + e)
  bool holds = false;
};

/// Checks that the q-support of moy(g, n) lies in [-(n-1)O-e, (n-1)O+e];
/// vacuously true for the zero polynomial.
SupportReport support_check(const ResolvedGraph& g, int n, const Caps& caps = {});

Json composition_to_json(const CompositionReport& r);
Json support_to_json(const SupportReport& r);

}  // namespace kc
