#pragma once

#include "kc/braid.hpp"
#include "kc/diagram.hpp"
#include "kc/errors.hpp"
#include "kc/json_fwd.hpp"
#include "kc/laurent.hpp"

namespace kc {

// Skein normalization used throughout:
//
//     a^{-1} P(L+) - a P(L-) = z P(L0),     P(unknot) = 1,
//
// so the k-component unlink evaluates to delta^{k-1} with
// delta = (a^{-1} - a) / z.  With these signs the a-degrees of the framed
// polynomial delta * P of any diagram satisfy
// w - O <= min-deg_a <= max-deg_a <= w + O.

/// Normalized polynomial (unknot = 1), computed by switching crossings
/// toward a descending diagram and memoizing on the canonical diagram key.
LaurentPoly2 homfly(const LinkDiagram& d, const Caps& caps = {});
LaurentPoly2 homfly(const BraidWord& b, const Caps& caps = {});

/// delta^{k-1}.
LaurentPoly2 unlink_poly(int k);

/// Checks a^{-1} P(L+) - a P(L-) = z P(L0) at one letter of a braid word,
/// with all three polynomials computed independently by the engine.
bool skein_check(const BraidWord& b, std::size_t letter_index, const Caps& caps = {});

struct MfwReport {
  int min_a = 0, max_a = 0;              // a-range of the normalized polynomial
  int framed_min_a = 0, framed_max_a = 0;  // a-range of delta * P
  int w_minus_o = 0, w_plus_o = 0;
  bool holds = false;  // w-O <= framed range <= w+O
};

/// Compares the a-degree range of the framed polynomial with w-O and w+O.
MfwReport mfw_degrees(const LinkDiagram& d, const Caps& caps = {});

/// Alternating sum over all crossing resolutions:
///   sum_G (-1)^{e_+(G)+e_-(G)} q^{(n-1)w + e_+(G) - e_-(G)} moy(G, n).
LaurentPoly1 sln_state_sum(const BraidWord& b, int n, const Caps& caps = {});

/// Evaluates a two-variable polynomial at a = q^n, z = q^{-1} - q.  Negative
/// z-exponents are cleared by exact division; throws std::domain_error when
/// the division is not exact.
LaurentPoly1 specialize_sl(const LaurentPoly2& p, int n);

struct SlnHomflyReport {
  bool holds = false;
  LaurentPoly1 lhs;  // the state sum
  LaurentPoly1 rhs;  // [n] * homfly(closure) at a = q^n, z = q^{-1} - q
};

/// Cross-checks the state sum against the skein engine through the frozen
/// specialization.  The first call verifies the conventions on the trefoil
/// and the figure-eight once and fails hard if they drifted.
SlnHomflyReport sln_vs_homfly_check(const BraidWord& b, int n, const Caps& caps = {});

Json mfw_to_json(const MfwReport& r);
Json sln_check_to_json(const SlnHomflyReport& r);

}  // namespace kc
