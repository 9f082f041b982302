#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kc/braid.hpp"
#include "kc/diagram.hpp"
#include "kc/errors.hpp"
#include "kc/json_fwd.hpp"
#include "kc/seifert.hpp"

namespace kc {

struct Interval {
  int lo = 0, hi = 0;
  bool contains(const Interval& inner) const { return lo <= inner.lo && inner.hi <= hi; }
  bool operator==(const Interval&) const = default;
};

enum class DiagramCase { Positive, Negative, Mixed, NoCrossings };

/// Every Bennequin-type bound for one diagram and one rank n >= 2.  Fields
/// are intervals known to contain the named invariants; the invariants
/// themselves are never computed here.
struct BoundsReport {
  SeifertStats stats;
  int n = 2;

  int chi_upper = 0;    // chi <= w + O
  int chi_s_upper = 0;  // chi_s <= w + O
  Interval mfw;         // [w - O, w + O] for the a-degrees of the framed polynomial

  int spbi_lower = 0;  // w - O <= s(K) - 1
  int kbi_lower = 0;   // w - O_geq + O_lt <= s(K) - 1

  Interval thm2;  // [(n-1)(w-O) - 2c_-, (n-1)(w+O) + 2c_+] contains the graded support
  Interval thm3;  // [(n-1)(w-O), (n-1)(w+O)]

  DiagramCase diagram_case = DiagramCase::Mixed;
  std::optional<Interval> sharper;        // case-refined interval (crossings present)
  std::optional<int> gp_min_exact;        // positive diagrams
  std::optional<int> gp_max_exact;        // negative diagrams
  std::optional<int> chi_s_exact;         // positive/negative diagrams

  std::optional<Interval> gmax_box;  // [(n-1)chi_s, (n-1)(2-chi_s)] when chi_s known
  std::optional<Interval> gmin_box;  // [(n-1)(chi_s-2), -(n-1)chi_s]

  /// thm2 intervals for ranks 2..max(n,4) divided by (n'-1), as exact
  /// rationals (numerator, denominator).
  struct NormalizedEntry {
    int n = 2;
    Interval interval;
    std::pair<int, int> lo_normalized;  // (num, den)
    std::pair<int, int> hi_normalized;
  };
  std::vector<NormalizedEntry> normalized_family;

  std::vector<std::string> knot_only;  // bounds that assume a knot
};

/// Pure arithmetic on the Seifert statistics.  Requires n >= 2.
BoundsReport bennequin_report(const SeifertStats& stats, int n);

/// True iff the framed-polynomial a-degrees satisfy
/// w - O <= min-deg_a <= max-deg_a <= w + O.
bool verify_mfw(const LinkDiagram& d, const Caps& caps = {});

struct SupportVerifyDetail {
  std::uint64_t mask = 0;
  int e_plus = 0, e_minus = 0;
  std::optional<std::pair<int, int>> support;  // shifted summand support
  Interval summand_bound;                      // from e_+-, inside thm2
  bool ok = true;
};

struct SupportVerifyReport {
  bool holds = false;
  Interval thm2;
  std::optional<std::pair<int, int>> total_support;
  std::vector<SupportVerifyDetail> details;
};

/// Checks that every state-sum summand and the total state sum have
/// q-support inside the rank-n interval [(n-1)(w-O)-2c_-, (n-1)(w+O)+2c_+],
/// each summand also inside its tighter e_+-- interval.
SupportVerifyReport verify_support(const BraidWord& b, int n, const Caps& caps = {});

Json bounds_to_json(const BoundsReport& r);
std::string bounds_to_text(const BoundsReport& r);
Json support_verify_to_json(const SupportVerifyReport& r);

}  // namespace kc
