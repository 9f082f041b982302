#include "kc/bounds.hpp"

#include <numeric>
#include <sstream>

#include "kc/homfly.hpp"
#include "kc/moy.hpp"
#include "kc/resolution.hpp"

namespace kc {

namespace {

std::pair<int, int> reduced_fraction(int num, int den) {
  int g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

Interval thm2_interval(const SeifertStats& s, int n) {
  return {(n - 1) * (s.writhe - s.circles) - 2 * s.c_minus,
          (n - 1) * (s.writhe + s.circles) + 2 * s.c_plus};
}

}  // namespace

BoundsReport bennequin_report(const SeifertStats& stats, int n) {
  if (n < 2) throw std::invalid_argument("bennequin_report: n must be >= 2");
  BoundsReport r;
  r.stats = stats;
  r.n = n;
  const int w = stats.writhe, O = stats.circles;

  r.chi_upper = w + O;
  r.chi_s_upper = w + O;
  r.mfw = {w - O, w + O};
  r.spbi_lower = w - O;
  r.kbi_lower = w - stats.o_geq + stats.o_lt;
  r.thm2 = thm2_interval(stats, n);
  r.thm3 = {(n - 1) * (w - O), (n - 1) * (w + O)};

  if (stats.crossing_count() == 0) {
    r.diagram_case = DiagramCase::NoCrossings;
  } else if (stats.c_minus == 0) {
    r.diagram_case = DiagramCase::Positive;
    r.sharper = Interval{(n - 1) * (w - O), (n - 1) * (w - O + 2)};
    r.gp_min_exact = (n - 1) * (w - O);
    r.chi_s_exact = O - w;
  } else if (stats.c_plus == 0) {
    r.diagram_case = DiagramCase::Negative;
    r.sharper = Interval{(n - 1) * (w + O - 2), (n - 1) * (w + O)};
    r.gp_max_exact = (n - 1) * (w + O);
    r.chi_s_exact = O + w;
  } else {
    r.diagram_case = DiagramCase::Mixed;
    r.sharper = Interval{(n - 1) * (w - stats.o_geq + stats.o_lt),
                         (n - 1) * (w + stats.o_leq - stats.o_gt)};
  }

  if (r.chi_s_exact) {
    int chi_s = *r.chi_s_exact;
    r.gmax_box = Interval{(n - 1) * chi_s, (n - 1) * (2 - chi_s)};
    r.gmin_box = Interval{(n - 1) * (chi_s - 2), -(n - 1) * chi_s};
  }

  for (int nn = 2; nn <= std::max(n, 4); ++nn) {
    Interval iv = thm2_interval(stats, nn);
    BoundsReport::NormalizedEntry e;
    e.n = nn;
    e.interval = iv;
    e.lo_normalized = reduced_fraction(iv.lo, nn - 1);
    e.hi_normalized = reduced_fraction(iv.hi, nn - 1);
    r.normalized_family.push_back(e);
  }

  if (stats.components > 1)
    r.knot_only = {"thm3", "thm4", "ineq4", "ineq5"};
  return r;
}

bool verify_mfw(const LinkDiagram& d, const Caps& caps) {
  return mfw_degrees(d, caps).holds;
}

SupportVerifyReport verify_support(const BraidWord& b, int n, const Caps& caps) {
  int c = b.crossing_count();
  if (c > caps.max_resolve_crossings)
    throw CapError("support verification over 2^" + std::to_string(c) +
                   " resolutions, above the cap of 2^" +
                   std::to_string(caps.max_resolve_crossings));
  SupportVerifyReport rep;
  SeifertStats stats = seifert_stats(braid_closure(b));
  rep.thm2 = thm2_interval(stats, n);
  const int w = b.writhe();

  bool all_ok = true;
  LaurentPoly1 total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    ResolvedGraph g = resolution_graph(b, mask);
    SupportVerifyDetail det;
    det.mask = mask;
    det.e_plus = g.e_plus();
    det.e_minus = g.e_minus();
    det.summand_bound = {(n - 1) * (w - stats.circles) - 2 * det.e_minus,
                         (n - 1) * (w + stats.circles) + 2 * det.e_plus};
    int shift = grading_shift(det.e_plus, det.e_minus, w, n);
    LaurentPoly1 term = moy(g, n, caps).shifted(shift);
    det.support = term.support();
    if (det.support) {
      Interval sup{det.support->first, det.support->second};
      det.ok = det.summand_bound.contains(sup) && rep.thm2.contains(sup);
    }
    all_ok = all_ok && det.ok;
    if ((det.e_plus + det.e_minus) % 2 == 0)
      total += term;
    else
      total -= term;
    rep.details.push_back(std::move(det));
  }
  rep.total_support = total.support();
  if (rep.total_support) {
    Interval sup{rep.total_support->first, rep.total_support->second};
    all_ok = all_ok && rep.thm2.contains(sup);
  }
  rep.holds = all_ok;
  return rep;
}

namespace {

Json interval_json(const Interval& iv) { return Json::array({iv.lo, iv.hi}); }

const char* case_tag(DiagramCase c) {
  switch (c) {
    case DiagramCase::Positive: return "positive";
    case DiagramCase::Negative: return "negative";
    case DiagramCase::Mixed: return "mixed";
    default: return "no crossings";
  }
}

}  // namespace

Json bounds_to_json(const BoundsReport& r) {
  Json j;
  j["stats"] = stats_to_json(r.stats);
  j["n"] = r.n;
  j["classical"] = {{"chi_upper", r.chi_upper}, {"chi_s_upper", r.chi_s_upper}};
  j["mfw"] = {{"lower", r.mfw.lo}, {"upper", r.mfw.hi}};
  j["rasmussen"] = {{"spbi_lower", r.spbi_lower}, {"kbi_lower", r.kbi_lower}};
  j["thm2_interval"] = interval_json(r.thm2);
  j["thm3_interval"] = interval_json(r.thm3);
  Json t4;
  t4["case"] = case_tag(r.diagram_case);
  if (r.sharper) t4["interval"] = interval_json(*r.sharper);
  if (r.gp_min_exact) t4["gp_min_exact"] = *r.gp_min_exact;
  if (r.gp_max_exact) t4["gp_max_exact"] = *r.gp_max_exact;
  j["thm4"] = std::move(t4);
  if (r.gmax_box && r.gmin_box) {
    j["thm1_box"] = {{"gmax", interval_json(*r.gmax_box)},
                     {"gmin", interval_json(*r.gmin_box)}};
  } else {
    j["thm1_box"] = nullptr;
  }
  j["chi_s_exact"] = r.chi_s_exact ? Json(*r.chi_s_exact) : Json(nullptr);
  Json fam = Json::array();
  for (const auto& e : r.normalized_family) {
    Json fe;
    fe["n"] = e.n;
    fe["interval"] = interval_json(e.interval);
    fe["lo_over_n_minus_1"] = Json::array({e.lo_normalized.first, e.lo_normalized.second});
    fe["hi_over_n_minus_1"] = Json::array({e.hi_normalized.first, e.hi_normalized.second});
    fam.push_back(std::move(fe));
  }
  j["normalized_family"] = std::move(fam);
  Json flags = Json::array();
  for (const auto& f : r.knot_only) flags.push_back(f);
  j["knot_only_flags"] = std::move(flags);
  return j;
}

std::string bounds_to_text(const BoundsReport& r) {
  std::ostringstream os;
  os << "diagram: w=" << r.stats.writhe << " O=" << r.stats.circles
     << " c+=" << r.stats.c_plus << " c-=" << r.stats.c_minus
     << " O>=" << r.stats.o_gt << " O<=" << r.stats.o_lt
     << " components=" << r.stats.components << "  (n=" << r.n << ")\n";
  os << "chi       <= " << r.chi_upper << "\n";
  os << "chi_s     <= " << r.chi_s_upper << "\n";
  os << "a-degrees of the framed link polynomial in [" << r.mfw.lo << ", " << r.mfw.hi
     << "]\n";
  os << "s(K)-1    >= " << r.spbi_lower << "   (circle-refined: >= " << r.kbi_lower
     << ")\n";
  os << "graded support (rank n) in [" << r.thm2.lo << ", " << r.thm2.hi << "]\n";
  os << "filtered range (rank n) in [" << r.thm3.lo << ", " << r.thm3.hi << "]\n";
  os << "case: " << case_tag(r.diagram_case);
  if (r.sharper) os << ", refined interval [" << r.sharper->lo << ", " << r.sharper->hi << "]";
  os << "\n";
  if (r.gp_min_exact) os << "g_min exactly " << *r.gp_min_exact << "\n";
  if (r.gp_max_exact) os << "g_max exactly " << *r.gp_max_exact << "\n";
  if (r.chi_s_exact) os << "chi_s exactly " << *r.chi_s_exact << "\n";
  if (!r.knot_only.empty()) {
    os << "knot-only bounds:";
    for (const auto& f : r.knot_only) os << ' ' << f;
    os << "\n";
  }
  return os.str();
}

Json support_verify_to_json(const SupportVerifyReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["thm2_interval"] = interval_json(r.thm2);
  if (r.total_support)
    j["total_support"] = Json::array({r.total_support->first, r.total_support->second});
  else
    j["total_support"] = nullptr;
  Json details = Json::array();
  for (const auto& d : r.details) {
    Json dj;
    dj["mask"] = d.mask;
    dj["e_plus"] = d.e_plus;
    dj["e_minus"] = d.e_minus;
    if (d.support)
      dj["support"] = Json::array({d.support->first, d.support->second});
    else
      dj["support"] = nullptr;
    dj["summand_bound"] = interval_json(d.summand_bound);
    dj["ok"] = d.ok;
    details.push_back(std::move(dj));
  }
  j["details"] = std::move(details);
  return j;
}

}  // namespace kc
