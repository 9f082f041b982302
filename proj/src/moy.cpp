#include "kc/moy.hpp"

#include <cstdint>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "kc/labeling.hpp"

namespace kc {

// The state space is V^{tensor O} for the n-dimensional graded space V with
// basis b_1..b_n of degrees n+1-2i, so a closed strand traces to [n].  A
// wide edge at position p acts on factors (p, p+1) as the rank-one
// [2]-scaled projector
//
//     W b_i(x)b_i = 0,   W = [[q, -1], [-1, q^{-1}]]  on (b_i(x)b_j, b_j(x)b_i),  i < j,
//
// which satisfies W^2 = [2] W.  Basis words never change their letter
// multiset under W, so a trace vector stays inside one small block.

namespace {

struct Evaluator {
  int n;
  int strands;
  int bits;            // bits per position in the packed word
  std::uint64_t lmask; // per-letter mask
  bool neg_offdiag;

  std::uint64_t letter(std::uint64_t word, int p) const {
    return (word >> (p * bits)) & lmask;
  }
  std::uint64_t with_swapped(std::uint64_t word, int p) const {
    std::uint64_t a = letter(word, p), b = letter(word, p + 1);
    word &= ~((lmask << (p * bits)) | (lmask << ((p + 1) * bits)));
    return word | (b << (p * bits)) | (a << ((p + 1) * bits));
  }

  // Apply the wide-edge operator at position p (0-based) to a sparse vector.
  void apply_wide(std::unordered_map<std::uint64_t, LaurentPoly1>& vec, int p) const {
    std::unordered_map<std::uint64_t, LaurentPoly1> out;
    out.reserve(vec.size() * 2);
    const Coeff off = neg_offdiag ? -1 : 1;
    for (auto& [word, poly] : vec) {
      std::uint64_t i = letter(word, p), j = letter(word, p + 1);
      if (i == j) continue;  // annihilated
      std::uint64_t swapped = with_swapped(word, p);
      // diagonal entry q for the ascending arrangement, q^{-1} descending
      int diag = (i < j) ? 1 : -1;
      out[word] += poly.shifted(diag);
      LaurentPoly1 cross;
      for (const auto& [e, c] : poly.terms()) cross.add_term(e, c * off);
      out[swapped] += cross;
    }
    vec = std::move(out);
  }

  LaurentPoly1 trace(const std::vector<int>& wide_positions) const {
    LaurentPoly1 total;
    std::uint64_t count = 1;
    for (int s = 0; s < strands; ++s) count *= static_cast<std::uint64_t>(n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      // decode idx into a packed word of letters 1..n
      std::uint64_t word = 0;
      std::uint64_t rest = idx;
      int weight = 0;  // sum over positions of n+1-2*letter
      for (int p = 0; p < strands; ++p) {
        std::uint64_t l = rest % n + 1;
        rest /= n;
        word |= l << (p * bits);
        weight += n + 1 - 2 * static_cast<int>(l);
      }
      std::unordered_map<std::uint64_t, LaurentPoly1> vec;
      vec.emplace(word, LaurentPoly1::constant(1));
      for (int pos : wide_positions) {
        apply_wide(vec, pos - 1);
        if (vec.empty()) break;
      }
      auto it = vec.find(word);
      if (it != vec.end()) total += it->second.shifted(weight);
    }
    return total;
  }
};

std::string memo_key(int n, int strands, const std::vector<int>& wides, bool neg) {
  std::ostringstream os;
  os << n << '|' << strands << '|' << (neg ? 'n' : 'p') << '|';
  for (int p : wides) os << p << ',';
  return os.str();
}

std::mutex g_moy_mutex;
std::unordered_map<std::string, LaurentPoly1> g_moy_memo;

// One-time sanity check: W^2 = [2] W entrywise on V(x)V for n = 2, 3.
void self_check(WideConvention conv) {
  static std::once_flag flag;
  std::call_once(flag, [conv] {
    for (int n : {2, 3}) {
      int bits = 2;
      Evaluator ev{n, 2, bits, (std::uint64_t{1} << bits) - 1,
                   conv == WideConvention::NegOffDiag};
      for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(n); ++i) {
        for (std::uint64_t j = 1; j <= static_cast<std::uint64_t>(n); ++j) {
          std::uint64_t word = i | (j << bits);
          std::unordered_map<std::uint64_t, LaurentPoly1> once, twice;
          once.emplace(word, LaurentPoly1::constant(1));
          ev.apply_wide(once, 0);
          twice.emplace(word, LaurentPoly1::constant(1));
          ev.apply_wide(twice, 0);
          ev.apply_wide(twice, 0);
          auto value = [](const std::unordered_map<std::uint64_t, LaurentPoly1>& m,
                          std::uint64_t w) {
            auto it = m.find(w);
            return it == m.end() ? LaurentPoly1() : it->second;
          };
          for (const auto& [w, p] : once) {
            (void)p;
            if (!(value(twice, w) == qint(2) * value(once, w)))
              throw std::logic_error("wide-edge operator fails W^2 = [2] W");
          }
          for (const auto& [w, p] : twice) {
            (void)p;
            if (!(value(twice, w) == qint(2) * value(once, w)))
              throw std::logic_error("wide-edge operator fails W^2 = [2] W");
          }
        }
      }
    }
  });
}

}  // namespace

LaurentPoly1 moy(const ResolvedGraph& g, int n, const Caps& caps, WideConvention conv) {
  if (n < 1) throw std::invalid_argument("moy: n must be >= 1");
  if (g.strands == 0) return LaurentPoly1::constant(1);
  self_check(conv);

  std::vector<int> wides = g.wide_positions();
  if (n == 1)  // one-dimensional V: any wide edge annihilates everything
    return wides.empty() ? LaurentPoly1::constant(1) : LaurentPoly1();

  double dim = 1;
  for (int s = 0; s < g.strands; ++s) dim *= n;
  if (dim > static_cast<double>(caps.max_state_dim))
    throw CapError("state dimension " + std::to_string(n) + "^" +
                   std::to_string(g.strands) + " above the cap of " +
                   std::to_string(caps.max_state_dim));

  std::string key = memo_key(n, g.strands, wides, conv == WideConvention::NegOffDiag);
  {
    std::lock_guard<std::mutex> lock(g_moy_mutex);
    auto it = g_moy_memo.find(key);
    if (it != g_moy_memo.end()) return it->second;
  }

  int bits = 1;
  while ((1 << bits) < n + 1) ++bits;
  if (bits * g.strands > 64)
    throw CapError("packed word exceeds 64 bits");  // unreachable under the cap
  Evaluator ev{n, g.strands, bits, (std::uint64_t{1} << bits) - 1,
               conv == WideConvention::NegOffDiag};
  LaurentPoly1 result = ev.trace(wides);

  std::lock_guard<std::mutex> lock(g_moy_mutex);
  g_moy_memo.emplace(std::move(key), result);
  return result;
}

CompositionReport verify_composition(const ResolvedGraph& g, int m, int n,
                                     const Caps& caps) {
  if (m < 1 || n < 1) throw std::invalid_argument("verify_composition: m, n >= 1");
  CompositionReport rep;
  rep.lhs = moy(g, m + n, caps);
  for (const Labeling& f : enumerate_labelings(g, caps)) {
    SplitPair sp = split(g, f);
    LaurentPoly1 part = moy(sp.graph1, n, caps) * moy(sp.graph2, m, caps);
    int shift = sp.interaction + m * sp.r1 - n * sp.r2;
    rep.rhs += part.shifted(shift);
  }
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

SupportReport support_check(const ResolvedGraph& g, int n, const Caps& caps) {
  SupportReport rep;
  int bound = (n - 1) * g.strands + g.wide_count();
  rep.lower_bound = -bound;
  rep.upper_bound = bound;
  rep.support = moy(g, n, caps).support();
  rep.holds = !rep.support ||
              (rep.support->first >= rep.lower_bound && rep.support->second <= rep.upper_bound);
  return rep;
}

Json composition_to_json(const CompositionReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["lhs"] = r.lhs.to_json();
  j["rhs"] = r.rhs.to_json();
  return j;
}

Json support_to_json(const SupportReport& r) {
  Json j;
  if (r.support)
    j["support"] = Json::array({r.support->first, r.support->second});
  else
    j["support"] = nullptr;
  j["bounds"] = Json::array({r.lower_bound, r.upper_bound});
  j["holds"] = r.holds;
  return j;
}

}  // namespace kc
