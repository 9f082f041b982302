#include "kc/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace kc {

namespace {

// Coefficients stay tiny at desk scale; widening to int64 for JSON is safe
// but guarded anyway.
long long to_int64_checked(const Coeff& c) {
  if (c > std::numeric_limits<long long>::max() ||
      c < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("polynomial coefficient exceeds int64 in JSON output");
  }
  return static_cast<long long>(c);
}

}  // namespace

LaurentPoly1 LaurentPoly1::constant(Coeff c) { return monomial(std::move(c), 0); }

LaurentPoly1 LaurentPoly1::monomial(Coeff c, int exp) {
  LaurentPoly1 p;
  if (c != 0) p.terms_[exp] = std::move(c);
  return p;
}

Coeff LaurentPoly1::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void LaurentPoly1::add_term(int exp, const Coeff& c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
  LaurentPoly1 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly1 LaurentPoly1::shifted(int k) const {
  LaurentPoly1 r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

std::optional<std::pair<int, int>> LaurentPoly1::support() const {
  if (terms_.empty()) return std::nullopt;
  return std::make_pair(terms_.begin()->first, terms_.rbegin()->first);
}

LaurentPoly1 LaurentPoly1::bar() const {
  LaurentPoly1 r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

LaurentPoly1 LaurentPoly1::pow(unsigned k) const {
  LaurentPoly1 r = constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

std::optional<LaurentPoly1> LaurentPoly1::divide_exact(const LaurentPoly1& num,
                                                       const LaurentPoly1& den) {
  if (den.is_zero()) return std::nullopt;
  LaurentPoly1 rem = num;
  LaurentPoly1 quot;
  const auto [dlo, dhi] = *den.support();
  const Coeff& dlead = den.terms_.rbegin()->second;
  (void)dlo;
  while (!rem.is_zero()) {
    const auto [rlo, rhi] = *rem.support();
    (void)rlo;
    const Coeff& rlead = rem.terms_.rbegin()->second;
    if (rlead % dlead != 0) return std::nullopt;
    Coeff q = rlead / dlead;
    int shift = rhi - dhi;
    LaurentPoly1 t = monomial(q, shift);
    quot += t;
    rem -= t * den;
    if (!rem.is_zero() && rem.support()->second >= rhi) return std::nullopt;
  }
  return quot;
}

std::string LaurentPoly1::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ' ';
    first = false;
    os << (c < 0 ? '-' : '+') << Coeff(boost::multiprecision::abs(c)).str() << "*q^" << e;
  }
  return os.str();
}

Json LaurentPoly1::to_json() const {
  Json coeffs = Json::object();
  for (const auto& [e, c] : terms_) coeffs[std::to_string(e)] = to_int64_checked(c);
  Json j;
  j["q"] = std::move(coeffs);
  return j;
}

LaurentPoly1 qint(int n) {
  if (n < 0) throw std::invalid_argument("qint: negative argument");
  LaurentPoly1 p;
  for (int e = n - 1; e >= 1 - n; e -= 2) p.add_term(e, 1);
  return p;
}

LaurentPoly2 LaurentPoly2::constant(Coeff c) { return monomial(std::move(c), 0, 0); }

LaurentPoly2 LaurentPoly2::monomial(Coeff c, int aexp, int zexp) {
  LaurentPoly2 p;
  if (c != 0) p.terms_[{aexp, zexp}] = std::move(c);
  return p;
}

void LaurentPoly2::add_term(int aexp, int zexp, const Coeff& c) {
  if (c == 0) return;
  auto key = std::make_pair(aexp, zexp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(int da, int dz) const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_) r.terms_[{k.first + da, k.second + dz}] = c;
  return r;
}

std::optional<std::pair<int, int>> LaurentPoly2::adeg_range() const {
  if (terms_.empty()) return std::nullopt;
  int lo = terms_.begin()->first.first;
  int hi = lo;
  for (const auto& [k, c] : terms_) {
    (void)c;
    lo = std::min(lo, k.first);
    hi = std::max(hi, k.first);
  }
  return std::make_pair(lo, hi);
}

std::optional<std::pair<int, int>> LaurentPoly2::zdeg_range() const {
  if (terms_.empty()) return std::nullopt;
  int lo = terms_.begin()->first.second;
  int hi = lo;
  for (const auto& [k, c] : terms_) {
    (void)c;
    lo = std::min(lo, k.second);
    hi = std::max(hi, k.second);
  }
  return std::make_pair(lo, hi);
}

LaurentPoly2 LaurentPoly2::mirror() const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_)
    r.terms_[{-k.first, k.second}] = (k.second % 2 == 0) ? c : -c;
  return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned k) const {
  LaurentPoly2 r = constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

LaurentPoly1 LaurentPoly2::substitute_monomial_a(int a_qexp,
                                                 const LaurentPoly1& z_value) const {
  LaurentPoly1 out;
  for (const auto& [k, c] : terms_) {
    const auto [ae, ze] = k;
    if (ze < 0)
      throw std::invalid_argument("substitute_monomial_a: negative z-exponent");
    LaurentPoly1 t = LaurentPoly1::monomial(c, ae * a_qexp) * z_value.pow(ze);
    out += t;
  }
  return out;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << ' ';
    first = false;
    os << (c < 0 ? '-' : '+') << Coeff(boost::multiprecision::abs(c)).str() << "*a^" << k.first
       << "*z^" << k.second;
  }
  return os.str();
}

Json LaurentPoly2::to_json() const {
  Json coeffs = Json::object();
  for (const auto& [k, c] : terms_) {
    std::string key = std::to_string(k.first) + "," + std::to_string(k.second);
    coeffs[key] = to_int64_checked(c);
  }
  Json j;
  j["az"] = std::move(coeffs);
  return j;
}

}  // namespace kc
