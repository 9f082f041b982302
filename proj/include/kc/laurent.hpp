#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace kc {

// Coefficients are exact arbitrary-precision integers.  Identity checks in
// the verification suites compare polynomials term by term, so no floating
// point is allowed anywhere near these types.
using Coeff = boost::multiprecision::cpp_int;

using Json = nlohmann::ordered_json;

/// Laurent polynomial in one variable q with integer coefficients.
/// Zero coefficients are never stored; the zero polynomial is the empty map.
class LaurentPoly1 {
public:
  LaurentPoly1() = default;
  static LaurentPoly1 constant(Coeff c);
  static LaurentPoly1 monomial(Coeff c, int exp);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Coeff>& terms() const { return terms_; }
  Coeff coeff(int exp) const;

  void add_term(int exp, const Coeff& c);

  LaurentPoly1& operator+=(const LaurentPoly1& o);
  LaurentPoly1& operator-=(const LaurentPoly1& o);
  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
  friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);
  LaurentPoly1 operator-() const;
  bool operator==(const LaurentPoly1& o) const { return terms_ == o.terms_; }

  /// Multiplication by q^k.
  LaurentPoly1 shifted(int k) const;
  /// (min_deg, max_deg) over nonzero terms; nullopt for the zero polynomial.
  std::optional<std::pair<int, int>> support() const;
  /// Substitution q -> q^{-1}.
  LaurentPoly1 bar() const;
  LaurentPoly1 pow(unsigned k) const;

  /// Exact division; nullopt if the remainder is nonzero.
  static std::optional<LaurentPoly1> divide_exact(const LaurentPoly1& num,
                                                  const LaurentPoly1& den);

  // Canonical text: terms in increasing exponent order, "c*q^e" with
  // explicit signs, e.g. "+1*q^-1 +1*q^1".  The zero polynomial is "0".
  std::string to_string() const;
  Json to_json() const;

private:
  std::map<int, Coeff> terms_;
};

/// Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
LaurentPoly1 qint(int n);

/// Laurent polynomial in two variables (a, z) with integer coefficients.
/// Keys are (a-exponent, z-exponent) pairs; zero coefficients never stored.
class LaurentPoly2 {
public:
  LaurentPoly2() = default;
  static LaurentPoly2 constant(Coeff c);
  static LaurentPoly2 monomial(Coeff c, int aexp, int zexp);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, Coeff>& terms() const { return terms_; }

  void add_term(int aexp, int zexp, const Coeff& c);

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  LaurentPoly2 operator-() const;
  bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }

  /// Multiplication by a^da z^dz.
  LaurentPoly2 shifted(int da, int dz) const;
  /// Extreme a-exponents over nonzero terms; nullopt for zero.
  std::optional<std::pair<int, int>> adeg_range() const;
  std::optional<std::pair<int, int>> zdeg_range() const;
  /// Substitution a -> a^{-1}, z -> -z (the mirror image map).
  LaurentPoly2 mirror() const;
  LaurentPoly2 pow(unsigned k) const;

  /// Substitute a = p, z = r for one-variable Laurent polynomials p, r.
  /// Requires all z-exponents >= 0 and all a-exponents handled via bar();
  /// negative a-exponents substitute p^{-1}... not generally defined, so
  /// this helper requires p to be a single monomial q^k (the only case the
  /// engine needs).  Negative z-exponents are rejected.
  LaurentPoly1 substitute_monomial_a(int a_qexp, const LaurentPoly1& z_value) const;

  // Canonical text: terms ordered by (a-exp, z-exp) increasing,
  // "c*a^i*z^j" with explicit signs.  Zero is "0".
  std::string to_string() const;
  Json to_json() const;

private:
  std::map<std::pair<int, int>, Coeff> terms_;
};

}  // namespace kc
