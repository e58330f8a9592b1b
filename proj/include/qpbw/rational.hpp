#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qpbw/laurent.hpp"

namespace qpbw::coeff {

/// Exact ratio of integer Laurent polynomials in q.  Always kept reduced and
/// normalized: the denominator is a primitive ordinary polynomial (lowest
/// exponent 0) with positive leading coefficient, sharing no polynomial factor
/// and no integer content with the numerator.  Equal values therefore have
/// identical representations.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(c) {}                       // NOLINT(google-explicit-constructor)
  RationalFunction(const LaurentPoly& p) : num_(p) {}         // NOLINT(google-explicit-constructor)
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);
  static RationalFunction q_power(long k) { return RationalFunction(LaurentPoly::q_power(k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True if the denominator is 1, i.e. the value lies in Z[q, q^{-1}].
  bool is_laurent() const { return den_.is_one(); }
  /// The Laurent polynomial value; requires is_laurent().
  const LaurentPoly& as_laurent() const;
  /// Value lies in q^{min_exp} * Z[q] at least, i.e. is Laurent with lowest
  /// exponent >= k.  Zero qualifies for every k.
  bool in_q_shifted_poly(long k) const;
  /// True if a monomial s*q^k with s = +-1.
  std::optional<std::pair<int, long>> as_signed_q_power() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  /// q -> q^{-1} in numerator and denominator, then renormalize.
  RationalFunction bar() const;

  std::string str() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

/// bar involution as a free function, mirroring the coefficient-level API.
inline RationalFunction bar(const RationalFunction& x) { return x.bar(); }

/// Detects x = s * q^n * y with s in {+1,-1}, n in Z.  Both zero -> (+1, 0);
/// exactly one zero -> nothing.
std::optional<std::pair<int, long>> proportionality(const RationalFunction& x,
                                                    const RationalFunction& y);

}  // namespace qpbw::coeff
