#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace qpbw::coeff {

/// Integer Laurent polynomial in q, stored sparsely as exponent -> coefficient.
/// No zero coefficient is ever stored; the zero polynomial has an empty map.
class LaurentPoly {
 public:
  using Terms = std::map<long, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long c) { set(0, mpz_class(c)); }                 // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpz_class& c) { set(0, c); }                // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(const mpz_class& c, long exp);
  static LaurentPoly q_power(long exp) { return monomial(1, exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const Terms& terms() const { return terms_; }
  mpz_class coeff(long exp) const;
  void set(long exp, const mpz_class& c);
  void add_term(long exp, const mpz_class& c);

  long min_exp() const;  // requires nonzero
  long max_exp() const;  // requires nonzero
  const mpz_class& leading_coeff() const;   // coefficient at max_exp
  const mpz_class& trailing_coeff() const;  // coefficient at min_exp

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// q -> q^{-1}.
  LaurentPoly bar() const;
  /// Multiply by q^k.
  LaurentPoly shifted(long k) const;
  /// gcd of all integer coefficients (nonnegative); 0 for the zero polynomial.
  mpz_class content() const;

  /// True if a monomial s*q^k with s in {+1,-1}; returns (s, k).
  std::optional<std::pair<int, long>> as_signed_q_power() const;

  std::string str() const;

 private:
  Terms terms_;
};

/// gcd over Z[q, q^{-1}]: primitive, lowest exponent 0, positive leading
/// coefficient.  gcd(0, b) = normalized b.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division; throws InvariantError if the division is not exact.
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// [m] = q^{m-1} + q^{m-3} + ... + q^{-m+1}.
LaurentPoly quantum_integer(long m);
/// [m]! = [m][m-1]...[1]; [0]! = 1.
LaurentPoly quantum_factorial(long m);
/// psi_m(q^2) = prod_{k=1..m} (1 - q^{2k}); psi_0 = 1.
LaurentPoly psi(long m);

}  // namespace qpbw::coeff
