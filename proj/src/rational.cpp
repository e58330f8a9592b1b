#include "qpbw/rational.hpp"

#include "qpbw/errors.hpp"

namespace qpbw::coeff {

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  if (den.is_zero()) throw PreconditionError("RationalFunction: zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Denominator lowest exponent 0; the shift moves into the numerator.
  long dshift = den_.min_exp();
  if (dshift != 0) {
    den_ = den_.shifted(-dshift);
    num_ = num_.shifted(-dshift);
  }
  // Cancel polynomial factors.  The gcd is primitive with constant term
  // nonzero, so the denominator keeps lowest exponent 0.
  long nshift = num_.min_exp();
  LaurentPoly npoly = num_.shifted(-nshift);
  LaurentPoly g = laurent_gcd(npoly, den_);
  if (!g.is_one()) {
    npoly = laurent_div_exact(npoly, g);
    den_ = laurent_div_exact(den_, g);
  }
  num_ = npoly.shifted(nshift);
  // Remove shared integer content.
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
  if (c > 1) {
    num_ = laurent_div_exact(num_, LaurentPoly(c));
    den_ = laurent_div_exact(den_, LaurentPoly(c));
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

const LaurentPoly& RationalFunction::as_laurent() const {
  if (!is_laurent()) throw InvariantError("value is not a Laurent polynomial: " + str());
  return num_;
}

bool RationalFunction::in_q_shifted_poly(long k) const {
  if (is_zero()) return true;
  return is_laurent() && num_.min_exp() >= k;
}

std::optional<std::pair<int, long>> RationalFunction::as_signed_q_power() const {
  if (!is_laurent()) return std::nullopt;
  return num_.as_signed_q_power();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw PreconditionError("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::bar() const {
  if (is_zero()) return RationalFunction();
  return RationalFunction(num_.bar(), den_.bar());
}

std::string RationalFunction::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::optional<std::pair<int, long>> proportionality(const RationalFunction& x,
                                                    const RationalFunction& y) {
  if (x.is_zero() && y.is_zero()) return std::make_pair(1, 0L);
  if (x.is_zero() || y.is_zero()) return std::nullopt;
  return (x / y).as_signed_q_power();
}

}  // namespace qpbw::coeff
