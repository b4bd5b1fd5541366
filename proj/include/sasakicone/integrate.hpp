#pragma once

#include <vector>

#include "sasakicone/errors.hpp"
#include "sasakicone/rational.hpp"
#include "sasakicone/unipoly.hpp"

namespace sasakicone {

/// Exact value of ∫_lo^hi poly(t)·(c·t + 1)^q dt.
///
/// For q >= 0 or c = 0 the integrand is a polynomial. Otherwise u = c·t + 1
/// turns it into a Laurent polynomial in u; a surviving u^-1 term would need a
/// logarithm and raises LogarithmicTerm. c·t + 1 must stay positive on
/// [lo, hi] (DomainError otherwise).
inline Rational integrate_poly_power(const UniPoly& poly, const Rational& c, int q, const Rational& lo,
                                     const Rational& hi) {
  if (q >= 0 || c.is_zero()) {
    const UniPoly weight = c.is_zero() ? UniPoly(1) : UniPoly::linear(c, 1).pow(q);
    const UniPoly anti = (poly * weight).antiderivative();
    return anti.eval(hi) - anti.eval(lo);
  }
  const Rational u_lo = c * lo + Rational(1);
  const Rational u_hi = c * hi + Rational(1);
  if (u_lo.sign() <= 0 || u_hi.sign() <= 0)
    throw DomainError("c*t + 1 vanishes on the integration range (c = " + c.to_string() + ")");
  // poly((u - 1)/c) as a polynomial in u.
  const UniPoly in_u = poly.compose(UniPoly::linear(c.inverse(), -c.inverse()));
  Rational total;
  for (int j = 0; j <= in_u.degree(); ++j) {
    const Rational b = in_u.coeff(j);
    if (b.is_zero()) continue;
    const int e = j + q;
    if (e == -1)
      throw LogarithmicTerm("u^-1 term with coefficient " + b.to_string() + " (q = " + std::to_string(q) + ")");
    const Rational k(e + 1);
    total += b * (u_hi.pow(e + 1) - u_lo.pow(e + 1)) / k;
  }
  return total / c;
}

/// ∫_{-1}^{1} t^r (c·t + 1)^q (1 + x·t) dt, exactly. Requires |c| < 1.
inline Rational integrate_weighted_monomial(int r, int q, const Rational& c, const Rational& x) {
  if (r < 0) throw DomainError("negative monomial power");
  if (!(abs(c) < Rational(1))) throw DomainError("|c| must be < 1, got c = " + c.to_string());
  const UniPoly integrand = UniPoly::monomial(1, r) * UniPoly::linear(x, 1);
  return integrate_poly_power(integrand, c, q, Rational(-1), Rational(1));
}

}  // namespace sasakicone
