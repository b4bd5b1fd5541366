#pragma once

#include <string>
#include <vector>

#include "sasakicone/errors.hpp"
#include "sasakicone/joinsetup.hpp"
#include "sasakicone/profile.hpp"
#include "sasakicone/rational.hpp"
#include "sasakicone/roots.hpp"
#include "sasakicone/unipoly.hpp"

namespace sasakicone {

/// α_{1,-p}β_{0,-(p-1)} - α_{0,-p}β_{1,-(p-1)}; vanishes exactly on cscS rays.
inline Rational csc_condition(const ProductSetup& setup, const Rational& c) {
  detail::check_ray(c);
  detail::check_weight(setup);
  const int p = setup.p;
  return alpha(setup, c, 1, -p) * beta(setup, c, 0, -(p - 1)) -
         alpha(setup, c, 0, -p) * beta(setup, c, 1, -(p - 1));
}

/// Closed-form quintic h(c) for weight 5, with csc_condition = 4h / (9(1-c^2)^7).
inline UniPoly h_poly_p5(const ProductSetup& setup) {
  if (setup.p != 5) throw WrongWeight("h(c) is only defined for weight 5, got p = " + std::to_string(setup.p));
  const Rational& a = setup.a;
  const Rational& s = setup.s;
  const Rational& x = setup.x;
  const Rational x2 = x * x;
  const Rational sx = s * x;
  return UniPoly{
      Rational(3) * x * (sx - Rational(2)),
      Rational(21) - Rational(3) * a - Rational(3) * sx + Rational(3) * x2 + a * x2,
      Rational(4) * x * (a - Rational(9) - sx),
      Rational(4) * (a + sx + Rational(6) * x2 - a * x2),
      x * (sx - Rational(6) - Rational(4) * a),
      Rational(3) - a - sx - Rational(3) * x2 + Rational(3) * a * x2,
  };
}

/// The cscS condition as numerator(c) / (1-c^2)^denominator_exponent.
struct CscCondition {
  ProductSetup setup;
  UniPoly numerator;
  int denominator_exponent = 7;

  Rational evaluate(const Rational& c) const { return csc_condition(setup, c); }
};

inline int csc_denominator_exponent(const ProductSetup& setup) { return 2 * setup.p - 3; }

namespace detail {

/// Nodes i/(bound+3) for i = 1, -1, 2, -2, ... (never 0, never ±1).
inline std::vector<Rational> interpolation_nodes(int bound, int count) {
  std::vector<Rational> nodes;
  const long den = bound + 3;
  for (long i = 1; static_cast<int>(nodes.size()) < count; ++i) {
    if (i >= den) throw DomainError("too many interpolation nodes requested");
    nodes.emplace_back(i, den);
    if (static_cast<int>(nodes.size()) < count) nodes.emplace_back(-i, den);
  }
  return nodes;
}

/// Newton divided differences, expanded to monomial form.
inline UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  UniPoly result;
  for (std::size_t k = n; k-- > 0;) result = result * UniPoly::linear(1, -xs[k]) + UniPoly(dd[k]);
  return result;
}

}  // namespace detail

/// Exact polynomial N(c) = csc_condition(c)·(1-c^2)^{2p-3}, recovered by
/// interpolation at degree_bound + 2 nodes and checked at three more.
inline UniPoly condition_numerator(const ProductSetup& setup, int degree_bound) {
  if (degree_bound < 1) throw DomainError("degree bound must be positive");
  const int fit = degree_bound + 2;
  const auto nodes = detail::interpolation_nodes(degree_bound, fit + 3);
  const int e = csc_denominator_exponent(setup);
  auto value = [&](const Rational& c) { return csc_condition(setup, c) * (Rational(1) - c * c).pow(e); };
  std::vector<Rational> xs(nodes.begin(), nodes.begin() + fit), ys;
  ys.reserve(xs.size());
  for (const auto& c : xs) ys.push_back(value(c));
  UniPoly n = detail::interpolate(xs, ys);
  for (std::size_t i = static_cast<std::size_t>(fit); i < nodes.size(); ++i) {
    if (n.eval(nodes[i]) != value(nodes[i]))
      throw InterpolationMismatch("condition numerator exceeds degree bound " + std::to_string(degree_bound) +
                                  "; retry with a larger bound");
  }
  return n;
}

/// Default bound 2p, doubled on mismatch up to 8p.
inline UniPoly condition_numerator(const ProductSetup& setup) {
  for (int bound = 2 * setup.p;; bound *= 2) {
    try {
      return condition_numerator(setup, bound);
    } catch (const InterpolationMismatch&) {
      if (bound * 2 > 8 * setup.p) throw;
    }
  }
}

inline CscCondition make_csc_condition(const ProductSetup& setup) {
  return {setup, condition_numerator(setup), csc_denominator_exponent(setup)};
}

/// All c in (-1, 1) with vanishing cscS condition, isolated to width.
inline std::vector<RootInterval> csc_roots(const ProductSetup& setup, const Rational& width) {
  const UniPoly n = condition_numerator(setup);
  if (n.is_zero()) throw ZeroPolynomial("cscS condition vanishes identically");
  return isolate_roots(n, Rational(-1), Rational(1), width);
}

}  // namespace sasakicone
