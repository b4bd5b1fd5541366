#pragma once

#include <array>
#include <string>
#include <vector>

#include "sasakicone/errors.hpp"
#include "sasakicone/integrate.hpp"
#include "sasakicone/joinsetup.hpp"
#include "sasakicone/linalg.hpp"
#include "sasakicone/rational.hpp"
#include "sasakicone/roots.hpp"
#include "sasakicone/unipoly.hpp"

namespace sasakicone {

/// Solved momentum profile for the ray with Killing potential f = c·z + 1.
/// F vanishes at z = ±1 with F'(-1) = 2(1-x), F'(1) = -2(1+x), and the
/// (f,p)-scalar curvature of the product metric is the Killing potential
/// A1·z + A2. The admissible fiber profile is Θ = F / (1 + x·z).
struct ExtremalProfile {
  Rational c;
  UniPoly F;
  Rational A1;
  Rational A2;
  int p = 5;
};

namespace detail {
inline void check_ray(const Rational& c) {
  if (!(abs(c) < Rational(1))) throw DomainError("ray parameter c must satisfy |c| < 1, got " + c.to_string());
}
inline void check_weight(const ProductSetup& setup) {
  // p = 4 would need logarithms in the moment integrals.
  if (setup.p < 5) throw DomainError("profile solver needs weight p >= 5, got " + std::to_string(setup.p));
}
}  // namespace detail

/// α_{r,q} = ∫_{-1}^{1} (c·t + 1)^q t^r (1 + x·t) dt
inline Rational alpha(const ProductSetup& setup, const Rational& c, int r, int q) {
  detail::check_ray(c);
  return integrate_weighted_monomial(r, q, c, setup.x);
}

/// β_{r,q} = ∫_{-1}^{1} (a(1 + x·t) + s·x) t^r (c·t + 1)^q dt
///           + (-1)^r (1 - c)^q (1 - x) + (1 + c)^q (1 + x)
inline Rational beta(const ProductSetup& setup, const Rational& c, int r, int q) {
  detail::check_ray(c);
  const UniPoly weight = UniPoly::linear(setup.a * setup.x, setup.a + setup.s * setup.x);
  const Rational integral =
      integrate_poly_power(UniPoly::monomial(1, r) * weight, c, q, Rational(-1), Rational(1));
  const Rational one(1);
  const Rational sign = r % 2 == 0 ? one : -one;
  return integral + sign * (one - c).pow(q) * (one - setup.x) + (one + c).pow(q) * (one + setup.x);
}

struct AffineScalar {
  Rational A1;
  Rational A2;
};

/// Solves α_{1,-(p+1)}A1 + α_{0,-(p+1)}A2 = 2β_{0,-(p-1)},
///        α_{2,-(p+1)}A1 + α_{1,-(p+1)}A2 = 2β_{1,-(p-1)}.
inline AffineScalar solve_A(const ProductSetup& setup, const Rational& c) {
  detail::check_ray(c);
  detail::check_weight(setup);
  const int p = setup.p;
  const Rational a0 = alpha(setup, c, 0, -(p + 1));
  const Rational a1 = alpha(setup, c, 1, -(p + 1));
  const Rational a2 = alpha(setup, c, 2, -(p + 1));
  const Rational b0 = Rational(2) * beta(setup, c, 0, -(p - 1));
  const Rational b1 = Rational(2) * beta(setup, c, 1, -(p - 1));
  const Rational det = determinant2(a1, a0, a2, a1);
  if (det.is_zero()) throw SingularSystem("moment system is singular at c = " + c.to_string() + " (determinant 0)");
  return {(b0 * a1 - a0 * b1) / det, (a1 * b1 - a2 * b0) / det};
}

/// Right-hand side (c·z + 1)^2 (2a(1 + x·z) + 2s·x) - (A1·z + A2)(1 + x·z).
inline UniPoly profile_rhs(const ProductSetup& setup, const Rational& c, const Rational& A1, const Rational& A2) {
  const Rational two(2);
  const UniPoly f = UniPoly::linear(c, 1);
  const UniPoly lin = UniPoly::linear(setup.x, 1);
  const UniPoly base = UniPoly::linear(two * setup.a * setup.x, two * setup.a + two * setup.s * setup.x);
  return f * f * base - UniPoly::linear(A1, A2) * lin;
}

/// (c·z + 1)^2 F'' - 2(p-1)c(c·z + 1)F' + p(p-1)c^2 F
inline UniPoly profile_operator(const UniPoly& F, const Rational& c, int p) {
  const UniPoly f = UniPoly::linear(c, 1);
  const UniPoly d1 = F.derivative();
  return f * f * d1.derivative() - Rational(2 * (p - 1)) * c * f * d1 + Rational(p * (p - 1)) * c * c * F;
}

inline UniPoly ode_residual(const ProductSetup& setup, const Rational& c, const UniPoly& F, const Rational& A1,
                            const Rational& A2) {
  return profile_operator(F, c, setup.p) - profile_rhs(setup, c, A1, A2);
}

/// F(z) from the closed integral representation
///   F(z) = (c·z+1)^{p-1} ( 2(1-x)/(1-c)^{p-1} (z+1) + ∫_{-1}^{z} Q(t)(z-t) dt ),
///   Q(t) = (c·t+1)^{-(p+1)} · rhs(t).
/// Independent of the polynomial ansatz; used as a cross-check.
inline Rational profile_value_by_integral(const ProductSetup& setup, const Rational& c, const Rational& A1,
                                          const Rational& A2, const Rational& z) {
  const int p = setup.p;
  const Rational one(1);
  const UniPoly integrand = profile_rhs(setup, c, A1, A2) * UniPoly::linear(-one, z);
  const Rational inner = integrate_poly_power(integrand, c, -(p + 1), -one, z);
  const Rational head = Rational(2) * (one - setup.x) / (one - c).pow(p - 1) * (z + one);
  return (c * z + one).pow(p - 1) * (head + inner);
}

namespace detail {

inline std::vector<std::string> profile_violations(const ProductSetup& setup, const ExtremalProfile& prof) {
  std::vector<std::string> bad;
  const Rational one(1), two(2);
  const UniPoly dF = prof.F.derivative();
  if (!prof.F.eval(-one).is_zero()) bad.emplace_back("F(-1) != 0");
  if (!prof.F.eval(one).is_zero()) bad.emplace_back("F(1) != 0");
  if (dF.eval(-one) != two * (one - setup.x)) bad.emplace_back("F'(-1) != 2(1-x)");
  if (dF.eval(one) != -two * (one + setup.x)) bad.emplace_back("F'(1) != -2(1+x)");
  const UniPoly res = ode_residual(setup, prof.c, prof.F, prof.A1, prof.A2);
  if (!res.is_zero()) bad.emplace_back("ODE residual " + res.to_string());
  return bad;
}

}  // namespace detail

/// Solves the weighted-extremal boundary-value problem on the ray c.
///
/// A1, A2 come from the moment system; F is then the unique polynomial of
/// degree <= p satisfying the ODE and the four endpoint conditions. The
/// (p+5) x (p+1) linear system is overdetermined; consistency of the extra
/// rows is checked exactly. The result is verified (endpoints, zero ODE
/// residual, agreement with the integral representation at sample points)
/// and InternalInconsistency is raised rather than returning anything else.
inline ExtremalProfile compute_profile(const ProductSetup& setup, const Rational& c) {
  detail::check_ray(c);
  detail::check_weight(setup);
  const int p = setup.p;
  const auto [A1, A2] = solve_A(setup, c);
  const UniPoly rhs = profile_rhs(setup, c, A1, A2);

  const int unknowns = p + 1;
  const int top = std::max(p, rhs.degree());
  Matrix m;
  std::vector<Rational> b;
  std::vector<UniPoly> images;
  images.reserve(static_cast<std::size_t>(unknowns));
  for (int i = 0; i < unknowns; ++i) images.push_back(profile_operator(UniPoly::monomial(1, i), c, p));
  for (int j = 0; j <= top; ++j) {
    std::vector<Rational> row(static_cast<std::size_t>(unknowns));
    for (int i = 0; i < unknowns; ++i) row[static_cast<std::size_t>(i)] = images[static_cast<std::size_t>(i)].coeff(j);
    m.push_back(std::move(row));
    b.push_back(rhs.coeff(j));
  }
  const Rational one(1), two(2);
  std::vector<Rational> at_p1(static_cast<std::size_t>(unknowns)), at_m1(static_cast<std::size_t>(unknowns));
  std::vector<Rational> d_p1(static_cast<std::size_t>(unknowns)), d_m1(static_cast<std::size_t>(unknowns));
  for (int i = 0; i < unknowns; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const Rational odd = i % 2 == 0 ? one : -one;
    at_p1[k] = one;
    at_m1[k] = odd;
    d_p1[k] = Rational(i);
    d_m1[k] = i == 0 ? Rational(0) : Rational(i) * -odd;
  }
  m.push_back(at_m1);
  b.push_back(Rational(0));
  m.push_back(at_p1);
  b.push_back(Rational(0));
  m.push_back(d_m1);
  b.push_back(two * (one - setup.x));
  m.push_back(d_p1);
  b.push_back(-two * (one + setup.x));

  const LinearSolveResult sol = solve_linear(std::move(m), std::move(b));
  if (!sol.consistent)
    throw InternalInconsistency("profile conditions are inconsistent at c = " + c.to_string());
  if (!sol.unique())
    throw InternalInconsistency("profile conditions do not determine F at c = " + c.to_string());

  ExtremalProfile prof{c, UniPoly(sol.x), A1, A2, p};
  if (const auto bad = detail::profile_violations(setup, prof); !bad.empty())
    throw InternalInconsistency("profile verification failed at c = " + c.to_string() + ": " + bad.front());
  for (const Rational& z : {Rational(-1, 2), Rational(0), Rational(1, 3)}) {
    if (profile_value_by_integral(setup, c, A1, A2, z) != prof.F.eval(z))
      throw InternalInconsistency("profile disagrees with the integral representation at z = " + z.to_string());
  }
  return prof;
}

/// Quotient F / (1 - z^2); nonzero at z = ±1 because F'(±1) ≠ 0.
inline UniPoly profile_cofactor(const ExtremalProfile& prof) {
  return exact_divide(prof.F, UniPoly{1, 0, -1});
}

/// Positivity of F on (-1, 1): the ray carries extremal Sasaki metrics.
inline bool is_extremal(const ExtremalProfile& prof) {
  return is_positive_on_open(profile_cofactor(prof), Rational(-1), Rational(1));
}

/// (1 + x·z) · Scal of the admissible fiber metric: 2s·x - F''.
inline UniPoly admissible_scal_numerator(const ProductSetup& setup, const UniPoly& F) {
  return UniPoly(Rational(2) * setup.s * setup.x) - F.derivative().derivative();
}

/// (1 + x·z) · Δf for f = f(z): -(F f')'.
inline UniPoly admissible_laplacian_numerator(const UniPoly& F, const UniPoly& f) {
  return -(F * f.derivative()).derivative();
}

/// (1 + x·z) · |df|^2 for f = f(z): F (f')^2, since |dz|^2 = F/(1 + x·z).
inline UniPoly admissible_norm_numerator(const UniPoly& F, const UniPoly& f) {
  const UniPoly df = f.derivative();
  return F * df * df;
}

/// Rebuilds the (f,p)-scalar curvature f^2 Scal - 2(p-1) f Δf - p(p-1)|df|^2
/// of the product metric from its ingredients (Scal and Δ add over the
/// factors; f lives on the fiber factor only), divides out (1 + x·z) and
/// returns the resulting polynomial, which must equal A1·z + A2.
inline UniPoly reconstruct_weighted_scal(const ExtremalProfile& prof, const ProductSetup& setup) {
  const int p = prof.p;
  const UniPoly f = UniPoly::linear(prof.c, 1);
  const UniPoly weight = UniPoly::linear(setup.x, 1);
  const UniPoly scal_num = UniPoly(Rational(2) * setup.a) * weight + admissible_scal_numerator(setup, prof.F);
  const UniPoly numer = f * f * scal_num - Rational(2 * (p - 1)) * f * admissible_laplacian_numerator(prof.F, f) -
                        Rational(p * (p - 1)) * admissible_norm_numerator(prof.F, f);
  UniPoly result = exact_divide(numer, weight);
  if (result != UniPoly::linear(prof.A1, prof.A2))
    throw InternalInconsistency("weighted scalar curvature " + result.to_string() + " is not A1*z + A2");
  return result;
}

/// Constant scalar curvature Sasaki test: A1·z + A2 is a multiple of c·z + 1.
inline bool cscS_check(const ExtremalProfile& prof) {
  return prof.A1 - prof.c * prof.A2 == Rational(0);
}

}  // namespace sasakicone
