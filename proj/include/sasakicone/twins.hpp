#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sasakicone/errors.hpp"
#include "sasakicone/joinsetup.hpp"
#include "sasakicone/multipoly.hpp"
#include "sasakicone/profile.hpp"
#include "sasakicone/rational.hpp"
#include "sasakicone/roots.hpp"
#include "sasakicone/unipoly.hpp"

namespace sasakicone {

/// Other rays c' in (-1, 1) whose profile equals the one at base_c.
/// With `continuum` set, every sampled c' matched and `partners` holds the
/// samples; that verdict is sampled, not proven.
struct TwinReport {
  Rational base_c;
  std::vector<Rational> partners;
  bool continuum = false;
  UniPoly shared_F;
};

namespace detail {

/// Coefficient of c'^j in R(c', z) = (c'z+1)^2 (base - F'') + 2(p-1)c'(c'z+1)F' - p(p-1)c'^2 F,
/// where base = 2a(1+xz) + 2sx. R(c', .) = (A1'z + A2')(1+xz) holds exactly
/// when F solves the ODE for the ray c'.
inline std::array<UniPoly, 3> twin_pencil(const ProductSetup& setup, const UniPoly& F, int p) {
  const Rational two(2);
  const UniPoly z = UniPoly::variable();
  const UniPoly base = UniPoly::linear(two * setup.a * setup.x, two * setup.a + two * setup.s * setup.x);
  const UniPoly g = base - F.derivative().derivative();
  const UniPoly dF = F.derivative();
  const Rational w(2 * (p - 1));
  return {g, two * z * g + w * dF, z * z * g + w * z * dF - Rational(p * (p - 1)) * F};
}

}  // namespace detail

/// Finds the twins of the ray c. Each requirement on c' (R has no z^j term
/// for j >= 3, and R vanishes at z = -1/x) is a polynomial of degree <= 2
/// in c'; their gcd has c as a root, and any other root in (-1, 1) is
/// verified by recomputing the profile there.
inline TwinReport find_profile_twins(const ProductSetup& setup, const Rational& c) {
  const ExtremalProfile base = compute_profile(setup, c);
  TwinReport rep{c, {}, false, base.F};
  const auto pencil = detail::twin_pencil(setup, base.F, setup.p);

  std::vector<UniPoly> conditions;
  int top = 0;
  for (const auto& q : pencil) top = std::max(top, q.degree());
  for (int j = 3; j <= top; ++j) conditions.push_back(UniPoly{pencil[0].coeff(j), pencil[1].coeff(j), pencil[2].coeff(j)});
  if (!setup.x.is_zero()) {
    const Rational root = -setup.x.inverse();
    conditions.push_back(UniPoly{pencil[0].eval(root), pencil[1].eval(root), pencil[2].eval(root)});
  }

  UniPoly g;
  for (const auto& q : conditions)
    if (!q.is_zero()) g = g.is_zero() ? q.monic() : gcd(g, q);

  if (g.is_zero()) {
    rep.continuum = true;
    for (int i = 1; i <= 12; ++i) {
      const Rational cp = Rational(-1) + Rational(2 * i, 13);
      if (cp == c) continue;
      if (compute_profile(setup, cp).F != base.F)
        throw InternalInconsistency("continuum twin sample " + cp.to_string() + " has a different profile");
      rep.partners.push_back(cp);
    }
    return rep;
  }
  if (!g.eval(c).is_zero()) throw InternalInconsistency("ray " + c.to_string() + " fails its own twin conditions");
  const UniPoly rest = exact_divide(g, UniPoly::linear(1, -c));
  if (rest.degree() == 1) {
    const Rational cp = -rest.coeff(0) / rest.coeff(1);
    if (cp != c && abs(cp) < Rational(1)) {
      if (compute_profile(setup, cp).F != base.F)
        throw InternalInconsistency("twin candidate " + cp.to_string() + " does not reproduce the profile");
      rep.partners.push_back(cp);
    }
  }
  return rep;
}

/// Closed-form profile on CP^1 x Σ at weight 4.
struct Cp1Profile {
  UniPoly H;
  Rational A;
  Rational B;
};

inline Cp1Profile cp1_profile(const Rational& k, const Rational& c) {
  const Rational one(1), two(2), three(3);
  if (!(abs(c) < one)) throw DomainError("|c| must be < 1");
  if (k.sign() >= 0) throw DomainError("scalar constant k must be negative");
  if ((Rational(12) - (two - k) * c * c).sign() <= 0) throw DomainError("12 - (2-k)c^2 must be positive");
  const Rational c2 = c * c;
  const Rational den = c2 - three;
  const Rational A = Rational(6) * c * (c2 * k - k + Rational(4)) / den;
  const Rational B = three * (c2 * c2 * k - two * c2 * c2 + Rational(12) * c2 - k - two) / den;
  const UniPoly w{1, 0, -1};
  const UniPoly H = w * (UniPoly(Rational(4) * (three - c2)) + (k + two) * c2 * w) * UniPoly((Rational(4) * (three - c2)).inverse());

  const UniPoly f = UniPoly::linear(c, 1);
  const UniPoly dH = H.derivative();
  const UniPoly lhs = f * f * (UniPoly(k) - dH.derivative()) + Rational(6) * c * f * dH - Rational(12) * c2 * H;
  if (!H.eval(one).is_zero() || !H.eval(-one).is_zero() || dH.eval(-one) != two || dH.eval(one) != -two)
    throw InternalInconsistency("CP^1 profile violates its endpoint conditions");
  if (lhs != UniPoly::linear(A, B)) throw InternalInconsistency("CP^1 profile violates the weight-4 ODE");
  return {H, A, B};
}

struct Cp1Twins {
  std::vector<Rational> partners;
  bool continuum = false;
};

inline Cp1Twins cp1_twins(const Rational& k, const Rational& c) {
  const Cp1Profile base = cp1_profile(k, c);
  Cp1Twins out;
  if (k == Rational(-2)) {
    out.continuum = true;
    for (int i = 1; i <= 12; ++i) {
      const Rational cp = Rational(-1) + Rational(2 * i, 13);
      if (cp == c) continue;
      if (cp1_profile(k, cp).H != base.H) throw InternalInconsistency("k = -2 twin sample differs");
      out.partners.push_back(cp);
    }
    return out;
  }
  if (!c.is_zero()) {
    if (cp1_profile(k, -c).H != base.H) throw InternalInconsistency("H is not even in c");
    out.partners.push_back(-c);
  }
  return out;
}

/// Affine potential f = <v, x> + λ on the CP^n moment simplex
/// {x_i >= -1, Σx_i <= 1}.
struct ToricPotential {
  std::vector<Rational> v;
  Rational lambda;
  int n = 1;

  MultiPoly as_poly() const {
    MultiPoly f = MultiPoly::constant(n, lambda);
    for (int i = 0; i < n; ++i) f = f + MultiPoly::variable(n, i) * v[static_cast<std::size_t>(i)];
    return f;
  }

  /// Vertices (-1,...,-1) and, for each j, x_j = n with the others -1.
  std::vector<std::vector<Rational>> vertices() const {
    std::vector<std::vector<Rational>> out{std::vector<Rational>(static_cast<std::size_t>(n), Rational(-1))};
    for (int j = 0; j < n; ++j) {
      auto vert = out.front();
      vert[static_cast<std::size_t>(j)] = Rational(n);
      out.push_back(std::move(vert));
    }
    return out;
  }

  /// Smallest vertex value; f > 0 on the closed simplex iff it is positive.
  Rational min_vertex_value() const {
    const MultiPoly f = as_poly();
    std::optional<Rational> best;
    for (const auto& vert : vertices()) {
      const Rational val = f.eval(vert);
      if (!best || val < *best) best = val;
    }
    return *best;
  }

  bool positive_on_simplex() const { return min_vertex_value().sign() > 0; }
};

inline ToricPotential make_potential(std::vector<Rational> v, const Rational& lambda) {
  if (v.empty()) throw DomainError("toric potential needs n >= 1");
  const int n = static_cast<int>(v.size());
  return {std::move(v), lambda, n};
}

/// Inverse Hessian H_ij = 2δ_ij l_i - 2 l_i l_j / (n+1) of the Fubini-Study
/// symplectic potential, with l_i = 1 + x_i.
inline std::vector<std::vector<MultiPoly>> cpn_inverse_hessian(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  std::vector<MultiPoly> l;
  for (int i = 0; i < n; ++i) l.push_back(MultiPoly::constant(n, 1) + MultiPoly::variable(n, i));
  std::vector<std::vector<MultiPoly>> H(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n), MultiPoly(n)));
  const Rational scale(-2, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      H[ui][uj] = l[ui] * l[uj] * scale;
      if (i == j) H[ui][uj] = H[ui][uj] + l[ui] * Rational(2);
    }
  return H;
}

/// f^2 (scal1 + Scal_FS) - 2(p-1) f Δf - p(p-1)|df|^2 on N1 x CP^n, where
/// scal1 is the (constant) scalar curvature of N1 and f lives on CP^n.
inline MultiPoly toric_weighted_scal(int d, int n, int p, const Rational& scal1, const ToricPotential& pot) {
  if (d < 0) throw DomainError("d must be >= 0");
  if (pot.n != n || static_cast<int>(pot.v.size()) != n) throw DomainError("potential dimension mismatch");
  const auto H = cpn_inverse_hessian(n);
  MultiPoly scal_fs(n), div_sum(n), norm(n);
  std::vector<MultiPoly> div_cols(static_cast<std::size_t>(n), MultiPoly(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& h = H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      scal_fs = scal_fs - h.partial(i).partial(j);
      div_cols[static_cast<std::size_t>(j)] = div_cols[static_cast<std::size_t>(j)] + h.partial(i);
      norm = norm + h * (pot.v[static_cast<std::size_t>(i)] * pot.v[static_cast<std::size_t>(j)]);
    }
  if (scal_fs != MultiPoly::constant(n, Rational(2 * n)))
    throw InternalInconsistency("Fubini-Study scalar curvature is not 2n");
  MultiPoly lap(n);  // Δf = -Σ_j v_j Σ_i ∂_i H_ij
  for (int j = 0; j < n; ++j) lap = lap - div_cols[static_cast<std::size_t>(j)] * pot.v[static_cast<std::size_t>(j)];
  const MultiPoly f = pot.as_poly();
  return f * f * (scal1 + Rational(2 * n)) - f * lap * Rational(2 * (p - 1)) - norm * Rational(p * (p - 1));
}

/// scal1 making the weighted scalar curvature affine at weight p:
/// 2(2-m)(m-1)/(n+1) with m = p - n.
inline Rational scal1_for_weight(int n, int p) {
  if (n < 1) throw DomainError("n must be >= 1");
  const int m = p - n;
  return Rational(2 * (2 - m) * (m - 1), n + 1);
}

struct TwinWeights {
  int p_low;
  int p_high;
  Rational scal1;
};

inline TwinWeights twin_weights(int d, int n) {
  if (d < 0 || n < 1) throw DomainError("twin weights need d >= 0 and n >= 1");
  TwinWeights w{n - d + 1, d + n + 2, Rational(-2 * d * (d + 1), n + 1)};
  if (scal1_for_weight(n, w.p_low) != w.scal1 || scal1_for_weight(n, w.p_high) != w.scal1)
    throw InternalInconsistency("twin weights disagree with the weight formula");
  return w;
}

struct ToricCandidate {
  Rational v;
  Rational min_vertex_value;
  bool admissible = false;
};

struct ToricCscResult {
  std::vector<ToricCandidate> candidates;  // nontrivial solutions v != 0
  bool trivial_admissible = false;         // v = 0, f = λ
  bool any_admissible = false;
};

/// cscS candidates with l equal nonzero components v (the rest zero): the
/// nonzero roots of ((n+1)l - l^2)v^2 + λ(2l - (n+1))v - λ^2, each checked
/// for positivity of f on the simplex.
inline ToricCscResult toric_csc_solutions(int n, const Rational& lambda, int l) {
  if (n < 2 || l < 1 || l >= n) throw DomainError("need 1 <= l < n");
  if (lambda.sign() <= 0) throw DomainError("lambda must be positive");
  const UniPoly q{-lambda * lambda, lambda * Rational(2 * l - (n + 1)), Rational((n + 1) * l - l * l)};
  ToricCscResult out;
  Rational bound(1);
  for (const auto& co : q.coeffs()) bound += abs(co / q.leading());
  for (const auto& r : isolate_roots(q, -bound, bound, Rational(1, 1024))) {
    if (!r.exact) throw InternalInconsistency("toric cscS equation has an irrational root");
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < l; ++i) v[static_cast<std::size_t>(i)] = *r.exact;
    const ToricPotential pot = make_potential(std::move(v), lambda);
    const Rational m = pot.min_vertex_value();
    out.candidates.push_back({*r.exact, m, m.sign() > 0});
    out.any_admissible = out.any_admissible || m.sign() > 0;
  }
  out.trivial_admissible = make_potential(std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)), lambda)
                               .positive_on_simplex();
  return out;
}

}  // namespace sasakicone
