#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sasakicone/errors.hpp"
#include "sasakicone/rational.hpp"

namespace sasakicone {

/// Parameters of one polarized product N1 × S_k, where N1 is a cscK manifold
/// of complex dimension d with Scal = 2a, and S_k = P(O ⊕ L_k) → Σ_{g2} is an
/// admissible ruled surface with parameter x.
///
/// Convention: `a` is half the scalar curvature of N1, NOT scaled by d (the
/// alternative Scal = 2·d·a is never used anywhere in this library).
struct ProductSetup {
  int d = 1;
  Rational a;
  std::optional<int> genus_g2;  // absent when the setup was built from s directly
  std::optional<int> degree_k;
  Rational s;  // 2(1 - g2)/k
  Rational x;  // in (0, 1)
  int p = 5;   // weight d + 4

  friend bool operator==(const ProductSetup&, const ProductSetup&) = default;
};

namespace detail {
inline void check_common(int d, const Rational& x) {
  if (d < 1) throw DomainError("complex dimension d must be >= 1, got " + std::to_string(d));
  if (!(Rational(0) < x && x < Rational(1))) throw DomainError("x must lie in (0,1), got " + x.to_string());
}
}  // namespace detail

inline ProductSetup make_setup(int d, const Rational& a, int genus_g2, int degree_k, const Rational& x) {
  detail::check_common(d, x);
  if (genus_g2 < 0) throw DomainError("genus g2 must be >= 0");
  if (degree_k < 1) throw DomainError("degree k must be >= 1");
  ProductSetup st;
  st.d = d;
  st.a = a;
  st.genus_g2 = genus_g2;
  st.degree_k = degree_k;
  st.s = Rational(2 * (1 - genus_g2), degree_k);
  st.x = x;
  st.p = d + 4;
  return st;
}

/// Same bundle specified by the fiber-base curvature s instead of (g2, k).
inline ProductSetup make_setup_from_curvature(int d, const Rational& a, const Rational& s, const Rational& x) {
  detail::check_common(d, x);
  ProductSetup st;
  st.d = d;
  st.a = a;
  st.s = s;
  st.x = x;
  st.p = d + 4;
  return st;
}

struct JoinSpec {
  long l1 = 1;
  long l2 = 1;
  long order1 = 1;  // orders Υ of the two quasiregular factors; 1 = regular
  long order2 = 1;
};

inline void validate(const JoinSpec& j) {
  if (j.l1 < 1 || j.l2 < 1 || j.order1 < 1 || j.order2 < 1)
    throw DomainError("join data must be positive integers");
  if (std::gcd(j.l1, j.l2) != 1) throw DomainError("l1 and l2 must be coprime");
}

/// The l-join of quasiregular factors of orders Υ1, Υ2 is smooth iff
/// gcd(Υ1·l2, Υ2·l1) = 1.
inline bool join_is_smooth(const JoinSpec& j) {
  validate(j);
  return std::gcd(j.order1 * j.l2, j.order2 * j.l1) == 1;
}

inline int cone_dim(int dim1, int dim2) {
  if (dim1 < 1 || dim2 < 1) throw DomainError("Sasaki cone dimensions must be >= 1");
  return dim1 + dim2 - 1;
}

/// Coefficients, relative to (ξ1, ξ2) or (η1, η2), of the join's Reeb field,
/// the quotiented vector field L and the contact form.
struct JoinVectors {
  std::pair<Rational, Rational> reeb;
  std::pair<Rational, Rational> lvec;
  std::pair<long, long> contact;
};

inline JoinVectors join_vectors(long l1, long l2) {
  validate(JoinSpec{l1, l2, 1, 1});
  const Rational h1(1, 2 * l1), h2(1, 2 * l2);
  return {{h1, h2}, {h1, -h2}, {l1, l2}};
}

struct PolarizationInput {
  std::vector<Rational> class_coeffs;
  std::optional<long> ke_index;  // negative Kähler-Einstein index of N1
  int d = 1;                     // complex dimension of N1 (used with ke_index)
};

struct Polarization {
  Rational scale;
  std::vector<mpz_class> primitive;
  std::optional<long> l1;
  std::optional<long> l2;
};

/// Writes the class as scale · (primitive integer vector with gcd 1). With a
/// KE index I < 0 and dimension d, also returns the join coprime pair
/// l1 = -I/gcd(d+1, -I), l2 = (d+1)/gcd(d+1, -I). When class_coeffs is empty
/// and the KE index is given, the class (-I, d+1) is used.
inline Polarization primitive_polarization(const PolarizationInput& in) {
  std::vector<Rational> coeffs = in.class_coeffs;
  Polarization out;
  if (in.ke_index) {
    if (*in.ke_index >= 0) throw DomainError("KE index must be negative");
    if (in.d < 1) throw DomainError("dimension must be >= 1");
    const long minus_i = -*in.ke_index;
    const long g = std::gcd(static_cast<long>(in.d + 1), minus_i);
    out.l1 = minus_i / g;
    out.l2 = (in.d + 1) / g;
    if (coeffs.empty()) coeffs = {Rational(minus_i), Rational(in.d + 1)};
  }
  if (coeffs.empty()) throw DomainError("empty class");
  int sign = 0;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    if (sign != 0 && c.sign() != sign) throw DomainError("class coefficients have mixed signs");
    sign = c.sign();
  }
  if (sign == 0) throw DomainError("zero class");
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& c : coeffs) den_lcm = lcm(den_lcm, c.den());
  for (const auto& c : coeffs) num_gcd = gcd(num_gcd, mpz_class(c.num() * (den_lcm / c.den())));
  out.scale = Rational(mpz_class(sign * num_gcd), den_lcm);
  for (const auto& c : coeffs) {
    const Rational v = c / out.scale;
    out.primitive.push_back(v.num());
  }
  return out;
}

}  // namespace sasakicone
