#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sasakicone/errors.hpp"
#include "sasakicone/rational.hpp"

namespace sasakicone {

/// Dense univariate polynomial over the rationals; coeffs()[i] multiplies t^i.
/// The coefficient vector is kept trimmed, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  UniPoly(const Rational& constant) : coeffs_{constant} { trim(); }  // NOLINT
  template <std::integral I>
  UniPoly(I constant) : UniPoly(Rational(constant)) {}  // NOLINT

  static UniPoly monomial(const Rational& coeff, int degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return UniPoly(std::move(c));
  }
  static UniPoly variable() { return monomial(1, 1); }
  /// a·t + b
  static UniPoly linear(const Rational& a, const Rational& b) { return UniPoly{b, a}; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational coeff(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational eval(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  Rational operator()(const Rational& t) const { return eval(t); }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
  }

  /// Antiderivative with zero constant term.
  UniPoly antiderivative() const {
    std::vector<Rational> a(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return UniPoly(std::move(a));
  }

  /// p(q(t))
  UniPoly compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + UniPoly(*it);
    return acc;
  }

  UniPoly pow(int e) const {
    UniPoly r(1), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
  }

  /// Coefficients scaled to coprime integers with positive leading term.
  std::vector<mpz_class> primitive_integer_coeffs() const {
    if (is_zero()) throw ZeroPolynomial("primitive part of zero polynomial");
    mpz_class l = 1;
    for (const auto& c : coeffs_) l = lcm(l, c.den());
    std::vector<mpz_class> out;
    out.reserve(coeffs_.size());
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
      mpz_class v = c.num() * (l / c.den());
      g = gcd(g, v);
      out.push_back(v);
    }
    if (leading().sign() < 0) g = -g;
    for (auto& v : out) v /= g;
    return out;
  }

  /// The same polynomial rescaled so its coefficients are coprime integers
  /// with positive leading coefficient.
  UniPoly primitive() const {
    std::vector<Rational> c;
    for (const auto& v : primitive_integer_coeffs()) c.emplace_back(v);
    return UniPoly(std::move(c));
  }

  /// True when `other` is a nonzero rational multiple of this polynomial.
  bool proportional_to(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return false;
    return primitive() == other.primitive();
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  UniPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in descending powers, e.g. "3*z^2 - 1/2*z + 7".
  std::string to_string(std::string_view var = "z") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      Rational c = coeffs_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      const bool neg = c.sign() < 0;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      c = c.abs();
      const bool unit = c == Rational(1);
      if (i == 0 || !unit) out += c.to_string();
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

inline DivMod divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
  const int dd = den.degree();
  const int nd = num.degree();
  if (nd < dd) return {UniPoly(), num};
  std::vector<Rational> quot(static_cast<std::size_t>(nd - dd) + 1);
  const Rational lead_inv = den.leading().inverse();
  for (int i = nd; i >= dd; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] * lead_inv;
    quot[static_cast<std::size_t>(i - dd)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * den.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

/// Quotient q with num = q * den, or InexactDivision if the remainder is nonzero.
inline UniPoly exact_divide(const UniPoly& num, const UniPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero())
    throw InexactDivision("(" + num.to_string() + ") / (" + den.to_string() + ") leaves remainder " + r.to_string());
  return q;
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree part of zero polynomial");
  if (p.degree() <= 0) return UniPoly(1);
  return exact_divide(p, gcd(p, p.derivative())).monic();
}

struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree, degree >= 1
  int multiplicity;
};

/// Yun's algorithm: p = lc · ∏ factor_i^i over the returned list.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() <= 0) return out;
  UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = exact_divide(p, a);
  UniPoly c = exact_divide(dp, a);
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative();
  }
  return out;
}

}  // namespace sasakicone
