#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "sasakicone/errors.hpp"

namespace sasakicone {

/// Exact rational number backed by GMP. Always canonical: lowest terms,
/// positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit by design of the algebra

  template <std::integral I, std::integral J>
  Rational(I num, J den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
  }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts "p/q" or a plain integer, optionally signed. Decimals are
  /// rejected: they would silently lose the exact value the user meant.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
      const auto first = t.find_first_not_of(" \t");
      const auto last = t.find_last_not_of(" \t");
      t = first == std::string::npos ? std::string() : t.substr(first, last - first + 1);
    };
    trim(s);
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    trim(num);
    trim(den);
    auto valid_int = [](const std::string& t, bool allow_sign) {
      if (t.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    if (!valid_int(num, true) || !valid_int(den, false))
      throw ParseError("not an exact rational (expected \"p/q\" or an integer): '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / value_));
  }

  Rational pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
  }

  /// Largest integer not exceeding the value.
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
  }

  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" for integers.
  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  /// Fixed-point decimal with `digits` fractional digits, rounded half away
  /// from zero using integer arithmetic only, so renderings are reproducible.
  std::string to_decimal(int digits = 12) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class n = ::abs(value_.get_num()) * scale * 2 + value_.get_den();
    mpz_class d = value_.get_den() * 2;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    std::string s = q.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    if (sign() < 0 && q != 0) s.insert(0, "-");
    return s;
  }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int r = cmp(a.value_, b.value_);
    return r < 0 ? std::strong_ordering::less : r > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.abs(); }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// The rational with the smallest denominator in the open interval (lo, hi);
/// `hi_unbounded` treats hi as +infinity. Continued-fraction descent.
inline Rational simplest_between(const Rational& lo, const Rational& hi, bool hi_unbounded = false) {
  if (!hi_unbounded && !(lo < hi)) throw DomainError("simplest_between needs lo < hi");
  const mpz_class fl = lo.floor();
  const Rational next(mpz_class(fl + 1));
  if (hi_unbounded || next < hi) return next;
  const Rational base(fl);
  const Rational inv_hi = (hi - base).inverse();
  if (lo == base) return base + simplest_between(inv_hi, Rational(0), true).inverse();
  return base + simplest_between(inv_hi, (lo - base).inverse()).inverse();
}

}  // namespace sasakicone

template <>
struct std::hash<sasakicone::Rational> {
  std::size_t operator()(const sasakicone::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
