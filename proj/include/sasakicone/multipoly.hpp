#pragma once

#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "sasakicone/errors.hpp"
#include "sasakicone/rational.hpp"

namespace sasakicone {

/// Sparse polynomial in a fixed number of variables x1..xn.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {
    if (nvars < 0) throw DomainError("negative variable count");
  }

  static MultiPoly constant(int nvars, const Rational& value) {
    MultiPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), value);
    return p;
  }

  /// The coordinate function x_{index}, 0-based.
  static MultiPoly variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
    MultiPoly p(nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, Rational(1));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  /// Terms whose total degree is at least `degree`.
  MultiPoly terms_of_degree_at_least(int degree) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0) >= degree) out.add_term(e, c);
    return out;
  }

  bool is_affine() const { return terms_of_degree_at_least(2).is_zero(); }

  MultiPoly partial(int index) const {
    if (index < 0 || index >= nvars_) throw DomainError("variable index out of range");
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      const int k = e[static_cast<std::size_t>(index)];
      if (k == 0) continue;
      Exponents f = e;
      f[static_cast<std::size_t>(index)] = k - 1;
      out.add_term(f, c * Rational(k));
    }
    return out;
  }

  Rational eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw DomainError("evaluation point dimension mismatch");
    Rational acc;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) term *= point[i].pow(e[i]);
      acc += term;
    }
    return acc;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + it->second.to_string() + ")";
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        if (it->first[i] == 0) continue;
        out += "*x" + std::to_string(i + 1);
        if (it->first[i] > 1) out += "^" + std::to_string(it->first[i]);
      }
    }
    return out;
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw DomainError("variable count mismatch");
  }

  int nvars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace sasakicone
