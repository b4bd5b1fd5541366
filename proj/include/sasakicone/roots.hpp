#pragma once

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "sasakicone/errors.hpp"
#include "sasakicone/rational.hpp"
#include "sasakicone/unipoly.hpp"

namespace sasakicone {

enum class IntervalKind { Open, Closed };

/// How a RootInterval's single root was certified.
enum class Certificate {
  SturmCount,  // Sturm count of the squarefree part equals one on (lo, hi)
  SignChange,  // opposite exact signs at lo and hi
};

constexpr std::string_view to_string(Certificate c) {
  return c == Certificate::SturmCount ? "exact" : "sign-change";
}

/// Isolating interval (lo, hi) for one real root. `exact` holds the root
/// itself when it is rational and was identified exactly.
struct RootInterval {
  Rational lo;
  Rational hi;
  Certificate certificate = Certificate::SturmCount;
  std::optional<Rational> exact;
  int multiplicity = 1;

  Rational midpoint() const { return exact ? *exact : (lo + hi) / Rational(2); }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& t) const { return lo < t && t < hi; }
};

/// Canonical Sturm chain p, p', -rem(p, p'), ... (stops before zero).
inline std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm sequence of zero polynomial");
  std::vector<UniPoly> seq{p};
  UniPoly next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    const auto& a = seq[seq.size() - 2];
    next = -divmod(a, seq.back()).remainder;
  }
  return seq;
}

inline int sign_variations(const std::vector<UniPoly>& seq, const Rational& t) {
  int count = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = q.eval(t).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Precomputed Sturm chain for repeated counting on one polynomial.
class SturmCounter {
 public:
  explicit SturmCounter(const UniPoly& p) : p_(p), seq_(sturm_sequence(p)) {}

  const UniPoly& poly() const { return p_; }

  /// Distinct real roots in the interval; V(lo) - V(hi) counts (lo, hi].
  int count(const Rational& lo, const Rational& hi, IntervalKind kind) const {
    if (!(lo < hi)) throw DomainError("root count needs lo < hi");
    int n = sign_variations(seq_, lo) - sign_variations(seq_, hi);
    const bool hi_root = p_.eval(hi).is_zero();
    const bool lo_root = p_.eval(lo).is_zero();
    if (kind == IntervalKind::Open) {
      if (hi_root) --n;
    } else if (lo_root) {
      ++n;
    }
    return n;
  }

 private:
  UniPoly p_;
  std::vector<UniPoly> seq_;
};

inline int sturm_count_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                             IntervalKind kind = IntervalKind::Open) {
  return SturmCounter(p).count(lo, hi, kind);
}

/// p(t) > 0 for every t in (lo, hi).
inline bool is_positive_on_open(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw ZeroPolynomial("positivity test of zero polynomial");
  if (sturm_count_roots(p, lo, hi, IntervalKind::Open) != 0) return false;
  return p.eval((lo + hi) / Rational(2)).sign() > 0;
}

namespace detail {

/// Shrinks a Sturm-certified interval holding exactly one root of the
/// squarefree `counter.poly()` until its width is below `width`; stops early
/// if a bisection point hits the root exactly.
inline RootInterval refine_single(const SturmCounter& counter, Rational lo, Rational hi, const Rational& width) {
  const UniPoly& p = counter.poly();
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / Rational(2);
    if (p.eval(mid).is_zero()) {
      const Rational delta = min(width, hi - lo) / Rational(4);
      return {mid - delta, mid + delta, Certificate::SturmCount, mid, 1};
    }
    if (counter.count(lo, mid, IntervalKind::Open) == 1)
      hi = mid;
    else
      lo = mid;
  }
  RootInterval r{lo, hi, Certificate::SturmCount, std::nullopt, 1};
  const int slo = p.eval(lo).sign();
  const int shi = p.eval(hi).sign();
  if (slo != 0 && shi != 0 && slo != shi) r.certificate = Certificate::SignChange;
  return r;
}

/// Tries to identify the root in `r` as a rational. A rational root p/q of
/// the primitive integer polynomial has q | leading coefficient L, and two
/// distinct rationals with denominators <= L differ by at least 1/L^2, so in
/// an interval narrower than that the simplest rational is the only candidate.
inline void identify_rational(const SturmCounter& counter, RootInterval& r) {
  if (r.exact) return;
  const UniPoly& p = counter.poly();
  const auto ints = p.primitive_integer_coeffs();
  const mpz_class lead = ints.back();
  const Rational target(mpz_class(1), mpz_class(2 * lead * lead));
  RootInterval tight = refine_single(counter, r.lo, r.hi, target);
  if (tight.exact) {
    r.exact = tight.exact;
    return;
  }
  const Rational candidate = simplest_between(tight.lo, tight.hi);
  if (p.eval(candidate).is_zero()) r.exact = candidate;
}

}  // namespace detail

/// Certified isolation of the distinct real roots of `p` in the open interval
/// (lo, hi). Each interval has width <= `width` and holds exactly one root;
/// multiplicities come from the squarefree decomposition of p.
inline std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                               const Rational& width, bool detect_rational = true) {
  if (p.is_zero()) throw ZeroPolynomial("root isolation of zero polynomial");
  if (!(lo < hi)) throw DomainError("root isolation needs lo < hi");
  if (width.sign() <= 0) throw DomainError("isolation width must be positive");
  std::vector<RootInterval> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    const SturmCounter counter(factor);
    std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      const int n = counter.count(a, b, IntervalKind::Open);
      if (n == 0) continue;
      if (n == 1) {
        RootInterval r = detail::refine_single(counter, a, b, width);
        if (detect_rational) detail::identify_rational(counter, r);
        r.multiplicity = mult;
        out.push_back(std::move(r));
        continue;
      }
      const Rational mid = (a + b) / Rational(2);
      if (factor.eval(mid).is_zero()) {
        Rational delta = min(width, b - a) / Rational(4);
        while (factor.eval(mid - delta).is_zero() || factor.eval(mid + delta).is_zero() ||
               counter.count(mid - delta, mid + delta, IntervalKind::Open) != 1)
          delta /= Rational(2);
        out.push_back({mid - delta, mid + delta, Certificate::SturmCount, mid, mult});
        stack.emplace_back(a, mid - delta);
        stack.emplace_back(mid + delta, b);
        continue;
      }
      stack.emplace_back(a, mid);
      stack.emplace_back(mid, b);
    }
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace sasakicone
