#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sasakicone/cscs.hpp"
#include "sasakicone/errors.hpp"
#include "sasakicone/joinsetup.hpp"
#include "sasakicone/profile.hpp"
#include "sasakicone/rational.hpp"
#include "sasakicone/roots.hpp"

namespace sasakicone {

struct RayClassification {
  Rational c;
  bool extremal = false;
  bool cscS = false;
  UniPoly F;
  Rational A1;
  Rational A2;
};

inline RayClassification classify_ray(const ProductSetup& setup, const Rational& c) {
  const ExtremalProfile prof = compute_profile(setup, c);
  return {c, is_extremal(prof), cscS_check(prof), prof.F, prof.A1, prof.A2};
}

/// Slope of the ray c in the (ξ1, ξ2)-quadrant picture.
inline Rational slope(const Rational& c) {
  if (c == Rational(-1)) throw DomainError("slope undefined at c = -1");
  return (Rational(1) - c) / (Rational(1) + c);
}

/// Run of rays with one extremality verdict. Interior ends are certified
/// rays adjacent to a Boundary; ends at ±1 are the open cone edges.
/// Connectivity between grid points is sampled, not proven.
struct Segment {
  Rational lo;
  Rational hi;
  bool extremal = false;
};

/// Bracket (lo, hi) of width <= boundary_width around a change of verdict;
/// lo carries the verdict of the segment below, hi the one above.
struct Boundary {
  Rational lo;
  Rational hi;
};

enum class CscStatus { Genuine, Spurious, Contested };

constexpr std::string_view to_string(CscStatus s) {
  switch (s) {
    case CscStatus::Genuine: return "genuine";
    case CscStatus::Spurious: return "spurious";
    case CscStatus::Contested: return "contested";
  }
  return "?";
}

struct CscRay {
  RootInterval root;
  CscStatus status = CscStatus::Spurious;
  bool genuine() const { return status == CscStatus::Genuine; }
};

struct ConeScanReport {
  ProductSetup setup;
  int grid_n = 0;
  Rational boundary_width;
  std::vector<RayClassification> grid;
  std::vector<Segment> segments;  // ascending, alternating verdicts
  std::vector<Boundary> boundaries;
  std::vector<CscRay> csc_rays;
  std::vector<std::pair<Rational, Rational>> slope_map;

  std::vector<Segment> extremal_intervals() const { return filter(true); }
  std::vector<Segment> moats() const { return filter(false); }

 private:
  std::vector<Segment> filter(bool extremal) const {
    std::vector<Segment> out;
    for (const auto& s : segments)
      if (s.extremal == extremal) out.push_back(s);
    return out;
  }
};

namespace detail {

inline Boundary bisect_transition(const ProductSetup& setup, Rational lo, Rational hi, bool lo_state,
                                  const Rational& width) {
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / Rational(2);
    if (classify_ray(setup, mid).extremal == lo_state)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

inline CscRay label_root(const ProductSetup& setup, const RootInterval& r) {
  CscRay ray{r, CscStatus::Spurious};
  if (r.exact) {
    const RayClassification cl = classify_ray(setup, *r.exact);
    if (!cl.cscS) throw InternalInconsistency("exact cscS root " + r.exact->to_string() + " fails the cscS test");
    ray.status = cl.extremal ? CscStatus::Genuine : CscStatus::Spurious;
    return ray;
  }
  const bool at_lo = classify_ray(setup, r.lo).extremal;
  const bool at_hi = classify_ray(setup, r.hi).extremal;
  if (at_lo != at_hi)
    ray.status = CscStatus::Contested;
  else
    ray.status = at_lo ? CscStatus::Genuine : CscStatus::Spurious;
  return ray;
}

}  // namespace detail

inline Rational scan_grid_point(int grid_n, int i) { return Rational(-1) + Rational(2 * i, grid_n + 1); }

/// Classifies the rays c in (-1, 1): grid verdicts, refined extremality
/// boundaries, and the cscS roots labelled by extremality at the root.
inline ConeScanReport scan(const ProductSetup& setup, int grid_n, const Rational& boundary_width = Rational(1, 2048),
                           const Rational& root_width = Rational(1, 1 << 20)) {
  if (grid_n < 8) throw DomainError("grid_n must be >= 8");
  if (boundary_width.sign() <= 0 || root_width.sign() <= 0) throw DomainError("widths must be positive");
  ConeScanReport rep;
  rep.setup = setup;
  rep.grid_n = grid_n;
  rep.boundary_width = boundary_width;
  for (int i = 1; i <= grid_n; ++i) {
    const Rational c = scan_grid_point(grid_n, i);
    rep.grid.push_back(classify_ray(setup, c));
    rep.slope_map.emplace_back(c, slope(c));
  }

  Rational seg_lo(-1);
  for (std::size_t i = 0; i + 1 < rep.grid.size(); ++i) {
    const auto& left = rep.grid[i];
    const auto& right = rep.grid[i + 1];
    if (left.extremal == right.extremal) continue;
    const Boundary b = detail::bisect_transition(setup, left.c, right.c, left.extremal, boundary_width);
    rep.segments.push_back({seg_lo, b.lo, left.extremal});
    rep.boundaries.push_back(b);
    seg_lo = b.hi;
  }
  rep.segments.push_back({seg_lo, Rational(1), rep.grid.back().extremal});

  for (const auto& r : csc_roots(setup, root_width)) rep.csc_rays.push_back(detail::label_root(setup, r));
  return rep;
}

}  // namespace sasakicone
