#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sasakicone/conescan.hpp"
#include "sasakicone/cscs.hpp"
#include "sasakicone/joinsetup.hpp"
#include "sasakicone/profile.hpp"
#include "sasakicone/report.hpp"
#include "sasakicone/twins.hpp"

namespace sasakicone {

struct ReproResult {
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> artifacts;  // file name, content
};

/// The worked examples, each as a setup plus the expected outcome.
namespace examples {

inline ProductSetup no_csc() { return make_setup(1, Rational(-43137, 1337), 101, 1, Rational(1, 2)); }
inline ProductSetup end_on_pos() { return make_setup(1, Rational(-2675, 497), 2, 1, Rational(1, 2)); }
inline ProductSetup resurrection() {
  return make_setup(2, Rational(125919069, 1574986) - Rational(43137, 1337), 101, 1, Rational(1, 2));
}
inline ProductSetup quasiregular() { return make_setup(1, Rational(419, 19), 11, 9, Rational(9, 10)); }
inline Rational moat_a(const Rational& x) {
  const Rational x2 = x * x;
  return Rational(3) * (x2 * x2 + Rational(7)) / ((Rational(1) - x2) * (Rational(3) - x2));
}
inline ProductSetup moat(const Rational& x) { return make_setup(2, moat_a(x), 4, 2, x); }
inline ProductSetup twin_pair() { return make_setup(1, Rational(19, 3), 3, 1, Rational(1, 2)); }

/// (1 - z^2)·rest·scale
inline UniPoly boundary_form(const UniPoly& rest, const Rational& scale) { return UniPoly{1, 0, -1} * rest * UniPoly(scale); }

}  // namespace examples

namespace detail {

inline std::string ok_or(bool cond, const std::string& what) { return cond ? std::string() : what; }

inline bool midpoint_near(const RootInterval& r, const Rational& target, const Rational& tol) {
  return abs(r.midpoint() - target) <= tol;
}

}  // namespace detail

/// Runs every worked example; a check passes when its detail string is empty.
inline std::vector<ReproResult> run_reproduction() {
  using examples::boundary_form;
  std::vector<ReproResult> out;
  auto check = [&](const std::string& name, const std::function<std::string(ReproResult&)>& body) {
    ReproResult r{name, false, {}, {}};
    try {
      r.detail = body(r);
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  };
  const Rational tol(5, 10000);

  check("no-csc profile and scan", [&](ReproResult& r) {
    const auto st = examples::no_csc();
    if (st.s != Rational(-200) || st.p != 5) return std::string("setup s/p");
    const auto prof = compute_profile(st, Rational(2, 5));
    r.artifacts.emplace_back("no_csc_profile.json", profile_json(st, prof).dump(2) + "\n");
    if (prof.F != boundary_form(UniPoly{5, 2} * UniPoly{-292, 191, 1820}, Rational(1, 8022))) return std::string("F");
    if (is_extremal(prof)) return std::string("positivity should fail");
    if (!csc_condition(st, Rational(2, 5)).is_zero() || !cscS_check(prof)) return std::string("csc condition");
    if (cscS_check(compute_profile(st, Rational(1, 3)))) return std::string("c=1/3 should not be cscS");
    const auto rep = scan(st, 33);
    r.artifacts.emplace_back("no_csc_scan.json", scan_json(rep).dump(2) + "\n");
    if (!rep.extremal_intervals().empty()) return std::string("extremal rays found");
    if (rep.csc_rays.size() != 1 || rep.csc_rays[0].root.exact != Rational(2, 5) ||
        rep.csc_rays[0].status != CscStatus::Spurious)
      return std::string("csc rays");
    if (!find_profile_twins(st, Rational(2, 5)).partners.empty()) return std::string("unexpected twins");
    return std::string();
  });

  check("end-on-positive profile", [&](ReproResult& r) {
    const auto st = examples::end_on_pos();
    const auto prof = compute_profile(st, Rational(1, 8));
    r.artifacts.emplace_back("end_on_pos_profile.json", profile_json(st, prof).dump(2) + "\n");
    if (prof.F != boundary_form(UniPoly{8, 1} * UniPoly{326, 142, 29}, Rational(1, 2982))) return std::string("F");
    if (!is_extremal(prof) || !cscS_check(prof)) return std::string("not a genuine cscS ray");
    const auto roots = csc_roots(st, Rational(1, 1 << 20));
    if (roots.size() != 1 || roots[0].exact != Rational(1, 8)) return std::string("csc roots");
    return std::string();
  });

  check("resurrection profile", [&](ReproResult& r) {
    const auto st = examples::resurrection();
    const auto prof = compute_profile(st, Rational(3, 5));
    r.artifacts.emplace_back("resurrection_profile.json", profile_json(st, prof).dump(2) + "\n");
    if (prof.F != boundary_form(UniPoly{5, 3} * UniPoly{413335, 59909, -297891, -76401}, Rational(1, 527744)))
      return std::string("F");
    if (!is_extremal(prof) || !cscS_check(prof)) return std::string("not a genuine cscS ray");
    int failing = 0;
    for (int i = 1; i <= 19; ++i)
      if (!classify_ray(st, scan_grid_point(19, i)).extremal) ++failing;
    return detail::ok_or(failing >= 3, "fewer than three non-extremal rays");
  });

  check("quasiregular h(c) and rays", [&](ReproResult& r) {
    const auto st = examples::quasiregular();
    if (st.s != Rational(-20, 9)) return std::string("setup s");
    const UniPoly h = h_poly_p5(st);
    if (h != UniPoly(Rational(3, 475)) * UniPoly{-9, 10} * UniPoly{190, 543, -350, -885, 540})
      return std::string("h factorization");
    if (!condition_numerator(st).proportional_to(h)) return std::string("numerator not proportional to h");
    const auto roots = csc_roots(st, Rational(1, 10000));
    r.artifacts.emplace_back("quasiregular_roots.json", to_json(roots).dump(2) + "\n");
    if (roots.size() != 3) return std::string("root count");
    if (!detail::midpoint_near(roots[0], Rational(-601, 1000), tol) ||
        !detail::midpoint_near(roots[1], Rational(-359, 1000), tol) || roots[2].exact != Rational(9, 10))
      return std::string("root locations");
    if (classify_ray(st, Rational(0)).extremal) return std::string("regular ray should not be extremal");
    const auto top = classify_ray(st, Rational(9, 10));
    if (!top.extremal || !top.cscS) return std::string("c=9/10");
    const UniPoly g = UniPoly(Rational(26353, 2000)) * UniPoly{10, -9} * UniPoly{10, 9} * UniPoly{10, 9};
    if (!exact_divide(top.F, UniPoly{1, 0, -1}).proportional_to(g)) return std::string("g(c1,z)");
    if (sturm_count_roots(UniPoly{190, 657, 540}, Rational(-1), Rational(1)) != 2) return std::string("g(0,z) roots");
    const auto rep = scan(st, 33);
    r.artifacts.emplace_back("quasiregular_scan.json", scan_json(rep).dump(2) + "\n");
    for (const auto& ray : rep.csc_rays)
      if (!ray.genuine()) return std::string("all three rays should be genuine");
    return std::string();
  });

  check("quasiregular family c = x", [&](ReproResult&) {
    const Rational x(1, 2);
    const auto st = make_setup_from_curvature(1, (Rational(5) - x * x) / (Rational(1) - x * x), Rational(-2) / x, x);
    const auto prof = compute_profile(st, x);
    const UniPoly expect = boundary_form(UniPoly{1, -x} * UniPoly{1, x} * UniPoly{1, x}, (Rational(1) - x * x).inverse());
    if (prof.F != expect) return std::string("F");
    if (reconstruct_weighted_scal(prof, st) != UniPoly::linear(prof.A1, prof.A2)) return std::string("weighted scal");
    return detail::ok_or(cscS_check(prof) && is_extremal(prof), "not a genuine cscS ray");
  });

  check("moat family x = 8/10", [&](ReproResult& r) {
    const auto st = examples::moat(Rational(8, 10));
    if (st.a != Rational(4631, 177) || st.s != Rational(-3)) return std::string("setup");
    const UniPoly n = condition_numerator(st);
    const UniPoly cof{-29205, -107380, 30532, 197072, -134003, 12260, 5236};
    if (!exact_divide(n, UniPoly{Rational(8, 10), -1}).proportional_to(cof)) return std::string("h(8/10,c)");
    const auto rep = scan(st, 33);
    r.artifacts.emplace_back("moat_x08_scan.json", scan_json(rep).dump(2) + "\n");
    r.artifacts.emplace_back("moat_x08_scan.csv", scan_csv(rep));
    r.artifacts.emplace_back("moat_x08_cone.svg", scan_svg(rep));
    for (const auto& g : rep.grid)
      if (!g.extremal) return std::string("non-extremal grid ray");
    if (rep.csc_rays.size() != 3) return std::string("csc ray count");
    for (const auto& ray : rep.csc_rays)
      if (!ray.genuine()) return std::string("spurious ray");
    return std::string();
  });

  check("moat family x = 9/10", [&](ReproResult& r) {
    const Rational x(9, 10);
    const auto st = examples::moat(x);
    if (st.a != Rational(76561, 1387)) return std::string("setup");
    if (!csc_condition(st, x).is_zero()) return std::string("c = x not a root");
    const auto ax = solve_A(st, x);
    if (ax.A1 != x * ax.A2) return std::string("A1 != c A2");
    const Rational x2 = x * x;
    const UniPoly expect = boundary_form(UniPoly{1, x} * UniPoly{1, x} * UniPoly{Rational(3) + x2, -x * (Rational(3) - x2), Rational(-2) * x2},
                                         ((Rational(1) - x2) * (Rational(3) - x2)).inverse());
    if (compute_profile(st, x).F != expect) return std::string("F at c = x");
    const UniPoly cof{-325945, -2503170, 2190983, 3348648, -3487407, 352890, 290849};
    if (!exact_divide(condition_numerator(st), UniPoly{x, -1}).proportional_to(cof)) return std::string("h(9/10,c)");
    const auto rep = scan(st, 33);
    r.artifacts.emplace_back("moat_x09_scan.json", scan_json(rep).dump(2) + "\n");
    r.artifacts.emplace_back("moat_x09_scan.csv", scan_csv(rep));
    r.artifacts.emplace_back("moat_x09_cone.svg", scan_svg(rep));
    const auto moats = rep.moats();
    if (moats.size() != 1 || rep.extremal_intervals().size() != 2) return std::string("component structure");
    const Rational cl = moats[0].lo, cr = moats[0].hi;
    if (!(cl < Rational(0) && Rational(0) < cr && cr < x)) return std::string("moat position");
    if (rep.csc_rays.size() != 3) return std::string("csc ray count");
    const auto& c3 = rep.csc_rays[0];
    const auto& c2 = rep.csc_rays[1];
    const auto& c1 = rep.csc_rays[2];
    if (!detail::midpoint_near(c3.root, Rational(-786, 1000), tol) || !detail::midpoint_near(c2.root, Rational(-120, 1000), tol) ||
        c1.root.exact != x)
      return std::string("root locations");
    if (!c1.genuine() || c2.status != CscStatus::Spurious || !c3.genuine()) return std::string("labels");
    if (!(cl < c2.root.lo && c2.root.hi < cr && c3.root.hi < cl)) return std::string("roots vs moat");
    return std::string();
  });

  check("profile twins", [&](ReproResult& r) {
    const auto st = examples::twin_pair();
    const auto tw = find_profile_twins(st, Rational(1, 2));
    r.artifacts.emplace_back("twins.json", twins_json(st, tw).dump(2) + "\n");
    if (tw.partners != std::vector<Rational>{Rational(-5, 6)}) return std::string("partners of 1/2");
    const UniPoly expect = boundary_form(UniPoly{1, Rational(-1, 2)} * UniPoly{1, Rational(1, 2)} * UniPoly{1, Rational(1, 2)},
                                         Rational(4, 3));
    if (tw.shared_F != expect) return std::string("shared F");
    const auto back = find_profile_twins(st, Rational(-5, 6));
    return detail::ok_or(back.partners == std::vector<Rational>{Rational(1, 2)}, "twin relation not symmetric");
  });

  check("CP^1 closed forms", [&](ReproResult&) {
    const auto round = cp1_profile(Rational(-2), Rational(0));
    if (round.H != UniPoly{1, 0, -1} || !round.A.is_zero()) return std::string("round case");
    for (const Rational& c : {Rational(-1, 2), Rational(1, 3), Rational(4, 5)})
      if (cp1_profile(Rational(-2), c).H != UniPoly{1, 0, -1}) return std::string("k = -2 not round");
    if (cp1_twins(Rational(-4), Rational(1, 3)).partners != std::vector<Rational>{Rational(-1, 3)}) return std::string("±c");
    if (!cp1_twins(Rational(-2), Rational(1, 3)).continuum) return std::string("k = -2 continuum");
    return detail::ok_or(cp1_twins(Rational(-4), Rational(0)).partners.empty(), "c = 0 partners");
  });

  check("toric twins", [&](ReproResult& r) {
    json rows = json::array();
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 2; ++d) {
        const TwinWeights w = twin_weights(d, n);
        std::vector<Rational> v;
        for (int i = 0; i < n; ++i) v.emplace_back(i + 1, 7 * (i + 2));
        const auto pot = make_potential(v, Rational(3, 2));
        const bool affine = toric_weighted_scal(d, n, w.p_high, w.scal1, pot).is_affine();
        rows.push_back({{"d", d}, {"n", n}, {"p_high", w.p_high}, {"affine", affine}});
        if (!affine) return "non-affine weighted scalar curvature at d=" + std::to_string(d) + " n=" + std::to_string(n);
      }
    r.artifacts.emplace_back("toric.json", rows.dump(2) + "\n");
    const TwinWeights z = twin_weights(0, 3);
    if (z.p_low != 4 || z.p_high != 5 || !z.scal1.is_zero()) return std::string("d = 0 weights");
    const auto sol = toric_csc_solutions(2, Rational(1), 1);
    if (sol.candidates.size() != 2 || sol.any_admissible || !sol.trivial_admissible) return std::string("toric cscS");
    return std::string();
  });

  check("join arithmetic", [&](ReproResult&) {
    if (!join_is_smooth({3, 5, 1, 1}) || join_is_smooth({2, 1, 2, 2}) || join_is_smooth({3, 2, 3, 2}))
      return std::string("smoothness");
    if (cone_dim(1, 2) != 2) return std::string("cone dimension");
    const auto pol = primitive_polarization({{}, -2, 1});
    return detail::ok_or(pol.l1 == 1L && pol.l2 == 1L, "genus-2 polarization");
  });
  return out;
}

}  // namespace sasakicone
