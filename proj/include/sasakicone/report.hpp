#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sasakicone/conescan.hpp"
#include "sasakicone/cscs.hpp"
#include "sasakicone/joinsetup.hpp"
#include "sasakicone/profile.hpp"
#include "sasakicone/roots.hpp"
#include "sasakicone/twins.hpp"

namespace sasakicone {

using json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// Exact value plus a display-only decimal.
inline json to_json(const Rational& r) { return {{"exact", r.to_string()}, {"decimal", r.to_decimal(12)}}; }

inline json to_json(const UniPoly& p, std::string_view var = "z") {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
  return {{"text", p.to_string(var)}, {"coeffs", coeffs}};
}

inline json to_json(const ProductSetup& s) {
  json j{{"d", s.d}, {"a", to_json(s.a)}};
  if (s.genus_g2) j["g2"] = *s.genus_g2;
  if (s.degree_k) j["k"] = *s.degree_k;
  j["s"] = to_json(s.s);
  j["x"] = to_json(s.x);
  j["p"] = s.p;
  return j;
}

inline json to_json(const RootInterval& r) {
  json j{{"lo", to_json(r.lo)}, {"hi", to_json(r.hi)}, {"certificate", std::string(to_string(r.certificate))},
         {"multiplicity", r.multiplicity}};
  j["exact"] = r.exact ? json(r.exact->to_string()) : json(nullptr);
  j["midpoint"] = to_json(r.midpoint());
  return j;
}

inline json to_json(const std::vector<RootInterval>& roots) {
  json arr = json::array();
  for (const auto& r : roots) arr.push_back(to_json(r));
  return arr;
}

inline json profile_json(const ProductSetup& setup, const ExtremalProfile& prof) {
  const UniPoly cof = profile_cofactor(prof);
  return {{"schema", kReportSchema},
          {"command", "profile"},
          {"setup", to_json(setup)},
          {"c", to_json(prof.c)},
          {"slope", to_json(slope(prof.c))},
          {"A1", to_json(prof.A1)},
          {"A2", to_json(prof.A2)},
          {"F", to_json(prof.F)},
          {"F_over_one_minus_z2", to_json(cof)},
          {"Theta", "F/(1 + " + setup.x.to_string() + "*z)"},
          {"extremal", is_extremal(prof)},
          {"cscS", cscS_check(prof)},
          {"csc_condition", to_json(csc_condition(setup, prof.c))}};
}

inline json scan_json(const ConeScanReport& rep) {
  json grid = json::array();
  for (const auto& r : rep.grid)
    grid.push_back({{"c", r.c.to_string()}, {"extremal", r.extremal}, {"cscS", r.cscS}});
  json segs = json::array();
  for (const auto& s : rep.segments)
    segs.push_back({{"lo", to_json(s.lo)}, {"hi", to_json(s.hi)}, {"extremal", s.extremal}, {"connectivity", "sampled"}});
  json bounds = json::array();
  for (const auto& b : rep.boundaries) bounds.push_back({{"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}});
  json rays = json::array();
  for (const auto& r : rep.csc_rays) rays.push_back({{"root", to_json(r.root)}, {"status", std::string(to_string(r.status))}});
  json slopes = json::array();
  for (const auto& [c, m] : rep.slope_map) slopes.push_back({{"c", c.to_string()}, {"slope", m.to_string()}});
  return {{"schema", kReportSchema},
          {"command", "scan"},
          {"setup", to_json(rep.setup)},
          {"grid_n", rep.grid_n},
          {"boundary_width", rep.boundary_width.to_string()},
          {"segments", segs},
          {"boundaries", bounds},
          {"csc_rays", rays},
          {"grid", grid},
          {"slope_map", slopes}};
}

inline json twins_json(const ProductSetup& setup, const TwinReport& rep) {
  json partners = json::array();
  for (const auto& c : rep.partners) partners.push_back(to_json(c));
  return {{"schema", kReportSchema}, {"command", "twins"},  {"setup", to_json(setup)}, {"base_c", to_json(rep.base_c)},
          {"continuum", rep.continuum},  {"partners", partners}, {"shared_F", to_json(rep.shared_F)}};
}

/// Columns c_num, c_den, extremal, cscS, F_coeffs (ascending degree, ';'-joined).
inline std::string scan_csv(const ConeScanReport& rep) {
  std::ostringstream out;
  out << "c_num,c_den,extremal,cscS,F_coeffs\n";
  for (const auto& r : rep.grid) {
    out << r.c.num().get_str() << ',' << r.c.den().get_str() << ',' << (r.extremal ? "true" : "false") << ','
        << (r.cscS ? "true" : "false") << ',';
    bool first = true;
    for (const auto& co : r.F.coeffs()) {
      if (!first) out << ';';
      out << co.to_string();
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

namespace detail {

struct SvgPoint {
  double x;
  double y;
};

/// Where the ray c leaves the unit square of the (w1, w2) quadrant.
inline SvgPoint ray_end(const Rational& c) {
  const double w1 = (Rational(1) + c).to_double();
  const double w2 = (Rational(1) - c).to_double();
  const double m = std::max(w1, w2);
  return {w1 / m, w2 / m};
}

inline std::string fmt(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << v;
  return s.str();
}

}  // namespace detail

/// First-quadrant sketch of the scanned subcone: ray c has slope (1-c)/(1+c),
/// non-extremal segments are shaded wedges, cscS rays are blue (genuine),
/// red (spurious) or orange (contested), numbered by decreasing c.
inline std::string scan_svg(const ConeScanReport& rep) {
  constexpr double ox = 60, oy = 440, scale = 360;
  auto px = [&](double w) { return detail::fmt(ox + scale * w); };
  auto py = [&](double w) { return detail::fmt(oy - scale * w); };
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"720\" height=\"480\" viewBox=\"0 0 720 480\">\n"
    << "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
  for (const auto& seg : rep.moats()) {
    const auto hi = detail::ray_end(seg.hi);
    const auto lo = detail::ray_end(seg.lo);
    o << "<polygon fill=\"teal\" fill-opacity=\"0.3\" points=\"" << px(0) << ',' << py(0) << ' ' << px(hi.x) << ','
      << py(hi.y);
    if (seg.lo < Rational(0) && Rational(0) < seg.hi) o << ' ' << px(1) << ',' << py(1);
    o << ' ' << px(lo.x) << ',' << py(lo.y) << "\"/>\n";
    const auto mid = detail::ray_end((seg.lo + seg.hi) / Rational(2));
    o << "<text x=\"" << px(mid.x * 0.7) << "\" y=\"" << py(mid.y * 0.7)
      << "\" font-size=\"11\" fill=\"black\">Moat with no extremal Sasaki rays</text>\n";
  }
  o << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1.1) << "\" y2=\"" << py(0)
    << "\" stroke=\"black\" stroke-width=\"3\"/>\n"
    << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(1.1)
    << "\" stroke=\"black\" stroke-width=\"3\"/>\n"
    << "<text x=\"" << px(1.12) << "\" y=\"" << py(0) << "\" font-size=\"14\">w1</text>\n"
    << "<text x=\"" << px(0) << "\" y=\"" << py(1.13) << "\" font-size=\"14\">w2</text>\n";

  std::vector<CscRay> rays = rep.csc_rays;
  std::sort(rays.begin(), rays.end(), [](const CscRay& a, const CscRay& b) { return b.root.midpoint() < a.root.midpoint(); });
  int idx = 0;
  for (const auto& ray : rays) {
    ++idx;
    const Rational c = ray.root.midpoint();
    const auto end = detail::ray_end(c);
    const char* colour = ray.status == CscStatus::Genuine ? "blue" : ray.status == CscStatus::Spurious ? "red" : "orange";
    std::string label = "cscS ray determined by c_" + std::to_string(idx);
    if (ray.status == CscStatus::Spurious)
      label = "ray determined by c_" + std::to_string(idx) + " is not cscS since it is in the moat";
    else if (ray.status == CscStatus::Contested)
      label = "ray determined by c_" + std::to_string(idx) + " is contested";
    o << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(end.x) << "\" y2=\"" << py(end.y)
      << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << px(end.x) << "\" y=\"" << py(end.y) << "\" dx=\"6\" dy=\"-4\" font-size=\"11\" fill=\"" << colour
      << "\">" << label << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace sasakicone
