#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sasakicone/conescan.hpp"
#include "sasakicone/cscs.hpp"
#include "sasakicone/errors.hpp"
#include "sasakicone/joinsetup.hpp"
#include "sasakicone/profile.hpp"
#include "sasakicone/report.hpp"
#include "sasakicone/reproduce.hpp"
#include "sasakicone/twins.hpp"

namespace sasakicone {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitConfig = 1, kExitCompute = 2, kExitMismatch = 3 };

/// Bad or missing input; reported with exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<int> d;
  std::optional<Rational> a;
  std::optional<int> g2;
  std::optional<int> k;
  std::optional<Rational> s;
  std::optional<Rational> x;
  std::optional<Rational> c;
  std::optional<long> l1;
  std::optional<long> l2;
  long order1 = 1;
  long order2 = 1;
  std::optional<int> dim1;
  std::optional<int> dim2;
  std::optional<long> ke_index;
  std::vector<Rational> class_coeffs;
  int grid_n = 33;
  Rational width{1, 2048};
  Rational root_width{1, 1 << 20};
  std::optional<int> n;
  std::optional<int> p;
  std::vector<Rational> v;
  Rational lambda{1};
  std::optional<Rational> cp1_k;
  std::string out;
  std::string csv;
  std::string svg;
  std::string out_dir = "reproduce_out";
};

inline Rational parse_rational_arg(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

inline std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational_arg(item, what));
  return out;
}

namespace detail {

inline Rational json_rational(const nlohmann::json& j, const std::string& key) {
  if (j.is_string()) return parse_rational_arg(j.get<std::string>(), key);
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ConfigError(key + ": expected an exact rational string \"p/q\" or an integer");
}

inline long json_int(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ConfigError(key + ": expected an integer");
  return j.get<long>();
}

}  // namespace detail

/// Fills fields of `cfg` not already set from a JSON config file with keys
/// d, a, g2, k, s, x, c, l1, l2.
inline void merge_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  static const std::vector<std::string> known{"d", "a", "g2", "k", "s", "x", "c", "l1", "l2"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown config key " + key);
  auto int_field = [&](const char* key, auto& slot) {
    if (!slot && j.contains(key)) slot = static_cast<std::remove_reference_t<decltype(*slot)>>(detail::json_int(j[key], key));
  };
  auto rat_field = [&](const char* key, std::optional<Rational>& slot) {
    if (!slot && j.contains(key)) slot = detail::json_rational(j[key], key);
  };
  int_field("d", cfg.d);
  int_field("g2", cfg.g2);
  int_field("k", cfg.k);
  int_field("l1", cfg.l1);
  int_field("l2", cfg.l2);
  rat_field("a", cfg.a);
  rat_field("s", cfg.s);
  rat_field("x", cfg.x);
  rat_field("c", cfg.c);
}

inline ProductSetup build_setup(const RunConfig& cfg) {
  if (!cfg.d || !cfg.a || !cfg.x) throw ConfigError("setup needs d, a and x");
  try {
    if (cfg.g2 && cfg.k) {
      ProductSetup st = make_setup(*cfg.d, *cfg.a, *cfg.g2, *cfg.k, *cfg.x);
      if (cfg.s && *cfg.s != st.s) throw ConfigError("s disagrees with 2(1-g2)/k");
      return st;
    }
    if (cfg.g2 || cfg.k) throw ConfigError("g2 and k must be given together");
    if (!cfg.s) throw ConfigError("setup needs g2 and k, or s");
    return make_setup_from_curvature(*cfg.d, *cfg.a, *cfg.s, *cfg.x);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

/// Writes via a temporary sibling and rename, so readers never see a partial file.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace detail {

inline void emit(const RunConfig& cfg, const json& j, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty())
    out << text;
  else
    write_atomic(cfg.out, text);
}

inline const Rational& need_c(const RunConfig& cfg) {
  if (!cfg.c) throw ConfigError("command needs --c");
  if (!(abs(*cfg.c) < Rational(1))) throw ConfigError("--c must lie in (-1,1)");
  return *cfg.c;
}

inline int run_toric(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.n || !cfg.d) throw ConfigError("toric needs --n and --d");
  const int n = *cfg.n, d = *cfg.d;
  const TwinWeights w = twin_weights(d, n);
  const int p = cfg.p.value_or(w.p_high);
  std::vector<Rational> v = cfg.v;
  if (v.empty()) v.assign(static_cast<std::size_t>(n), Rational(0));
  if (static_cast<int>(v.size()) != n) throw ConfigError("--v needs n components");
  const ToricPotential pot = make_potential(v, cfg.lambda);
  const Rational scal1 = scal1_for_weight(n, p);
  const MultiPoly scal = toric_weighted_scal(d, n, p, scal1, pot);
  json cands = json::array();
  for (int l = 1; l < n; ++l) {
    const ToricCscResult r = toric_csc_solutions(n, cfg.lambda, l);
    json vs = json::array();
    for (const auto& cand : r.candidates)
      vs.push_back({{"v", to_json(cand.v)}, {"min_vertex_value", to_json(cand.min_vertex_value)}, {"admissible", cand.admissible}});
    cands.push_back({{"l", l}, {"candidates", vs}, {"any_admissible", r.any_admissible}});
  }
  emit(cfg,
       {{"schema", kReportSchema},
        {"command", "toric"},
        {"d", d},
        {"n", n},
        {"p", p},
        {"twin_weights", {{"p_low", w.p_low}, {"p_high", w.p_high}, {"scal1", to_json(w.scal1)}}},
        {"scal1", to_json(scal1)},
        {"potential_positive", pot.positive_on_simplex()},
        {"weighted_scal", scal.to_string()},
        {"affine", scal.is_affine()},
        {"csc_candidates", cands}},
       out);
  return kExitOk;
}

inline int run_join(const RunConfig& cfg, std::ostream& out) {
  json j{{"schema", kReportSchema}, {"command", "join"}};
  if (cfg.l1 && cfg.l2) {
    const JoinSpec spec{*cfg.l1, *cfg.l2, cfg.order1, cfg.order2};
    try {
      validate(spec);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
    const JoinVectors jv = join_vectors(spec.l1, spec.l2);
    j["l1"] = spec.l1;
    j["l2"] = spec.l2;
    j["smooth"] = join_is_smooth(spec);
    j["reeb"] = {to_json(jv.reeb.first), to_json(jv.reeb.second)};
    j["lvec"] = {to_json(jv.lvec.first), to_json(jv.lvec.second)};
    j["contact"] = {jv.contact.first, jv.contact.second};
  }
  if (cfg.dim1 && cfg.dim2) j["cone_dim"] = cone_dim(*cfg.dim1, *cfg.dim2);
  if (cfg.ke_index || !cfg.class_coeffs.empty()) {
    PolarizationInput in{cfg.class_coeffs, cfg.ke_index, cfg.d.value_or(1)};
    const Polarization pol = primitive_polarization(in);
    json prim = json::array();
    for (const auto& m : pol.primitive) prim.push_back(m.get_str());
    j["polarization"] = {{"scale", to_json(pol.scale)}, {"primitive", prim}};
    if (pol.l1) j["polarization"]["l1"] = *pol.l1;
    if (pol.l2) j["polarization"]["l2"] = *pol.l2;
  }
  if (j.size() == 2) throw ConfigError("join needs --l1/--l2, --dim1/--dim2, --ke-index or --class");
  emit(cfg, j, out);
  return kExitOk;
}

inline int run_reproduce(const RunConfig& cfg, std::ostream& out) {
  const std::filesystem::path dir(cfg.out_dir);
  const auto results = run_reproduction();
  json summary = json::array();
  bool ok = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.pass) out << " : " << r.detail;
    out << "\n";
    ok = ok && r.pass;
    summary.push_back({{"name", r.name}, {"pass", r.pass}});
    for (const auto& [file, content] : r.artifacts) write_atomic(dir / file, content);
  }
  write_atomic(dir / "summary.json", json{{"schema", kReportSchema}, {"checks", summary}}.dump(2) + "\n");
  write_atomic(dir / "VERSION", std::string(kVersion) + "\n");
  out << (ok ? "all checks passed" : "reproduction mismatch") << "\n";
  return ok ? kExitOk : kExitMismatch;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
  const std::string& cmd = cfg.command;
  if (cmd == "profile") {
    const ProductSetup st = build_setup(cfg);
    emit(cfg, profile_json(st, compute_profile(st, need_c(cfg))), out);
    return kExitOk;
  }
  if (cmd == "scan") {
    const ProductSetup st = build_setup(cfg);
    if (cfg.grid_n < 8) throw ConfigError("--grid-n must be >= 8");
    if (cfg.width.sign() <= 0) throw ConfigError("--width must be positive");
    const ConeScanReport rep = scan(st, cfg.grid_n, cfg.width, cfg.root_width);
    emit(cfg, scan_json(rep), out);
    if (!cfg.csv.empty()) write_atomic(cfg.csv, scan_csv(rep));
    if (!cfg.svg.empty()) write_atomic(cfg.svg, scan_svg(rep));
    return kExitOk;
  }
  if (cmd == "csc-roots") {
    const ProductSetup st = build_setup(cfg);
    const UniPoly num = condition_numerator(st);
    emit(cfg,
         {{"schema", kReportSchema},
          {"command", "csc-roots"},
          {"setup", to_json(st)},
          {"numerator", to_json(num, "c")},
          {"denominator", "(1 - c^2)^" + std::to_string(csc_denominator_exponent(st))},
          {"roots", to_json(isolate_roots(num, Rational(-1), Rational(1), cfg.root_width))}},
         out);
    return kExitOk;
  }
  if (cmd == "twins") {
    if (cfg.cp1_k) {
      const Rational& c = need_c(cfg);
      const Cp1Profile prof = cp1_profile(*cfg.cp1_k, c);
      const Cp1Twins tw = cp1_twins(*cfg.cp1_k, c);
      json partners = json::array();
      for (const auto& cp : tw.partners) partners.push_back(to_json(cp));
      emit(cfg,
           {{"schema", kReportSchema}, {"command", "twins"}, {"k", to_json(*cfg.cp1_k)}, {"c", to_json(c)},
            {"H", to_json(prof.H)}, {"A", to_json(prof.A)}, {"B", to_json(prof.B)}, {"continuum", tw.continuum},
            {"partners", partners}},
           out);
      return kExitOk;
    }
    const ProductSetup st = build_setup(cfg);
    emit(cfg, twins_json(st, find_profile_twins(st, need_c(cfg))), out);
    return kExitOk;
  }
  if (cmd == "toric") return run_toric(cfg, out);
  if (cmd == "join") return run_join(cfg, out);
  if (cmd == "reproduce") return run_reproduce(cfg, out);
  throw ConfigError("unknown command " + cmd);
}

}  // namespace detail

/// Runs one command; returns the process exit code.
inline int run(const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    return detail::dispatch(cfg, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "computation error: " << e.what() << "\n";
    return kExitCompute;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCompute;
  }
}

}  // namespace sasakicone
