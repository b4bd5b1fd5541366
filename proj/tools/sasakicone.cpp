// Command-line front end; all logic lives in sasakicone/app.hpp.
#include <CLI11.hpp>

#include "sasakicone/app.hpp"

namespace {

struct RawFlags {
  std::optional<int> d, g2, k, dim1, dim2, n, p;
  std::optional<long> l1, l2, ke_index;
  std::optional<std::string> a, s, x, c, width, root_width, v, lambda, cp1_k, klass;
  std::optional<long> order1, order2;
  std::optional<int> grid_n;
  std::string config, out, csv, svg, out_dir;
};

void add_setup_flags(CLI::App* cmd, RawFlags& f) {
  cmd->add_option("--d", f.d, "complex dimension of the cscK base");
  cmd->add_option("--a", f.a, "half the base scalar curvature (p/q)");
  cmd->add_option("--g2", f.g2, "genus of the ruled-surface base");
  cmd->add_option("--k", f.k, "degree of the line bundle");
  cmd->add_option("--s", f.s, "fiber-base curvature 2(1-g2)/k, instead of --g2/--k");
  cmd->add_option("--x", f.x, "admissible parameter in (0,1)");
  cmd->add_option("--config", f.config, "JSON config file");
  cmd->add_option("--out", f.out, "write JSON here instead of stdout");
}

sasakicone::RunConfig to_config(const std::string& command, const RawFlags& f) {
  using sasakicone::parse_rational_arg;
  sasakicone::RunConfig cfg;
  cfg.command = command;
  cfg.d = f.d;
  cfg.g2 = f.g2;
  cfg.k = f.k;
  cfg.l1 = f.l1;
  cfg.l2 = f.l2;
  cfg.dim1 = f.dim1;
  cfg.dim2 = f.dim2;
  cfg.ke_index = f.ke_index;
  cfg.n = f.n;
  cfg.p = f.p;
  if (f.a) cfg.a = parse_rational_arg(*f.a, "--a");
  if (f.s) cfg.s = parse_rational_arg(*f.s, "--s");
  if (f.x) cfg.x = parse_rational_arg(*f.x, "--x");
  if (f.c) cfg.c = parse_rational_arg(*f.c, "--c");
  if (f.width) cfg.width = parse_rational_arg(*f.width, "--width");
  if (f.root_width) cfg.root_width = parse_rational_arg(*f.root_width, "--root-width");
  if (f.lambda) cfg.lambda = parse_rational_arg(*f.lambda, "--lambda");
  if (f.cp1_k) cfg.cp1_k = parse_rational_arg(*f.cp1_k, "--cp1-k");
  if (f.v) cfg.v = sasakicone::parse_rational_list(*f.v, "--v");
  if (f.klass) cfg.class_coeffs = sasakicone::parse_rational_list(*f.klass, "--class");
  if (f.order1) cfg.order1 = *f.order1;
  if (f.order2) cfg.order2 = *f.order2;
  if (f.grid_n) cfg.grid_n = *f.grid_n;
  cfg.out = f.out;
  cfg.csv = f.csv;
  cfg.svg = f.svg;
  if (!f.out_dir.empty()) cfg.out_dir = f.out_dir;
  if (!f.config.empty()) sasakicone::merge_config_file(cfg, f.config);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal and cscS rays in Sasaki cones of joins, in exact arithmetic"};
  app.set_version_flag("--version", sasakicone::kVersion);
  app.require_subcommand(1);
  RawFlags f;

  auto* profile = app.add_subcommand("profile", "solve the profile F for one ray c");
  add_setup_flags(profile, f);
  profile->add_option("--c", f.c, "ray parameter in (-1,1)");

  auto* scan = app.add_subcommand("scan", "classify the rays c in (-1,1)");
  add_setup_flags(scan, f);
  scan->add_option("--grid-n", f.grid_n, "number of grid rays (>= 8)");
  scan->add_option("--width", f.width, "boundary bracket width");
  scan->add_option("--root-width", f.root_width, "cscS root isolation width");
  scan->add_option("--csv", f.csv, "CSV table output");
  scan->add_option("--svg", f.svg, "SVG cone diagram output");

  auto* roots = app.add_subcommand("csc-roots", "isolate the cscS rays");
  add_setup_flags(roots, f);
  roots->add_option("--root-width", f.root_width, "isolation width");

  auto* twins = app.add_subcommand("twins", "find rays sharing the profile of c");
  add_setup_flags(twins, f);
  twins->add_option("--c", f.c, "ray parameter in (-1,1)");
  twins->add_option("--cp1-k", f.cp1_k, "use the CP^1 closed form with this negative scalar constant");

  auto* toric = app.add_subcommand("toric", "weighted scalar curvature on N1 x CP^n");
  toric->add_option("--d", f.d, "complex dimension of N1")->required();
  toric->add_option("--n", f.n, "dimension of CP^n")->required();
  toric->add_option("--p", f.p, "weight (default d+n+2)");
  toric->add_option("--v", f.v, "potential slope, comma-separated");
  toric->add_option("--lambda", f.lambda, "potential constant");
  toric->add_option("--out", f.out, "write JSON here instead of stdout");

  auto* join = app.add_subcommand("join", "join smoothness, vectors and polarization");
  join->add_option("--l1", f.l1);
  join->add_option("--l2", f.l2);
  join->add_option("--order1", f.order1, "order of the first factor");
  join->add_option("--order2", f.order2, "order of the second factor");
  join->add_option("--dim1", f.dim1, "Sasaki cone dimension of the first factor");
  join->add_option("--dim2", f.dim2, "Sasaki cone dimension of the second factor");
  join->add_option("--ke-index", f.ke_index, "negative KE index of N1");
  join->add_option("--d", f.d, "complex dimension of N1");
  join->add_option("--class", f.klass, "Kahler class coefficients, comma-separated");
  join->add_option("--out", f.out, "write JSON here instead of stdout");

  auto* repro = app.add_subcommand("reproduce", "rerun every worked example");
  repro->add_option("--out-dir", f.out_dir, "artifact directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return sasakicone::kExitConfig;
  }

  try {
    const auto cfg = to_config(app.get_subcommands().front()->get_name(), f);
    return sasakicone::run(cfg);
  } catch (const sasakicone::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return sasakicone::kExitConfig;
  }
}
