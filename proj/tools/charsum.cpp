// Command line front end. Everything goes through the C interface.
#include <charsum/charsum.h>

#include <algorithm>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

struct TowerDeleter {
  void operator()(charsum_tower* t) const { charsum_tower_destroy(t); }
};
struct KatzDeleter {
  void operator()(charsum_katz* k) const { charsum_katz_destroy(k); }
};
struct ConfigDeleter {
  void operator()(charsum_config* c) const { charsum_config_destroy(c); }
};
struct ResultDeleter {
  void operator()(charsum_result* r) const { charsum_result_destroy(r); }
};

// Thrown after an error has been printed; carries the exit code.
struct Exit {
  int code;
};

void check(charsum_status s, const char* what) {
  if (s == CHARSUM_OK) return;
  std::fprintf(stderr, "charsum: %s: %s (%s)\n", what, charsum_last_error(), charsum_status_string(s));
  throw Exit{charsum_status_exit_code(s)};
}

std::unique_ptr<charsum_tower, TowerDeleter> open_tower(const std::string& q) {
  uint32_t p = 0, t = 0;
  check(charsum_parse_field(q.c_str(), &p, &t), "field");
  charsum_tower* tower = nullptr;
  check(charsum_tower_create(p, t, &tower), "field construction");
  return std::unique_ptr<charsum_tower, TowerDeleter>(tower);
}

void print_complex(charsum_complex z) { std::printf("%.15g %.15g\n", z.re, z.im); }

struct RunOptions {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
};

void add_run_options(CLI::App* app, RunOptions& o) {
  app->add_option("--config,-c", o.config_path, "Config file (key = value lines)");
  auto opt = [&](const char* flag, const char* key, const char* help) {
    app->add_option_function<std::string>(
        flag, [&o, key](const std::string& v) { o.overrides.emplace_back(key, v); }, help);
  };
  opt("--q,--fields", "fields", "Field orders, comma separated (27 or 3^3)");
  opt("--suite,--suites", "suites", "Suites, comma separated, or all");
  opt("--a", "a", "a sweep: all, auto or sample-N");
  opt("--out", "out", "JSON report path");
  opt("--csv", "csv", "CSV summary path (default: JSON path with .csv)");
  opt("--threads", "threads", "Worker threads (0: hardware concurrency)");
  opt("--gauss-cache", "gauss_cache", "Directory for cached Gauss tables");
  opt("--tol-floor", "tol_floor", "Tolerance floor");
  opt("--tol-scale", "tol_scale", "Tolerance scale per term");
  auto flag = [&](const char* name, const char* key, const char* help) {
    app->add_flag_callback(name, [&o, key] { o.overrides.emplace_back(key, "true"); }, help);
  };
  flag("--octic-variants", "octic_variants", "Repeat master for all four octic characters");
  flag("--oracle", "oracle", "Also compare against literal summation oracles");
  flag("--verbose,-v", "verbose", "Print one line per finished task");
}

int do_run(const RunOptions& o) {
  charsum_config* raw = nullptr;
  check(charsum_config_create(&raw), "config");
  std::unique_ptr<charsum_config, ConfigDeleter> cfg(raw);
  if (!o.config_path.empty()) check(charsum_config_load_file(cfg.get(), o.config_path.c_str()), "config");
  for (const auto& [k, v] : o.overrides) check(charsum_config_set(cfg.get(), k.c_str(), v.c_str()), "config");

  charsum_result* rraw = nullptr;
  check(charsum_run(cfg.get(), &rraw), "run");
  std::unique_ptr<charsum_result, ResultDeleter> res(rraw);
  const int code = charsum_result_exit_code(res.get());
  if (code > 1) {
    std::fprintf(stderr, "charsum: %s\n", charsum_result_error(res.get()));
    return code;
  }
  for (size_t i = 0; i < charsum_result_report_count(res.get()); ++i) {
    charsum_report_summary s{};
    check(charsum_result_report(res.get(), i, &s), "report");
    if (s.failed == 0) continue;
    std::printf("FAIL %s q=%llu a=%s octic=%u: %zu of %zu checks failed, max deviation %.3g\n", s.suite,
                static_cast<unsigned long long>(s.q), s.a_index < 0 ? "-" : std::to_string(s.a_index).c_str(),
                s.octic, s.failed, s.checks, s.max_deviation);
  }
  std::printf("%s: %zu checks, %zu failed, max deviation %.3g, %.2fs\n", code == 0 ? "PASS" : "FAIL",
              charsum_result_total_checks(res.get()), charsum_result_failed_checks(res.get()),
              charsum_result_max_deviation(res.get()), charsum_result_wall_seconds(res.get()));
  return code;
}

struct EvalOptions {
  std::string what;
  std::string q;
  std::string level = "base";
  uint64_t chi = 0, chi2 = 0;
  uint32_t a = 1, j = 0, k = 0;
  unsigned octic = 1;
};

int do_eval(const EvalOptions& o) {
  auto tower = open_tower(o.q);
  const charsum_level level = o.level == "top" ? CHARSUM_TOP : CHARSUM_BASE;
  charsum_complex z{};
  if (o.what == "gauss") {
    check(charsum_gauss(tower.get(), level, o.chi, &z), "gauss");
  } else if (o.what == "jacobi") {
    check(charsum_jacobi(tower.get(), level, o.chi, o.chi2, &z), "jacobi");
  } else {
    charsum_katz* raw = nullptr;
    check(charsum_katz_create(tower.get(), o.a, o.octic, &raw), "context");
    std::unique_ptr<charsum_katz, KatzDeleter> ctx(raw);
    if (o.what == "tau") check(charsum_katz_tau(ctx.get(), &z), "tau");
    if (o.what == "P") check(charsum_katz_P(ctx.get(), o.j, o.k, &z), "P");
    if (o.what == "V") check(charsum_katz_V(ctx.get(), o.j, &z), "V");
    if (o.what == "S") check(charsum_katz_mellin_S(ctx.get(), o.chi, &z), "S");
  }
  print_complex(z);
  return 0;
}

struct TableOptions {
  std::string q;
  std::string level = "base";
  std::string out;
  std::string load;
};

int do_table(const TableOptions& o) {
  auto tower = open_tower(o.q);
  const charsum_level level = o.level == "top" ? CHARSUM_TOP : CHARSUM_BASE;
  if (!o.load.empty()) {
    size_t rows = 0;
    check(charsum_gauss_table_load(tower.get(), level, o.load.c_str(), &rows), "load");
    std::printf("%s: %zu rows, spot checks passed\n", o.load.c_str(), rows);
  }
  if (!o.out.empty()) {
    check(charsum_gauss_table_save(tower.get(), level, o.out.c_str()), "save");
    std::printf("wrote %s\n", o.out.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite field character sums and identity checks", "charsum"};
  app.set_version_flag("--version", std::string(charsum_version()));
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Run verification suites");
  add_run_options(run, run_opts);

  EvalOptions ev;
  auto* eval = app.add_subcommand("eval", "Evaluate one sum");
  eval->add_option("what", ev.what, "gauss, jacobi, tau, P, V or S")
      ->required()
      ->check(CLI::IsMember({"gauss", "jacobi", "tau", "P", "V", "S"}));
  eval->add_option("--q", ev.q, "Field order")->required();
  eval->add_option("--level", ev.level, "base (F_q) or top (F_{q^2}) for gauss/jacobi")
      ->check(CLI::IsMember({"base", "top"}));
  eval->add_option("--chi", ev.chi, "Character index");
  eval->add_option("--chi2", ev.chi2, "Second character index (jacobi)");
  eval->add_option("--a", ev.a, "Parameter a as a packed element");
  eval->add_option("--j", ev.j, "j as a packed element");
  eval->add_option("--k", ev.k, "k as a packed element");
  eval->add_option("--octic", ev.octic, "Octic choice: 1, 3, 5 or 7");

  TableOptions tab;
  auto* table = app.add_subcommand("gauss-table", "Write or validate a cached Gauss table");
  table->add_option("--q", tab.q, "Field order")->required();
  table->add_option("--level", tab.level, "base or top")->check(CLI::IsMember({"base", "top"}));
  table->add_option("--out", tab.out, "Compute the full table and write it here");
  table->add_option("--load", tab.load, "Validate an existing table");

  // Bare flags mean "run": charsum --q 7 --suite master.
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && args[0].rfind("-", 0) == 0 && args[0] != "--help" && args[0] != "-h" &&
      args[0] != "--version")
    args.insert(args.begin(), "run");
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*run) return do_run(run_opts);
    if (*eval) return do_eval(ev);
    if (*table) return do_table(tab);
  } catch (const Exit& e) {
    return e.code;
  }
  return 0;
}
