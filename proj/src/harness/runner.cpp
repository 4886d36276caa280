#include "harness/runner.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>

#include "core/katz.hpp"
#include "harness/gauss_cache.hpp"
#include "harness/report_io.hpp"
#include "harness/suites.hpp"

namespace charsum::harness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct FieldData {
  FieldSpec spec;
  std::shared_ptr<const TowerChars> chars;
  std::shared_ptr<const TowerGauss> gauss;
};

using Task = std::function<VerificationReport()>;

void add_field_tasks(const RunConfig& config, const FieldData& fd, std::vector<Task>& tasks) {
  const TolerancePolicy tol = config.tolerance;
  const bool oracle = config.oracle;
  const auto tc = fd.chars;
  const auto gs = fd.gauss;
  const Elem one = tc->tower().base().one();
  auto ctx_at = [tc, gs](Elem a, unsigned octic) { return KatzContext(tc, a, octic, gs); };

  for (Suite s : config.suites_for(fd.spec)) {
    switch (s) {
      case Suite::Classical:
        tasks.push_back([=] { return run_classical(*tc, *gs, tol); });
        break;
      case Suite::Eisenstein:
        tasks.push_back([=] { return run_eisenstein(*tc, *gs, tol); });
        break;
      case Suite::Hypergeometric:
        tasks.push_back([=] { return run_hypergeometric(*tc, tol, oracle); });
        break;
      case Suite::NormJacobi:
        tasks.push_back([=] { return run_norm_jacobi(ctx_at(one, 1), tol, oracle); });
        break;
      case Suite::HSums:
        tasks.push_back([=] { return run_h_sums(ctx_at(one, 1), tol); });
        break;
      case Suite::ZSum:
        tasks.push_back([=] { return run_z_sum(tc->base(), tol); });
        break;
      case Suite::Mellin:
        for (Elem a : a_values(tc->tower(), config.a_sweep))
          tasks.push_back([=] { return run_mellin(ctx_at(a, 1), tol, oracle); });
        break;
      case Suite::Master: {
        const std::vector<unsigned> octics = config.octic_variants ? std::vector<unsigned>{1, 3, 5, 7}
                                                                   : std::vector<unsigned>{1};
        for (unsigned o : octics) {
          for (Elem a : a_values(tc->tower(), config.a_sweep))
            tasks.push_back([=] { return run_master(ctx_at(a, o), tol); });
          tasks.push_back([=] { return run_master_bridge(ctx_at(one, o), tol); });
        }
        break;
      }
    }
  }
}

void run_tasks(const std::vector<Task>& tasks, unsigned threads, std::vector<VerificationReport>& out,
               std::vector<std::exception_ptr>& errors, bool verbose) {
  out.assign(tasks.size(), {});
  errors.assign(tasks.size(), nullptr);
  std::atomic<std::size_t> next{0};
  std::mutex log_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto t0 = Clock::now();
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
        continue;
      }
      out[i].wall_seconds = seconds_since(t0);
      if (verbose) {
        const auto& r = out[i];
        std::lock_guard lock(log_mu);
        std::fprintf(stderr, "[%s q=%llu a=%s octic=%u] %zu checks, %zu failed, max dev %.2e, %.2fs\n", r.suite.c_str(),
                     static_cast<unsigned long long>(r.q), r.a_index ? std::to_string(*r.a_index).c_str() : "-",
                     r.octic, r.checks.size(), r.failures(), r.max_deviation, r.wall_seconds);
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotPrime:
    case ErrorCode::EvenCharacteristic:
    case ErrorCode::Unsupported:
    case ErrorCode::Parse:
      return kExitConfig;
    case ErrorCode::TooLarge:
      return kExitField;
    case ErrorCode::Io:
    case ErrorCode::Corrupt:
    case ErrorCode::FieldMismatch:
      return kExitIo;
    case ErrorCode::Internal:
      return kExitInternal;
  }
  return kExitInternal;
}

unsigned resolve_threads(const RunConfig& config) {
  if (const char* env = std::getenv("CHARSUM_THREADS"); env && *env) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  if (config.threads > 0) return config.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::size_t RunResult::total_checks() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.checks.size();
  return n;
}

std::size_t RunResult::failed_checks() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.failures();
  return n;
}

double RunResult::max_deviation() const {
  double m = 0.0;
  for (const auto& r : reports)
    if (!(r.max_deviation <= m)) m = r.max_deviation;
  return m;
}

RunResult run(const RunConfig& config) {
  const auto t0 = Clock::now();
  RunResult result;
  auto fail = [&](int code, const std::string& msg) {
    result.exit_code = code;
    result.error = msg;
    result.wall_seconds = seconds_since(t0);
    return result;
  };

  try {
    config.validate();
  } catch (const Error& e) {
    return fail(exit_code_for(e.code()), e.what());
  }

  std::vector<FieldData> fields;
  for (const auto& spec : config.fields) {
    try {
      auto tc = TowerChars::build(spec.p, spec.t);
      auto gauss = std::make_shared<TowerGauss>(*tc);
      fields.push_back({spec, std::move(tc), std::move(gauss)});
    } catch (const std::exception& e) {
      return fail(kExitField, "field q = " + std::to_string(spec.q()) + ": " + e.what());
    }
  }

  if (!config.gauss_cache_dir.empty()) {
    try {
      for (const auto& fd : fields)
        for (const GaussTable* table : {&fd.gauss->base, &fd.gauss->top}) {
          const auto path = gauss_cache_file(config.gauss_cache_dir, table->group().field().size());
          if (std::filesystem::exists(path)) load_gauss_tables(*table, path);
        }
    } catch (const Error& e) {
      return fail(exit_code_for(e.code()), e.what());
    }
  }

  std::vector<Task> tasks;
  for (const auto& fd : fields) add_field_tasks(config, fd, tasks);
  std::vector<std::exception_ptr> errors;
  run_tasks(tasks, resolve_threads(config), result.reports, errors, config.verbose);
  for (const auto& err : errors) {
    if (!err) continue;
    try {
      std::rethrow_exception(err);
    } catch (const std::exception& e) {
      return fail(kExitInternal, std::string("suite task failed: ") + e.what());
    }
  }
  result.exit_code = result.failed_checks() == 0 ? kExitOk : kExitCheckFailed;
  result.wall_seconds = seconds_since(t0);

  try {
    if (!config.gauss_cache_dir.empty()) {
      std::filesystem::create_directories(config.gauss_cache_dir);
      for (const auto& fd : fields)
        for (const GaussTable* table : {&fd.gauss->base, &fd.gauss->top})
          if (table->size() > 0)
            cache_gauss_tables(*table, gauss_cache_file(config.gauss_cache_dir, table->group().field().size()));
    }
    if (!config.json_out.empty()) write_text_file(config.json_out, report_json(config, result));
    if (const auto csv = config.csv_path(); !csv.empty()) write_text_file(csv, report_csv(result));
  } catch (const std::exception& e) {
    const int code = kExitIo;
    result.exit_code = code;
    result.error = e.what();
  }
  return result;
}

}  // namespace charsum::harness
