#include "charsum/charsum.h"

#include <memory>
#include <new>
#include <string>

#include "core/classical_sums.hpp"
#include "core/hypergeometric.hpp"
#include "core/katz.hpp"
#include "harness/config.hpp"
#include "harness/gauss_cache.hpp"
#include "harness/report_io.hpp"
#include "harness/runner.hpp"

#ifndef CHARSUM_VERSION
#define CHARSUM_VERSION "0.0.0"
#endif

using namespace charsum;

struct charsum_tower {
  std::shared_ptr<const TowerChars> chars;
  std::shared_ptr<const TowerGauss> gauss;
};

struct charsum_katz {
  std::unique_ptr<KatzContext> ctx;
  std::vector<Complex> v;
};

struct charsum_config {
  harness::RunConfig config;
};

struct charsum_result {
  harness::RunConfig config;
  harness::RunResult result;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

charsum_status set_error(charsum_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs fn, mapping exceptions to status codes. ErrorCode values match the C enum.
template <class Fn>
charsum_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    return set_error(static_cast<charsum_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CHARSUM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CHARSUM_ERR_INTERNAL, e.what());
  }
}

charsum_complex to_c(Complex z) { return {z.real(), z.imag()}; }

const CharGroup& group_of(const charsum_tower* t, charsum_level level) {
  return level == CHARSUM_TOP ? t->chars->top() : t->chars->base();
}

MultChar char_of(const CharGroup& g, std::uint64_t index) {
  if (index >= g.order())
    throw Error(ErrorCode::InvalidArgument,
                "character index " + std::to_string(index) + " out of range [0, " + std::to_string(g.order()) + ")");
  return g.character(index);
}

Elem elem_of(const Field& f, std::uint32_t x) {
  if (!f.contains(Elem{x}))
    throw Error(ErrorCode::InvalidArgument, "element " + std::to_string(x) + " not in F_" + std::to_string(f.size()));
  return Elem{x};
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* charsum_version(void) { return CHARSUM_VERSION; }

const char* charsum_status_string(charsum_status status) {
  switch (status) {
    case CHARSUM_OK: return "ok";
    case CHARSUM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CHARSUM_ERR_NOT_PRIME: return "not prime";
    case CHARSUM_ERR_EVEN_CHARACTERISTIC: return "even characteristic";
    case CHARSUM_ERR_TOO_LARGE: return "field too large";
    case CHARSUM_ERR_UNSUPPORTED: return "unsupported";
    case CHARSUM_ERR_FIELD_MISMATCH: return "field mismatch";
    case CHARSUM_ERR_PARSE: return "parse error";
    case CHARSUM_ERR_IO: return "I/O error";
    case CHARSUM_ERR_CORRUPT: return "corrupt data";
    case CHARSUM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* charsum_last_error(void) { return g_last_error.c_str(); }

int charsum_status_exit_code(charsum_status status) {
  if (status == CHARSUM_OK) return harness::kExitOk;
  return harness::exit_code_for(static_cast<ErrorCode>(status));
}

charsum_status charsum_parse_field(const char* text, uint32_t* p, uint32_t* t) {
  return guarded([&] {
    require(text && p && t, "null argument");
    const auto f = harness::parse_field(text);
    *p = f.p;
    *t = f.t;
    return CHARSUM_OK;
  });
}

charsum_status charsum_tower_create(uint32_t p, uint32_t t, charsum_tower** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    auto chars = TowerChars::build(p, t);
    auto gauss = std::make_shared<TowerGauss>(*chars);
    *out = new charsum_tower{std::move(chars), std::move(gauss)};
    return CHARSUM_OK;
  });
}

void charsum_tower_destroy(charsum_tower* tower) { delete tower; }

uint64_t charsum_tower_q(const charsum_tower* tower) { return tower ? tower->chars->q() : 0; }

uint32_t charsum_tower_p(const charsum_tower* tower) { return tower ? tower->chars->tower().p() : 0; }

uint32_t charsum_tower_generator(const charsum_tower* tower, charsum_level level) {
  if (!tower) return 0;
  return level == CHARSUM_TOP ? tower->chars->tower().g2().v : tower->chars->tower().g().v;
}

charsum_status charsum_tower_log(const charsum_tower* tower, charsum_level level, uint32_t x, uint64_t* out) {
  return guarded([&] {
    require(tower && out, "null argument");
    const Field& f = group_of(tower, level).field();
    const Elem e = elem_of(f, x);
    require(e.v != 0, "log of zero");
    *out = f.log(e);
    return CHARSUM_OK;
  });
}

charsum_status charsum_tower_exp(const charsum_tower* tower, charsum_level level, uint64_t k, uint32_t* out) {
  return guarded([&] {
    require(tower && out, "null argument");
    *out = group_of(tower, level).field().exp(k).v;
    return CHARSUM_OK;
  });
}

charsum_status charsum_tower_norm(const charsum_tower* tower, uint32_t z, uint32_t* out) {
  return guarded([&] {
    require(tower && out, "null argument");
    const Tower& t = tower->chars->tower();
    *out = t.norm(elem_of(t.top(), z)).v;
    return CHARSUM_OK;
  });
}

charsum_status charsum_gauss(const charsum_tower* tower, charsum_level level, uint64_t chi, charsum_complex* out) {
  return guarded([&] {
    require(tower && out, "null argument");
    const GaussTable& table = level == CHARSUM_TOP ? tower->gauss->top : tower->gauss->base;
    *out = to_c(table(char_of(group_of(tower, level), chi)));
    return CHARSUM_OK;
  });
}

charsum_status charsum_jacobi(const charsum_tower* tower, charsum_level level, uint64_t a, uint64_t b,
                              charsum_complex* out) {
  return guarded([&] {
    require(tower && out, "null argument");
    const CharGroup& g = group_of(tower, level);
    *out = to_c(jacobi(char_of(g, a), char_of(g, b)));
    return CHARSUM_OK;
  });
}

charsum_status charsum_hyp2f1(const charsum_tower* tower, uint64_t a, uint64_t b, uint64_t c, uint32_t x,
                              charsum_complex* out) {
  return guarded([&] {
    require(tower && out, "null argument");
    const CharGroup& g = tower->chars->base();
    *out = to_c(hyp2f1(char_of(g, a), char_of(g, b), char_of(g, c), elem_of(g.field(), x)));
    return CHARSUM_OK;
  });
}

charsum_status charsum_gauss_table_save(const charsum_tower* tower, charsum_level level, const char* path) {
  return guarded([&] {
    require(tower && path, "null argument");
    const GaussTable& table = level == CHARSUM_TOP ? tower->gauss->top : tower->gauss->base;
    table.fill();
    harness::cache_gauss_tables(table, path);
    return CHARSUM_OK;
  });
}

charsum_status charsum_gauss_table_load(const charsum_tower* tower, charsum_level level, const char* path,
                                        size_t* rows) {
  return guarded([&] {
    require(tower && path, "null argument");
    const GaussTable& table = level == CHARSUM_TOP ? tower->gauss->top : tower->gauss->base;
    const std::size_t n = harness::load_gauss_tables(table, path);
    if (rows) *rows = n;
    return CHARSUM_OK;
  });
}

charsum_status charsum_katz_create(const charsum_tower* tower, uint32_t a, unsigned octic, charsum_katz** out) {
  return guarded([&] {
    require(tower && out, "null argument");
    require(octic == 1 || octic == 3 || octic == 5 || octic == 7, "octic must be 1, 3, 5 or 7");
    const Elem ae = elem_of(tower->chars->tower().base(), a);
    require(ae.v != 0, "a must be nonzero");
    auto holder = std::make_unique<charsum_katz>();
    holder->ctx = std::make_unique<KatzContext>(tower->chars, ae, octic, tower->gauss);
    holder->v = katz_V_table(*holder->ctx);
    *out = holder.release();
    return CHARSUM_OK;
  });
}

void charsum_katz_destroy(charsum_katz* ctx) { delete ctx; }

charsum_status charsum_katz_tau(const charsum_katz* ctx, charsum_complex* out) {
  return guarded([&] {
    require(ctx && out, "null argument");
    *out = to_c(ctx->ctx->tau());
    return CHARSUM_OK;
  });
}

charsum_status charsum_katz_P(const charsum_katz* ctx, uint32_t j, uint32_t k, charsum_complex* out) {
  return guarded([&] {
    require(ctx && out, "null argument");
    const Field& f = ctx->ctx->base_field();
    *out = to_c(katz_P(*ctx->ctx, elem_of(f, j), elem_of(f, k)));
    return CHARSUM_OK;
  });
}

charsum_status charsum_katz_V(const charsum_katz* ctx, uint32_t j, charsum_complex* out) {
  return guarded([&] {
    require(ctx && out, "null argument");
    *out = to_c(ctx->v[elem_of(ctx->ctx->base_field(), j).v]);
    return CHARSUM_OK;
  });
}

charsum_status charsum_katz_mellin_S(const charsum_katz* ctx, uint64_t chi, charsum_complex* out) {
  return guarded([&] {
    require(ctx && out, "null argument");
    *out = to_c(mellin_S(ctx->v, ctx->ctx->base_field(), char_of(ctx->ctx->base(), chi)));
    return CHARSUM_OK;
  });
}

charsum_status charsum_config_create(charsum_config** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    auto* c = new charsum_config;
    c->config.fields = harness::default_fields();
    *out = c;
    return CHARSUM_OK;
  });
}

void charsum_config_destroy(charsum_config* config) { delete config; }

charsum_status charsum_config_set(charsum_config* config, const char* key, const char* value) {
  return guarded([&] {
    require(config && key && value, "null argument");
    config->config.set(key, value);
    return CHARSUM_OK;
  });
}

charsum_status charsum_config_load_file(charsum_config* config, const char* path) {
  return guarded([&] {
    require(config && path, "null argument");
    config->config.load_file(path);
    return CHARSUM_OK;
  });
}

charsum_status charsum_config_load_text(charsum_config* config, const char* text) {
  return guarded([&] {
    require(config && text, "null argument");
    config->config.load_text(text);
    return CHARSUM_OK;
  });
}

charsum_status charsum_run(const charsum_config* config, charsum_result** out) {
  return guarded([&] {
    require(config && out, "null argument");
    auto r = std::make_unique<charsum_result>();
    r->config = config->config;
    r->result = harness::run(r->config);
    *out = r.release();
    return CHARSUM_OK;
  });
}

void charsum_result_destroy(charsum_result* result) { delete result; }

int charsum_result_exit_code(const charsum_result* r) { return r ? r->result.exit_code : harness::kExitInternal; }
const char* charsum_result_error(const charsum_result* r) { return r ? r->result.error.c_str() : ""; }
size_t charsum_result_total_checks(const charsum_result* r) { return r ? r->result.total_checks() : 0; }
size_t charsum_result_failed_checks(const charsum_result* r) { return r ? r->result.failed_checks() : 0; }
double charsum_result_max_deviation(const charsum_result* r) { return r ? r->result.max_deviation() : 0.0; }
double charsum_result_wall_seconds(const charsum_result* r) { return r ? r->result.wall_seconds : 0.0; }

const char* charsum_result_json(const charsum_result* r) {
  if (!r) return "";
  auto* mut = const_cast<charsum_result*>(r);
  if (mut->json.empty()) mut->json = harness::report_json(r->config, r->result);
  return r->json.c_str();
}

size_t charsum_result_report_count(const charsum_result* r) { return r ? r->result.reports.size() : 0; }

charsum_status charsum_result_report(const charsum_result* r, size_t index, charsum_report_summary* out) {
  return guarded([&] {
    require(r && out, "null argument");
    require(index < r->result.reports.size(), "report index out of range");
    const auto& rep = r->result.reports[index];
    *out = {rep.suite.c_str(),
            rep.q,
            rep.a_index ? static_cast<int64_t>(*rep.a_index) : -1,
            rep.octic,
            rep.checks.size(),
            rep.failures(),
            rep.max_deviation,
            rep.wall_seconds};
    return CHARSUM_OK;
  });
}

}  // extern "C"
