#include "core/katz.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <tuple>

#include "core/hypergeometric.hpp"

namespace charsum {

KatzContext::KatzContext(std::shared_ptr<const TowerChars> tc, Elem a, unsigned octic_variant,
                         std::shared_ptr<const TowerGauss> gauss)
    : tc_(std::move(tc)),
      gauss_(gauss ? std::move(gauss) : std::make_shared<const TowerGauss>(*tc_)),
      a_(a),
      octic_variant_(octic_variant),
      m8_(tc_->octic(octic_variant)) {
  if (!tc_->tower().q_is_3_mod_4())
    throw Error(ErrorCode::Unsupported, "Katz sums are implemented for q = 3 (mod 4); q = " + std::to_string(q()));
  if (a_.v == 0 || !base_field().contains(a_)) throw Error(ErrorCode::InvalidArgument, "a must be a nonzero element of F_q");
  if (&gauss_->base.group() != &tc_->base()) throw Error(ErrorCode::FieldMismatch, "Gauss memo belongs to another tower");

  const Field& top = top_field();
  const std::uint64_t n = top.unit_order();
  const Elem minus_a = tower().embed(base_field().neg(a_));
  const std::uint64_t r = m8_.index() * top.log(minus_a) % n;
  const double half_arg = std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  tau_ = -std::sqrt(static_cast<double>(q())) * std::polar(1.0, half_arg);
}

Complex KatzContext::gauss_sum(const MultChar& chi) const {
  if (&chi.group() == &tc_->base()) return gauss_->base(chi);
  if (&chi.group() == &tc_->top()) return gauss_->top(chi);
  throw Error(ErrorCode::FieldMismatch, "character is not on this tower");
}

Complex katz_P(const KatzContext& ctx, Elem j, Elem k) {
  const Field& f = ctx.base_field();
  const CharGroup& grp = ctx.base();
  const MultChar phi = grp.quadratic();
  const Elem a = ctx.a();
  const Elem s = f.square(f.add(j, k));
  const Elem d = f.square(f.sub(j, k));
  Complex acc{};
  for (std::uint32_t xv = 1; xv < f.size(); ++xv) {
    const Elem x{xv};
    const Elem a_over_x = f.div(a, x);
    acc += phi(f.sub(a_over_x, x)) * grp.psi(f.add(f.mul(x, s), f.mul(a_over_x, d)));
  }
  Complex out = acc / ctx.gauss_sum(phi);
  out += static_cast<double>(delta(j, k));
  out += phi(f.neg(f.one())) * static_cast<double>(delta(j, f.neg(k)));
  return out;
}

namespace {

template <class Fiber>
Complex v_sum(const KatzContext& ctx, Elem j, Fiber&& fiber) {
  const Field& f = ctx.base_field();
  const Tower& t = ctx.tower();
  const Field& top = t.top();
  const MultChar phi = ctx.base().quadratic();
  if (j.v == 0) return {};
  const Elem j2 = t.embed(f.square(j));
  Complex acc{};
  for (Elem z : fiber(t, ctx.a())) acc += ctx.m8()(z) * ctx.top().psi(top.mul(j2, z));
  return phi(j) * acc / ctx.tau();
}

}  // namespace

Complex katz_V(const KatzContext& ctx, Elem j) { return v_sum(ctx, j, norm_fiber); }

Complex katz_V_scan(const KatzContext& ctx, Elem j) { return v_sum(ctx, j, norm_fiber_scan); }

std::vector<Complex> katz_V_table(const KatzContext& ctx) {
  std::vector<Complex> out(ctx.q());
  for (std::uint32_t j = 0; j < ctx.q(); ++j) out[j] = katz_V(ctx, Elem{j});
  return out;
}

PTable::PTable(const KatzContext& ctx) : q_(ctx.q()), values_(q_ * q_) {
  for (std::uint32_t j = 0; j < q_; ++j)
    for (std::uint32_t k = 0; k < q_; ++k) values_[j * q_ + k] = katz_P(ctx, Elem{j}, Elem{k});
}

Complex mellin_S(const std::vector<Complex>& v_table, const Field& f, const MultChar& chi) {
  Complex acc{};
  for (std::uint32_t j = 1; j < f.size(); ++j) acc += chi(Elem{j}) * v_table[j];
  return acc;
}

Complex mellin_S(const KatzContext& ctx, const MultChar& chi) {
  return mellin_S(katz_V_table(ctx), ctx.base_field(), chi);
}

Complex mellin_S_closed(const KatzContext& ctx, const MultChar& chi) {
  if (!chi.is_odd()) return {};
  const MultChar nu = decompose_odd(chi);
  const MultChar phi = ctx.base().quadratic();
  const MultChar nu_n = ctx.chars().norm_compose(nu);
  const Complex tau_inv = 1.0 / ctx.tau();
  const Elem a = ctx.a();
  return nu.conj()(a) * tau_inv * ctx.gauss_sum(nu_n * ctx.m8()) +
         (phi * nu.conj())(a) * tau_inv * ctx.gauss_sum(nu_n * ctx.m8().pow(5));
}

Complex double_mellin_S(const KatzContext& ctx, const MultChar& chi1, const MultChar& chi2) {
  const auto v = katz_V_table(ctx);
  return mellin_S(v, ctx.base_field(), chi1) * mellin_S(v, ctx.base_field(), chi2);
}

Complex double_mellin_S_literal(const std::vector<Complex>& v_table, const Field& f, const MultChar& chi1,
                                const MultChar& chi2) {
  Complex acc{};
  for (std::uint32_t j = 1; j < f.size(); ++j)
    for (std::uint32_t k = 1; k < f.size(); ++k)
      acc += chi1(Elem{j}) * chi2(Elem{k}) * v_table[j] * v_table[k];
  return acc;
}

Complex double_mellin_S_closed(const KatzContext& ctx, const MultChar& chi1, const MultChar& chi2) {
  if (!chi1.is_odd() || !chi2.is_odd()) return {};
  const MultChar nu1 = decompose_odd(chi1);
  const MultChar mu = nu1 * decompose_odd(chi2);
  const MultChar phi = ctx.base().quadratic();
  const double q = static_cast<double>(ctx.q());
  Complex acc{};
  for (int i = 0; i < 2; ++i) {
    const MultChar d = mu * phi.pow(i);
    const MultChar d_bar = d.conj();
    acc += d_bar(ctx.a()) * q / ctx.gauss_sum(ctx.chars().norm_compose(d_bar)) * katz_Y_closed(ctx, d, nu1);
  }
  return acc;
}

Complex katz_h(const MultChar& d, Elem j) {
  const Field& f = d.group().field();
  if (j.v == 0) throw Error(ErrorCode::InvalidArgument, "h(D,j) needs j != 0");
  const MultChar phi = d.group().quadratic();
  const MultChar phi_dbar2 = phi * d.conj().pow(2);
  const Elem one = f.one();
  const Elem jp = f.square(f.add(j, one));
  const Elem jm = f.square(f.sub(j, one));
  Complex acc{};
  for (std::uint32_t xv = 1; xv < f.size(); ++xv) {
    const Elem x{xv};
    acc += d(x) * phi(f.sub(one, x)) * phi_dbar2(f.add(f.mul(x, jp), jm));
  }
  return acc;
}

Complex katz_h_closed(const MultChar& d, Elem j) {
  const Field& f = d.group().field();
  if (j.v == 0) throw Error(ErrorCode::InvalidArgument, "h(D,j) needs j != 0");
  const MultChar phi = d.group().quadratic();
  const Elem one = f.one();
  if (j == one || j == f.neg(one)) return -phi(j) * d.conj()(f.from_int(16)) * jacobi(d, phi);
  if (d.is_trivial()) return {};
  const Elem jm1 = f.sub(j, one);
  const Elem x = f.neg(f.square(f.div(f.add(j, one), jm1)));
  const Complex gd = gauss(d);
  return gauss(phi) * gd * gd / gauss(phi * d.pow(2)) * d.conj().pow(4)(jm1) * hyp2f1(d, d.pow(2) * phi, d * phi, x);
}

Complex double_mellin_T(const PTable& p, const Field& f, const MultChar& chi1, const MultChar& chi2) {
  Complex acc{};
  for (std::uint32_t j = 1; j < f.size(); ++j) {
    Complex row{};
    for (std::uint32_t k = 1; k < f.size(); ++k) row += chi2(Elem{k}) * p(Elem{j}, Elem{k});
    acc += chi1(Elem{j}) * row;
  }
  return acc;
}

Complex double_mellin_T(const KatzContext& ctx, const MultChar& chi1, const MultChar& chi2) {
  return double_mellin_T(PTable(ctx), ctx.base_field(), chi1, chi2);
}

Complex double_mellin_T_closed(const KatzContext& ctx, const MultChar& chi1, const MultChar& chi2) {
  if (!chi1.is_odd() || !chi2.is_odd()) return {};
  const MultChar mu = decompose_odd(chi1) * decompose_odd(chi2);
  const MultChar phi = ctx.base().quadratic();
  const Field& f = ctx.base_field();
  const double q = static_cast<double>(ctx.q());
  const Complex ratio = ctx.gauss_sum(phi * mu.pow(2)) / ctx.gauss_sum(phi);
  Complex acc{};
  for (int i = 0; i < 2; ++i) {
    const MultChar d = mu * phi.pow(i);
    Complex inner{};
    for (std::uint32_t j = 1; j < f.size(); ++j) inner += chi1(Elem{j}) * katz_h(d, Elem{j});
    inner += 2.0 * (q - 1.0) * static_cast<double>(delta(d));
    acc += d.conj()(ctx.a()) * ratio * inner;
  }
  return acc;
}

Complex katz_W(const MultChar& d, const MultChar& nu1) {
  const Field& f = d.group().field();
  const MultChar weight = d.group().quadratic() * nu1.pow(4);
  Complex acc{};
  for (std::uint32_t j = 1; j < f.size(); ++j) acc += weight(Elem{j}) * katz_h(d, Elem{j});
  return acc;
}

Complex katz_W_closed(const KatzContext& ctx, const MultChar& d, const MultChar& nu1) {
  if (d.is_trivial()) return {2.0, 0.0};
  const MultChar phi = ctx.base().quadratic();
  const Complex gd = ctx.gauss_sum(d);
  const double q = static_cast<double>(ctx.q());
  return -ctx.gauss_sum(phi) * gd * gd / (q * ctx.gauss_sum(phi * d.pow(2))) * katz_Y_closed(ctx, d, nu1);
}

Complex katz_Y(const KatzContext& ctx, const MultChar& d, const MultChar& nu1) {
  const Field& f = ctx.base_field();
  const MultChar nu1_4 = nu1.pow(4);
  Complex acc{};
  for (std::uint32_t j = 1; j < f.size(); ++j)
    acc += nu1_4(Elem{j}) * norm_restricted_jacobi(ctx.chars(), ctx.m8(), d, Elem{j});
  return acc;
}

Complex katz_Y_closed(const KatzContext& ctx, const MultChar& d, const MultChar& nu1) {
  const MultChar nu1_n = ctx.chars().norm_compose(nu1);
  const MultChar d_bar_n = ctx.chars().norm_compose(d.conj());
  return jacobi(nu1_n * ctx.m8(), d_bar_n) + jacobi(nu1_n * ctx.m8().pow(5), d_bar_n);
}

Complex weighted_h_double_sum(const MultChar& nu) {
  const Field& f = nu.group().field();
  const MultChar phi = nu.group().quadratic();
  const MultChar weight = phi * nu.pow(4);
  const Elem one = f.one();
  Complex acc{};
  for (std::uint32_t jv = 1; jv < f.size(); ++jv) {
    const Elem j{jv};
    const Elem jp = f.square(f.add(j, one));
    const Elem jm = f.square(f.sub(j, one));
    Complex inner{};
    for (std::uint32_t xv = 1; xv < f.size(); ++xv) {
      const Elem x{xv};
      inner += phi(x) * phi(f.sub(one, x)) * phi(f.add(f.mul(x, jp), jm));
    }
    acc += weight(j) * inner;
  }
  return acc;
}

Complex weighted_h_double_sum_closed(const KatzContext& ctx, const MultChar& nu) {
  const MultChar nu_n = ctx.chars().norm_compose(nu);
  const MultChar phi_n = ctx.chars().norm_compose(ctx.base().quadratic());
  return jacobi(nu_n * ctx.m8(), phi_n) + jacobi(nu_n * ctx.m8().pow(5), phi_n);
}

namespace {

std::int64_t exact_sqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

std::int64_t mod8(std::int64_t x) { return ((x % 8) + 8) % 8; }

}  // namespace

UV uv_decomposition(std::uint64_t q, std::uint64_t p) {
  if (q % 8 != 3) throw Error(ErrorCode::Unsupported, "u, v decomposition needs q = 3 (mod 8)");
  const auto qq = static_cast<std::int64_t>(q);
  const auto pp = static_cast<std::int64_t>(p);
  std::set<std::pair<std::int64_t, std::int64_t>> found;
  for (std::int64_t v = 1; v <= qq; ++v) {
    const std::int64_t u = exact_sqrt(qq * qq - 2 * v * v);
    if (u > 0 && u % pp != 0) found.insert({u, v});
  }
  if (found.empty()) throw Error(ErrorCode::Internal, "no decomposition q^2 = u^2 + 2v^2 with p not dividing u");
  if (found.size() > 1) throw Error(ErrorCode::Internal, "decomposition q^2 = u^2 + 2v^2 is not unique");
  auto [u, v] = *found.begin();
  if (mod8(u) != 7) u = -u;
  if (mod8(u) != 7) throw Error(ErrorCode::Internal, "neither sign of u is -1 (mod 8)");
  return {u, v};
}

std::int64_t weighted_h_double_sum_expected(std::uint64_t q, std::uint64_t p) {
  if (q % 8 == 7) return 2 * static_cast<std::int64_t>(q);
  return 2 * uv_decomposition(q, p).u;
}

UV cd_decomposition(std::uint64_t q, std::uint64_t p) {
  const auto qq = static_cast<std::int64_t>(q);
  const auto pp = static_cast<std::int64_t>(p);
  for (std::int64_t d = 0; 2 * d * d <= qq; ++d) {
    const std::int64_t c = exact_sqrt(qq - 2 * d * d);
    if (c >= 0 && c % pp != 0) return {c, d};
  }
  throw Error(ErrorCode::Unsupported, "no decomposition q = c^2 + 2d^2 with p not dividing c");
}

Complex z_sum(const CharGroup& base) {
  const MultChar phi = base.quadratic();
  const Field& f = base.field();
  Complex acc{};
  for (std::uint32_t j = 1; j < f.size(); ++j) acc += phi(Elem{j}) * katz_h(phi, Elem{j});
  return acc;
}

std::int64_t z_sum_expected(std::uint64_t q, std::uint64_t p) {
  if (q % 4 != 1) throw Error(ErrorCode::Unsupported, "closed value of Z is stated for q = 1 (mod 4)");
  if (q % 8 == 5) return 0;
  if (p % 8 == 5 || p % 8 == 7) return 4 * static_cast<std::int64_t>(q);
  const auto c = cd_decomposition(q, p).u;
  return 4 * c * c;
}

Complex mellin_bridge_lhs(const KatzContext& ctx, const MultChar& d, const MultChar& nu1) {
  const double q = static_cast<double>(ctx.q());
  return q / ctx.gauss_sum(ctx.chars().norm_compose(d.conj())) * katz_Y_closed(ctx, d, nu1);
}

Complex mellin_bridge_rhs(const KatzContext& ctx, const MultChar& d, const MultChar& nu1) {
  const MultChar phi = ctx.base().quadratic();
  const double q = static_cast<double>(ctx.q());
  return ctx.gauss_sum(phi * d.pow(2)) / ctx.gauss_sum(phi) *
         (katz_W(d, nu1) + 2.0 * (q - 1.0) * static_cast<double>(delta(d)));
}

namespace {

std::string pair_inputs(const char* a, std::uint64_t x, const char* b, std::uint64_t y) {
  return std::string(a) + "=" + std::to_string(x) + "," + b + "=" + std::to_string(y);
}

}  // namespace

VerificationReport verify_master_identity(const KatzContext& ctx, const TolerancePolicy& tol) {
  VerificationReport rep;
  rep.suite = "master";
  rep.q = ctx.q();
  rep.a_index = ctx.a_index();
  rep.octic = ctx.octic_variant();

  const Field& f = ctx.base_field();
  const std::uint64_t q = ctx.q();
  const auto v = katz_V_table(ctx);
  const PTable p(ctx);

  const double point_tol = tol.abs_tol(q, 3 * q + 2);
  for (std::uint32_t j = 0; j < q; ++j)
    for (std::uint32_t k = 0; k < q; ++k)
      rep.add("katz.P_equals_VV", pair_inputs("j", j, "k", k), std::abs(p(Elem{j}, Elem{k}) - v[j] * v[k]), point_tol);

  std::vector<Complex> s(ctx.base().order());
  for (const MultChar& chi : ctx.base().all()) s[chi.index()] = mellin_S(v, f, chi);
  const double mellin_tol = tol.abs_tol(q, q * q * q);
  for (const MultChar& c1 : ctx.base().all())
    for (const MultChar& c2 : ctx.base().all())
      rep.add("mellin.S_equals_T", pair_inputs("chi1", c1.index(), "chi2", c2.index()),
              std::abs(s[c1.index()] * s[c2.index()] - double_mellin_T(p, f, c1, c2)), mellin_tol);
  rep.sort_checks();
  return rep;
}

VerificationReport verify_mellin_bridge(const KatzContext& ctx, const TolerancePolicy& tol) {
  VerificationReport rep;
  rep.suite = "master";
  rep.q = ctx.q();
  rep.octic = ctx.octic_variant();

  const MultChar phi = ctx.base().quadratic();
  const std::uint64_t q = ctx.q();
  const double bridge_tol = tol.abs_tol(q, 4 * q * q);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (const MultChar& c1 : ctx.base().all()) {
    if (!c1.is_odd()) continue;
    const MultChar nu1 = decompose_odd(c1);
    for (const MultChar& c2 : ctx.base().all()) {
      if (!c2.is_odd()) continue;
      const MultChar mu = nu1 * decompose_odd(c2);
      for (int i = 0; i < 2; ++i) {
        const MultChar d = mu * phi.pow(i);
        if (!seen.insert({nu1.index(), d.index()}).second) continue;
        const Complex lhs = mellin_bridge_lhs(ctx, d, nu1);
        const Complex rhs = mellin_bridge_rhs(ctx, d, nu1);
        rep.add("mellin.reduced_S_equals_T", pair_inputs("nu1", nu1.index(), "D", d.index()), std::abs(lhs - rhs),
                bridge_tol);
      }
    }
  }
  rep.sort_checks();
  return rep;
}

}  // namespace charsum
