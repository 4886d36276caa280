#include "harness/suites.hpp"

#include <algorithm>
#include <string>

#include "core/classical_sums.hpp"
#include "core/hypergeometric.hpp"

namespace charsum::harness {

namespace {

std::string kv(const char* k, std::uint64_t v) { return std::string(k) + "=" + std::to_string(v); }
std::string kv(const char* k1, std::uint64_t v1, const char* k2, std::uint64_t v2) {
  return kv(k1, v1) + "," + kv(k2, v2);
}
std::string kv(const char* k1, std::uint64_t v1, const char* k2, std::uint64_t v2, const char* k3, std::uint64_t v3) {
  return kv(k1, v1, k2, v2) + "," + kv(k3, v3);
}

VerificationReport start(const char* suite, std::uint64_t q) {
  VerificationReport rep;
  rep.suite = suite;
  rep.q = q;
  return rep;
}

VerificationReport start(const char* suite, const KatzContext& ctx, bool with_a) {
  VerificationReport rep = start(suite, ctx.q());
  if (with_a) rep.a_index = ctx.a_index();
  rep.octic = ctx.octic_variant();
  return rep;
}

}  // namespace

std::vector<Elem> a_values(const Tower& t, const ASweep& sweep) {
  const Field& f = t.base();
  std::uint64_t count = f.unit_order();
  if (sweep.kind == ASweep::Kind::Sample || (sweep.kind == ASweep::Kind::Auto && t.q() > 50))
    count = std::min<std::uint64_t>(count, sweep.sample == 0 ? 8 : sweep.sample);
  std::vector<Elem> out;
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(f.exp(k));
  return out;
}

VerificationReport run_classical(const TowerChars& tc, const TowerGauss& gauss, const TolerancePolicy& tol) {
  const std::uint64_t q = tc.q();
  VerificationReport rep = start("classical", q);
  const CharGroup& base = tc.base();
  const Field& f = base.field();
  const Elem minus_one = f.neg(f.one());
  const double qd = static_cast<double>(q);
  const double tb = tol.abs_tol(q, q * q);
  const double tt = tol.abs_tol(q, q * q * q);

  const GaussTable& g = gauss.base;
  g.fill();
  const MultChar eps = base.trivial();
  rep.add("gauss.trivial", "", std::abs(g(eps) + 1.0), tb);
  rep.add("jacobi.trivial_pair", "", std::abs(jacobi(eps, eps) - (qd - 2.0)), tb);

  for (const MultChar& a : base.all()) {
    const auto in = kv("A", a.index());
    Complex sum{};
    double conj_dev = 0.0;
    const MultChar a_bar = a.conj();
    for (std::uint32_t x = 1; x < f.size(); ++x) {
      sum += a(Elem{x});
      conj_dev = std::max(conj_dev, std::abs(a_bar(Elem{x}) - std::conj(a(Elem{x}))));
    }
    rep.add("characters.orthogonality", in, std::abs(sum - (qd - 1.0) * delta(a)), tb);
    rep.add("characters.conjugation", in, conj_dev, tb);
    rep.add("gauss.hasse_davenport_product", in, hasse_davenport_product_deviation(a), tb);
    rep.add("gauss.lifted", in, lifted_gauss_deviation(tc, a), tt);
    if (tc.tower().q_is_3_mod_4()) rep.add("gauss.quartic_lift", in, quartic_gauss_deviation(tc, a), tt);
    if (a.is_trivial()) continue;
    const Complex sign = a(minus_one);
    rep.add("gauss.reflection", in, std::abs(g(a) * g(a_bar) - sign * qd), tb);
    rep.add("gauss.magnitude", in, std::abs(std::norm(g(a)) - qd), tb);
    rep.add("jacobi.inverse_pair", in, std::abs(jacobi(a, a_bar) + sign), tb);
    rep.add("jacobi.trivial_first", in, std::abs(jacobi(eps, a) + 1.0), tb);
  }

  for (const MultChar& a : base.all()) {
    for (const MultChar& b : base.all()) {
      const auto in = kv("A", a.index(), "B", b.index());
      const Complex j_ab = jacobi(a, b);
      if (!(a * b).is_trivial())
        rep.add("jacobi.gauss_bridge", in, std::abs(j_ab - g(a) * g(b) / g(a * b)), tb);
      // Reflection with C = B: J(A, conj C) = A(-1) J(A, conj(A) C).
      if (!b.is_trivial())
        rep.add("jacobi.reflection", in, std::abs(jacobi(a, b.conj()) - a(minus_one) * jacobi(a, a.conj() * b)), tb);
    }
  }

  const GaussTable& g2 = gauss.top;
  g2.fill();
  for (const MultChar& beta : tc.top().all()) {
    if (beta.is_trivial()) continue;
    const auto in = kv("beta", beta.index());
    rep.add("gauss2.magnitude", in, std::abs(std::norm(g2(beta)) - qd * qd), tt);
    rep.add("gauss2.frobenius", in, std::abs(g2(beta) - g2(beta.pow(static_cast<std::int64_t>(q)))), tt);
  }
  rep.add("gauss2.trivial", "", std::abs(g2(tc.top().trivial()) + 1.0), tt);
  rep.sort_checks();
  return rep;
}

VerificationReport run_eisenstein(const TowerChars& tc, const TowerGauss& gauss, const TolerancePolicy& tol) {
  const std::uint64_t q = tc.q();
  VerificationReport rep = start("eisenstein", q);
  const Tower& t = tc.tower();
  const Field& top = t.top();
  const double qd = static_cast<double>(q);
  const double tt = tol.abs_tol(q, q * q * q);
  const Elem two = top.from_int(2);

  const GaussTable& g2 = gauss.top;
  const GaussTable& g = gauss.base;
  for (const MultChar& beta : tc.top().all()) {
    const auto in = kv("beta", beta.index());
    const Complex e = eisenstein_E(tc, beta);
    const Complex e2 = eisenstein_E2(tc, beta);
    rep.add("eisenstein.E_vs_E2", in, std::abs(e - beta(two) * e2), tt);
    if (beta.is_trivial()) {
      rep.add("eisenstein.E_trivial", in, std::abs(e - qd), tt);
      rep.add("eisenstein.E2_trivial", in, std::abs(e2 - qd), tt);
      continue;
    }
    const MultChar restricted = restrict_to_base(tc, beta);
    const Complex expected = restricted.is_trivial() ? -g2(beta) / qd : g2(beta) / g(restricted);
    rep.add("eisenstein.E2_gauss", in, std::abs(e2 - expected), tt);
  }
  rep.sort_checks();
  return rep;
}

VerificationReport run_hypergeometric(const TowerChars& tc, const TolerancePolicy& tol, bool oracle) {
  const std::uint64_t q = tc.q();
  VerificationReport rep = start("hypergeometric", q);
  const CharGroup& base = tc.base();
  const Field& f = base.field();
  const Tower& t = tc.tower();
  const double qd = static_cast<double>(q);
  const double tb = tol.abs_tol(q, q * q);
  const Elem minus_one = f.neg(f.one());

  const MultChar eps = base.trivial();
  rep.add("binomial.trivial_pair", "", std::abs(binom(eps, eps) - (qd - 2.0) / qd), tb);
  for (const MultChar& d : base.all())
    for (const MultChar& chi : base.all()) {
      const Complex lhs = binom(d * chi.conj(), chi.conj());
      const Complex rhs = d(minus_one) * binom(chi, d.conj() * chi);
      rep.add("binomial.reflection", kv("D", d.index(), "chi", chi.index()), std::abs(lhs - rhs), tb);
    }

  // 2F1: exhaustive arguments for small q, two arguments per triple otherwise.
  std::vector<Elem> xs;
  if (q <= 11) {
    for (std::uint32_t x = 1; x < q; ++x) xs.push_back(Elem{x});
  } else {
    xs = {f.one(), f.generator()};
  }
  const double bound = (qd - 1.0) / qd;
  for (const MultChar& a : base.all())
    for (const MultChar& b : base.all())
      for (const MultChar& c : base.all()) {
        const auto in = kv("A", a.index(), "B", b.index(), "C", c.index());
        rep.add("hyp2f1.zero_argument", in, std::abs(hyp2f1(a, b, c, f.zero())), tb);
        double excess = 0.0;
        for (Elem x : xs) excess = std::max(excess, std::abs(hyp2f1(a, b, c, x)) - bound);
        rep.add("hyp2f1.magnitude_bound", in, std::max(0.0, excess), tb);
      }

  for (std::uint32_t cv = 1; cv < q; ++cv) {
    const Elem c{cv};
    auto fiber = norm_fiber(t, c);
    double bad = std::abs(static_cast<double>(fiber.size()) - static_cast<double>(q + 1));
    for (Elem z : fiber)
      if (t.norm(z) != c) bad += 1.0;
    if (oracle) {
      auto scan = norm_fiber_scan(t, c);
      std::sort(fiber.begin(), fiber.end());
      if (fiber != scan) bad += 1.0;
    }
    rep.add("norm.fiber", kv("c", cv), bad, 0.0);
  }

  if (t.q_is_3_mod_4()) {
    const MultChar m8 = tc.octic();
    for (const MultChar& d : base.all())
      for (std::uint32_t jv = 1; jv < q; ++jv) {
        const Elem j{jv};
        const auto in = kv("D", d.index(), "j", jv);
        rep.add("norm_jacobi.sign_symmetry", in,
                std::abs(norm_restricted_jacobi(tc, m8, d, j) - norm_restricted_jacobi(tc, m8, d, f.neg(j))), tb);
      }
  }
  rep.sort_checks();
  return rep;
}

VerificationReport run_norm_jacobi(const KatzContext& ctx, const TolerancePolicy& tol, bool oracle) {
  const std::uint64_t q = ctx.q();
  VerificationReport rep = start("norm-jacobi", ctx, false);
  const TowerChars& tc = ctx.chars();
  const double tb = tol.abs_tol(q, q * q);
  for (const MultChar& d : ctx.base().all())
    for (std::uint32_t jv = 1; jv < q; ++jv) {
      const Elem j{jv};
      const auto in = kv("D", d.index(), "j", jv);
      const Complex r = norm_restricted_jacobi(tc, ctx.m8(), d, j);
      rep.add("norm_jacobi.hypergeometric", in, std::abs(r - norm_restricted_jacobi_closed(tc, d, j)), tb);
      if (oracle)
        rep.add("norm_jacobi.fiber_vs_scan", in, std::abs(r - norm_restricted_jacobi_scan(tc, ctx.m8(), d, j)), tb);
    }
  rep.sort_checks();
  return rep;
}

VerificationReport run_mellin(const KatzContext& ctx, const TolerancePolicy& tol, bool oracle) {
  const std::uint64_t q = ctx.q();
  VerificationReport rep = start("mellin", ctx, true);
  const Field& f = ctx.base_field();
  const CharGroup& base = ctx.base();
  const double tb = tol.abs_tol(q, q * q);
  const double t3 = tol.abs_tol(q, q * q * q);
  const double qd = static_cast<double>(q);

  const auto v = katz_V_table(ctx);
  const PTable p(ctx);

  const Complex tau = ctx.tau();
  const Elem minus_a = ctx.tower().embed(f.neg(ctx.a()));
  rep.add("katz.tau_square", "", std::abs(tau * tau - qd * ctx.m8()(minus_a)), tb);
  rep.add("katz.V_at_zero", "", std::abs(v[0]), tb);
  for (std::uint32_t jv = 0; jv < q; ++jv) {
    const Elem j{jv};
    const Elem mj = f.neg(j);
    rep.add("katz.V_odd", kv("j", jv), std::abs(v[mj.v] + v[jv]), tb);
    if (oracle) rep.add("katz.V_fiber_vs_scan", kv("j", jv), std::abs(v[jv] - katz_V_scan(ctx, j)), tb);
    for (std::uint32_t kv_ = 0; kv_ < q; ++kv_) {
      const Elem k{kv_};
      const auto in = kv("j", jv, "k", kv_);
      rep.add("katz.P_symmetric", in, std::abs(p(j, k) - p(k, j)), tb);
      rep.add("katz.P_odd", in, std::abs(p(mj, k) + p(j, k)), tb);
    }
  }

  std::vector<Complex> s(base.order());
  for (const MultChar& chi : base.all()) {
    s[chi.index()] = mellin_S(v, f, chi);
    const auto in = kv("chi", chi.index());
    if (chi.is_odd())
      rep.add("mellin.single.closed_form", in, std::abs(s[chi.index()] - mellin_S_closed(ctx, chi)), tb);
    else
      rep.add("mellin.single.even_vanishes", in, std::abs(s[chi.index()]), tb);
  }
  for (std::uint32_t jv = 1; jv < q; ++jv) {
    Complex acc{};
    for (const MultChar& chi : base.all()) acc += s[chi.index()] * chi.conj()(Elem{jv});
    rep.add("mellin.inversion", kv("j", jv), std::abs(acc / (qd - 1.0) - v[jv]), tb);
  }

  std::vector<Complex> t(base.order() * base.order());
  for (const MultChar& c1 : base.all())
    for (const MultChar& c2 : base.all()) t[c1.index() * base.order() + c2.index()] = double_mellin_T(p, f, c1, c2);

  for (const MultChar& c1 : base.all())
    for (const MultChar& c2 : base.all()) {
      const auto in = kv("chi1", c1.index(), "chi2", c2.index());
      const Complex s12 = s[c1.index()] * s[c2.index()];
      const Complex t12 = t[c1.index() * base.order() + c2.index()];
      rep.add("mellin.double.closed_form", in, std::abs(s12 - double_mellin_S_closed(ctx, c1, c2)), t3);
      if (oracle) rep.add("mellin.double.factorization", in, std::abs(double_mellin_S_literal(v, f, c1, c2) - s12), t3);
      rep.add("mellin.T.closed_form", in, std::abs(t12 - double_mellin_T_closed(ctx, c1, c2)), t3);
      rep.add("mellin.T.symmetric", in, std::abs(t12 - t[c2.index() * base.order() + c1.index()]), t3);
    }
  rep.sort_checks();
  return rep;
}

VerificationReport run_h_sums(const KatzContext& ctx, const TolerancePolicy& tol) {
  const std::uint64_t q = ctx.q();
  VerificationReport rep = start("h-sums", ctx, false);
  const CharGroup& base = ctx.base();
  const Field& f = ctx.base_field();
  const TowerChars& tc = ctx.chars();
  const std::uint64_t n = base.order();
  const double tb = tol.abs_tol(q, q * q);
  const double t3 = tol.abs_tol(q, q * q * q);
  const Elem one = f.one();
  const Elem minus_one = f.neg(one);
  const MultChar phi = base.quadratic();

  std::vector<Complex> h(n * q), r(n * q);
  for (const MultChar& d : base.all())
    for (std::uint32_t jv = 1; jv < q; ++jv) {
      const Elem j{jv};
      h[d.index() * q + jv] = katz_h(d, j);
      r[d.index() * q + jv] = norm_restricted_jacobi(tc, ctx.m8(), d, j);
      const char* id = (j == one || j == minus_one) ? "h.unit_argument"
                       : d.is_trivial()              ? "h.trivial_vanishes"
                                                     : "h.hypergeometric";
      rep.add(id, kv("D", d.index(), "j", jv), std::abs(h[d.index() * q + jv] - katz_h_closed(d, j)), tb);
    }

  for (const MultChar& nu1 : base.all()) {
    const MultChar w_weight = phi * nu1.pow(4);
    const MultChar y_weight = nu1.pow(4);
    for (const MultChar& d : base.all()) {
      Complex w{}, y{};
      for (std::uint32_t jv = 1; jv < q; ++jv) {
        w += w_weight(Elem{jv}) * h[d.index() * q + jv];
        y += y_weight(Elem{jv}) * r[d.index() * q + jv];
      }
      const auto in = kv("D", d.index(), "nu1", nu1.index());
      rep.add(d.is_trivial() ? "W.trivial" : "W.closed_form", in, std::abs(w - katz_W_closed(ctx, d, nu1)), t3);
      rep.add("Y.closed_form", in, std::abs(y - katz_Y_closed(ctx, d, nu1)), t3);
    }
  }

  for (const MultChar& nu : base.all()) {
    const Complex lhs = weighted_h_double_sum(nu);
    rep.add("weighted_h.jacobi_form", kv("nu", nu.index()), std::abs(lhs - weighted_h_double_sum_closed(ctx, nu)), t3);
    if (nu.is_trivial()) {
      const auto expected = weighted_h_double_sum_expected(q, ctx.tower().p());
      rep.add("weighted_h.anchor", "expected=" + std::to_string(expected),
              std::abs(lhs - Complex(static_cast<double>(expected), 0.0)), t3);
    }
  }

  for (const MultChar& mu : base.all())
    rep.add("characters.delta_fourth_equals_square", kv("mu", mu.index()),
            std::abs(delta(mu.pow(4)) - delta(mu.pow(2))), 0.0);
  for (const MultChar& chi : base.all()) {
    if (!chi.is_odd()) continue;
    const MultChar nu = decompose_odd(chi);
    const MultChar rebuilt = phi * nu.pow(4);
    double dev = 0.0;
    for (std::uint32_t x = 0; x < q; ++x) dev = std::max(dev, std::abs(rebuilt(Elem{x}) - chi(Elem{x})));
    rep.add("characters.odd_decomposition", kv("chi", chi.index(), "nu", nu.index()), dev, tb);
  }
  rep.sort_checks();
  return rep;
}

VerificationReport run_z_sum(const CharGroup& base, const TolerancePolicy& tol) {
  const Field& f = base.field();
  const std::uint64_t q = f.size();
  VerificationReport rep = start("z-sum", q);
  const auto expected = z_sum_expected(q, f.p());
  rep.add("z.closed_value", "expected=" + std::to_string(expected),
          std::abs(z_sum(base) - Complex(static_cast<double>(expected), 0.0)), tol.abs_tol(q, q * q));
  return rep;
}

VerificationReport run_master(const KatzContext& ctx, const TolerancePolicy& tol) {
  return verify_master_identity(ctx, tol);
}

VerificationReport run_master_bridge(const KatzContext& ctx, const TolerancePolicy& tol) {
  return verify_mellin_bridge(ctx, tol);
}

}  // namespace charsum::harness
