#include <gtest/gtest.h>

#include "core/katz.hpp"
#include "oracle.hpp"

using namespace charsum;

namespace {

constexpr double kTol = 1e-9;

struct Q {
  std::uint32_t p, t;
};

std::string qname(const ::testing::TestParamInfo<Q>& info) {
  return "q" + std::to_string(oracle::ipow(info.param.p, info.param.t));
}

class KatzFields : public ::testing::TestWithParam<Q> {};

}  // namespace

TEST(KatzContext, RejectsQOneModFour) {
  auto tc = TowerChars::build(5, 1);
  EXPECT_THROW(KatzContext(tc, Elem{1}), Error);
}

TEST(KatzContext, TauSquare) {
  for (auto [p, t] : {std::pair{3u, 1u}, {7u, 1u}, {3u, 3u}}) {
    auto tc = TowerChars::build(p, t);
    const Field& b = tc->tower().base();
    for (unsigned v : {1u, 3u, 5u, 7u})
      for (std::uint32_t a = 1; a < b.size(); ++a) {
        KatzContext ctx(tc, Elem{a}, v);
        const Complex m = ctx.m8()(tc->tower().embed(b.neg(Elem{a})));
        EXPECT_NEAR(std::abs(ctx.tau() * ctx.tau() - static_cast<double>(tc->q()) * m), 0.0, kTol);
      }
  }
}

TEST_P(KatzFields, VAndPMatchOracle) {
  const auto [p, t] = GetParam();
  auto tc = TowerChars::build(p, t);
  const oracle::NaiveTower ref(p, t);
  const Field& b = tc->tower().base();
  const std::uint64_t q = tc->q();
  for (std::uint64_t an = 0; an < q - 1; an += (q > 7 ? 3 : 1))
    for (unsigned v : {1u, 5u}) {
      KatzContext ctx(tc, b.exp(an), v);
      const std::uint64_t a_ref = ref.base_elem(an);
      EXPECT_NEAR(std::abs(ctx.tau() - ref.tau(a_ref, v)), 0.0, kTol);
      for (std::uint64_t jn = 0; jn < q - 1; ++jn) {
        const Complex lib = katz_V(ctx, b.exp(jn));
        EXPECT_NEAR(std::abs(lib - ref.katz_V(a_ref, v, ref.base_elem(jn))), 0.0, 1e-8);
      }
      // P at a handful of points, including j = k = 0
      auto elems = ref.base_elems();
      for (std::size_t i = 0; i < elems.size(); i += 2)
        for (std::size_t k = 0; k < elems.size(); k += 3) {
          const Elem je = i == 0 ? b.zero() : b.exp(i - 1);
          const Elem ke = k == 0 ? b.zero() : b.exp(k - 1);
          EXPECT_NEAR(std::abs(katz_P(ctx, je, ke) - ref.katz_P(a_ref, elems[i], elems[k])), 0.0, 1e-8);
        }
    }
}

TEST_P(KatzFields, MasterIdentity) {
  const auto [p, t] = GetParam();
  auto tc = TowerChars::build(p, t);
  const Field& b = tc->tower().base();
  const TolerancePolicy tol;
  for (std::uint32_t a = 1; a < b.size(); ++a) {
    const auto rep = verify_master_identity(KatzContext(tc, Elem{a}), tol);
    EXPECT_TRUE(rep.passed()) << "a=" << a << " max dev " << rep.max_deviation;
    EXPECT_GT(rep.checks.size(), b.size() * b.size() - 1);
  }
}

TEST_P(KatzFields, MellinClosedForms) {
  const auto [p, t] = GetParam();
  auto tc = TowerChars::build(p, t);
  KatzContext ctx(tc, tc->tower().base().generator());
  const auto v = katz_V_table(ctx);
  const Field& f = ctx.base_field();
  for (const auto& chi : ctx.base().all()) {
    const Complex s = mellin_S(v, f, chi);
    if (!chi.is_odd()) {
      EXPECT_NEAR(std::abs(s), 0.0, 1e-9);
      continue;
    }
    EXPECT_NEAR(std::abs(s - mellin_S_closed(ctx, chi)), 0.0, 1e-8);
  }
  const PTable pt(ctx);
  for (const auto& c1 : ctx.base().all())
    for (const auto& c2 : ctx.base().all()) {
      const Complex t12 = double_mellin_T(pt, f, c1, c2);
      EXPECT_NEAR(std::abs(t12 - double_mellin_T_closed(ctx, c1, c2)), 0.0, 1e-7);
      EXPECT_NEAR(std::abs(t12 - double_mellin_T(pt, f, c2, c1)), 0.0, 1e-7);
      EXPECT_NEAR(std::abs(mellin_S(v, f, c1) * mellin_S(v, f, c2) - double_mellin_S_closed(ctx, c1, c2)), 0.0, 1e-7);
    }
}

TEST_P(KatzFields, HWYClosedForms) {
  const auto [p, t] = GetParam();
  auto tc = TowerChars::build(p, t);
  KatzContext ctx(tc, tc->tower().base().one());
  const Field& f = ctx.base_field();
  for (const auto& d : ctx.base().all()) {
    for (std::uint32_t j = 1; j < f.size(); ++j)
      EXPECT_NEAR(std::abs(katz_h(d, Elem{j}) - katz_h_closed(d, Elem{j})), 0.0, 1e-8);
    for (const auto& nu1 : ctx.base().all()) {
      EXPECT_NEAR(std::abs(katz_W(d, nu1) - katz_W_closed(ctx, d, nu1)), 0.0, 1e-7);
      EXPECT_NEAR(std::abs(katz_Y(ctx, d, nu1) - katz_Y_closed(ctx, d, nu1)), 0.0, 1e-7);
    }
  }
  EXPECT_NEAR(std::abs(katz_W(ctx.base().trivial(), ctx.base().character(1)) - 2.0), 0.0, 1e-8);
  for (const auto& nu : ctx.base().all())
    EXPECT_NEAR(std::abs(weighted_h_double_sum(nu) - weighted_h_double_sum_closed(ctx, nu)), 0.0, 1e-7);
}

TEST_P(KatzFields, ReducedBridgeForEveryOctic) {
  const auto [p, t] = GetParam();
  auto tc = TowerChars::build(p, t);
  for (unsigned v : {1u, 3u, 5u, 7u}) {
    const auto rep = verify_mellin_bridge(KatzContext(tc, tc->tower().base().one(), v), TolerancePolicy{});
    EXPECT_TRUE(rep.passed()) << "octic " << v << " max dev " << rep.max_deviation;
    EXPECT_FALSE(rep.a_index.has_value());
  }
}

INSTANTIATE_TEST_SUITE_P(Small, KatzFields, ::testing::Values(Q{3, 1}, Q{7, 1}, Q{11, 1}, Q{3, 3}), qname);

TEST(KatzP, SymmetryAndParityOnF7) {
  auto tc = TowerChars::build(7, 1);
  KatzContext ctx(tc, Elem{1});
  const Field& f = ctx.base_field();
  for (std::uint32_t j = 0; j < 7; ++j) {
    EXPECT_NEAR(std::abs(katz_V(ctx, f.neg(Elem{j})) + katz_V(ctx, Elem{j})), 0.0, kTol);
    for (std::uint32_t k = 0; k < 7; ++k) {
      EXPECT_NEAR(std::abs(katz_P(ctx, Elem{j}, Elem{k}) - katz_P(ctx, Elem{k}, Elem{j})), 0.0, kTol);
      EXPECT_NEAR(std::abs(katz_P(ctx, f.neg(Elem{j}), Elem{k}) + katz_P(ctx, Elem{j}, Elem{k})), 0.0, kTol);
    }
  }
  EXPECT_EQ(katz_V(ctx, Elem{0}), Complex(0.0, 0.0));
  EXPECT_NEAR(std::abs(katz_P(ctx, Elem{1}, Elem{1}) - katz_V(ctx, Elem{1}) * katz_V(ctx, Elem{1})), 0.0, kTol);
}

TEST(KatzP, F27AtGenerator) {
  auto tc = TowerChars::build(3, 3);
  const auto rep = verify_master_identity(KatzContext(tc, tc->tower().base().generator()), TolerancePolicy{});
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.a_index, 1u);
}

TEST(Anchors, UVDecomposition) {
  EXPECT_EQ(uv_decomposition(11, 11).u, 7);
  EXPECT_EQ(uv_decomposition(11, 11).v, 6);
  EXPECT_EQ(uv_decomposition(3, 3).u, -1);
  EXPECT_EQ(uv_decomposition(3, 3).v, 2);
  EXPECT_EQ(uv_decomposition(27, 3).u, 23);
  EXPECT_EQ(uv_decomposition(27, 3).v, 10);
}

TEST(Anchors, UVBruteForce) {
  // q^2 = u^2 + 2v^2, v > 0, p does not divide u, u = -1 (mod 8)
  for (auto [q, p] : {std::pair{3, 3}, {11, 11}, {19, 19}, {27, 3}, {43, 43}}) {
    std::int64_t found_u = 0, found_v = 0;
    for (std::int64_t v = 1; 2 * v * v <= q * q; ++v)
      for (std::int64_t u = -q; u <= q; ++u)
        if (u * u + 2 * v * v == q * q && u % p != 0 && ((u % 8) + 8) % 8 == 7) {
          found_u = u;
          found_v = v;
        }
    const auto uv = uv_decomposition(q, p);
    EXPECT_EQ(uv.u, found_u) << q;
    EXPECT_EQ(uv.v, found_v) << q;
  }
}

TEST(Anchors, WeightedHDoubleSum) {
  const std::pair<Q, std::int64_t> cases[] = {
      {{3, 1}, -2}, {{7, 1}, 14}, {{11, 1}, 14}, {{19, 1}, -34}, {{23, 1}, 46}, {{3, 3}, 46}};
  for (const auto& [field, value] : cases) {
    const std::uint64_t q = oracle::ipow(field.p, field.t);
    EXPECT_EQ(oracle::quadratic_double_sum(field.p, field.t), value) << q;
    EXPECT_EQ(weighted_h_double_sum_expected(q, field.p), value) << q;
    const CharGroup g(Field::construct(field.p, field.t));
    const Complex lib = weighted_h_double_sum(g.trivial());
    EXPECT_NEAR(lib.real(), static_cast<double>(value), 1e-8) << q;
    EXPECT_NEAR(lib.imag(), 0.0, 1e-8) << q;
  }
}

TEST(Anchors, ZSum) {
  const std::pair<Q, std::int64_t> cases[] = {{{5, 1}, 0},   {{13, 1}, 0},   {{3, 2}, 4},
                                              {{17, 1}, 36}, {{5, 2}, 100}, {{7, 2}, 196}};
  for (const auto& [field, value] : cases) {
    const std::uint64_t q = oracle::ipow(field.p, field.t);
    EXPECT_EQ(oracle::quadratic_double_sum(field.p, field.t), value) << q;
    EXPECT_EQ(z_sum_expected(q, field.p), value) << q;
    const CharGroup g(Field::construct(field.p, field.t));
    const Complex lib = z_sum(g);
    EXPECT_NEAR(lib.real(), static_cast<double>(value), 1e-8) << q;
    EXPECT_NEAR(lib.imag(), 0.0, 1e-8) << q;
  }
  EXPECT_THROW(z_sum_expected(7, 7), Error);
}

TEST(Anchors, CDDecomposition) {
  EXPECT_EQ(cd_decomposition(9, 3).u, 1);
  EXPECT_EQ(cd_decomposition(17, 17).u, 3);
  EXPECT_EQ(cd_decomposition(17, 17).v, 2);
}
