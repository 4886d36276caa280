// Exercises the shared library through its C header only.
#include <charsum/charsum.h>
#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <string>

namespace {

double mag2(charsum_complex z) { return z.re * z.re + z.im * z.im; }

struct Tower {
  charsum_tower* t = nullptr;
  Tower(uint32_t p, uint32_t k) { EXPECT_EQ(charsum_tower_create(p, k, &t), CHARSUM_OK); }
  ~Tower() { charsum_tower_destroy(t); }
};

}  // namespace

TEST(CApi, Version) { EXPECT_FALSE(std::string(charsum_version()).empty()); }

TEST(CApi, TowerBasics) {
  Tower tw(7, 1);
  EXPECT_EQ(charsum_tower_q(tw.t), 7u);
  EXPECT_EQ(charsum_tower_p(tw.t), 7u);
  const uint32_t g2 = charsum_tower_generator(tw.t, CHARSUM_TOP);
  uint32_t n = 0;
  ASSERT_EQ(charsum_tower_norm(tw.t, g2, &n), CHARSUM_OK);
  EXPECT_EQ(n, charsum_tower_generator(tw.t, CHARSUM_BASE));
  uint64_t k = 0;
  ASSERT_EQ(charsum_tower_log(tw.t, CHARSUM_BASE, n, &k), CHARSUM_OK);
  EXPECT_EQ(k, 1u);
  uint32_t x = 0;
  ASSERT_EQ(charsum_tower_exp(tw.t, CHARSUM_TOP, 1, &x), CHARSUM_OK);
  EXPECT_EQ(x, g2);
  EXPECT_EQ(charsum_tower_log(tw.t, CHARSUM_BASE, 0, &k), CHARSUM_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(charsum_tower_norm(tw.t, 49, &n), CHARSUM_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ErrorsCarryCodesAndMessages) {
  charsum_tower* t = nullptr;
  EXPECT_EQ(charsum_tower_create(9, 1, &t), CHARSUM_ERR_NOT_PRIME);
  EXPECT_FALSE(std::string(charsum_last_error()).empty());
  EXPECT_EQ(charsum_tower_create(2, 1, &t), CHARSUM_ERR_EVEN_CHARACTERISTIC);
  EXPECT_EQ(charsum_tower_create(3, 7, &t), CHARSUM_ERR_TOO_LARGE);
  EXPECT_EQ(t, nullptr);
  EXPECT_EQ(charsum_status_exit_code(CHARSUM_ERR_TOO_LARGE), 3);
  EXPECT_EQ(charsum_status_exit_code(CHARSUM_ERR_PARSE), 2);
  EXPECT_EQ(charsum_status_exit_code(CHARSUM_ERR_IO), 4);
  EXPECT_EQ(charsum_status_exit_code(CHARSUM_OK), 0);
  EXPECT_STREQ(charsum_status_string(CHARSUM_ERR_CORRUPT), "corrupt data");
  uint32_t p = 0, k = 0;
  EXPECT_EQ(charsum_parse_field("3^3", &p, &k), CHARSUM_OK);
  EXPECT_EQ(p, 3u);
  EXPECT_EQ(k, 3u);
  EXPECT_EQ(charsum_parse_field("4", &p, &k), CHARSUM_ERR_PARSE);
}

TEST(CApi, GaussAndJacobi) {
  Tower tw(11, 1);
  charsum_complex z{};
  ASSERT_EQ(charsum_gauss(tw.t, CHARSUM_BASE, 0, &z), CHARSUM_OK);
  EXPECT_NEAR(z.re, -1.0, 1e-12);
  for (uint64_t k = 1; k < 10; ++k) {
    ASSERT_EQ(charsum_gauss(tw.t, CHARSUM_BASE, k, &z), CHARSUM_OK);
    EXPECT_NEAR(mag2(z), 11.0, 1e-9);
  }
  ASSERT_EQ(charsum_gauss(tw.t, CHARSUM_TOP, 15, &z), CHARSUM_OK);
  EXPECT_NEAR(mag2(z), 121.0, 1e-8);
  ASSERT_EQ(charsum_jacobi(tw.t, CHARSUM_BASE, 0, 0, &z), CHARSUM_OK);
  EXPECT_NEAR(z.re, 9.0, 1e-12);
  EXPECT_EQ(charsum_gauss(tw.t, CHARSUM_BASE, 10, &z), CHARSUM_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(charsum_hyp2f1(tw.t, 1, 2, 3, 0, &z), CHARSUM_OK);
  EXPECT_EQ(z.re, 0.0);
}

TEST(CApi, KatzMasterPoint) {
  Tower tw(7, 1);
  charsum_katz* k = nullptr;
  ASSERT_EQ(charsum_katz_create(tw.t, 3, 1, &k), CHARSUM_OK);
  for (uint32_t j = 0; j < 7; ++j)
    for (uint32_t kk = 0; kk < 7; ++kk) {
      charsum_complex p{}, vj{}, vk{};
      ASSERT_EQ(charsum_katz_P(k, j, kk, &p), CHARSUM_OK);
      ASSERT_EQ(charsum_katz_V(k, j, &vj), CHARSUM_OK);
      ASSERT_EQ(charsum_katz_V(k, kk, &vk), CHARSUM_OK);
      EXPECT_NEAR(p.re, vj.re * vk.re - vj.im * vk.im, 1e-9);
      EXPECT_NEAR(p.im, vj.re * vk.im + vj.im * vk.re, 1e-9);
    }
  charsum_complex s{};
  ASSERT_EQ(charsum_katz_mellin_S(k, 2, &s), CHARSUM_OK);  // even character
  EXPECT_NEAR(std::hypot(s.re, s.im), 0.0, 1e-9);
  charsum_complex tau{};
  ASSERT_EQ(charsum_katz_tau(k, &tau), CHARSUM_OK);
  EXPECT_NEAR(mag2(tau), 7.0, 1e-9);
  charsum_katz_destroy(k);

  EXPECT_EQ(charsum_katz_create(tw.t, 0, 1, &k), CHARSUM_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(charsum_katz_create(tw.t, 1, 2, &k), CHARSUM_ERR_INVALID_ARGUMENT);
  Tower t13(13, 1);
  EXPECT_EQ(charsum_katz_create(t13.t, 1, 1, &k), CHARSUM_ERR_UNSUPPORTED);
}

TEST(CApi, GaussTableFiles) {
  Tower tw(7, 1);
  const std::string path = testing::TempDir() + "capi_gauss_49.csv";
  ASSERT_EQ(charsum_gauss_table_save(tw.t, CHARSUM_TOP, path.c_str()), CHARSUM_OK);
  Tower again(7, 1);
  size_t rows = 0;
  ASSERT_EQ(charsum_gauss_table_load(again.t, CHARSUM_TOP, path.c_str(), &rows), CHARSUM_OK);
  EXPECT_EQ(rows, 48u);
  EXPECT_EQ(charsum_gauss_table_load(again.t, CHARSUM_BASE, path.c_str(), &rows), CHARSUM_ERR_FIELD_MISMATCH);
  EXPECT_EQ(charsum_gauss_table_load(again.t, CHARSUM_BASE, "/nonexistent.csv", &rows), CHARSUM_ERR_IO);
  std::remove(path.c_str());
}

TEST(CApi, RunAndInspect) {
  charsum_config* cfg = nullptr;
  ASSERT_EQ(charsum_config_create(&cfg), CHARSUM_OK);
  ASSERT_EQ(charsum_config_load_text(cfg, "fields = 7\nsuites = master\n"), CHARSUM_OK);
  ASSERT_EQ(charsum_config_set(cfg, "a", "sample-2"), CHARSUM_OK);
  EXPECT_EQ(charsum_config_set(cfg, "fields", "4"), CHARSUM_ERR_PARSE);
  EXPECT_EQ(charsum_config_load_file(cfg, "/nonexistent/cfg"), CHARSUM_ERR_IO);

  charsum_result* res = nullptr;
  ASSERT_EQ(charsum_run(cfg, &res), CHARSUM_OK);
  EXPECT_EQ(charsum_result_exit_code(res), 0);
  EXPECT_GT(charsum_result_total_checks(res), 49u);
  EXPECT_EQ(charsum_result_failed_checks(res), 0u);
  ASSERT_EQ(charsum_result_report_count(res), 3u);
  charsum_report_summary s{};
  ASSERT_EQ(charsum_result_report(res, 0, &s), CHARSUM_OK);
  EXPECT_STREQ(s.suite, "master");
  EXPECT_EQ(s.q, 7u);
  EXPECT_EQ(s.a_index, 0);
  ASSERT_EQ(charsum_result_report(res, 2, &s), CHARSUM_OK);
  EXPECT_EQ(s.a_index, -1);
  EXPECT_EQ(charsum_result_report(res, 3, &s), CHARSUM_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(charsum_result_json(res)).find("\"check_id\""), std::string::npos);
  charsum_result_destroy(res);

  ASSERT_EQ(charsum_config_set(cfg, "fields", "13"), CHARSUM_OK);
  ASSERT_EQ(charsum_run(cfg, &res), CHARSUM_OK);
  EXPECT_EQ(charsum_result_exit_code(res), 2);
  EXPECT_NE(std::string(charsum_result_error(res)).find("q = 13"), std::string::npos);
  charsum_result_destroy(res);
  charsum_config_destroy(cfg);
}
