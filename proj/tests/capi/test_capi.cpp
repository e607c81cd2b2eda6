#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "beurling/beurling.h"

extern "C" int capi_c_roundtrip(void);

namespace fs = std::filesystem;

TEST_CASE("header compiles and links from C") { CHECK(capi_c_roundtrip() == 1); }

TEST_CASE("version and status names") {
  CHECK(std::string(bl_version()) == "1.0.0");
  CHECK(std::string(bl_status_name(BL_E_DOMAIN)) == "domain");
  CHECK(std::string(bl_status_name(BL_OK)) == "ok");
}

TEST_CASE("G through the C API") {
  bl_complex g{};
  REQUIRE(bl_g_eval({1.0, 0.0}, &g) == BL_OK);
  CHECK(g.re == doctest::Approx(1.0 - (std::exp(-1.0) - std::exp(-2.0))));
  bl_complex lg{};
  REQUIRE(bl_g_log({1.0, 0.0}, &lg) == BL_OK);
  CHECK(lg.re == doctest::Approx(std::log(g.re)));
  CHECK(bl_g_log({-1.0, 0.0}, &lg) == BL_E_DOMAIN);
  CHECK(std::strlen(bl_last_error()) > 0);
  CHECK(bl_g_eval({1.0, 0.0}, nullptr) == BL_E_INVALID_ARGUMENT);
}

TEST_CASE("zeros need enough capacity") {
  std::vector<bl_gzero> z(5);
  CHECK(bl_g_zeros(5, 5.0, z.data(), 4) == BL_E_RANGE);
  REQUIRE(bl_g_zeros(5, 5.0, z.data(), z.size()) == BL_OK);
  CHECK(z[0].index == 1);
  CHECK(z[0].location.re == doctest::Approx(-0.512724).epsilon(1e-5));
  CHECK(z[0].rect_winding == 1);
}

TEST_CASE("parameters and invalid input") {
  bl_params* p = nullptr;
  CHECK(bl_params_create(1.5, 3, &p) == BL_E_INVALID_ARGUMENT);
  CHECK(p == nullptr);
  REQUIRE(bl_params_create(0.5, 3, &p) == BL_OK);
  double gamma = 0;
  REQUIRE(bl_params_gamma(p, 2, &gamma) == BL_OK);
  CHECK(gamma == doctest::Approx(std::exp(4.0)));
  double li = 0, pic = 0;
  REQUIRE(bl_li(20.0, &li) == BL_OK);
  REQUIRE(bl_pi_c(p, 0, 20.0, &pic) == BL_OK);
  CHECK(pic == doctest::Approx(li));
  bl_complex zeta{};
  int terms = 0;
  REQUIRE(bl_zeta_c_product(p, {2.0, 0.0}, 1e-14, &zeta, &terms) == BL_OK);
  CHECK(zeta.re > 1.0);
  CHECK(bl_zeta_c_product(p, {0.5, 0.0}, 1e-14, &zeta, &terms) == BL_E_DOMAIN);
  bl_params_destroy(p);
  bl_params_destroy(nullptr);
}

TEST_CASE("prime sequences from arrays") {
  const double arr[] = {2.0, 3.0};
  bl_primes* P = nullptr;
  REQUIRE(bl_primes_from_array(arr, 2, 100.0, &P) == BL_OK);
  CHECK(bl_primes_count(P) == 2);
  uint64_t n = 0;
  REQUIRE(bl_count_n(P, 10.0, 1, &n) == BL_OK);
  CHECK(n == 7);
  double psi = 0, pir = 0, pfp = 0;
  REQUIRE(bl_psi(P, 10.0, &psi) == BL_OK);
  REQUIRE(bl_pi_riemann(P, 10.0, &pir) == BL_OK);
  REQUIRE(bl_pi_from_psi(P, 10.0, &pfp) == BL_OK);
  CHECK(psi == doctest::Approx(3 * std::log(2.0) + 2 * std::log(3.0)));
  CHECK(pir == doctest::Approx(10.0 / 3.0));
  CHECK(pfp == doctest::Approx(10.0 / 3.0));
  CHECK(bl_count_n(P, 1e3, 1, &n) == BL_E_DOMAIN);  // beyond x_max
  const double unsorted[] = {3.0, 2.0};
  bl_primes* Q = nullptr;
  CHECK(bl_primes_from_array(unsorted, 2, 100.0, &Q) == BL_E_INVALID_ARGUMENT);
  bl_primes_destroy(P);
}

TEST_CASE("exp* size query then fill") {
  const double arr[] = {2.0};
  bl_primes* P = nullptr;
  REQUIRE(bl_primes_from_array(arr, 1, 1e3, &P) == BL_OK);
  size_t need = 0;
  REQUIRE(bl_exp_star_primes(P, std::log(1000.0), 1.0 / 256, nullptr, 0, &need) == BL_OK);
  std::vector<double> N(need);
  size_t written = 0;
  REQUIRE(bl_exp_star_primes(P, std::log(1000.0), 1.0 / 256, N.data(), N.size(), &written) == BL_OK);
  CHECK(written == need);
  CHECK(N.back() == doctest::Approx(10.0));  // 1, 2, ..., 512
  bl_primes_destroy(P);
}

TEST_CASE("generate, save and load") {
  bl_params* p = nullptr;
  REQUIRE(bl_params_create(0.5, 2, &p) == BL_OK);
  bl_primes* P = nullptr;
  REQUIRE(bl_primes_generate(p, 0, 5e3, "median", 1, 1, &P) == BL_OK);
  bl_primes* bad = nullptr;
  CHECK(bl_primes_generate(p, 0, 5e3, "uniform", 1, 1, &bad) == BL_E_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  const auto dir = fs::temp_directory_path() / "beurling_capi";
  fs::create_directories(dir);
  const std::string stem = (dir / "p").string();
  REQUIRE(bl_primes_save(P, stem.c_str()) == BL_OK);
  bl_primes* Q = nullptr;
  REQUIRE(bl_primes_load(stem.c_str(), &Q) == BL_OK);
  REQUIRE(bl_primes_count(Q) == bl_primes_count(P));
  CHECK(std::memcmp(bl_primes_data(P), bl_primes_data(Q), bl_primes_count(P) * sizeof(double)) == 0);
  CHECK(bl_primes_load((dir / "absent").string().c_str(), &Q) == BL_E_IO);
  size_t pi = 0;
  REQUIRE(bl_pi_count(P, 5e3, &pi) == BL_OK);
  CHECK(pi == bl_primes_count(P));
  bl_primes_destroy(P);
  bl_primes_destroy(Q);
  bl_params_destroy(p);
}

TEST_CASE("envelope and psi_C") {
  double lam = 0, mu = 0, logE = 0;
  int k0 = 0;
  REQUIRE(bl_envelope(0.5, 32.0, &lam, &mu, &k0, &logE) == BL_OK);
  CHECK(lam == doctest::Approx(16.0));
  CHECK(k0 == 2);
  CHECK(logE == doctest::Approx(26.0));
  bl_params* p = nullptr;
  REQUIRE(bl_params_create(0.5, 3, &p) == BL_OK);
  double psi = 0;
  REQUIRE(bl_psi_c(p, 3.0, 0, &psi) == BL_OK);
  CHECK(psi == doctest::Approx(std::exp(3.0) - 4.0));
  bl_params_destroy(p);
}

TEST_CASE("run with invalid configuration") {
  bl_config* c = nullptr;
  REQUIRE(bl_config_create(&c) == BL_OK);
  CHECK(bl_config_set(c, "nonsense", "1") == BL_E_INVALID_ARGUMENT);
  REQUIRE(bl_config_set(c, "beta", "1.5") == BL_OK);
  const auto dir = fs::temp_directory_path() / "beurling_capi_run";
  fs::remove_all(dir);
  REQUIRE(bl_config_set(c, "out", dir.string().c_str()) == BL_OK);
  char report[512];
  CHECK(bl_run("zeros", c, report, sizeof report) == 2);
  CHECK(std::string(report).find("invalid") != std::string::npos);
  CHECK_FALSE(fs::exists(dir));
  bl_config_destroy(c);
}

TEST_CASE("acceptance registry") {
  CHECK(bl_acceptance_count() == 11);
  bl_criterion r{};
  CHECK(bl_acceptance_run(0, 1, &r) == BL_E_INVALID_ARGUMENT);
  CHECK(bl_acceptance_run(12, 1, &r) == BL_E_INVALID_ARGUMENT);
}
