#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"
#include "harness/config.hpp"
#include "harness/harness.hpp"

using namespace beurling;
using namespace beurling::harness;
namespace fs = std::filesystem;

namespace {

fs::path FreshDir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "beurling_harness" / name;
  fs::remove_all(dir);
  return dir;
}

std::string Slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string FindFile(const RunOutcome& r, const std::string& ext) {
  for (const auto& f : r.files)
    if (f.size() >= ext.size() && f.compare(f.size() - ext.size(), ext.size(), ext) == 0) return f;
  return {};
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("options and tolerances") {
  ExperimentConfig c;
  SetOption(c, "beta", "0.25");
  SetOption(c, "x-max", "5e5");
  SetOption(c, "tol.perron", "0.5");
  CHECK(c.beta == 0.25);
  CHECK(c.x_max == 5e5);
  CHECK(Tolerance(c, "perron") == 0.5);
  CHECK(Tolerance(ExperimentConfig{}, "perron") == 0.02);
  CHECK_THROWS_AS(SetOption(c, "bogus", "1"), Error);
  CHECK_THROWS_AS(SetOption(c, "beta", "abc"), Error);
  CHECK_THROWS_AS(Tolerance(c, "no_such_tolerance"), Error);
}

TEST_CASE("config file") {
  const auto dir = FreshDir("cfg");
  fs::create_directories(dir);
  const auto path = (dir / "run.ini").string();
  std::ofstream(path) << "# comment\n[experiment]\nbeta = 0.4\nK=4 ; trailing\nscheme=random\n";
  const auto c = LoadConfigFile(path);
  CHECK(c.beta == 0.4);
  CHECK(c.K == 4);
  CHECK(c.scheme == "random");
  CHECK_THROWS_AS(LoadConfigFile((dir / "missing.ini").string()), Error);
}

TEST_CASE("validation") {
  ExperimentConfig c;
  CHECK_NOTHROW(Validate(c, "zeros"));
  c.beta = 1.5;
  CHECK_THROWS_AS(Validate(c, "zeros"), Error);
  c = {};
  c.scheme = "uniform";
  CHECK_THROWS_AS(Validate(c, "discretize"), Error);
  c = {};
  c.x_max = 1e9;
  CHECK_THROWS_AS(Validate(c, "count"), Error);
  c = {};
  CHECK_THROWS_AS(Validate(c, "nonexistent"), Error);
}

TEST_CASE("config hash ignores threads and output directory") {
  ExperimentConfig a, b;
  b.threads = 8;
  b.output_dir = "elsewhere";
  CHECK(ConfigHash(a, "zeros") == ConfigHash(b, "zeros"));
  b.seed = 2;
  CHECK(ConfigHash(a, "zeros") != ConfigHash(b, "zeros"));
  CHECK(ConfigHash(a, "zeros") != ConfigHash(a, "gfun"));
}

TEST_CASE("invalid configuration exits 2 and writes nothing") {
  ExperimentConfig c;
  c.beta = 1.5;
  c.output_dir = FreshDir("invalid").string();
  const auto r = Run("zeros", c);
  CHECK(r.exit_code == 2);
  CHECK(r.files.empty());
  CHECK_FALSE(fs::exists(c.output_dir));
}

TEST_CASE("zeros run writes a table and manifest") {
  ExperimentConfig c;
  c.n_max = 8;
  c.output_dir = FreshDir("zeros").string();
  const auto r = Run("zeros", c);
  CHECK(r.exit_code == 0);
  const auto csv = FindFile(r, ".csv");
  const auto manifest = FindFile(r, ".json");
  REQUIRE_FALSE(csv.empty());
  REQUIRE_FALSE(manifest.empty());
  const auto text = Slurp(csv);
  CHECK(text.rfind("n,re,im,residual", 0) == 0);
  CHECK(text.find("\r\n") != std::string::npos);
  const auto j = nlohmann::json::parse(Slurp(manifest));
  CHECK(j["subcommand"] == "zeros");
  CHECK(j["passed"] == true);
  CHECK(j["config"]["n_max"] == 8);
  CHECK(j["version"] == kVersion);
}

TEST_CASE("tables are identical across thread counts") {
  ExperimentConfig c;
  c.x_max = 2e4;
  c.K = 2;
  c.scheme = "random";
  c.output_dir = FreshDir("det1").string();
  const auto a = Run("discretize", c);
  c.threads = 3;
  c.output_dir = FreshDir("det2").string();
  const auto b = Run("discretize", c);
  REQUIRE(a.files.size() == b.files.size());
  for (std::size_t i = 0; i < a.files.size(); ++i) {
    if (a.files[i].ends_with(".json")) continue;
    CHECK(fs::path(a.files[i]).filename() == fs::path(b.files[i]).filename());
    CHECK(Slurp(a.files[i]) == Slurp(b.files[i]));
  }
}

TEST_CASE("output directory from the environment") {
  const auto dir = FreshDir("env");
  ::setenv("BEURLING_OUT", dir.string().c_str(), 1);
  ExperimentConfig c;
  c.n_max = 3;
  c.output_dir = FreshDir("ignored").string();
  const auto r = Run("zeros", c);
  ::unsetenv("BEURLING_OUT");
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir));
  CHECK_FALSE(fs::exists(c.output_dir));
}

TEST_CASE("real formatting round-trips") {
  const double v = 0.1 + 0.2;
  CHECK(std::stod(FormatReal(v)) == v);
}

}  // TEST_SUITE
