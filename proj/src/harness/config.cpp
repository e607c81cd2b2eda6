#include "harness/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "core/error.hpp"

namespace beurling::harness {
namespace {

const std::map<std::string, double>& DefaultTolerances() {
  static const std::map<std::string, double> t = {
      {"zero_residual", 1e-10}, {"g_flat", 1e-14},       {"slope_lo", -0.26},
      {"slope_hi", -0.20},      {"mellin", 1e-6},        {"zeta_identity", 1e-6},
      {"residue", 1e-8},        {"pi_gap", 1.0},         {"discrepancy", 10.0},
      {"perron", 0.02},         {"ratio_lo", 1.7},       {"ratio_hi", 2.3},
  };
  return t;
}

std::string Trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double ParseDouble(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  Require(used == v.size() && !v.empty(), ErrorCode::kInvalidArgument,
          "option " + key + ": not a number: '" + v + "'");
  return out;
}

long long ParseInt(const std::string& key, const std::string& v) {
  const double d = ParseDouble(key, v);
  Require(d == std::floor(d) && std::abs(d) < 9e15, ErrorCode::kInvalidArgument,
          "option " + key + ": not an integer: '" + v + "'");
  return static_cast<long long>(d);
}

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double Tolerance(const ExperimentConfig& cfg, const std::string& name) {
  if (auto it = cfg.tolerances.find(name); it != cfg.tolerances.end()) return it->second;
  const auto& d = DefaultTolerances();
  auto it = d.find(name);
  Require(it != d.end(), ErrorCode::kInternal, "unknown tolerance " + name);
  return it->second;
}

void SetOption(ExperimentConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
  std::string key = Trim(raw_key);
  for (char& c : key)
    if (c == '-') c = '_';
  const std::string v = Trim(raw_value);
  if (key == "beta") cfg.beta = ParseDouble(key, v);
  else if (key == "K") cfg.K = static_cast<int>(ParseInt(key, v));
  else if (key == "x_max") cfg.x_max = ParseDouble(key, v);
  else if (key == "scheme") cfg.scheme = v;
  else if (key == "seed") {
    Require(!v.empty() && v.find_first_not_of("0123456789") == std::string::npos,
            ErrorCode::kInvalidArgument, "option seed: not an unsigned integer");
    cfg.seed = std::stoull(v);
  }
  else if (key == "threads") cfg.threads = static_cast<int>(ParseInt(key, v));
  else if (key == "mode") cfg.mode = v;
  else if (key == "out") cfg.output_dir = v;
  else if (key == "n_max") cfg.n_max = static_cast<int>(ParseInt(key, v));
  else if (key == "center") cfg.center = ParseDouble(key, v);
  else if (key == "half_width") cfg.half_width = ParseDouble(key, v);
  else if (key == "x") cfg.x = ParseDouble(key, v);
  else if (key == "kappa") cfg.kappa = ParseDouble(key, v);
  else if (key == "T") cfg.T = ParseDouble(key, v);
  else if (key == "perron_K") cfg.perron_K = static_cast<int>(ParseInt(key, v));
  else if (key.rfind("tol.", 0) == 0) {
    const std::string name = key.substr(4);
    Require(DefaultTolerances().count(name) == 1, ErrorCode::kInvalidArgument,
            "unknown tolerance '" + name + "'");
    cfg.tolerances[name] = ParseDouble(key, v);
  } else {
    Fail(ErrorCode::kInvalidArgument, "unknown option '" + key + "'");
  }
}

ExperimentConfig LoadConfigFile(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  Require(static_cast<bool>(in), ErrorCode::kIo, "cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = Trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    Require(eq != std::string::npos, ErrorCode::kInvalidArgument,
            path + ":" + std::to_string(lineno) + ": expected key=value");
    SetOption(base, line.substr(0, eq), line.substr(eq + 1));
  }
  return base;
}

void Validate(const ExperimentConfig& c, const std::string& sub) {
  static const std::set<std::string> subs = {"zeros", "gfun",  "density", "discretize", "count",
                                             "zeta",  "psi",   "perron",  "all"};
  Require(subs.count(sub) == 1, ErrorCode::kInvalidArgument, "unknown subcommand '" + sub + "'");
  Require(c.beta > 0.0 && c.beta < 1.0, ErrorCode::kInvalidArgument, "beta must lie in (0, 1)");
  Require(c.K >= 1 && std::pow(4.0, c.beta * c.K) < 709.0, ErrorCode::kInvalidArgument,
          "K must be >= 1 with gamma_K = exp(4^{beta K}) representable");
  Require(std::isfinite(c.x_max) && c.x_max > 10.0 && c.x_max <= 1e8,
          ErrorCode::kInvalidArgument, "x_max must lie in (10, 1e8]");
  Require(c.scheme == "median" || c.scheme == "random", ErrorCode::kInvalidArgument,
          "scheme must be median or random");
  Require(c.mode == "full" || c.mode == "truncated", ErrorCode::kInvalidArgument,
          "mode must be full or truncated");
  Require(c.threads >= 1 && c.threads <= 1024, ErrorCode::kInvalidArgument,
          "threads must lie in 1..1024");
  Require(!c.output_dir.empty(), ErrorCode::kInvalidArgument, "output directory is empty");
  Require(c.n_max >= 1 && c.n_max <= 10000, ErrorCode::kInvalidArgument, "n_max must lie in 1..10000");
  Require(c.half_width > 0.0 && c.center - c.half_width > 0.0 && c.center + c.half_width < 700.0,
          ErrorCode::kInvalidArgument, "psi window must lie inside (0, 700) in log x");
  Require(c.x > 1.0 && c.x < 1e6, ErrorCode::kInvalidArgument, "perron x must lie in (1, 1e6)");
  Require(c.kappa > 1.0, ErrorCode::kInvalidArgument, "kappa must exceed 1");
  Require(c.T > 0.0 && c.T <= 1e7, ErrorCode::kInvalidArgument, "T must lie in (0, 1e7]");
  Require(c.perron_K >= 1 && c.perron_K <= c.K, ErrorCode::kInvalidArgument,
          "perron_K must lie in 1..K");
  if (sub == "count")
    Require(c.x_max <= 1e7, ErrorCode::kInvalidArgument,
            "count tables need x_max within the 1e7 enumeration horizon");
}

std::string Canonical(const ExperimentConfig& c) {
  std::ostringstream s;
  s << "beta=" << Num(c.beta) << "\nK=" << c.K << "\nx_max=" << Num(c.x_max)
    << "\nscheme=" << c.scheme << "\nseed=" << c.seed << "\nmode=" << c.mode
    << "\nn_max=" << c.n_max << "\ncenter=" << Num(c.center)
    << "\nhalf_width=" << Num(c.half_width) << "\nx=" << Num(c.x) << "\nkappa=" << Num(c.kappa)
    << "\nT=" << Num(c.T) << "\nperron_K=" << c.perron_K << "\n";
  for (const auto& entry : DefaultTolerances())
    s << "tol." << entry.first << "=" << Num(Tolerance(c, entry.first)) << "\n";
  return s.str();
}

std::uint64_t ConfigHash(const ExperimentConfig& cfg, const std::string& subcommand) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : subcommand + "\n" + Canonical(cfg)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace beurling::harness
