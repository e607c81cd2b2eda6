#include "harness/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "acceptance/acceptance.hpp"
#include "acceptance/oracles.hpp"
#include "core/analysis.hpp"
#include "core/complex_g.hpp"
#include "core/counting.hpp"
#include "core/discretize.hpp"
#include "core/error.hpp"
#include "core/gdensity.hpp"
#include "core/rng.hpp"
#include "core/zeta.hpp"

namespace beurling::harness {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Table {
  std::string suffix;  // empty for the main table
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  template <typename... Ts>
  void Add(const Ts&... cells) {
    rows.push_back({Cell(cells)...});
  }
  static std::string Cell(double v) { return FormatReal(v); }
  static std::string Cell(int v) { return std::to_string(v); }
  static std::string Cell(long v) { return std::to_string(v); }
  static std::string Cell(unsigned long v) { return std::to_string(v); }
  static std::string Cell(unsigned long long v) { return std::to_string(v); }
  static std::string Cell(const std::string& v) { return v; }
  static std::string Cell(const char* v) { return v; }
};

struct Check {
  std::string name;
  double value = 0.0;
  std::string limit;
  bool passed = false;
};

// Everything a subcommand produces before anything touches the disk.
struct Artifacts {
  std::vector<Table> tables;
  std::vector<Check> checks;
  json info = json::object();
  json criteria = json::array();
  const PrimeSequence* primes = nullptr;
  PrimeSequence primes_storage;

  void CheckAtMost(const std::string& name, double value, double limit) {
    checks.push_back({name, value, "<= " + FormatReal(limit), value <= limit});
  }
  void CheckBetween(const std::string& name, double value, double lo, double hi) {
    checks.push_back({name, value, "[" + FormatReal(lo) + ", " + FormatReal(hi) + "]",
                      value >= lo && value <= hi});
  }
  void CheckTrue(const std::string& name, bool ok, double value = 0.0) {
    checks.push_back({name, value, "true", ok});
  }
};

std::string CsvQuote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void WriteCsv(const fs::path& path, const Table& t) {
  std::ofstream os(path, std::ios::binary);
  Require(static_cast<bool>(os), ErrorCode::kIo, "cannot write " + path.string());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << CsvQuote(cells[i]);
    os << "\r\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  Require(static_cast<bool>(os), ErrorCode::kIo, "write failed for " + path.string());
}

DensitySpec SpecOf(const ExperimentConfig& c) {
  return {MakeParams(c.beta, c.K), c.mode == "truncated" ? DensityMode::kTruncated : DensityMode::kFull};
}

const PrimeSequence& PrimesFor(const ExperimentConfig& c, Artifacts& a) {
  if (!a.primes) {
    a.primes_storage = Generate(SpecOf(c), c.x_max, ParseScheme(c.scheme), c.seed, c.threads);
    a.primes = &a.primes_storage;
  }
  return *a.primes;
}

void RunZeros(const ExperimentConfig& c, Artifacts& a) {
  const auto zeros = gfun::FindZeros(c.n_max);
  Table t{"", {"n", "re", "im", "residual", "rect_winding", "strip_winding", "in_strip", "left_of_bound"}, {}};
  double worst = 0.0;
  int outside = 0;
  for (int n = 1; n <= c.n_max; ++n) {
    const auto& z = zeros[n];
    const double x = z.location.real(), y = z.location.imag();
    const bool strip = y > n * std::numbers::pi && y < (n + 1) * std::numbers::pi;
    const bool left = x < -0.5 * std::log(n * std::numbers::pi / 2.0);
    if (!strip || !left) ++outside;
    worst = std::max(worst, z.residual);
    t.Add(n, x, y, z.residual, z.rect_winding, z.strip_winding, strip ? 1 : 0, left ? 1 : 0);
  }
  a.tables.push_back(std::move(t));
  a.CheckAtMost("max_residual", worst, Tolerance(c, "zero_residual"));
  a.CheckAtMost("zeros_outside_predicted_region", outside, 0);
  const auto b = gfun::CheckGBounds(20000, c.seed);
  a.CheckAtMost("approximation_bound_violations", static_cast<double>(b.approx_violations), 0);
  a.CheckAtMost("size_bound_violations", static_cast<double>(b.bound_violations), 0);
  a.info["bounds_samples"] = b.samples;
  a.info["max_approx_ratio"] = b.max_approx_ratio;
  a.info["max_bound_ratio"] = b.max_bound_ratio;
  a.info["lower_bound_witness"] = gfun::LowerBoundWitness(zeros);
}

void RunGfun(const ExperimentConfig& c, Artifacts& a) {
  const GDensity& g = GDensity::Default();
  Table table{"table", {"w", "g", "g_log_u_minus_1"}, {}};
  double flat = 0.0;
  for (int i = 0; i <= 20 * 64; ++i) {
    const double w = i / 64.0;
    const double gv = g.EvalLog(w);
    table.Add(w, gv, gv * w - 1.0);
    if (w > 1.0 && w < 2.0) flat = std::max(flat, std::abs(gv - 1.0));
  }
  const DecaySurvey s = SurveyDecay(5.0, 14.0);
  Table decay{"decay", {"w_lo", "w_hi", "max_error", "max_scaled", "max_deriv_scaled"}, {}};
  for (const auto& win : s.windows)
    decay.Add(win.w_lo, win.w_hi, win.max_error, win.max_scaled, win.max_deriv_scaled);
  Rng rng(c.seed);
  Table mellin{"mellin", {"re", "im", "log_g_re", "log_g_im", "mellin_re", "mellin_im", "abs_diff"}, {}};
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Complex z{0.5 + 2.5 * rng.Uniform(), -20.0 + 40.0 * rng.Uniform()};
    const Complex lg = gfun::LogG(z);
    const Complex m = MellinLogG(z, 1e-9).value;
    worst = std::max(worst, std::abs(lg - m));
    mellin.Add(z.real(), z.imag(), lg.real(), lg.imag(), m.real(), m.imag(), std::abs(lg - m));
  }
  a.tables.push_back(std::move(table));
  a.tables.push_back(std::move(decay));
  a.tables.push_back(std::move(mellin));
  a.CheckAtMost("g_flat_on_e_e2", flat, Tolerance(c, "g_flat"));
  a.CheckBetween("decay_slope", s.slope, Tolerance(c, "slope_lo"), Tolerance(c, "slope_hi"));
  a.CheckAtMost("mellin_max_abs_diff", worst, Tolerance(c, "mellin"));
  a.info["decay_bound_exponent"] = DecayExponent();
  a.info["decay_scaled_stable"] = s.scaled_stable;
  a.info["decay_derivative_scaled_stable"] = s.deriv_stable;
}

void RunDensity(const ExperimentConfig& c, Artifacts& a) {
  const DensitySpec spec = SpecOf(c);
  Table t{"", {"v_log", "f", "delta_local"}, {}};
  double delta = 0.0, min_f = INFINITY;
  for (double v : LogSpacedGrid(4.0, 40.0, 512)) {
    const double w = std::log(v);
    const double f = DensityLog(w, spec);
    const double d = std::abs(f * w / (-std::expm1(-w)) - 1.0);
    delta = std::max(delta, d);
    min_f = std::min(min_f, f);
    t.Add(w, f, d);
  }
  Table pic{"pic", {"x", "Pi_C", "Li"}, {}};
  for (double x : LogSpacedGrid(0.5, std::log(c.x_max), 64)) pic.Add(x, PiC(x, spec).value, Li(x));
  a.tables.push_back(std::move(t));
  a.tables.push_back(std::move(pic));
  a.CheckAtMost("chebyshev_delta", delta, std::nextafter(1.0, 0.0));
  a.CheckTrue("density_positive", min_f > 0.0, min_f);
}

void RunDiscretize(const ExperimentConfig& c, Artifacts& a) {
  const DensitySpec spec = SpecOf(c);
  const PrimeSequence& P = PrimesFor(c, a);
  a.info["prime_count"] = P.primes.size();
  a.info["mass"] = P.mass;
  if (P.scheme == Scheme::kMedian) {
    std::vector<double> pts = P.primes;
    pts.push_back(c.x_max);
    const auto pic = oracle::CumulativePiC(spec, pts);
    double worst = std::abs(static_cast<double>(P.primes.size()) - pic.back());
    for (std::size_t j = 0; j < P.primes.size(); ++j)
      worst = std::max({worst, std::abs(j + 1.0 - pic[j]), std::abs(static_cast<double>(j) - pic[j])});
    a.CheckAtMost("sup_pi_minus_PiC", worst, Tolerance(c, "pi_gap"));
  }
  const auto xs = LogSpacedGrid(std::log(10.0), std::log(c.x_max), 80);
  Table t{"", {"t", "x", "D", "normalized"}, {}};
  double worst = 0.0;
  for (double tt : {0.0, 0.5, 2.0, 7.0, 20.0, 60.0, 200.0, 1000.0, 1e4}) {
    const auto D = ExpSumDiscrepancies(P, spec, xs, tt);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double n = D[i] / DiscrepancyScale(xs[i], tt);
      worst = std::max(worst, n);
      t.Add(tt, xs[i], D[i], n);
    }
  }
  a.tables.push_back(std::move(t));
  a.CheckAtMost("max_normalized_discrepancy", worst, Tolerance(c, "discrepancy"));
}

void RunCount(const ExperimentConfig& c, Artifacts& a) {
  const DensitySpec spec = SpecOf(c);
  const PrimeSequence& P = PrimesFor(c, a);
  const auto xs = LogSpacedGrid(std::log(2.0), std::log(c.x_max), 200);
  Table n_tab{"N", {"x", "value"}, {}}, psi_tab{"psi", {"x", "value"}, {}},
      pi_tab{"Pi", {"x", "value"}, {}}, pps_tab{"pi_from_psi", {"x", "value"}, {}};
  double prev = 0.0, sqrt_const = 0.0;
  bool monotone = true;
  for (double x : xs) {
    const double n = static_cast<double>(CountN(P, x, kDefaultEnumerationHorizon, c.threads));
    monotone = monotone && n >= prev && n >= 1.0;
    prev = n;
    const double pps = PiFromPsi(P, x);
    sqrt_const = std::max(sqrt_const, std::abs(pps - static_cast<double>(PiCount(P, x))) / std::sqrt(x));
    n_tab.Add(x, n);
    psi_tab.Add(x, Psi(P, x));
    pi_tab.Add(x, PiRiemann(P, x));
    pps_tab.Add(x, pps);
  }
  a.CheckTrue("N_nondecreasing_from_1", monotone);
  a.info["pi_from_psi_sqrt_constant"] = sqrt_const;

  // exp* on the atomic measure against enumeration, up to 1e5.
  const double x_top = std::min(1e5, c.x_max);
  const double h = 1.0 / 4096.0;
  const double W = std::log(x_top) + h;
  const GridFunction grid = ExpStar(PrimePowerMeasure(P.primes, std::exp(W + h)), W, h);
  const int omega = static_cast<int>(std::floor(W / std::log(P.primes.front()))) + 1;
  int outside = 0;
  for (double x : LogSpacedGrid(std::log(2.0), std::log(x_top), 200)) {
    const double exact = static_cast<double>(CountN(P, x));
    const double window = static_cast<double>(CountN(P, std::min(P.x_max, x * std::exp((omega + 1) * h))) -
                                              CountN(P, x * std::exp(-h)));
    if (std::abs(grid.At(x) - exact) > window + 1e-9) ++outside;
  }
  a.CheckAtMost("exp_star_outside_cell_window", outside, 0);

  // psi against psi_C.
  const auto bxs = LogSpacedGrid(std::log(1e2), std::log(c.x_max), 81);
  const auto bridge = PsiBridge(P, spec.params, bxs, c.threads);
  Table b_tab{"psi_bridge", {"x", "psi", "psiC", "normalized"}, {}};
  double max_norm = 0.0;
  for (const auto& r : bridge) {
    b_tab.Add(r.x, r.psi, r.psiC, r.normalized);
    max_norm = std::max(max_norm, r.normalized);
  }
  a.info["psi_bridge_max_normalized"] = max_norm;

  // N against a_hat x.
  const auto ahat = DensityA(P, spec, c.x_max);
  const auto pxs = LogSpacedGrid(std::log(std::min(1e3, c.x_max / 10.0)), std::log(c.x_max), 41);
  const auto prof = NErrorProfileRun(P, ahat.value, spec.params.beta, pxs,
                                     kDefaultEnumerationHorizon, c.threads);
  Table p_tab{"N_error", {"x", "N", "rel_error"}, {}};
  for (const auto& r : prof.rows) p_tab.Add(r.x, r.N, r.rel_error);
  a.info["a_hat"] = ahat.value;
  a.info["a_hat_error"] = ahat.error;
  a.info["c_hat"] = prof.c_hat;
  a.info["decade_medians"] = prof.decade_median;
  a.info["medians_decreasing"] = prof.medians_decreasing;
  for (Table* t : {&n_tab, &psi_tab, &pi_tab, &pps_tab, &b_tab, &p_tab}) a.tables.push_back(std::move(*t));
}

void RunZeta(const ExperimentConfig& c, Artifacts& a) {
  const DensitySpec spec = SpecOf(c);
  const SystemParams& params = spec.params;
  const MixedMeasure m = ContinuousMeasure(spec, 1.0 / 4096.0, 128.0);
  Table id{"identity", {"sigma", "t", "product_re", "product_im", "measure_re", "measure_im", "rel_diff"}, {}};
  double worst = 0.0;
  for (double sigma : {1.2, 1.5, 2.0, 2.5, 3.0}) {
    for (double t : {-100.0, -55.0, -20.0, -7.4, -1.0, 0.0, 1.0, 3.0, 7.4, 12.0, 40.0, 54.6, 80.0, 100.0}) {
      const Complex s{sigma, t};
      const Complex p = spec.mode == DensityMode::kFull ? ZetaCProduct(params, s).value
                                                        : ZetaCK(params, params.K, s);
      const Complex q = ZetaFromMeasure(m, s).value;
      const double rel = std::abs(p - q) / std::abs(p);
      worst = std::max(worst, rel);
      id.Add(sigma, t, p.real(), p.imag(), q.real(), q.imag(), rel);
    }
  }
  a.CheckAtMost("product_vs_measure", worst, Tolerance(c, "zeta_identity"));
  Table res{"residue", {"K", "residue_aK", "density_a_continuous", "abs_diff"}, {}};
  double rworst = 0.0;
  for (int K = 0; K <= std::min(params.K, 3); ++K) {
    const double r1 = ResidueAK(params, K), r2 = DensityAContinuous(params, K).value;
    rworst = std::max(rworst, std::abs(r1 - r2));
    res.Add(K, r1, r2, std::abs(r1 - r2));
  }
  a.CheckAtMost("residue_two_routes", rworst, Tolerance(c, "residue"));

  const PrimeSequence& P = PrimesFor(c, a);
  Require(std::log(c.x_max) >= 4.0, ErrorCode::kInvalidArgument, "zeta bound survey needs x_max >= e^4");
  const double anchor = std::min(c.x_max, std::exp(15.9));
  const ZetaBoundReport rep = BoundSurvey(P, spec, 1, anchor, 96, c.threads);
  Table b{"", {"sigma", "t", "abs_zeta", "category", "ratio"}, {}};
  for (const auto& s : rep.samples) b.Add(s.sigma, s.t, s.abs_zeta, s.category, s.ratio);
  a.info["bound_K"] = 1;
  a.info["sigma1"] = rep.sigma1;
  a.info["A_hat"] = rep.A_hat;
  a.info["B_hat"] = rep.B_hat;
  a.info["max_ratio"] = rep.max_ratio;
  a.info["growth_flag"] = rep.growth_flag;
  a.info["gap_truncated_at_x_max"] = std::log(P.x_max) < SystemParams::L(2);
  a.tables.push_back(std::move(b));
  a.tables.push_back(std::move(id));
  a.tables.push_back(std::move(res));
}

void RunPsi(const ExperimentConfig& c, Artifacts& a) {
  const SystemParams params = MakeParams(c.beta, c.K);
  const OscillationScan scan = ScanOscillation(params, c.center, c.half_width, c.threads);
  Table t{"", {"log_x", "psiC", "E", "ratio", "k0", "mu_frac"}, {}};
  for (const auto& r : scan.records) t.Add(r.log_x, r.psiC, r.E, r.ratio, r.k0, r.mu_frac);
  a.tables.push_back(std::move(t));
  const double lo = Tolerance(c, "ratio_lo"), hi = Tolerance(c, "ratio_hi");
  a.CheckBetween("max_ratio", scan.records[scan.argmax].ratio, lo, hi);
  a.CheckBetween("min_ratio", scan.records[scan.argmin].ratio, -hi, -lo);
  const DominantTerms d = ClassifyDominantTerms(params, c.center);
  a.info["lambda_max"] = d.env.lambda_max;
  a.info["mu"] = d.env.mu;
  a.info["k0"] = d.env.k0;
  a.info["dominant"] = d.dominant == Dominance::kLower ? "I_k0"
                       : d.dominant == Dominance::kUpper ? "I_k0+1" : "neither";
  a.info["predicted_lower_over_E"] = d.predicted_lower;
  a.info["predicted_upper_over_E"] = d.predicted_upper;
  a.info["dominant_precondition_met"] = d.precondition_met;
  a.info["scan_step"] = scan.step;
}

void RunPerron(const ExperimentConfig& c, Artifacts& a) {
  const SystemParams params = MakeParams(c.beta, c.K);
  Table t{"", {"x", "kappa", "T", "lhs", "rhs", "gap", "tail", "relative"}, {}};
  PerronResult last;
  for (double T : {c.T / 2.0, c.T}) {
    last = PerronCheck(params, c.perron_K, c.x, c.kappa, T);
    t.Add(c.x, c.kappa, T, last.lhs, last.rhs, last.gap, last.tail, last.relative);
  }
  a.tables.push_back(std::move(t));
  a.CheckAtMost("relative_gap_with_tail", last.relative, Tolerance(c, "perron"));
}

const char* Invocation(int id) {
  switch (id) {
    case 1: return "zeros --n-max 50";
    case 2: case 3: return "gfun";
    case 4: return "density --beta 0.5";
    case 5: return "zeta --beta 0.5 --K 3";
    case 6: return "discretize --beta 0.5 --x-max 1e6 --scheme {median,random} --seed 1..8";
    case 7: case 10: return "count --beta 0.5 --x-max 1e6 --scheme median";
    case 8: return "perron --beta 0.5 --K 1 --x 50 --kappa 1.25 --T 1e5";
    case 9: return "psi --beta 0.5 --K 5 --center 32 --half-width 0.2";
    case 11: return "count --beta 0.5 --x-max 1e7 --scheme median";
  }
  return "";
}

void RunAll(const ExperimentConfig& c, Artifacts& a) {
  Table t{"", {"id", "name", "passed", "measured", "seconds"}, {}};
  for (int id = 1; id <= acceptance::CriterionCount(); ++id) {
    const auto r = acceptance::RunCriterion(id, {c.threads});
    t.Add(id, r.name, r.passed ? 1 : 0, r.measured, r.seconds);
    a.CheckTrue("criterion_" + std::to_string(id), r.passed, r.measured);
    a.criteria.push_back({{"id", id}, {"name", r.name}, {"passed", r.passed},
                          {"measured", r.measured}, {"detail", r.detail},
                          {"seconds", r.seconds}, {"invocation", Invocation(id)}});
  }
  a.tables.push_back(std::move(t));
}

json ConfigJson(const ExperimentConfig& c) {
  json j = {{"beta", c.beta}, {"K", c.K}, {"x_max", c.x_max}, {"scheme", c.scheme},
            {"seed", c.seed}, {"threads", c.threads}, {"mode", c.mode},
            {"n_max", c.n_max}, {"center", c.center}, {"half_width", c.half_width},
            {"x", c.x}, {"kappa", c.kappa}, {"T", c.T}, {"perron_K", c.perron_K}};
  for (const auto& [k, v] : c.tolerances) j["tolerances"][k] = v;
  return j;
}

}  // namespace

std::string FormatReal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

RunOutcome Run(const std::string& subcommand, const ExperimentConfig& cfg_in) {
  RunOutcome out;
  ExperimentConfig cfg = cfg_in;
  if (const char* env = std::getenv("BEURLING_OUT"); env && *env) cfg.output_dir = env;
  try {
    Validate(cfg, subcommand);
  } catch (const Error& e) {
    out.exit_code = 2;
    out.report = std::string("invalid configuration: ") + e.what() + "\n";
    return out;
  }

  const auto start = std::chrono::steady_clock::now();
  Artifacts art;
  std::string failure;
  static const std::map<std::string, std::function<void(const ExperimentConfig&, Artifacts&)>> runners = {
      {"zeros", RunZeros}, {"gfun", RunGfun},   {"density", RunDensity}, {"discretize", RunDiscretize},
      {"count", RunCount}, {"zeta", RunZeta},   {"psi", RunPsi},         {"perron", RunPerron},
      {"all", RunAll}};
  try {
    runners.at(subcommand)(cfg, art);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument || e.code() == ErrorCode::kDomain) {
      out.exit_code = 2;
      out.report = std::string("invalid configuration: ") + e.what() + "\n";
      return out;
    }
    failure = std::string(ErrorCodeName(e.code())) + ": " + e.what();
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(ConfigHash(cfg, subcommand)));
  const fs::path dir(cfg.output_dir);
  try {
    fs::create_directories(dir);
    auto name = [&](const std::string& suffix, const std::string& ext) {
      return (dir / (subcommand + (suffix.empty() ? "" : "_" + suffix) + "_" + hash + ext)).string();
    };
    for (const Table& t : art.tables) {
      const std::string path = name(t.suffix, ".csv");
      WriteCsv(path, t);
      out.files.push_back(path);
    }
    if (art.primes && subcommand == "discretize") {
      const std::string stem = name("primes", "");
      SavePrimes(*art.primes, stem);
      out.files.push_back(stem + ".bin");
      out.files.push_back(stem + ".meta");
    }
    bool passed = failure.empty();
    std::ostringstream rep;
    json checks = json::array();
    for (const Check& ch : art.checks) {
      passed = passed && ch.passed;
      checks.push_back({{"name", ch.name}, {"value", ch.value}, {"limit", ch.limit}, {"passed", ch.passed}});
      rep << (ch.passed ? "PASS " : "FAIL ") << ch.name << " = " << FormatReal(ch.value) << " (" << ch.limit << ")\n";
    }
    for (const auto& cr : art.criteria)
      rep << (cr["passed"].get<bool>() ? "PASS " : "FAIL ") << "criterion " << cr["id"].get<int>() << " "
          << cr["name"].get<std::string>() << ": " << cr["detail"].get<std::string>() << "\n";
    if (!failure.empty()) rep << "FAIL " << failure << "\n";
    const std::string manifest_path = name("", ".json");
    json manifest = {{"subcommand", subcommand}, {"version", kVersion},
                     {"config", ConfigJson(cfg)}, {"config_hash", hash},
                     {"wall_seconds", wall},     {"passed", passed},
                     {"checks", checks},         {"info", art.info},
                     {"files", out.files}};
    if (!art.criteria.empty()) manifest["criteria"] = art.criteria;
    if (!failure.empty()) manifest["error"] = failure;
    std::ofstream os(manifest_path);
    os << manifest.dump(2) << "\n";
    Require(static_cast<bool>(os), ErrorCode::kIo, "cannot write " + manifest_path);
    out.files.push_back(manifest_path);
    for (const auto& f : out.files) rep << "wrote " << f << "\n";
    out.report = rep.str();
    out.exit_code = passed ? 0 : 1;
  } catch (const std::exception& e) {
    out.exit_code = 1;
    out.report += std::string("output failure: ") + e.what() + "\n";
  }
  return out;
}

}  // namespace beurling::harness
