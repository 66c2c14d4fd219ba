// mcfluct command-line front end. Talks to the engine only through the C API.
//
// Every command computes its full result in memory before anything is
// written, so a failed run never leaves a partial file behind.

#include <mcfluct/mcfluct.h>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

enum ExitCode { kSuccess = 0, kFailure = 1, kUsage = 2, kResource = 3 };

struct ApiError {
  mcf_status status;
  std::string message;
};

void check(mcf_status status) {
  if (status != MCF_OK) throw ApiError{status, mcf_last_error()};
}

struct ContextDeleter {
  void operator()(mcf_context* p) const { mcf_context_destroy(p); }
};
struct DistributionDeleter {
  void operator()(mcf_distribution* p) const { mcf_distribution_destroy(p); }
};
struct SeriesDeleter {
  void operator()(mcf_series* p) const { mcf_series_destroy(p); }
};
struct ReportDeleter {
  void operator()(mcf_report* p) const { mcf_report_destroy(p); }
};
using Context = std::unique_ptr<mcf_context, ContextDeleter>;
using Distribution = std::unique_ptr<mcf_distribution, DistributionDeleter>;
using Series = std::unique_ptr<mcf_series, SeriesDeleter>;
using Report = std::unique_ptr<mcf_report, ReportDeleter>;

struct RunConfig {
  std::string stats_text = "fermi";
  std::uint64_t N = 0;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> n_max;
  std::vector<double> x;
  int digits = 12;
  std::string out;
  std::uint64_t budget = MCF_DEFAULT_BUDGET;
  std::string figure_id;
  std::string suite;
};

// A named CSV document awaiting output.
struct Csv {
  std::string path;  // empty for stdout
  std::string text;
};

mcf_statistics parse_stats(const std::string& text) {
  mcf_statistics s{};
  check(mcf_statistics_parse(text.c_str(), &s));
  return s;
}

std::string stats_name(const mcf_statistics& s) {
  std::size_t required = 0;
  mcf_statistics_format(&s, nullptr, 0, &required);
  std::string text(required, '\0');
  check(mcf_statistics_format(&s, text.data(), text.size(), &required));
  text.resize(required - 1);
  return text;
}

mcf_statistics fes(std::int64_t num, std::int64_t den) { return {MCF_FES, num, den}; }

std::string real(double v, int digits) { return fmt::format("{:.{}g}", v, digits); }

std::string metadata(const std::string& command, const std::string& params) {
  return fmt::format("# mcfluct {} {} {}\n", mcf_version(), command, params);
}

// "fes:3/4" -> "g3_4", "fermi" -> "fermi"; safe inside a filename.
std::string file_tag(const mcf_statistics& s) {
  if (s.kind != MCF_FES) return stats_name(s);
  return s.g_den == 1 ? fmt::format("g{}", s.g_num) : fmt::format("g{}_{}", s.g_num, s.g_den);
}

Csv omega_csv(mcf_context* ctx, const RunConfig& cfg) {
  const auto stats = parse_stats(cfg.stats_text);
  mcf_distribution* raw = nullptr;
  check(mcf_distribution_resolve(ctx, cfg.n, cfg.N, &stats, cfg.budget, &raw));
  Distribution d(raw);
  std::string text = metadata("omega", fmt::format("stats={} N={} n={}", stats_name(stats), cfg.N, cfg.n));
  text += "N_ex,omega\n";
  for (std::size_t k = 1; k <= mcf_distribution_size(d.get()); ++k) {
    text += fmt::format("{},{}\n", k, mcf_distribution_omega(d.get(), k));
  }
  return {cfg.out, std::move(text)};
}

std::string sweep_rows(mcf_context* ctx, const mcf_statistics& stats, std::uint64_t N,
                       std::uint64_t n_max, std::uint64_t budget, int digits, bool with_mean) {
  mcf_series* raw = nullptr;
  check(mcf_fluctuation_sweep(ctx, N, &stats, n_max, budget, &raw));
  Series series(raw);
  std::string rows;
  for (std::size_t i = 0; i < mcf_series_size(series.get()); ++i) {
    std::uint64_t n = 0;
    double mean = 0.0;
    double fluct = 0.0;
    check(mcf_series_row(series.get(), i, &n, &mean, &fluct));
    rows += with_mean ? fmt::format("{},{},{}\n", n, real(mean, digits), real(fluct, digits))
                      : fmt::format("{},{}\n", n, real(fluct, digits));
  }
  return rows;
}

Csv fluct_csv(mcf_context* ctx, const RunConfig& cfg) {
  const auto stats = parse_stats(cfg.stats_text);
  std::string text = metadata(
      "fluct", fmt::format("stats={} N={} n_max={} digits={}", stats_name(stats), cfg.N,
                           *cfg.n_max, cfg.digits));
  text += "n,mean_excited,fluctuation\n";
  text += sweep_rows(ctx, stats, cfg.N, *cfg.n_max, cfg.budget, cfg.digits, true);
  return {cfg.out, std::move(text)};
}

struct CePoint {
  double x = 0.0;
  double mean_excitation = 0.0;
  double variance = 0.0;
  double fluctuation = 0.0;
};

// Canonical variance at x. FES uses the weighted Fermi/Bose interpolation at
// any g, so every g on the command line has a canonical curve.
CePoint ce_point(mcf_context* ctx, double x, std::uint64_t N, const mcf_statistics& stats) {
  CePoint p;
  p.x = x;
  if (stats.kind == MCF_FES) {
    mcf_thermal_point t{};
    const mcf_statistics fermi{MCF_FERMI, 1, 1};
    check(mcf_ce_stats(ctx, x, N, &fermi, &t));
    p.mean_excitation = t.mean_excitation;
    check(mcf_ce_fluctuation_fes(ctx, x, N, stats.g_num, stats.g_den, &p.variance, &p.fluctuation));
  } else {
    mcf_thermal_point t{};
    check(mcf_ce_stats(ctx, x, N, &stats, &t));
    p.mean_excitation = t.mean_excitation;
    p.fluctuation = t.ce_stats.fluctuation;
    p.variance = p.fluctuation * p.fluctuation;
  }
  return p;
}

// Energy-matched canonical fluctuation for n = 0..n_max; n = 0 is the T -> 0 limit.
std::vector<CePoint> ce_matched(mcf_context* ctx, std::uint64_t N, const mcf_statistics& stats,
                                std::uint64_t n_max) {
  std::vector<CePoint> points(n_max + 1);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    double x = 0.0;
    check(mcf_invert_mean_excitation(ctx, static_cast<double>(n), N, &stats, &x));
    points[n] = ce_point(ctx, x, N, stats);
  }
  return points;
}

Csv ce_fluct_csv(mcf_context* ctx, const RunConfig& cfg) {
  const auto stats = parse_stats(cfg.stats_text);
  std::string text;
  if (cfg.n_max) {
    const auto points = ce_matched(ctx, cfg.N, stats, *cfg.n_max);
    text = metadata("ce-fluct", fmt::format("stats={} N={} n_max={} digits={}", stats_name(stats),
                                            cfg.N, *cfg.n_max, cfg.digits));
    text += "n,x,variance,fluctuation\n";
    for (std::size_t n = 0; n < points.size(); ++n) {
      const auto& p = points[n];
      text += fmt::format("{},{},{},{}\n", n, real(p.x, cfg.digits), real(p.variance, cfg.digits),
                          real(p.fluctuation, cfg.digits));
    }
  } else {
    std::vector<CePoint> points;
    std::string grid;
    for (double x : cfg.x) {
      points.push_back(ce_point(ctx, x, cfg.N, stats));
      grid += (grid.empty() ? "" : ";") + real(x, cfg.digits);
    }
    text = metadata("ce-fluct", fmt::format("stats={} N={} x={} digits={}", stats_name(stats), cfg.N,
                                            grid, cfg.digits));
    text += "x,mean_excitation,variance,fluctuation\n";
    for (const auto& p : points) {
      text += fmt::format("{},{},{},{}\n", real(p.x, cfg.digits),
                          real(p.mean_excitation, cfg.digits), real(p.variance, cfg.digits),
                          real(p.fluctuation, cfg.digits));
    }
  }
  return {cfg.out, std::move(text)};
}

// Enumerator data points (n, delta_N0) for n = 0..n_max.
std::string enumerated_rows(mcf_context* ctx, std::uint64_t N, const mcf_statistics& g,
                            std::uint64_t n_max, std::uint64_t budget, int digits) {
  std::string rows;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    mcf_distribution* raw = nullptr;
    check(mcf_enumerate_fes(ctx, n, N, g.g_num, g.g_den, budget, &raw));
    Distribution d(raw);
    mcf_ground_state_stats s{};
    check(mcf_distribution_stats(d.get(), &s));
    rows += fmt::format("{},{}\n", n, real(s.fluctuation, digits));
  }
  return rows;
}

std::vector<Csv> figure_csvs(mcf_context* ctx, const RunConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  const std::string id = cfg.figure_id;
  std::vector<Csv> files;

  auto mce_curve = [&](std::uint64_t N, const mcf_statistics& stats, std::uint64_t n_max) {
    std::string text = metadata(
        "figure", fmt::format("id={} curve=mce stats={} N={} n_max={} digits={}", id,
                              stats_name(stats), N, n_max, cfg.digits));
    text += "n,delta_N0\n" + sweep_rows(ctx, stats, N, n_max, cfg.budget, cfg.digits, false);
    const auto name = fmt::format("fig{}_N{}_{}_mce.csv", id, N, file_tag(stats));
    files.push_back({(dir / name).string(), std::move(text)});
  };
  auto ce_curve = [&](std::uint64_t N, const mcf_statistics& stats, std::uint64_t n_max) {
    std::string text = metadata(
        "figure", fmt::format("id={} curve=ce stats={} N={} n_max={} digits={}", id,
                              stats_name(stats), N, n_max, cfg.digits));
    text += "n,delta_N0_CE\n";
    const auto points = ce_matched(ctx, N, stats, n_max);
    for (std::size_t n = 0; n < points.size(); ++n) {
      text += fmt::format("{},{}\n", n, real(points[n].fluctuation, cfg.digits));
    }
    const auto name = fmt::format("fig{}_N{}_{}_ce.csv", id, N, file_tag(stats));
    files.push_back({(dir / name).string(), std::move(text)});
  };
  auto points_file = [&](std::uint64_t N, const mcf_statistics& g) {
    constexpr std::uint64_t kPointsMax = 16;
    std::string text = metadata(
        "figure", fmt::format("id={} curve=enumerated stats={} N={} n_max={} digits={}", id,
                              stats_name(g), N, kPointsMax, cfg.digits));
    text += "n,delta_N0\n" + enumerated_rows(ctx, N, g, kPointsMax, cfg.budget, cfg.digits);
    const auto name = fmt::format("fig{}_N{}_{}_enumerated.csv", id, N, file_tag(g));
    files.push_back({(dir / name).string(), std::move(text)});
  };

  const mcf_statistics fermi{MCF_FERMI, 1, 1};
  const mcf_statistics bose{MCF_BOSE, 0, 1};
  if (id == "1") {
    const std::uint64_t n_max = cfg.n_max.value_or(6000);
    mce_curve(30, fermi, n_max);
    ce_curve(30, fermi, n_max);
  } else if (id == "3a" || id == "3b") {
    const std::uint64_t N = id == "3a" ? 5 : 10;
    const std::int64_t d = static_cast<std::int64_t>(N) - 1;
    const std::uint64_t n_max = cfg.n_max.value_or(200);
    for (const auto& s : {fermi, fes(d - 1, d), fes(1, d), bose}) mce_curve(N, s, n_max);
    if (id == "3a") {
      points_file(N, fes(d - 1, d));
      points_file(N, fes(1, d));
    }
  } else if (id == "4a" || id == "4b") {
    const std::uint64_t N = id == "4a" ? 5 : 10;
    const std::int64_t d = static_cast<std::int64_t>(N) - 1;
    const std::uint64_t n_max = cfg.n_max.value_or(200);
    for (const auto& s : {fes(d - 1, d), fes(1, d)}) {
      mce_curve(N, s, n_max);
      ce_curve(N, s, n_max);
    }
  } else {
    throw ApiError{MCF_ERROR_INVALID_ARGUMENT, "unknown figure id '" + id + "'"};
  }
  return files;
}

int run_verify(mcf_context* ctx, const RunConfig& cfg) {
  static const std::pair<const char*, mcf_verify_suite> kSuites[] = {
      {"identities", MCF_VERIFY_IDENTITIES},
      {"oracle", MCF_VERIFY_ORACLE},
      {"fes", MCF_VERIFY_FES},
      {"ensembles", MCF_VERIFY_ENSEMBLES}};
  mcf_verify_suite suite = MCF_VERIFY_IDENTITIES;
  for (const auto& [name, value] : kSuites) {
    if (cfg.suite == name) suite = value;
  }
  mcf_report* raw = nullptr;
  int passed = 0;
  check(mcf_verify(ctx, suite, &raw, &passed));
  Report report(raw);
  std::string text = fmt::format("# mcfluct {} verify {}\n", mcf_version(), cfg.suite);
  for (std::size_t i = 0; i < mcf_report_size(report.get()); ++i) {
    const char* name = nullptr;
    const char* detail = nullptr;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    check(mcf_report_check(report.get(), i, &name, &checked, &failed, &detail));
    const bool ok = checked > 0 && failed == 0;
    text += fmt::format("{} {} (checked {}, failed {})", ok ? "PASS" : "FAIL", name, checked, failed);
    if (!ok && *detail) text += fmt::format(": first failure at {}", detail);
    text += "\n";
  }
  text += fmt::format("{}: {}\n", cfg.suite, passed ? "all checks passed" : "FAILED");
  std::fputs(text.c_str(), stdout);
  return passed ? kSuccess : kFailure;
}

void emit(const std::vector<Csv>& files) {
  for (const auto& f : files) {
    if (f.path.empty()) {
      std::fputs(f.text.c_str(), stdout);
      continue;
    }
    const auto parent = std::filesystem::path(f.path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(f.path, std::ios::binary);
    out << f.text;
    if (!out) throw ApiError{MCF_ERROR_RESOURCE, "cannot write " + f.path};
  }
}

int exit_code(mcf_status status) {
  switch (status) {
    case MCF_ERROR_INVALID_ARGUMENT:
    case MCF_ERROR_RANGE:
    case MCF_ERROR_DOMAIN:
    case MCF_ERROR_UNSUPPORTED_STATISTICS:
      return kUsage;
    case MCF_ERROR_RESOURCE:
      return kResource;
    default:
      return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Exact microcanonical ground-state number fluctuations in a 1D harmonic trap"};
  app.set_version_flag("--version", std::string(mcf_version()));
  app.require_subcommand(1);

  auto add_stats = [&](CLI::App* cmd) {
    cmd->add_option("--stats", cfg.stats_text, "bose, fermi or fes:p/q")->capture_default_str();
  };
  auto add_N = [&](CLI::App* cmd) {
    cmd->add_option("--N", cfg.N, "particle number")->required()->check(CLI::PositiveNumber);
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--digits", cfg.digits, "significant digits for reals")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    cmd->add_option("--budget", cfg.budget, "maximum states for direct enumeration")
        ->capture_default_str();
  };

  auto* omega = app.add_subcommand("omega", "multiplicities omega(n, N_ex, N) for N_ex = 1..N");
  add_stats(omega);
  add_N(omega);
  omega->add_option("--n", cfg.n, "excitation quanta")->required();
  omega->add_option("--out", cfg.out, "output file (default stdout)");
  add_common(omega);

  auto* fluct = app.add_subcommand("fluct", "microcanonical fluctuation sweep over n = 0..n_max");
  add_stats(fluct);
  add_N(fluct);
  fluct->add_option("--n-max", cfg.n_max, "largest excitation")->required();
  fluct->add_option("--out", cfg.out, "output file (default stdout)");
  add_common(fluct);

  auto* ce = app.add_subcommand("ce-fluct", "canonical fluctuation on an x grid or matched to n");
  add_stats(ce);
  add_N(ce);
  auto* x_opt = ce->add_option("--x", cfg.x, "Boltzmann factors exp(-1/T)")->delimiter(',');
  auto* nmax_opt = ce->add_option("--n-max", cfg.n_max, "energy-matched grid n = 0..n_max");
  x_opt->excludes(nmax_opt);
  ce->add_option("--out", cfg.out, "output file (default stdout)");
  add_common(ce);

  auto* figure = app.add_subcommand("figure", "figure datasets as CSV files");
  figure->add_option("--id", cfg.figure_id, "1, 3a, 3b, 4a or 4b")
      ->required()
      ->check(CLI::IsMember({"1", "3a", "3b", "4a", "4b"}));
  figure->add_option("--n-max", cfg.n_max, "override the default n range");
  figure->add_option("--out", cfg.out, "output directory (default .)");
  add_common(figure);

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", cfg.suite, "identities, oracle, fes or ensembles")
      ->required()
      ->check(CLI::IsMember({"identities", "oracle", "fes", "ensembles"}));

  try {
    app.parse(argc, argv);
    if (ce->parsed() && cfg.x.empty() && !cfg.n_max) {
      throw CLI::ValidationError("ce-fluct", "one of --x or --n-max is required");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    mcf_context* raw = nullptr;
    check(mcf_context_create(&raw));
    Context ctx(raw);
    if (verify->parsed()) return run_verify(ctx.get(), cfg);

    std::vector<Csv> files;
    if (omega->parsed()) files.push_back(omega_csv(ctx.get(), cfg));
    if (fluct->parsed()) files.push_back(fluct_csv(ctx.get(), cfg));
    if (ce->parsed()) files.push_back(ce_fluct_csv(ctx.get(), cfg));
    if (figure->parsed()) files = figure_csvs(ctx.get(), cfg);
    emit(files);
    if (figure->parsed()) {
      for (const auto& f : files) std::fprintf(stderr, "wrote %s\n", f.path.c_str());
    }
    return kSuccess;
  } catch (const ApiError& e) {
    std::fprintf(stderr, "mcfluct: %s: %s\n", mcf_status_name(e.status), e.message.c_str());
    return exit_code(e.status);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "mcfluct: %s\n", e.what());
    return kFailure;
  }
}
