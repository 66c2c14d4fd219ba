#include "mcfluct/mcfluct.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "mcfluct/engine.hpp"
#include "mcfluct/error.hpp"
#include "mcfluct/fes.hpp"
#include "mcfluct/microcanonical.hpp"
#include "mcfluct/oracle.hpp"
#include "mcfluct/verify.hpp"

struct mcf_context {
  mcfluct::Engine engine;
};

struct mcf_distribution {
  mcfluct::MultiplicityDistribution value;
  std::vector<std::string> omega_text;
};

struct mcf_series {
  mcfluct::FluctuationSeries value;
};

struct mcf_report {
  mcfluct::VerificationReport value;
};

namespace {

thread_local std::string last_error;

mcf_status to_status(mcfluct::ErrorCode code) {
  switch (code) {
    case mcfluct::ErrorCode::invalid_argument:
      return MCF_ERROR_INVALID_ARGUMENT;
    case mcfluct::ErrorCode::range:
      return MCF_ERROR_RANGE;
    case mcfluct::ErrorCode::domain:
      return MCF_ERROR_DOMAIN;
    case mcfluct::ErrorCode::unsupported_statistics:
      return MCF_ERROR_UNSUPPORTED_STATISTICS;
    case mcfluct::ErrorCode::resource:
      return MCF_ERROR_RESOURCE;
    case mcfluct::ErrorCode::internal:
      return MCF_ERROR_INTERNAL;
  }
  return MCF_ERROR_INTERNAL;
}

mcf_status fail(mcf_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
mcf_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const mcfluct::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MCF_ERROR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(MCF_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(MCF_ERROR_INTERNAL, "unknown error");
  }
}

mcfluct::Statistics to_statistics(const mcf_statistics* stats) {
  if (!stats) throw mcfluct::InvalidArgumentError("statistics pointer is null");
  switch (stats->kind) {
    case MCF_BOSE:
      return mcfluct::Statistics::bose();
    case MCF_FERMI:
      return mcfluct::Statistics::fermi();
    case MCF_FES:
      if (stats->g_den == 0) throw mcfluct::InvalidArgumentError("g has zero denominator");
      return mcfluct::Statistics::fes(mcfluct::Fraction(stats->g_num, stats->g_den));
  }
  throw mcfluct::InvalidArgumentError("unknown statistics kind " +
                                      std::to_string(static_cast<int>(stats->kind)));
}

mcf_statistics from_statistics(const mcfluct::Statistics& stats) {
  mcf_statistics out{};
  switch (stats.kind()) {
    case mcfluct::StatisticsKind::bose:
      out.kind = MCF_BOSE;
      break;
    case mcfluct::StatisticsKind::fermi:
      out.kind = MCF_FERMI;
      break;
    case mcfluct::StatisticsKind::fes:
      out.kind = MCF_FES;
      break;
  }
  out.g_num = stats.g().num();
  out.g_den = stats.g().den();
  return out;
}

mcf_ground_state_stats to_c(const mcfluct::GroundStateStats& s) {
  return {s.mean_excited, s.second_moment, s.fluctuation};
}

mcf_status write_string(const std::string& text, char* buf, size_t buf_len, size_t* required) {
  if (required) *required = text.size() + 1;
  if (!buf || buf_len < text.size() + 1) {
    return fail(MCF_ERROR_RANGE, "buffer of " + std::to_string(buf_len) +
                                     " bytes cannot hold " + std::to_string(text.size() + 1));
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return MCF_OK;
}

mcf_status emit(mcfluct::MultiplicityDistribution d, mcf_distribution** out) {
  auto handle = std::make_unique<mcf_distribution>();
  handle->omega_text.reserve(d.omega.size());
  for (const auto& w : d.omega) handle->omega_text.push_back(w.get_str());
  handle->value = std::move(d);
  *out = handle.release();
  return MCF_OK;
}

#define MCF_REQUIRE(ptr)                                                   \
  do {                                                                     \
    if (!(ptr)) return fail(MCF_ERROR_NULL_HANDLE, #ptr " is null");       \
  } while (0)

}  // namespace

extern "C" {

MCF_API const char* mcf_version(void) { return MCF_VERSION_STRING; }

MCF_API const char* mcf_last_error(void) { return last_error.c_str(); }

MCF_API const char* mcf_status_name(mcf_status status) {
  switch (status) {
    case MCF_OK:
      return "ok";
    case MCF_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case MCF_ERROR_RANGE:
      return "range error";
    case MCF_ERROR_DOMAIN:
      return "domain error";
    case MCF_ERROR_UNSUPPORTED_STATISTICS:
      return "unsupported statistics";
    case MCF_ERROR_RESOURCE:
      return "resource limit";
    case MCF_ERROR_INTERNAL:
      return "internal error";
    case MCF_ERROR_NULL_HANDLE:
      return "null handle";
  }
  return "unknown status";
}

MCF_API mcf_status mcf_context_create(mcf_context** out) {
  MCF_REQUIRE(out);
  return guarded([&] {
    *out = new mcf_context();
    return MCF_OK;
  });
}

MCF_API void mcf_context_destroy(mcf_context* ctx) { delete ctx; }

MCF_API mcf_status mcf_statistics_parse(const char* text, mcf_statistics* out) {
  MCF_REQUIRE(text);
  MCF_REQUIRE(out);
  return guarded([&] {
    *out = from_statistics(mcfluct::Statistics::parse(text));
    return MCF_OK;
  });
}

MCF_API mcf_status mcf_statistics_format(const mcf_statistics* stats, char* buf, size_t buf_len,
                                         size_t* required) {
  return guarded([&] { return write_string(to_statistics(stats).to_string(), buf, buf_len, required); });
}

MCF_API mcf_status mcf_canonical_multiplicity(mcf_context* ctx, uint64_t n, uint64_t N, char* buf,
                                              size_t buf_len, size_t* required) {
  MCF_REQUIRE(ctx);
  return guarded([&] {
    const auto table = ctx->engine.cache().table(n, N);
    return write_string(mcfluct::canonical_multiplicity(*table, n, N).get_str(), buf, buf_len,
                        required);
  });
}

MCF_API mcf_status mcf_distribution_create(mcf_context* ctx, uint64_t n, uint64_t N,
                                           const mcf_statistics* stats, mcf_distribution** out) {
  MCF_REQUIRE(ctx);
  MCF_REQUIRE(out);
  return guarded([&] {
    return emit(mcfluct::distribution(ctx->engine.cache(), n, N, to_statistics(stats)), out);
  });
}

MCF_API mcf_status mcf_distribution_resolve(mcf_context* ctx, uint64_t n, uint64_t N,
                                            const mcf_statistics* stats, uint64_t budget,
                                            mcf_distribution** out) {
  MCF_REQUIRE(ctx);
  MCF_REQUIRE(out);
  return guarded([&] {
    return emit(mcfluct::distribution_or_enumerate(ctx->engine.cache(), n, N,
                                                   to_statistics(stats), budget),
                out);
  });
}

MCF_API mcf_status mcf_enumerate_fes(mcf_context* ctx, uint64_t n, uint64_t N, int64_t g_num,
                                     int64_t g_den, uint64_t budget, mcf_distribution** out) {
  MCF_REQUIRE(ctx);
  MCF_REQUIRE(out);
  return guarded([&] {
    if (g_den == 0) throw mcfluct::InvalidArgumentError("g has zero denominator");
    return emit(mcfluct::enumerate_fes(ctx->engine.cache(), n, N, mcfluct::Fraction(g_num, g_den),
                                       budget),
                out);
  });
}

MCF_API mcf_status mcf_oracle_distribution(mcf_context* ctx, uint64_t n, uint64_t N,
                                           const mcf_statistics* stats, uint64_t budget,
                                           mcf_distribution** out) {
  MCF_REQUIRE(ctx);
  MCF_REQUIRE(out);
  return guarded([&] {
    return emit(mcfluct::oracle_multiplicities(ctx->engine.cache(), n, N, to_statistics(stats),
                                               budget),
                out);
  });
}

MCF_API void mcf_distribution_destroy(mcf_distribution* d) { delete d; }

MCF_API size_t mcf_distribution_size(const mcf_distribution* d) {
  return d ? d->omega_text.size() : 0;
}

MCF_API const char* mcf_distribution_omega(const mcf_distribution* d, size_t n_ex) {
  if (!d || n_ex < 1 || n_ex > d->omega_text.size()) return nullptr;
  return d->omega_text[n_ex - 1].c_str();
}

MCF_API mcf_status mcf_distribution_stats(const mcf_distribution* d, mcf_ground_state_stats* out) {
  MCF_REQUIRE(d);
  MCF_REQUIRE(out);
  return guarded([&] {
    *out = to_c(mcfluct::ground_state_stats(d->value));
    return MCF_OK;
  });
}

MCF_API mcf_status mcf_fluctuation_sweep(mcf_context* ctx, uint64_t N,
                                         const mcf_statistics* stats, uint64_t n_max,
                                         uint64_t budget, mcf_series** out) {
  MCF_REQUIRE(ctx);
  MCF_REQUIRE(out);
  return guarded([&] {
    auto handle = std::make_unique<mcf_series>();
    handle->value =
        mcfluct::fluctuation_sweep(ctx->engine.cache(), N, to_statistics(stats), n_max, budget);
    *out = handle.release();
    return MCF_OK;
  });
}

MCF_API void mcf_series_destroy(mcf_series* s) { delete s; }

MCF_API size_t mcf_series_size(const mcf_series* s) { return s ? s->value.rows.size() : 0; }

MCF_API mcf_status mcf_series_row(const mcf_series* s, size_t index, uint64_t* n,
                                  double* mean_excited, double* fluctuation) {
  MCF_REQUIRE(s);
  if (index >= s->value.rows.size()) {
    return fail(MCF_ERROR_RANGE, "series row " + std::to_string(index) + " of " +
                                     std::to_string(s->value.rows.size()));
  }
  const auto& row = s->value.rows[index];
  if (n) *n = row.n;
  if (mean_excited) *mean_excited = row.mean_excited;
  if (fluctuation) *fluctuation = row.fluctuation;
  return MCF_OK;
}

MCF_API mcf_status mcf_ce_stats(mcf_context* ctx, double x, uint64_t N,
                                const mcf_statistics* stats, mcf_thermal_point* out) {
  MCF_REQUIRE(ctx);
  MCF_REQUIRE(out);
  return guarded([&] {
    const auto point = ctx->engine.ensemble(N, to_statistics(stats)).at(x);
    *out = {point.x, point.mean_excitation, to_c(point.ce_stats)};
    return MCF_OK;
  });
}

MCF_API mcf_status mcf_ce_fluctuation_fes(mcf_context* ctx, double x, uint64_t N, int64_t g_num,
                                          int64_t g_den, double* variance, double* fluctuation) {
  MCF_REQUIRE(ctx);
  return guarded([&] {
    if (g_den == 0) throw mcfluct::InvalidArgumentError("g has zero denominator");
    auto& engine = ctx->engine;
    const auto result = mcfluct::ce_fluctuation_fes(
        engine.ensemble(N, mcfluct::Statistics::fermi()),
        engine.ensemble(N, mcfluct::Statistics::bose()), x, mcfluct::Fraction(g_num, g_den));
    if (variance) *variance = result.variance;
    if (fluctuation) *fluctuation = result.fluctuation;
    return MCF_OK;
  });
}

MCF_API mcf_status mcf_invert_mean_excitation(mcf_context* ctx, double target_n, uint64_t N,
                                              const mcf_statistics* stats, double* x) {
  MCF_REQUIRE(ctx);
  MCF_REQUIRE(x);
  return guarded([&] {
    *x = mcfluct::invert_mean_excitation(target_n, N, to_statistics(stats));
    return MCF_OK;
  });
}

MCF_API mcf_status mcf_verify(mcf_context* ctx, mcf_verify_suite suite, mcf_report** out,
                              int* passed) {
  MCF_REQUIRE(ctx);
  MCF_REQUIRE(out);
  return guarded([&] {
    mcfluct::VerificationSuite which;
    switch (suite) {
      case MCF_VERIFY_IDENTITIES:
        which = mcfluct::VerificationSuite::identities;
        break;
      case MCF_VERIFY_ORACLE:
        which = mcfluct::VerificationSuite::oracle;
        break;
      case MCF_VERIFY_FES:
        which = mcfluct::VerificationSuite::fes;
        break;
      case MCF_VERIFY_ENSEMBLES:
        which = mcfluct::VerificationSuite::ensembles;
        break;
      default:
        throw mcfluct::InvalidArgumentError("unknown verification suite " +
                                            std::to_string(static_cast<int>(suite)));
    }
    auto handle = std::make_unique<mcf_report>();
    handle->value = mcfluct::run_verification(ctx->engine, which);
    if (passed) *passed = handle->value.passed() ? 1 : 0;
    *out = handle.release();
    return MCF_OK;
  });
}

MCF_API void mcf_report_destroy(mcf_report* r) { delete r; }

MCF_API size_t mcf_report_size(const mcf_report* r) { return r ? r->value.checks.size() : 0; }

MCF_API mcf_status mcf_report_check(const mcf_report* r, size_t index, const char** name,
                                    uint64_t* checked, uint64_t* failed, const char** detail) {
  MCF_REQUIRE(r);
  if (index >= r->value.checks.size()) {
    return fail(MCF_ERROR_RANGE, "report check " + std::to_string(index) + " of " +
                                     std::to_string(r->value.checks.size()));
  }
  const auto& check = r->value.checks[index];
  if (name) *name = check.name.c_str();
  if (checked) *checked = check.checked;
  if (failed) *failed = check.failed;
  if (detail) *detail = check.first_failure.c_str();
  return MCF_OK;
}

}  // extern "C"
