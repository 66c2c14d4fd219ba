#include "mcfluct/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "mcfluct/error.hpp"
#include "mcfluct/fes.hpp"
#include "mcfluct/microcanonical.hpp"
#include "mcfluct/oracle.hpp"

namespace mcfluct {

namespace {

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  // Runs body against a fresh check; an escaping exception is one failure.
  void check(const std::string& name, const std::function<void(VerificationCheck&)>& body) {
    VerificationCheck c;
    c.name = name;
    try {
      body(c);
    } catch (const std::exception& e) {
      ++c.checked;
      ++c.failed;
      if (c.first_failure.empty()) c.first_failure = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  VerificationReport& report_;
};

void expect(VerificationCheck& c, bool ok, const std::function<std::string()>& describe) {
  ++c.checked;
  if (!ok) {
    ++c.failed;
    if (c.first_failure.empty()) c.first_failure = describe();
  }
}

std::string at(std::size_t n, std::size_t N) {
  return "n=" + std::to_string(n) + ", N=" + std::to_string(N);
}

bool same_omega(const MultiplicityDistribution& a, const MultiplicityDistribution& b) {
  return a.omega == b.omega;
}

std::string omega_text(const MultiplicityDistribution& d) {
  std::string text = "[";
  for (std::size_t k = 0; k < d.omega.size(); ++k) {
    if (k) text += ",";
    text += d.omega[k].get_str();
  }
  return text + "]";
}

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

void run_identities(Engine& engine, Recorder& rec) {
  auto& cache = engine.cache();
  constexpr std::size_t kMaxN = 30;
  constexpr std::size_t kMaxQuanta = 200;
  cache.table(kMaxQuanta + kMaxN, 50);

  auto sum_identity = [&](const std::string& label, std::size_t min_N,
                          const std::function<BigInt(std::size_t, std::size_t, std::size_t)>& omega) {
    rec.check("sum over N_ex equals Omega(n,N): " + label, [&](VerificationCheck& c) {
      for (std::size_t N = min_N; N <= kMaxN; ++N) {
        for (std::size_t n = 1; n <= kMaxQuanta; ++n) {
          BigInt sum = 0;
          for (std::size_t k = 1; k <= N; ++k) sum += omega(n, k, N);
          const BigInt& expected = cache.table(n, N)->count(n, N);
          expect(c, sum == expected, [&] {
            return at(n, N) + ": sum " + sum.get_str() + " != " + expected.get_str();
          });
        }
      }
    });
  };
  sum_identity("bose", 1, [&](auto n, auto k, auto N) { return bose_multiplicity(cache, n, k, N); });
  sum_identity("fermi", 1, [&](auto n, auto k, auto N) { return fermi_multiplicity(cache, n, k, N); });
  sum_identity("fes g=(N-2)/(N-1)", 3, [&](auto n, auto k, auto N) {
    return fes_multiplicity_near_fermi(cache, n, k, N);
  });
  sum_identity("fes g=1/(N-1)", 2, [&](auto n, auto k, auto N) {
    return fes_multiplicity_near_bose(cache, n, k, N);
  });

  rec.check("n = 0 distribution is all zeros", [&](VerificationCheck& c) {
    for (std::size_t N = 1; N <= kMaxN; ++N) {
      for (const auto& stats : {Statistics::bose(), Statistics::fermi()}) {
        const auto d = distribution(cache, 0, N, stats);
        expect(c, sgn(d.total()) == 0, [&] { return at(0, N) + " " + stats.to_string(); });
      }
    }
  });

  rec.check("Omega(n,N) = Omega(n,N-1) + Omega(n-N,N)", [&](VerificationCheck& c) {
    const auto table = cache.table(kMaxQuanta, 50);
    for (std::size_t N = 1; N <= 50; ++N) {
      for (std::size_t n = N; n <= kMaxQuanta; ++n) {
        const BigInt rhs = table->count(n, N - 1) + table->count(n - N, N);
        expect(c, table->count(n, N) == rhs, [&] { return at(n, N); });
      }
    }
  });
}

void run_oracle(Engine& engine, Recorder& rec) {
  auto& cache = engine.cache();
  constexpr std::size_t kMaxN = 8;
  constexpr std::size_t kMaxQuanta = 40;

  for (const auto& stats : {Statistics::fermi(), Statistics::bose()}) {
    const std::string label = stats.kind() == StatisticsKind::fermi
                                  ? "fermi pipeline equals Durfee-square enumeration"
                                  : "bose pipeline equals exact-parts enumeration";
    rec.check(label, [&](VerificationCheck& c) {
      for (std::size_t N = 1; N <= kMaxN; ++N) {
        for (std::size_t n = 0; n <= kMaxQuanta; ++n) {
          const auto closed = distribution(cache, n, N, stats);
          const auto brute = oracle_multiplicities(cache, n, N, stats, kDefaultEnumerationBudget);
          expect(c, same_omega(closed, brute), [&] {
            return at(n, N) + ": " + omega_text(closed) + " vs " + omega_text(brute);
          });
        }
      }
    });
  }

  rec.check("fermi omega vanishes iff n < N_ex^2", [&](VerificationCheck& c) {
    for (std::size_t N = 1; N <= kMaxN; ++N) {
      for (std::size_t n = 1; n <= kMaxQuanta; ++n) {
        for (std::size_t k = 1; k <= N; ++k) {
          const bool zero = sgn(fermi_multiplicity(cache, n, k, N)) == 0;
          expect(c, zero == (n < k * k), [&] { return at(n, N) + ", N_ex=" + std::to_string(k); });
        }
      }
    }
  });

  rec.check("Durfee side s satisfies s^2 <= n", [&](VerificationCheck& c) {
    for (std::size_t n = 0; n <= kMaxQuanta; ++n) {
      for_each_partition(n, kMaxN, [&](const PartitionShape& p) {
        const std::size_t s = durfee_side(p);
        expect(c, s * s <= n, [&] { return "n=" + std::to_string(n); });
      });
    }
  });

  rec.check("hole recursion equals bounded-partition DP", [&](VerificationCheck& c) {
    for (std::size_t N = 1; N <= 12; ++N) {
      for (std::size_t k = 1; k <= N; ++k) {
        const auto holes = hole_partition_function(N, k);
        for (std::size_t i = 0; i <= holes.max_energy() + 1; ++i) {
          const BigInt direct = bounded_multiplicity_direct(i, k, N - k);
          expect(c, holes.count(i) == direct, [&] {
            return "N=" + std::to_string(N) + ", n_ex=" + std::to_string(k) +
                   ", i=" + std::to_string(i);
          });
        }
      }
    }
  });

  rec.check("hole table sums to C(N_H+n_ex, n_ex) and is palindromic",
            [&](VerificationCheck& c) {
              for (std::size_t N = 1; N <= 12; ++N) {
                for (std::size_t k = 1; k <= N; ++k) {
                  const auto holes = hole_partition_function(N, k);
                  BigInt sum = 0;
                  bool palindrome = true;
                  const std::size_t top = holes.max_energy();
                  for (std::size_t i = 0; i <= top; ++i) {
                    sum += holes.count(i);
                    palindrome = palindrome && holes.count(i) == holes.count(top - i);
                  }
                  BigInt binom;
                  mpz_bin_uiui(binom.get_mpz_t(), N, k);  // N_H + n_ex = N
                  expect(c, sum == binom && palindrome, [&] {
                    return "N=" + std::to_string(N) + ", n_ex=" + std::to_string(k);
                  });
                }
              }
            });
}

void run_fes(Engine& engine, Recorder& rec) {
  auto& cache = engine.cache();

  rec.check("g=(N-2)/(N-1) closed form equals enumerator", [&](VerificationCheck& c) {
    for (std::size_t N = 3; N <= 5; ++N) {
      const Fraction g(static_cast<std::int64_t>(N) - 2, static_cast<std::int64_t>(N) - 1);
      for (std::size_t n = 0; n <= 16; ++n) {
        const auto enumerated = enumerate_fes(cache, n, N, g);
        for (std::size_t k = 1; k <= N; ++k) {
          const BigInt closed = fes_multiplicity_near_fermi(cache, n, k, N);
          expect(c, closed == enumerated.at(k), [&] {
            return at(n, N) + ", N_ex=" + std::to_string(k) + ": " + closed.get_str() +
                   " vs " + enumerated.at(k).get_str();
          });
        }
      }
    }
  });

  rec.check("g=1/(N-1) closed form equals enumerator", [&](VerificationCheck& c) {
    for (std::size_t N = 2; N <= 5; ++N) {
      const Fraction g(1, static_cast<std::int64_t>(N) - 1);
      for (std::size_t n = 0; n <= 16; ++n) {
        const auto enumerated = enumerate_fes(cache, n, N, g);
        for (std::size_t k = 1; k <= N; ++k) {
          const BigInt closed = fes_multiplicity_near_bose(cache, n, k, N);
          expect(c, closed == enumerated.at(k), [&] {
            return at(n, N) + ", N_ex=" + std::to_string(k) + ": " + closed.get_str() +
                   " vs " + enumerated.at(k).get_str();
          });
        }
      }
    }
  });

  for (const auto& [g, reference] : {std::pair{Fraction(1), Statistics::fermi()},
                                     std::pair{Fraction(0), Statistics::bose()}}) {
    rec.check("enumerator at g=" + g.to_string() + " equals " + reference.to_string(),
              [&](VerificationCheck& c) {
                for (std::size_t N = 1; N <= 10; ++N) {
                  for (std::size_t n = 0; n <= 50; ++n) {
                    const auto enumerated = enumerate_fes(cache, n, N, g);
                    const auto closed = distribution(cache, n, N, reference);
                    expect(c, same_omega(enumerated, closed), [&] {
                      return at(n, N) + ": " + omega_text(enumerated) + " vs " +
                             omega_text(closed);
                    });
                  }
                }
              });
  }

  rec.check("Fermi level is integral on the discrete g grid", [&](VerificationCheck& c) {
    for (std::size_t N = 2; N <= 30; ++N) {
      for (const auto& g : discrete_g_grid(N)) {
        // Drop the 1/2 common to every oscillator level.
        const Fraction level = fes_fermi_level(N, g) + Fraction(1, 2);
        expect(c, level.is_integer(), [&] { return "N=" + std::to_string(N) + ", g=" + g.to_string(); });
      }
    }
  });
}

// Smallest excitation cutoff whose composition bound on the dropped tail is
// below 1e-17 of the ground-state weight.
std::size_t boltzmann_cutoff(double x, std::size_t N) {
  const double log_x = std::log(x);
  for (std::size_t e = 1;; ++e) {
    const double rho = x * static_cast<double>(e + N) / static_cast<double>(e + 1);
    if (rho >= 1.0) continue;
    const double log_binom = std::lgamma(static_cast<double>(e + N)) -
                             std::lgamma(static_cast<double>(N)) -
                             std::lgamma(static_cast<double>(e + 1));
    if (log_binom + static_cast<double>(e) * log_x - std::log1p(-rho) < std::log(1e-17)) {
      return e;
    }
  }
}

void run_ensembles(Engine& engine, Recorder& rec) {
  constexpr double kRelative = 1e-10;
  const double grid[] = {0.2, 0.5, 0.8};

  rec.check("shell mixture equals explicit Boltzmann sum (N <= 4)", [&](VerificationCheck& c) {
    for (const auto& stats : {Statistics::bose(), Statistics::fermi()}) {
      for (std::size_t N = 1; N <= 4; ++N) {
        for (double x : grid) {
          const auto point = engine.ensemble(N, stats).at(x);
          const auto brute = brute_force_canonical(x, N, stats, boltzmann_cutoff(x, N));
          const std::string where = stats.to_string() + " N=" + std::to_string(N) +
                                    " x=" + std::to_string(x);
          expect(c, close(point.ce_stats.mean_excited, brute.mean_excited, kRelative),
                 [&] { return where + " mean"; });
          expect(c, close(point.ce_stats.variance(), brute.variance, kRelative),
                 [&] { return where + " variance"; });
          expect(c, close(point.mean_excitation, brute.mean_excitation, kRelative),
                 [&] { return where + " <n>"; });
        }
      }
    }
  });

  rec.check("series <n> equals product-form <n>", [&](VerificationCheck& c) {
    for (std::size_t N : {1, 2, 5, 10, 30}) {
      for (double x : {0.1, 0.5, 0.9, 0.99}) {
        const auto point = engine.ensemble(N, Statistics::fermi()).at(x);
        expect(c, close(point.mean_excitation, mean_excitation(x, N), 1e-9), [&] {
          return "N=" + std::to_string(N) + " x=" + std::to_string(x);
        });
      }
    }
  });

  rec.check("canonical <N_ex> lies within the MCE shell range", [&](VerificationCheck& c) {
    auto& cache = engine.cache();
    for (const auto& stats : {Statistics::bose(), Statistics::fermi()}) {
      for (std::size_t N : {3, 5, 10}) {
        for (double x : {0.3, 0.7, 0.95}) {
          auto& ensemble = engine.ensemble(N, stats);
          const auto point = ensemble.at(x);
          double lo = 0.0;  // shell n = 0 has <N_ex> = 0
          double hi = 0.0;
          for (std::size_t n = 1; n < ensemble.last_shell_count(); ++n) {
            const double m = ground_state_stats(distribution(cache, n, N, stats)).mean_excited;
            hi = std::max(hi, m);
          }
          expect(c, point.ce_stats.mean_excited >= lo && point.ce_stats.mean_excited <= hi, [&] {
            return stats.to_string() + " N=" + std::to_string(N) + " x=" + std::to_string(x);
          });
        }
      }
    }
  });

  rec.check("FES canonical variance is monotone in g", [&](VerificationCheck& c) {
    for (std::size_t N : {5, 10}) {
      auto& fermi = engine.ensemble(N, Statistics::fermi());
      auto& bose = engine.ensemble(N, Statistics::bose());
      for (double x : grid) {
        const double vf = fermi.at(x).ce_stats.variance();
        const double vb = bose.at(x).ce_stats.variance();
        double previous = ce_fluctuation_fes(fermi, bose, x, Fraction(0)).variance;
        for (std::int64_t m = 1; m <= 8; ++m) {
          const double v = ce_fluctuation_fes(fermi, bose, x, Fraction(m, 8)).variance;
          const bool ok = vf > vb ? v > previous : (vf < vb ? v < previous : v == previous);
          expect(c, ok, [&] { return "N=" + std::to_string(N) + " x=" + std::to_string(x); });
          previous = v;
        }
      }
    }
  });

  rec.check("invert_mean_excitation reproduces the target", [&](VerificationCheck& c) {
    for (std::size_t N : {2, 10, 30, 100}) {
      for (double target : {0.01, 1.0, 17.5, 1000.0, 6000.0}) {
        const double x = invert_mean_excitation(target, N, Statistics::fermi());
        expect(c, std::abs(mean_excitation(x, N) - target) < 1e-9 * std::max(1.0, target), [&] {
          return "N=" + std::to_string(N) + " target=" + std::to_string(target);
        });
      }
    }
  });
}

}  // namespace

bool VerificationReport::passed() const noexcept {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

std::optional<VerificationSuite> parse_suite(std::string_view name) {
  if (name == "identities") return VerificationSuite::identities;
  if (name == "oracle") return VerificationSuite::oracle;
  if (name == "fes") return VerificationSuite::fes;
  if (name == "ensembles") return VerificationSuite::ensembles;
  return std::nullopt;
}

std::string suite_name(VerificationSuite suite) {
  switch (suite) {
    case VerificationSuite::identities:
      return "identities";
    case VerificationSuite::oracle:
      return "oracle";
    case VerificationSuite::fes:
      return "fes";
    case VerificationSuite::ensembles:
      return "ensembles";
  }
  return "unknown";
}

VerificationReport run_verification(Engine& engine, VerificationSuite suite) {
  VerificationReport report;
  report.suite = suite;
  Recorder rec(report);
  switch (suite) {
    case VerificationSuite::identities:
      run_identities(engine, rec);
      break;
    case VerificationSuite::oracle:
      run_oracle(engine, rec);
      break;
    case VerificationSuite::fes:
      run_fes(engine, rec);
      break;
    case VerificationSuite::ensembles:
      run_ensembles(engine, rec);
      break;
  }
  return report;
}

}  // namespace mcfluct
