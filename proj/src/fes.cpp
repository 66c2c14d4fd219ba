#include "mcfluct/fes.hpp"

#include <string>

#include "mcfluct/error.hpp"

namespace mcfluct {

namespace {

void check_sizes(std::size_t n_ex, std::size_t N, std::size_t min_N, const char* what) {
  if (N < min_N) {
    throw DomainError(std::string(what) + " needs N >= " + std::to_string(min_N) +
                      ", got N=" + std::to_string(N));
  }
  if (n_ex < 1 || n_ex > N) {
    throw DomainError(std::string(what) + " needs 1 <= n_ex <= N, got n_ex=" +
                      std::to_string(n_ex) + ", N=" + std::to_string(N));
  }
}

}  // namespace

BigInt fes_multiplicity_near_fermi(PartitionCache& cache, std::size_t n, std::size_t n_ex,
                                   std::size_t N) {
  check_sizes(n_ex, N, 3, "fes_multiplicity_near_fermi");
  if (n == 0) return 0;
  BigInt result = fermi_multiplicity(cache, n + N, n_ex, N);
  if (n_ex <= N - 1) result -= fermi_multiplicity(cache, n + N, n_ex, N - 1);
  if (sgn(result) < 0) {
    throw InternalError("near-fermi multiplicity is negative (" + result.get_str() +
                        ") at n=" + std::to_string(n) + ", n_ex=" + std::to_string(n_ex) +
                        ", N=" + std::to_string(N));
  }
  return result;
}

BigInt fes_multiplicity_near_bose(PartitionCache& cache, std::size_t n, std::size_t n_ex,
                                  std::size_t N) {
  check_sizes(n_ex, N, 2, "fes_multiplicity_near_bose");
  if (n_ex < N - 1) return bose_multiplicity(cache, n, n_ex, N);
  if (n_ex == N - 1) {
    BigInt result = bose_multiplicity(cache, n, n_ex, N);
    if (n >= 1) result += bose_multiplicity(cache, n - 1, n_ex, N);
    return result;
  }
  if (n < N) return 0;
  return bose_multiplicity(cache, n - N, N, N);
}

std::optional<FesClosedForm> fes_closed_form(std::size_t N, const Fraction& g) {
  if (g == Fraction(0)) return FesClosedForm::bose;
  if (g == Fraction(1)) return FesClosedForm::fermi;
  if (N >= 2) {
    const auto span = static_cast<std::int64_t>(N - 1);
    if (g == Fraction(1, span)) return FesClosedForm::near_bose;
    if (N >= 3 && g == Fraction(span - 1, span)) return FesClosedForm::near_fermi;
  }
  return std::nullopt;
}

std::string supported_fes_forms(std::size_t N) {
  std::string text = "bose, fermi, fes:0, fes:1";
  if (N >= 2) text += ", fes:" + Fraction(1, static_cast<std::int64_t>(N - 1)).to_string();
  if (N >= 3) {
    const auto span = static_cast<std::int64_t>(N - 1);
    text += ", fes:" + Fraction(span - 1, span).to_string();
  }
  return text;
}

QuasiparticleState quasiparticle_state(const PartitionShape& shape, std::size_t N,
                                       const Fraction& g) {
  if (shape.parts.size() > N) {
    throw DomainError("partition with " + std::to_string(shape.parts.size()) +
                      " parts cannot excite " + std::to_string(N) + " particles");
  }
  QuasiparticleState state;
  state.levels.resize(N);
  state.quasi_energies.reserve(N);
  const Fraction blocking = Fraction(1) - g;
  for (std::size_t i = 1; i <= N; ++i) {
    const std::size_t from_top = N + 1 - i;  // part index applied to particle i
    const std::uint64_t shift = from_top <= shape.parts.size() ? shape.parts[from_top - 1] : 0;
    state.levels[i - 1] = i + shift;
    state.excitation += shift;
    state.quasi_energies.push_back(
        Fraction(2 * static_cast<std::int64_t>(i + shift) - 1, 2) -
        blocking * Fraction(static_cast<std::int64_t>(i - 1)));
  }
  return state;
}

Fraction fes_fermi_level(std::size_t N, const Fraction& g) {
  return Fraction(2 * static_cast<std::int64_t>(N) - 1, 2) -
         (Fraction(1) - g) * Fraction(static_cast<std::int64_t>(N) - 1);
}

std::size_t fes_excited_count(const PartitionShape& shape, std::size_t N, const Fraction& g) {
  // Particle i (from the bottom) sits at k_i = i + lambda_{N+1-i}. It is
  // excited iff k_i - (1-g)(i-1) > N - (1-g)(N-1); with r = N+1-i this is
  // lambda_r > g (r - 1), i.e. lambda_r * den > num * (r - 1).
  if (shape.parts.size() > N) {
    throw DomainError("partition with " + std::to_string(shape.parts.size()) +
                      " parts cannot excite " + std::to_string(N) + " particles");
  }
  const auto num = static_cast<WideInt>(g.num());
  const auto den = static_cast<WideInt>(g.den());
  std::size_t excited = 0;
  for (std::size_t r = 1; r <= shape.parts.size(); ++r) {
    if (shape.parts[r - 1] * den > num * static_cast<WideInt>(r - 1)) ++excited;
  }
  return excited;
}

MultiplicityDistribution enumerate_fes(PartitionCache& cache, std::size_t n, std::size_t N,
                                       const Fraction& g, std::uint64_t budget) {
  if (N < 1) throw DomainError("enumerate_fes needs N >= 1");
  if (g < Fraction(0) || g > Fraction(1)) {
    throw DomainError("exclusion parameter g=" + g.to_string() + " outside [0, 1]");
  }
  const BigInt& states = cache.table(n, N)->count(n, N);
  if (states > budget) {
    throw ResourceError("enumerating n=" + std::to_string(n) + ", N=" + std::to_string(N) +
                        " visits " + states.get_str() + " partitions (budget " +
                        std::to_string(budget) + ")");
  }
  std::vector<std::uint64_t> tally(N + 1, 0);
  for_each_partition(n, N, [&](const PartitionShape& shape) {
    ++tally[fes_excited_count(shape, N, g)];
  });
  MultiplicityDistribution d;
  d.n = n;
  d.N = N;
  d.statistics = Statistics::fes(g);
  d.omega.reserve(N);
  for (std::size_t k = 1; k <= N; ++k) d.omega.emplace_back(static_cast<unsigned long>(tally[k]));
  return d;
}

std::vector<Fraction> discrete_g_grid(std::size_t N) {
  if (N < 2) throw DomainError("discrete g grid needs N >= 2");
  const auto span = static_cast<std::int64_t>(N - 1);
  std::vector<Fraction> grid;
  grid.reserve(N);
  for (std::int64_t m = span; m >= 0; --m) grid.emplace_back(m, span);
  return grid;
}

Fraction fes_ground_state_energy(std::size_t N, const Fraction& g) {
  const auto size = static_cast<std::int64_t>(N);
  return g * Fraction(size * (size - 1), 2) + Fraction(size, 2);
}

}  // namespace mcfluct
