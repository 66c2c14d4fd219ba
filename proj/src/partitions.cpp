#include "mcfluct/partitions.hpp"

#include <algorithm>
#include <string>

#include "mcfluct/error.hpp"

namespace mcfluct {

namespace {

const BigInt& zero() {
  static const BigInt value{0};
  return value;
}

const BigInt& one() {
  static const BigInt value{1};
  return value;
}

}  // namespace

PartitionTable::PartitionTable(std::size_t max_n, std::size_t max_parts)
    : max_n_(max_n), max_parts_(std::min(max_parts, max_n)) {
  columns_.resize(max_parts_);
  for (std::size_t c = 1; c <= max_parts_; ++c) {
    auto& column = columns_[c - 1];
    column.resize(max_n_ - c + 1);
    for (std::size_t n = c; n <= max_n_; ++n) {
      // Omega(n, c) = Omega(n, c - 1) + Omega(n - c, c)
      BigInt& cell = column[n - c];
      if (c > 1) cell = columns_[c - 2][n - (c - 1)];
      cell += count(n - c, c);
    }
  }
}

bool PartitionTable::covers(std::size_t n, std::size_t parts) const noexcept {
  return n <= max_n_ && std::min(n, parts) <= max_parts_;
}

const BigInt& PartitionTable::count(std::size_t n, std::size_t parts) const {
  if (n > max_n_) {
    throw RangeError("partition table index n=" + std::to_string(n) +
                     " exceeds max_n=" + std::to_string(max_n_));
  }
  const std::size_t c = std::min(n, parts);
  if (c > max_parts_) {
    throw RangeError("partition table index N=" + std::to_string(parts) +
                     " exceeds max_parts=" + std::to_string(max_parts_) +
                     " at n=" + std::to_string(n));
  }
  if (n == 0) return one();
  if (c == 0) return zero();
  return columns_[c - 1][n - c];
}

const BigInt& canonical_multiplicity(const PartitionTable& table, std::size_t n,
                                     std::size_t parts) {
  return table.count(n, parts);
}

BoundedPartitionTable::BoundedPartitionTable(std::size_t n_ex, std::size_t level_cap,
                                             std::vector<BigInt> counts)
    : n_ex_(n_ex), level_cap_(level_cap), counts_(std::move(counts)) {
  if (counts_.size() != n_ex_ * level_cap_ + 1) {
    throw InternalError("bounded partition table for n_ex=" + std::to_string(n_ex_) +
                        ", level_cap=" + std::to_string(level_cap_) + " has " +
                        std::to_string(counts_.size()) + " coefficients");
  }
}

const BigInt& BoundedPartitionTable::count(std::size_t i) const noexcept {
  return i < counts_.size() ? counts_[i] : zero();
}

BoundedPartitionTable hole_partition_function(std::size_t N, std::size_t n_ex) {
  if (n_ex < 1 || n_ex > N) {
    throw DomainError("hole partition function needs 1 <= n_ex <= N, got n_ex=" +
                      std::to_string(n_ex) + ", N=" + std::to_string(N));
  }
  const std::size_t cap = N - n_ex;
  const std::size_t stride = cap + 1;

  // z[k] holds the integer coefficients of Z_k, degree k * cap.
  std::vector<std::vector<BigInt>> z(n_ex + 1);
  z[0] = {BigInt(1)};
  std::vector<BigInt> shifted;
  for (std::size_t k = 1; k <= n_ex; ++k) {
    std::vector<BigInt> sum(k * cap + 1);
    for (std::size_t j = 1; j <= k; ++j) {
      const auto& prev = z[k - j];
      // Z_1(x^j) * prev = sum_{i=0}^{cap} x^{i j} prev(x), as a sliding window:
      // out[m] = prev[m] + out[m - j] - prev[m - j * stride].
      const std::size_t degree = prev.size() - 1 + j * cap;
      shifted.assign(degree + 1, BigInt(0));
      for (std::size_t m = 0; m <= degree; ++m) {
        BigInt& out = shifted[m];
        if (m < prev.size()) out = prev[m];
        if (m >= j) out += shifted[m - j];
        if (m >= j * stride && m - j * stride < prev.size()) out -= prev[m - j * stride];
      }
      for (std::size_t m = 0; m <= degree; ++m) sum[m] += shifted[m];
    }
    for (std::size_t m = 0; m < sum.size(); ++m) {
      BigInt& coeff = sum[m];
      if (sgn(coeff) < 0 || !mpz_divisible_ui_p(coeff.get_mpz_t(), k)) {
        throw InternalError("hole recursion produced a non-integral coefficient " +
                            coeff.get_str() + "/" + std::to_string(k) + " at x^" +
                            std::to_string(m) + " (n_ex=" + std::to_string(n_ex) +
                            ", N=" + std::to_string(N) + ")");
      }
      mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), k);
    }
    z[k] = std::move(sum);
  }
  return BoundedPartitionTable(n_ex, cap, std::move(z[n_ex]));
}

BigInt bounded_multiplicity_direct(std::size_t i, std::size_t max_parts, std::size_t max_part) {
  if (i == 0) return 1;
  if (max_parts == 0 || max_part == 0) return 0;
  if (i > max_parts * max_part) return 0;
  // ways[p][s]: partitions of s into exactly p parts using the part sizes seen
  // so far. Adding size v allows any number of copies (unbounded knapsack).
  std::vector<std::vector<BigInt>> ways(max_parts + 1, std::vector<BigInt>(i + 1));
  ways[0][0] = 1;
  for (std::size_t v = 1; v <= std::min(max_part, i); ++v) {
    for (std::size_t p = 1; p <= max_parts; ++p) {
      for (std::size_t s = v; s <= i; ++s) ways[p][s] += ways[p - 1][s - v];
    }
  }
  BigInt total = 0;
  for (std::size_t p = 0; p <= max_parts; ++p) total += ways[p][i];
  return total;
}

std::shared_ptr<const PartitionTable> PartitionCache::table(std::size_t max_n,
                                                            std::size_t max_parts) {
  std::lock_guard lock(table_mutex_);
  if (table_ && table_->max_n() >= max_n &&
      table_->max_parts() >= std::min(max_parts, max_n)) {
    return table_;
  }
  std::size_t n = max_n;
  std::size_t parts = max_parts;
  if (table_) {
    if (n > table_->max_n()) n = std::max(n, table_->max_n() + table_->max_n() / 2);
    n = std::max(n, table_->max_n());
    parts = std::max(parts, table_->max_parts());
  }
  table_ = std::make_shared<const PartitionTable>(n, parts);
  return table_;
}

std::shared_ptr<const BoundedPartitionTable> PartitionCache::holes(std::size_t N,
                                                                   std::size_t n_ex) {
  if (n_ex < 1 || n_ex > N) {
    throw DomainError("hole table needs 1 <= n_ex <= N, got n_ex=" + std::to_string(n_ex) +
                      ", N=" + std::to_string(N));
  }
  // The table depends on N only through the level cap N - n_ex.
  const auto key = std::make_pair(N - n_ex, n_ex);
  std::lock_guard lock(holes_mutex_);
  auto it = holes_.find(key);
  if (it == holes_.end()) {
    auto built = std::make_shared<const BoundedPartitionTable>(hole_partition_function(N, n_ex));
    it = holes_.emplace(key, std::move(built)).first;
  }
  return it->second;
}

}  // namespace mcfluct
