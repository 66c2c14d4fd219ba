#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "mcfluct/ensembles.hpp"
#include "mcfluct/partitions.hpp"
#include "mcfluct/statistics.hpp"

namespace mcfluct {

/// Shared computational state: the partition caches and the canonical shell
/// caches built on top of them. One engine per C API context.
class Engine {
 public:
  Engine() = default;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  PartitionCache& cache() noexcept { return cache_; }

  /// The cached canonical ensemble for (N, statistics), created on first use.
  CanonicalEnsemble& ensemble(std::size_t N, const Statistics& statistics);

 private:
  PartitionCache cache_;
  std::mutex ensembles_mutex_;
  std::map<std::pair<std::size_t, std::string>, std::unique_ptr<CanonicalEnsemble>> ensembles_;
};

}  // namespace mcfluct
