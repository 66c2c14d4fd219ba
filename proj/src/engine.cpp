#include "mcfluct/engine.hpp"

namespace mcfluct {

CanonicalEnsemble& Engine::ensemble(std::size_t N, const Statistics& statistics) {
  std::lock_guard lock(ensembles_mutex_);
  auto key = std::make_pair(N, statistics.to_string());
  auto it = ensembles_.find(key);
  if (it == ensembles_.end()) {
    auto created = std::make_unique<CanonicalEnsemble>(cache_, N, statistics);
    it = ensembles_.emplace(std::move(key), std::move(created)).first;
  }
  return *it->second;
}

}  // namespace mcfluct
