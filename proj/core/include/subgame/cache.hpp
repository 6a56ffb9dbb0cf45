#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "subgame/engine.hpp"

namespace subgame {

// Memo of find_periodicity keyed by (A, S). Safe for concurrent readers and writers.
class ReportCache {
 public:
  explicit ReportCache(EngineOptions opt = {}) : opt_(opt) {}

  PeriodicityReport get(const MoveSet& a, const Seed& s) {
    const std::string key = a.to_csv() + '|' + s.to_string();
    {
      std::shared_lock lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    PeriodicityReport r = find_periodicity(a, s, opt_);
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(r)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  EngineOptions opt_;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, PeriodicityReport> map_;
};

}  // namespace subgame
