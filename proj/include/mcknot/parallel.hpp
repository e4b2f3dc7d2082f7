// Copyright 2026 The mcknot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Deterministic sharded execution.  Shards are claimed dynamically but
// results are stored by shard index, so the merged output does not depend
// on the worker count or on scheduling.  A checkpoint file records finished
// shards as JSON lines {"shard": i, "result": ...} and is replayed on
// restart.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

namespace mcknot {

/// Calls fn(i) for every i in [0, count) on up to `workers` threads and
/// returns the results in index order.  The first exception (by index) is
/// rethrown after all workers stop.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned workers, Fn&& fn) {
  using Result = decltype(fn(std::size_t{}));
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto work = [&]() {
    for (std::size_t i; !failed.load(std::memory_order_relaxed) && (i = next.fetch_add(1)) < count;) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
        failed = true;
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Result> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Append-only record of finished shards.
class Checkpoint {
 public:
  Checkpoint() = default;
  /// Opens `path` (may be empty for no checkpointing) and loads finished
  /// shards tagged with `key`; entries for other keys are ignored.
  Checkpoint(std::string path, std::string key) : path_(std::move(path)), key_(std::move(key)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      torn_ = in.eof();  // last line had no newline
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line, nullptr, false);
      // A torn final line from an interrupted run is skipped.
      if (j.is_discarded() || !j.contains("key") || j["key"] != key_) continue;
      done_[j.at("shard").get<std::size_t>()] = j.at("result");
    }
  }

  bool enabled() const { return !path_.empty(); }
  const nlohmann::json* find(std::size_t shard) const {
    auto it = done_.find(shard);
    return it == done_.end() ? nullptr : &it->second;
  }
  std::size_t completed() const { return done_.size(); }

  void record(std::size_t shard, const nlohmann::json& result) {
    if (path_.empty()) return;
    std::lock_guard<std::mutex> lock(mu_);
    std::ofstream out(path_, std::ios::app);
    if (torn_) out << '\n';
    torn_ = false;
    out << nlohmann::json{{"key", key_}, {"shard", shard}, {"result", result}}.dump() << '\n';
  }

 private:
  std::string path_;
  std::string key_;
  std::map<std::size_t, nlohmann::json> done_;
  std::mutex mu_;
  bool torn_ = false;
};

/// parallel_map with checkpoint replay: shards already recorded are decoded
/// instead of recomputed.
template <typename Fn, typename Encode, typename Decode>
auto checkpointed_map(std::size_t count, unsigned workers, Checkpoint& checkpoint, Fn&& fn, Encode&& encode, Decode&& decode) {
  return parallel_map(count, workers, [&](std::size_t i) {
    if (const auto* saved = checkpoint.find(i)) return decode(*saved);
    auto result = fn(i);
    checkpoint.record(i, encode(result));
    return result;
  });
}

}  // namespace mcknot
