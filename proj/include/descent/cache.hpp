#ifndef DESCENT_CACHE_HPP
#define DESCENT_CACHE_HPP

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "descent/twists.hpp"

namespace descent {

/// Persistent memo of twist outcomes, stored as one JSON document
/// `{"version":1,"entries":{"<canonical key>":{...}}}`.
///
/// Readers and writers may share one instance across threads. Every put
/// rewrites the file through a temporary and a rename.
class TwistCache {
 public:
  static constexpr int kVersion = 1;

  /// Loads `path` if it exists. An unreadable or mismatched file is treated
  /// as empty and reported through warnings().
  explicit TwistCache(std::filesystem::path path);

  std::optional<TwistOutcome> get(const std::string& key) const;
  void put(const std::string& key, const TwistOutcome& outcome);

  std::size_t size() const;
  std::vector<std::string> warnings() const;
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  void flush_locked() const;

  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<std::string, TwistOutcome> entries_;
  std::vector<std::string> warnings_;
};

/// Lookup rule used by the engine: a cached outcome is reusable when it is
/// complete, or was bounded at a height at least the requested one.
bool cache_entry_covers(const TwistOutcome& cached, unsigned long requested_height);

}  // namespace descent

#endif  // DESCENT_CACHE_HPP
