// Copyright 2026 The zetalab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZETALAB_CACHE_HPP
#define ZETALAB_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace zetalab {

/// Result cache kept in a single JSON file:
///   {"version": "...", "entries": {"<key>": <value>, ...}}
/// Entries written by another tool version are discarded on load.
class ResultCache {
 public:
  ResultCache() = default;
  ResultCache(std::filesystem::path path, std::string version);

  bool enabled() const { return !path_.empty(); }
  const std::filesystem::path& path() const { return path_; }

  std::optional<nlohmann::ordered_json> get(const std::string& key) const;
  void put(const std::string& key, nlohmann::ordered_json value);
  /// Writes the file if anything changed since load.
  void save() const;

 private:
  std::filesystem::path path_;
  std::string version_;
  nlohmann::ordered_json entries_ = nlohmann::ordered_json::object();
  bool dirty_ = false;
};

}  // namespace zetalab

#endif  // ZETALAB_CACHE_HPP
