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

#include "zetalab/cache.hpp"

#include <fstream>

#include "zetalab/errors.hpp"

namespace zetalab {

ResultCache::ResultCache(std::filesystem::path path, std::string version)
    : path_(std::move(path)), version_(std::move(version)) {
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::ordered_json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    throw Error("cache file " + path_.string() + " is not valid JSON");
  }
  if (doc.value("version", std::string()) != version_) return;
  if (doc.contains("entries") && doc["entries"].is_object()) entries_ = doc["entries"];
}

std::optional<nlohmann::ordered_json> ResultCache::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return *it;
}

void ResultCache::put(const std::string& key, nlohmann::ordered_json value) {
  if (!enabled()) return;
  entries_[key] = std::move(value);
  dirty_ = true;
}

void ResultCache::save() const {
  if (!enabled() || !dirty_) return;
  nlohmann::ordered_json doc;
  doc["version"] = version_;
  doc["entries"] = entries_;
  std::ofstream out(path_);
  if (!out) throw Error("cannot write cache file " + path_.string());
  out << doc.dump(1) << '\n';
}

}  // namespace zetalab
