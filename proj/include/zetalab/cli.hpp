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

#ifndef ZETALAB_CLI_HPP
#define ZETALAB_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zetalab::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Parsed command line. Only the fields of the chosen subcommand are used.
struct RunConfig {
  std::string command;  ///< "complex dump", "trace", "cycles enumerate", "det", "zeta series", "count", "verify all"
  std::string format = "json";
  std::string out_path;
  std::string cache_path;  ///< --cache, else $ZETALAB_CACHE
  bool no_cache = false;
  bool cache_verify = false;

  int edge_type = 1;
  int max_level = 1;
  int max_offset = 1;
  int m = 1;
  int n = 1;
  int order = 0;
  int max_m = 9;
  std::optional<int> k;
  std::optional<int> blocks;
  std::optional<std::string> q;
  std::vector<std::string> q_list;
  bool symbolic = false;
  bool verify = false;
  std::string method = "alpha";
  std::string which = "1";
};

/// Runs one command. args excludes the program name. Output goes to `out`
/// (or --out FILE); diagnostics to `err`. Returns 0 on success, 1 on a
/// verification or cache mismatch, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetalab::cli

#endif  // ZETALAB_CLI_HPP
