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

#ifndef ZETALAB_VERIFY_HPP
#define ZETALAB_VERIFY_HPP

#include <string>
#include <vector>

#include "zetalab/polyseries.hpp"
#include "zetalab/transfer.hpp"

namespace zetalab {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int max_m = 9;
  int order = 12;
  std::vector<Rational> q_values{2, 3};
  TransferRule rule = standard_rule();
};

/// Runs every identity end to end and reports one result per identity.
/// Failures are reported, never thrown. Requires max_m <= order.
std::vector<CriterionResult> verify_all(const VerifyOptions& options);

/// First coefficient where two series differ, as "u^i: a != b"; empty if equal.
std::string first_difference(const USeries& a, const USeries& b);
std::string first_difference(const RSeries& a, const RSeries& b);

}  // namespace zetalab

#endif  // ZETALAB_VERIFY_HPP
