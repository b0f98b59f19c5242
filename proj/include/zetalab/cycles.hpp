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

#ifndef ZETALAB_CYCLES_HPP
#define ZETALAB_CYCLES_HPP

#include <vector>

#include "zetalab/complex.hpp"
#include "zetalab/polyseries.hpp"
#include "zetalab/transfer.hpp"

namespace zetalab {

/// One rotation class of closed admissible paths, stored as its
/// lexicographically least rotation.
struct Cycle {
  std::vector<EdgeLabel> edges;
  QPoly weight;
  int primitive_length = 0;
};

/// All rotation classes of closed paths of length n, by depth-first search.
/// Shares only the out-neighbour table with the trace computation.
std::vector<Cycle> enumerate_cycles(EdgeType type, int n, const TransferRule& rule = standard_rule());

/// sum over classes of w(c) * l(c_0); equals Tr(T^n).
QPoly weighted_count(EdgeType type, int n, const TransferRule& rule = standard_rule());
Rational weighted_count(EdgeType type, int n, const Rational& q_value, const TransferRule& rule = standard_rule());

/// Least rotation period of a cyclic sequence.
int rotation_period(const std::vector<EdgeLabel>& edges);

}  // namespace zetalab

#endif  // ZETALAB_CYCLES_HPP
