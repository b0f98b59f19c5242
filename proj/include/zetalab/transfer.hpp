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

#ifndef ZETALAB_TRANSFER_HPP
#define ZETALAB_TRANSFER_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "zetalab/complex.hpp"
#include "zetalab/polyseries.hpp"

namespace zetalab {

struct WeightedArrow {
  EdgeLabel target;
  QPoly weight;

  friend bool operator==(const WeightedArrow&, const WeightedArrow&) = default;
};

/// T (full operator) or T_k (level-k truncation, which drops the arrow from
/// level k-1 to level k).
class TruncationMode {
 public:
  static TruncationMode full() { return TruncationMode(0); }
  static TruncationMode truncated(int k);

  bool is_full() const { return k_ == 0; }
  /// Truncation level; 0 for full mode.
  int level() const { return k_; }

 private:
  explicit TruncationMode(int k) : k_(k) {}
  int k_;
};

/// The out-neighbour table of an operator. Tests swap in altered tables to
/// check that the verification pipeline notices.
using TransferRule = std::function<std::vector<WeightedArrow>(const EdgeLabel&, const TruncationMode&)>;

/// Successors of e with their weights. Both edge types share one table.
///
///   leg 1: a=0   -> (q^2-1) [0,b,2] + [0,b+1,1]
///          a>=1  -> (q-1) [a,b,2] + (q^2-q) [a-1,b+1,3] + [a,b+1,1]
///   leg 2: a=k-1 (truncated) -> (q^2-q) [a,b,3]
///          b=0   -> (q^2-q) [a,0,3] + q [a+1,0,1]
///          b>=1  -> (q^2-q) [a,b,3] + q [a+1,b-1,2]
///   leg 3: a=b=0 -> q^2 [0,0,1]
///          a=0   -> q^2 [0,b-1,2]
///          a>=1  -> q^2 [a-1,b,3]
///
/// Throws OutsideTruncation when a truncated mode is asked about level >= k.
std::vector<WeightedArrow> out_neighbors(const EdgeLabel& e, const TruncationMode& mode = TruncationMode::full());

const TransferRule& standard_rule();

/// Sum of outgoing weights: q^2, except q^2-q on the top truncated level's leg 2.
QPoly row_sum(const EdgeLabel& e, const TruncationMode& mode = TruncationMode::full(),
              const TransferRule& rule = standard_rule());

template <class Value>
struct TraceResult {
  Value value;
  Region region;  ///< window in which the value stabilised
};

/// Tr(T^m), symbolic in q. The window starts at (m+2, m+3) and is enlarged
/// to (L+1, 2B) until two consecutive enlargements leave the value unchanged.
TraceResult<QPoly> trace_power(EdgeType type, int m, const TransferRule& rule = standard_rule());
TraceResult<Rational> trace_power(EdgeType type, int m, const Rational& q_value,
                                  const TransferRule& rule = standard_rule());

/// Weighted closed m-walks that stay inside r.
QPoly trace_power_in_region(EdgeType type, int m, const Region& r, const TransferRule& rule = standard_rule());
Rational trace_power_in_region(EdgeType type, int m, const Region& r, const Rational& q_value,
                               const TransferRule& rule = standard_rule());

struct SparseMatrix {
  std::size_t dim = 0;
  std::map<std::pair<std::size_t, std::size_t>, QPoly> entries;  ///< (row, col) -> value

  QPoly at(std::size_t row, std::size_t col) const;
};

/// Matrix of T on the edges of r in edges_in_region order: column e holds
/// the arrows out of e. Arrows leaving r are dropped.
SparseMatrix operator_matrix(EdgeType type, const Region& r, const TruncationMode& mode);

}  // namespace zetalab

#endif  // ZETALAB_TRANSFER_HPP
