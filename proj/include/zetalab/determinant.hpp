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

#ifndef ZETALAB_DETERMINANT_HPP
#define ZETALAB_DETERMINANT_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "zetalab/complex.hpp"
#include "zetalab/polyseries.hpp"

namespace zetalab {

/// Sparse square block, (row, col) -> entry, 0-based.
using SparseBlock = std::map<std::pair<int, int>, UPoly>;

/// The four 3k x 3k blocks of the block-tridiagonal matrix M_{k,N} = I - u T_{1,k}
/// restricted to offsets < N. Block (i, j) of M is A if i = j = 0, B if
/// i = j > 0, C if i = j + 1, D if j = i + 1. Inside block b the edge
/// [a, b, leg] sits at 3a + leg - 1.
struct BlockSpec {
  int k = 0;
  int block_dim = 0;
  SparseBlock a, b, c, d;
};

BlockSpec build_blocks(int k);

/// Row/column of [level, offset, leg] in M_{k,N}.
inline std::size_t block_index(int level, int offset, int leg, int k) {
  return static_cast<std::size_t>(3 * k * offset + 3 * level + leg - 1);
}

/// M_{k,N} assembled from the blocks.
SparseBlock assemble_block_matrix(const BlockSpec& spec, int blocks);

/// a_{k,(s,t),l} for 1 <= s,t <= k at a fixed iteration l. These are the only
/// entries, at (3s-1, 3t-2), where the Schur iterate B_{k,l} differs from B_k.
struct AlphaTable {
  int k = 0;
  int order = 0;
  int iteration = 1;
  bool converged = false;
  std::vector<USeries> values;  // row-major (s-1)*k + (t-1)

  const USeries& at(int s, int t) const { return values[static_cast<std::size_t>((s - 1) * k + (t - 1))]; }
  USeries& at(int s, int t) { return values[static_cast<std::size_t>((s - 1) * k + (t - 1))]; }
  friend bool operator==(const AlphaTable& x, const AlphaTable& y) { return x.k == y.k && x.values == y.values; }
};

AlphaTable schur_initial(int k, int order);
/// One application of the scalar recurrences, l -> l+1.
AlphaTable schur_step(const AlphaTable& table);
/// Iterates until two consecutive tables agree to the working order, or
/// max_iterations is reached (converged stays false then).
AlphaTable schur_iterate(const BlockSpec& spec, int max_iterations, int order);

/// A_k with the (3s-1, 3t-2) entries replaced by the table's values, i.e. the
/// block left after the Schur sweep: det of it is det M_{k,N} for l = N.
SparseBlock schur_top_block(const BlockSpec& spec, const AlphaTable& table);

/// Closed form of lim_k alpha_{k,(1,t)} expanded to u^order.
USeries alpha_limit(int t, int order);

/// det(I - uT_1) from the 2x2 reduction with the closed-form limits.
USeries det_via_alpha(int order);
/// Same reduction at finite k using the table's alpha_{k,(1,j)}.
USeries det_truncated_via_alpha(const AlphaTable& table);

/// exp(-sum_n Tr(T_k^n) u^{kn} / n); traces[n-1] = Tr(T^n). Type 2 carries
/// u^2 per step.
USeries det_from_traces(EdgeType type, const std::vector<QPoly>& traces, int order);
USeries det_via_traces(EdgeType type, int order);

/// det M_{k,N}(u) at a rational q by exact Gaussian elimination over
/// Q[u]/(u^{order+1}).
RSeries det_direct(const BlockSpec& spec, int blocks, int order, const Rational& q_value);
/// Determinant of an arbitrary sparse matrix congruent to I mod u.
RSeries det_unipotent(const SparseBlock& matrix, std::size_t dim, int order, const Rational& q_value);

}  // namespace zetalab

#endif  // ZETALAB_DETERMINANT_HPP
