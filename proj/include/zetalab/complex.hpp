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

#ifndef ZETALAB_COMPLEX_HPP
#define ZETALAB_COMPLEX_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace zetalab {

/// Vertex v_{m,n} of the fundamental sector, 0 <= n <= m.
struct VertexId {
  int m = 0;
  int n = 0;

  bool valid() const { return 0 <= n && n <= m; }
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Directed edges come in two types according to the colour increment.
enum class EdgeType : int { One = 1, Two = 2 };

EdgeType edge_type_from_int(int t);

/// A directed edge, named by the chamber it bounds and its leg 1..3.
///
/// Type 1 labels sit on the chamber with base vertex v_{level+offset, level}
/// and run v_{m,n} -> v_{m+1,n} -> v_{m+1,n+1} -> v_{m,n} for legs 1, 2, 3.
///
/// Type 2 labels are the mirror image under v_{m,n} -> v_{m,m-n}: they sit on
/// the chamber with base v_{level+offset, offset} and run
/// v_{m,n} -> v_{m+1,n+1} -> v_{m+1,n} -> v_{m,n}. In these coordinates the
/// type-2 transfer table is label-for-label the type-1 table, and the level
/// is the distance m-n from the diagonal wall.
struct EdgeLabel {
  EdgeType type = EdgeType::One;
  int level = 0;
  int offset = 0;
  int leg = 1;

  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

std::string to_string(const EdgeLabel& e);

/// Chamber window: level < max_level and offset < max_offset.
class Region {
 public:
  Region(int max_level, int max_offset);

  int max_level() const { return max_level_; }
  int max_offset() const { return max_offset_; }
  bool contains(const EdgeLabel& e) const {
    return e.level >= 0 && e.offset >= 0 && e.level < max_level_ && e.offset < max_offset_;
  }
  std::size_t edge_count() const { return 3u * static_cast<std::size_t>(max_level_) * static_cast<std::size_t>(max_offset_); }
  /// Position of e in the (level, offset, leg) enumeration; e must be inside.
  std::size_t index_of(const EdgeLabel& e) const {
    return (static_cast<std::size_t>(e.level) * static_cast<std::size_t>(max_offset_) +
            static_cast<std::size_t>(e.offset)) * 3u + static_cast<std::size_t>(e.leg - 1);
  }
  EdgeLabel label_at(EdgeType type, std::size_t index) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  int max_level_;
  int max_offset_;
};

VertexId edge_source(const EdgeLabel& e);
VertexId edge_target(const EdgeLabel& e);

/// Adjacency in the quotient, from the neighbour lists of the sector's
/// interior, bottom wall, diagonal wall and origin.
bool vertices_adjacent(const VertexId& v, const VertexId& w);

/// Every label inside r, ordered by (level, offset, leg).
std::vector<EdgeLabel> edges_in_region(EdgeType type, const Region& r);

}  // namespace zetalab

#endif  // ZETALAB_COMPLEX_HPP
