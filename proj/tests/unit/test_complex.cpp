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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "zetalab/complex.hpp"

using namespace zetalab;

namespace {
EdgeLabel e1(int a, int b, int leg) { return {EdgeType::One, a, b, leg}; }
EdgeLabel f2(int a, int b, int leg) { return {EdgeType::Two, a, b, leg}; }
}  // namespace

TEST_CASE("edge endpoints") {
  CHECK(edge_source(e1(0, 0, 1)) == VertexId{0, 0});
  CHECK(edge_source(e1(1, 2, 3)) == VertexId{4, 2});
  CHECK(edge_source(f2(0, 0, 2)) == VertexId{1, 1});
  CHECK(edge_target(e1(0, 0, 3)) == VertexId{0, 0});
  CHECK(edge_target(e1(0, 2, 1)) == VertexId{3, 0});
  // Type-2 labels are read on the mirrored chamber, so (1,0,1) runs v_{1,0} -> v_{2,1}.
  CHECK(edge_source(f2(1, 0, 1)) == VertexId{1, 0});
  CHECK(edge_target(f2(1, 0, 1)) == VertexId{2, 1});
  CHECK_THROWS_AS(edge_source(e1(0, 0, 4)), std::invalid_argument);
}

TEST_CASE("vertex adjacency") {
  CHECK(vertices_adjacent({2, 1}, {3, 2}));
  CHECK_FALSE(vertices_adjacent({1, 0}, {0, 1}));
  CHECK_FALSE(vertices_adjacent({0, 0}, {2, 0}));
  CHECK(vertices_adjacent({0, 0}, {1, 0}));
  CHECK(vertices_adjacent({0, 0}, {1, 1}));
  CHECK_FALSE(vertices_adjacent({3, 0}, {3, -1}));
  CHECK_FALSE(vertices_adjacent({3, 3}, {3, 4}));
  CHECK(vertices_adjacent({3, 3}, {3, 2}));
  CHECK_FALSE(vertices_adjacent({4, 2}, {4, 2}));
  CHECK_FALSE(vertices_adjacent({4, 2}, {5, 1}));
}

TEST_CASE("adjacency is symmetric on valid vertices") {
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= m; ++n)
      for (int m2 = 0; m2 <= 9; ++m2)
        for (int n2 = 0; n2 <= m2; ++n2)
          CHECK(vertices_adjacent({m, n}, {m2, n2}) == vertices_adjacent({m2, n2}, {m, n}));
}

TEST_CASE("edges_in_region") {
  const auto one = edges_in_region(EdgeType::One, Region(1, 1));
  REQUIRE(one.size() == 3);
  CHECK(one[0] == e1(0, 0, 1));
  CHECK(one[1] == e1(0, 0, 2));
  CHECK(one[2] == e1(0, 0, 3));
  CHECK(edges_in_region(EdgeType::One, Region(3, 6)).size() == 54);
  CHECK(edges_in_region(EdgeType::Two, Region(2, 2)).size() == 12);
  CHECK_THROWS_AS(Region(0, 3), std::invalid_argument);

  for (int k = 1; k <= 5; ++k)
    for (int n = 1; n <= 5; ++n) {
      const Region r(k, n);
      const auto edges = edges_in_region(EdgeType::Two, r);
      CHECK(edges.size() == r.edge_count());
      CHECK(std::adjacent_find(edges.begin(), edges.end(),
                               [](const EdgeLabel& x, const EdgeLabel& y) { return !(x < y); }) == edges.end());
      for (std::size_t i = 0; i < edges.size(); ++i) {
        CHECK(r.contains(edges[i]));
        CHECK(r.index_of(edges[i]) == i);
        CHECK(r.label_at(EdgeType::Two, i) == edges[i]);
      }
    }
}

TEST_CASE("every label is an edge of the complex") {
  const Region r(12, 12);
  for (EdgeType t : {EdgeType::One, EdgeType::Two})
    for (const auto& e : edges_in_region(t, r)) {
      CHECK(edge_source(e).valid());
      CHECK(edge_target(e).valid());
      CHECK(vertices_adjacent(edge_source(e), edge_target(e)));
    }
}

TEST_CASE("the three legs of a chamber close up") {
  for (EdgeType t : {EdgeType::One, EdgeType::Two})
    for (int a = 0; a < 10; ++a)
      for (int b = 0; b < 10; ++b) {
        const EdgeLabel l1{t, a, b, 1}, l2{t, a, b, 2}, l3{t, a, b, 3};
        CHECK(edge_target(l1) == edge_source(l2));
        CHECK(edge_target(l2) == edge_source(l3));
        CHECK(edge_target(l3) == edge_source(l1));
        const std::set<VertexId> corners{edge_source(l1), edge_source(l2), edge_source(l3)};
        CHECK(corners.size() == 3);
      }
}

TEST_CASE("type-2 labels traverse the mirrored type-1 chamber backwards") {
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int leg = 1; leg <= 3; ++leg) {
        const EdgeLabel f = f2(a, b, leg);
        bool reversed = false;
        for (int leg1 = 1; leg1 <= 3; ++leg1) {
          const EdgeLabel e = e1(b, a, leg1);
          reversed = reversed || (edge_source(e) == edge_target(f) && edge_target(e) == edge_source(f));
        }
        CHECK(reversed);
      }
}

TEST_CASE("labels print compactly") {
  CHECK(to_string(e1(0, 1, 3)) == "e[0,1,3]");
  CHECK(to_string(f2(2, 0, 1)) == "f[2,0,1]");
  CHECK(edge_type_from_int(2) == EdgeType::Two);
  CHECK_THROWS(edge_type_from_int(3));
}
