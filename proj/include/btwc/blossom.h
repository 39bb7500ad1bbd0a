// Copyright 2026 The btwc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BTWC_BLOSSOM_H
#define BTWC_BLOSSOM_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace btwc {

struct WeightedEdge {
    uint32_t u;
    uint32_t v;
    int64_t weight;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm with
/// primal-dual updates, O(V^3)). With `max_cardinality` set, only matchings of
/// maximum cardinality are considered. Returns mate[v], or -1 when unmatched.
/// Integer weights keep every dual update exact.
std::vector<int32_t> max_weight_matching(
    size_t num_vertices, std::span<const WeightedEdge> edges, bool max_cardinality);

/// Minimum-weight perfect matching. Throws std::invalid_argument if the graph
/// has no perfect matching.
std::vector<int32_t> min_weight_perfect_matching(size_t num_vertices, std::span<const WeightedEdge> edges);

}  // namespace btwc

#endif
