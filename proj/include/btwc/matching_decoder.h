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

#ifndef BTWC_MATCHING_DECODER_H
#define BTWC_MATCHING_DECODER_H

#include <compare>
#include <cstdint>
#include <vector>

#include "btwc/lattice.h"

namespace btwc {

/// A detection event. `check` is the layer-local index of the ancilla (the bit
/// position in syndrome vectors of its type), `round` the block round index.
struct Defect {
    uint32_t check;
    int32_t round;

    auto operator<=>(const Defect &) const = default;
};

struct SpacetimeDefectSet {
    CheckType type = CheckType::X;
    int window = 1;
    std::vector<Defect> defects;

    /// Builds the set from detection-event vectors, one per round.
    static SpacetimeDefectSet from_flips(CheckType type, const std::vector<Bits> &flips);
};

/// `b == kBoundary` marks a defect matched to the code boundary.
struct MatchedPair {
    static constexpr int32_t kBoundary = -1;
    int32_t a;
    int32_t b;
    int64_t weight;
};

struct MatchingResult {
    /// Indices into the decoded defect list.
    std::vector<MatchedPair> pairs;
    /// Sorted data qubits with odd multiplicity over all realised paths.
    std::vector<uint32_t> corrections;
    int64_t total_weight = 0;
};

/// Exact minimum-weight perfect matching decoder over the space-time graph of
/// one check type, with unit-weight spatial hops and unit-weight time steps.
///
/// All-pairs hop distances and first steps of shortest paths are tabulated at
/// construction; the decoder is immutable afterwards.
class MatchingDecoder {
   public:
    MatchingDecoder(const Lattice &lattice, CheckType type);

    CheckType type() const {
        return type_;
    }
    const Lattice &lattice() const {
        return *lattice_;
    }

    /// Hops between two checks in the same-type neighbour graph.
    uint32_t hops(uint32_t a, uint32_t b) const {
        return hops_[a * n_ + b];
    }
    /// Hops to the nearest check owning a discharge qubit, plus one for the
    /// discharge qubit itself.
    uint32_t boundary_hops(uint32_t a) const {
        return boundary_hops_[a];
    }

    int64_t distance(const Defect &u, const Defect &v) const;
    int64_t boundary_distance(const Defect &u) const;

    /// Data qubits along a shortest path between two checks.
    std::vector<uint32_t> path_qubits(uint32_t a, uint32_t b) const;
    /// Data qubits along a shortest path from a check out through the boundary.
    std::vector<uint32_t> boundary_path_qubits(uint32_t a) const;

    MatchingResult decode(const std::vector<Defect> &defects) const;
    MatchingResult decode(const SpacetimeDefectSet &defects) const;

   private:
    const Lattice *lattice_;
    CheckType type_;
    uint32_t n_;
    std::vector<uint32_t> hops_;
    // next_[a * n + b]: neighbour slot of a taken first on a shortest path to b.
    std::vector<uint32_t> next_;
    std::vector<uint32_t> boundary_hops_;
    std::vector<uint32_t> boundary_exit_;
};

}  // namespace btwc

#endif
