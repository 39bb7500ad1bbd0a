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

#include "btwc/matching_decoder.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>

#include "btwc/blossom.h"

namespace btwc {

namespace {

constexpr uint32_t kUnreached = std::numeric_limits<uint32_t>::max();

void toggle_all(std::vector<uint8_t> &mask, const std::vector<uint32_t> &qubits) {
    for (uint32_t q : qubits) {
        mask[q] ^= 1;
    }
}

}  // namespace

SpacetimeDefectSet SpacetimeDefectSet::from_flips(CheckType type, const std::vector<Bits> &flips) {
    SpacetimeDefectSet set;
    set.type = type;
    set.window = static_cast<int>(flips.size());
    for (size_t t = 0; t < flips.size(); t++) {
        for (size_t k = 0; k < flips[t].size(); k++) {
            if (flips[t][k]) {
                set.defects.push_back({static_cast<uint32_t>(k), static_cast<int32_t>(t)});
            }
        }
    }
    return set;
}

MatchingDecoder::MatchingDecoder(const Lattice &lattice, CheckType type)
    : lattice_(&lattice), type_(type), n_(static_cast<uint32_t>(lattice.layer(type).size())) {
    const CheckLayer &layer = lattice.layer(type);
    hops_.assign(static_cast<size_t>(n_) * n_, kUnreached);
    next_.assign(static_cast<size_t>(n_) * n_, kUnreached);

    // BFS from every target b; the first step from a towards b is the
    // lowest-slot neighbour of a that is one hop closer to b.
    for (uint32_t b = 0; b < n_; b++) {
        std::deque<uint32_t> queue{b};
        hops_[b * n_ + b] = 0;
        while (!queue.empty()) {
            uint32_t u = queue.front();
            queue.pop_front();
            for (uint32_t w : layer.neighbors[u]) {
                if (hops_[w * n_ + b] == kUnreached) {
                    hops_[w * n_ + b] = hops_[u * n_ + b] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    for (uint32_t a = 0; a < n_; a++) {
        for (uint32_t b = 0; b < n_; b++) {
            if (hops_[a * n_ + b] == kUnreached) {
                throw std::logic_error("check graph is disconnected");
            }
            if (a == b) {
                continue;
            }
            const auto &nbrs = layer.neighbors[a];
            for (uint32_t slot = 0; slot < nbrs.size(); slot++) {
                if (hops_[nbrs[slot] * n_ + b] + 1 == hops_[a * n_ + b]) {
                    next_[a * n_ + b] = slot;
                    break;
                }
            }
        }
    }

    boundary_hops_.assign(n_, kUnreached);
    boundary_exit_.assign(n_, kUnreached);
    for (uint32_t a = 0; a < n_; a++) {
        for (uint32_t c = 0; c < n_; c++) {
            if (!layer.discharge[c].empty() && hops_[a * n_ + c] + 1 < boundary_hops_[a]) {
                boundary_hops_[a] = hops_[a * n_ + c] + 1;
                boundary_exit_[a] = c;
            }
        }
    }
}

int64_t MatchingDecoder::distance(const Defect &u, const Defect &v) const {
    return static_cast<int64_t>(hops(u.check, v.check)) + std::abs(static_cast<int64_t>(u.round) - v.round);
}

int64_t MatchingDecoder::boundary_distance(const Defect &u) const {
    return boundary_hops(u.check);
}

std::vector<uint32_t> MatchingDecoder::path_qubits(uint32_t a, uint32_t b) const {
    const CheckLayer &layer = lattice_->layer(type_);
    std::vector<uint32_t> out;
    while (a != b) {
        uint32_t slot = next_[a * n_ + b];
        out.push_back(layer.shared[a][slot]);
        a = layer.neighbors[a][slot];
    }
    return out;
}

std::vector<uint32_t> MatchingDecoder::boundary_path_qubits(uint32_t a) const {
    uint32_t exit = boundary_exit_[a];
    std::vector<uint32_t> out = path_qubits(a, exit);
    out.push_back(lattice_->layer(type_).discharge[exit].front());
    return out;
}

MatchingResult MatchingDecoder::decode(const SpacetimeDefectSet &defects) const {
    if (defects.type != type_) {
        throw std::invalid_argument("defect set type does not match the decoder");
    }
    return decode(defects.defects);
}

MatchingResult MatchingDecoder::decode(const std::vector<Defect> &defects) const {
    MatchingResult result;
    const uint32_t n = static_cast<uint32_t>(defects.size());
    if (n == 0) {
        return result;
    }
    for (const Defect &d : defects) {
        if (d.check >= n_) {
            throw std::invalid_argument("defect check index out of range");
        }
    }

    // Vertices 0..n-1 are defects, n..2n-1 their boundary twins. Twins are
    // mutually joined at zero cost so any subset of defects may exit.
    std::vector<WeightedEdge> edges;
    for (uint32_t i = 0; i < n; i++) {
        int64_t bi = boundary_distance(defects[i]);
        edges.push_back({i, n + i, bi});
        for (uint32_t j = i + 1; j < n; j++) {
            int64_t w = distance(defects[i], defects[j]);
            // A pair at least as long as two boundary exits is never needed.
            if (w < bi + boundary_distance(defects[j])) {
                edges.push_back({i, j, w});
            }
            edges.push_back({n + i, n + j, 0});
        }
    }
    std::vector<int32_t> mate = min_weight_perfect_matching(2 * n, edges);

    std::vector<uint8_t> mask(lattice_->num_data(), 0);
    for (uint32_t i = 0; i < n; i++) {
        uint32_t m = static_cast<uint32_t>(mate[i]);
        if (m == n + i) {
            int64_t w = boundary_distance(defects[i]);
            result.pairs.push_back({static_cast<int32_t>(i), MatchedPair::kBoundary, w});
            result.total_weight += w;
            toggle_all(mask, boundary_path_qubits(defects[i].check));
        } else if (m < n && m > i) {
            int64_t w = distance(defects[i], defects[m]);
            result.pairs.push_back({static_cast<int32_t>(i), static_cast<int32_t>(m), w});
            result.total_weight += w;
            toggle_all(mask, path_qubits(defects[i].check, defects[m].check));
        } else if (m >= n) {
            throw std::logic_error("defect matched to a foreign boundary twin");
        }
    }
    for (uint32_t q = 0; q < mask.size(); q++) {
        if (mask[q]) {
            result.corrections.push_back(q);
        }
    }
    return result;
}

}  // namespace btwc
