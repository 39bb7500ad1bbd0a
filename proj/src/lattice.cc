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

#include "btwc/lattice.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace btwc {

std::string_view to_string(CheckType type) {
    return type == CheckType::X ? "X" : "Z";
}

Lattice Lattice::build(int distance) {
    if (distance < 3 || distance % 2 == 0) {
        throw std::invalid_argument(
            "code distance must be an odd integer >= 3, got " + std::to_string(distance));
    }
    const int d = distance;
    Lattice lat;
    lat.distance_ = d;

    for (int r = -1; r < d; r++) {
        for (int c = -1; c < d; c++) {
            bool row_edge = r == -1 || r == d - 1;
            bool col_edge = c == -1 || c == d - 1;
            if (row_edge && col_edge) {
                continue;
            }
            CheckType type = ((r + c) % 2 + 2) % 2 == 0 ? CheckType::X : CheckType::Z;
            if (row_edge && type != CheckType::X) {
                continue;
            }
            if (col_edge && type != CheckType::Z) {
                continue;
            }
            Ancilla a{static_cast<uint32_t>(lat.ancillas_.size()), type, {r, c}, {}};
            for (int dr = 0; dr < 2; dr++) {
                for (int dc = 0; dc < 2; dc++) {
                    int i = r + dr;
                    int j = c + dc;
                    if (i >= 0 && i < d && j >= 0 && j < d) {
                        a.support.push_back(static_cast<uint32_t>(i * d + j));
                    }
                }
            }
            std::sort(a.support.begin(), a.support.end());
            lat.ancillas_.push_back(std::move(a));
        }
    }

    lat.local_index_.resize(lat.ancillas_.size());
    for (CheckType type : kCheckTypes) {
        CheckLayer &layer = lat.layers_[static_cast<size_t>(type)];
        layer.type = type;
        for (const Ancilla &a : lat.ancillas_) {
            if (a.type == type) {
                lat.local_index_[a.id] = static_cast<uint32_t>(layer.global_ids.size());
                layer.global_ids.push_back(a.id);
                layer.support.push_back(a.support);
            }
        }
        size_t n = layer.size();
        layer.neighbors.assign(n, {});
        layer.shared.assign(n, {});
        layer.discharge.assign(n, {});
        layer.data_checks.assign(lat.num_data(), {-1, -1});

        for (size_t k = 0; k < n; k++) {
            for (uint32_t q : layer.support[k]) {
                auto &slots = layer.data_checks[q];
                if (slots[0] < 0) {
                    slots[0] = static_cast<int32_t>(k);
                } else if (slots[1] < 0) {
                    slots[1] = static_cast<int32_t>(k);
                } else {
                    throw std::logic_error("data qubit in more than two same-type supports");
                }
            }
        }
        for (size_t a = 0; a < n; a++) {
            for (size_t b = 0; b < n; b++) {
                if (a == b) {
                    continue;
                }
                std::vector<uint32_t> common;
                std::set_intersection(
                    layer.support[a].begin(), layer.support[a].end(), layer.support[b].begin(),
                    layer.support[b].end(), std::back_inserter(common));
                if (common.size() == 1) {
                    layer.neighbors[a].push_back(static_cast<uint32_t>(b));
                    layer.shared[a].push_back(common[0]);
                }
            }
            for (uint32_t q : layer.support[a]) {
                if (layer.data_checks[q][1] < 0) {
                    layer.discharge[a].push_back(q);
                }
            }
        }

        for (int k = 0; k < d; k++) {
            // X checks see Z-error strings running left to right; column 0 cuts them.
            layer.logical.push_back(
                static_cast<uint32_t>(type == CheckType::X ? k * d : k));
        }
    }
    return lat;
}

Coord Lattice::data_coord(uint32_t data_id) const {
    return {static_cast<int>(data_id) / distance_, static_cast<int>(data_id) % distance_};
}

std::vector<uint32_t> Lattice::same_type_neighbors(uint32_t ancilla_id) const {
    const CheckLayer &l = layer(ancilla(ancilla_id).type);
    std::vector<uint32_t> out;
    for (uint32_t k : l.neighbors[local_index(ancilla_id)]) {
        out.push_back(l.global_ids[k]);
    }
    return out;
}

std::optional<uint32_t> Lattice::shared_qubit(uint32_t a, uint32_t b) const {
    const Ancilla &aa = ancilla(a);
    const Ancilla &bb = ancilla(b);
    if (aa.type != bb.type) {
        return std::nullopt;
    }
    const CheckLayer &l = layer(aa.type);
    uint32_t la = local_index(a);
    uint32_t lb = local_index(b);
    for (size_t i = 0; i < l.neighbors[la].size(); i++) {
        if (l.neighbors[la][i] == lb) {
            return l.shared[la][i];
        }
    }
    return std::nullopt;
}

std::span<const uint32_t> Lattice::boundary_discharge(uint32_t ancilla_id) const {
    const CheckLayer &l = layer(ancilla(ancilla_id).type);
    return l.discharge[local_index(ancilla_id)];
}

Clique Lattice::clique_of(uint32_t ancilla_id) const {
    const CheckLayer &l = layer(ancilla(ancilla_id).type);
    uint32_t k = local_index(ancilla_id);
    Clique clique;
    clique.center = ancilla_id;
    for (size_t i = 0; i < l.neighbors[k].size(); i++) {
        clique.neighbors.push_back(l.global_ids[l.neighbors[k][i]]);
        clique.shared_qubits.push_back(l.shared[k][i]);
    }
    clique.discharge_qubits = l.discharge[k];
    return clique;
}

bool Lattice::operator==(const Lattice &other) const {
    if (distance_ != other.distance_ || ancillas_.size() != other.ancillas_.size()) {
        return false;
    }
    for (size_t i = 0; i < ancillas_.size(); i++) {
        const Ancilla &a = ancillas_[i];
        const Ancilla &b = other.ancillas_[i];
        if (a.id != b.id || a.type != b.type || !(a.plaquette == b.plaquette) || a.support != b.support) {
            return false;
        }
    }
    for (size_t t = 0; t < 2; t++) {
        const CheckLayer &a = layers_[t];
        const CheckLayer &b = other.layers_[t];
        if (a.neighbors != b.neighbors || a.shared != b.shared || a.discharge != b.discharge ||
            a.logical != b.logical) {
            return false;
        }
    }
    return true;
}

Bits syndrome_of(const Lattice &lattice, const Bits &data_errors, CheckType type) {
    if (data_errors.size() != lattice.num_data()) {
        throw std::invalid_argument("error vector length does not match the number of data qubits");
    }
    const CheckLayer &l = lattice.layer(type);
    Bits out(l.size(), 0);
    for (size_t q = 0; q < data_errors.size(); q++) {
        if (data_errors[q]) {
            for (int32_t k : l.data_checks[q]) {
                if (k >= 0) {
                    out[k] ^= 1;
                }
            }
        }
    }
    return out;
}

Bits syndrome_of(const Lattice &lattice, std::span<const uint32_t> error_ids, CheckType type) {
    Bits errors(lattice.num_data(), 0);
    for (uint32_t q : error_ids) {
        if (q >= errors.size()) {
            throw std::invalid_argument("data qubit id out of range: " + std::to_string(q));
        }
        errors[q] ^= 1;
    }
    return syndrome_of(lattice, errors, type);
}

bool logical_flip(const Lattice &lattice, const Bits &data_errors, CheckType type) {
    uint8_t parity = 0;
    for (uint32_t q : lattice.logical_operator(type)) {
        parity ^= data_errors.at(q);
    }
    return parity != 0;
}

size_t popcount(const Bits &bits) {
    size_t n = 0;
    for (uint8_t b : bits) {
        n += b != 0;
    }
    return n;
}

}  // namespace btwc
