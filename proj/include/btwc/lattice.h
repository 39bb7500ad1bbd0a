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

#ifndef BTWC_LATTICE_H
#define BTWC_LATTICE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace btwc {

/// One bit per element, stored as 0/1 bytes. Used for data-qubit error frames,
/// syndrome rounds and detection-event vectors.
using Bits = std::vector<uint8_t>;

/// Stabilizer flavour of an ancilla. X checks detect Z errors and vice versa.
enum class CheckType : uint8_t { X = 0, Z = 1 };

constexpr std::array<CheckType, 2> kCheckTypes{CheckType::X, CheckType::Z};

std::string_view to_string(CheckType type);

struct Coord {
    int row;
    int col;
    bool operator==(const Coord &) const = default;
};

/// A stabilizer measured by one ancilla. `plaquette` is the top-left data corner
/// of the covered 2x2 block; boundary plaquettes have row or column -1 or d-1.
struct Ancilla {
    uint32_t id;
    CheckType type;
    Coord plaquette;
    std::vector<uint32_t> support;
};

/// The local decoding unit: an ancilla plus its same-type neighbours.
/// `shared_qubits[i]` is the data qubit shared with `neighbors[i]`.
struct Clique {
    uint32_t center;
    std::vector<uint32_t> neighbors;
    std::vector<uint32_t> shared_qubits;
    std::vector<uint32_t> discharge_qubits;

    size_t size() const {
        return neighbors.size();
    }
};

/// Per-type adjacency tables. Ancillas are addressed by their index within the
/// layer ("local" index), which is also the bit position in syndrome vectors.
struct CheckLayer {
    CheckType type;
    std::vector<uint32_t> global_ids;
    std::vector<std::vector<uint32_t>> support;
    std::vector<std::vector<uint32_t>> neighbors;
    std::vector<std::vector<uint32_t>> shared;
    std::vector<std::vector<uint32_t>> discharge;
    // Data qubit -> layer-local checks containing it (at most two, -1 if absent).
    std::vector<std::array<int32_t, 2>> data_checks;
    std::vector<uint32_t> logical;

    size_t size() const {
        return global_ids.size();
    }
};

/// Distance-d rotated surface code.
///
/// Data qubit (i, j) has id i*d + j. Stabilizers sit on plaquettes; the weight-4
/// plaquettes follow a checkerboard (row+col even is X), X weight-2 plaquettes
/// lie on the top and bottom edges and Z weight-2 plaquettes on the left and
/// right edges. Immutable after construction.
class Lattice {
   public:
    static Lattice build(int distance);

    int distance() const {
        return distance_;
    }
    size_t num_data() const {
        return static_cast<size_t>(distance_) * static_cast<size_t>(distance_);
    }
    size_t num_ancillas() const {
        return ancillas_.size();
    }
    Coord data_coord(uint32_t data_id) const;

    std::span<const Ancilla> ancillas() const {
        return ancillas_;
    }
    const Ancilla &ancilla(uint32_t id) const {
        return ancillas_.at(id);
    }

    const CheckLayer &layer(CheckType type) const {
        return layers_[static_cast<size_t>(type)];
    }
    /// Position of a global ancilla id inside its type's layer.
    uint32_t local_index(uint32_t ancilla_id) const {
        return local_index_.at(ancilla_id);
    }

    /// Global ids of same-type ancillas sharing exactly one data qubit.
    std::vector<uint32_t> same_type_neighbors(uint32_t ancilla_id) const;
    std::optional<uint32_t> shared_qubit(uint32_t a, uint32_t b) const;
    /// Support qubits of `ancilla_id` that belong to no other same-type support.
    std::span<const uint32_t> boundary_discharge(uint32_t ancilla_id) const;
    /// Data qubits whose overlap parity with a residual error flags a logical
    /// flip for errors detected by checks of `type`.
    std::span<const uint32_t> logical_operator(CheckType type) const {
        return layer(type).logical;
    }

    Clique clique_of(uint32_t ancilla_id) const;

    bool operator==(const Lattice &other) const;

   private:
    int distance_ = 0;
    std::vector<Ancilla> ancillas_;
    std::vector<uint32_t> local_index_;
    std::array<CheckLayer, 2> layers_;
};

/// Parity of |support(a) ∩ errors| for each check of `type`, indexed by layer
/// position. `data_errors` has one entry per data qubit.
Bits syndrome_of(const Lattice &lattice, const Bits &data_errors, CheckType type);
Bits syndrome_of(const Lattice &lattice, std::span<const uint32_t> error_ids, CheckType type);

/// Parity of the overlap between a data-qubit error vector and the logical
/// operator for `type`.
bool logical_flip(const Lattice &lattice, const Bits &data_errors, CheckType type);

size_t popcount(const Bits &bits);

}  // namespace btwc

#endif
