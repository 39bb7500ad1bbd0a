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

#ifndef BTWC_NOISE_H
#define BTWC_NOISE_H

#include <cstdint>
#include <vector>

#include "btwc/lattice.h"
#include "btwc/rng.h"

namespace btwc {

/// Phenomenological noise: independent data flips and readout flips per cycle.
struct NoiseParams {
    double p_data = 0;
    double p_meas = 0;
    uint64_t seed = 0;

    /// Single-parameter model, p_meas = p_data = p.
    static NoiseParams uniform(double p, uint64_t seed = 0) {
        return {p, p, seed};
    }
    void validate() const;
};

/// Error state of one logical qubit for one Pauli flavour (the one detected by
/// checks of `type`). Data errors accumulate by XOR; readout errors only live
/// for the round in which they were drawn.
struct ErrorFrame {
    CheckType type = CheckType::X;
    Bits data_errors;
    Bits meas_errors;

    static ErrorFrame empty(const Lattice &lattice, CheckType type);
};

using SyndromeRound = Bits;

/// One noisy cycle: flip data qubits with p_data, then read out every check of
/// the frame's type with readout flips at p_meas.
SyndromeRound step(const Lattice &lattice, ErrorFrame &frame, const NoiseParams &params, RngStream &rng);

struct NoisyBlock {
    std::vector<SyndromeRound> rounds;
    ErrorFrame final_frame;
};

/// `rounds` noisy cycles from an empty frame, plus one readout-perfect cycle
/// when `perfect_final` is set.
NoisyBlock run_block(
    const Lattice &lattice, CheckType type, const NoiseParams &params, int rounds, bool perfect_final,
    RngStream &rng);
NoisyBlock run_block(const Lattice &lattice, CheckType type, const NoiseParams &params, int rounds, bool perfect_final);

/// Element-wise XOR of two equal-length vectors.
Bits xor_bits(const Bits &a, const Bits &b);

/// Detection events of a block: flips[t] = rounds[t] ^ rounds[t-1], with an
/// all-zero round before the first.
std::vector<Bits> detection_events(const std::vector<SyndromeRound> &rounds);

}  // namespace btwc

#endif
