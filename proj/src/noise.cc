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

#include "btwc/noise.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace btwc {

void NoiseParams::validate() const {
    auto check = [](double p, const char *name) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
        }
    };
    check(p_data, "p_data");
    check(p_meas, "p_meas");
}

ErrorFrame ErrorFrame::empty(const Lattice &lattice, CheckType type) {
    ErrorFrame f;
    f.type = type;
    f.data_errors.assign(lattice.num_data(), 0);
    f.meas_errors.assign(lattice.layer(type).size(), 0);
    return f;
}

SyndromeRound step(const Lattice &lattice, ErrorFrame &frame, const NoiseParams &params, RngStream &rng) {
    const CheckLayer &layer = lattice.layer(frame.type);
    if (frame.data_errors.size() != lattice.num_data() || frame.meas_errors.size() != layer.size()) {
        throw std::invalid_argument("error frame does not match lattice dimensions");
    }
    rng.for_each_bernoulli(frame.data_errors.size(), params.p_data, [&](size_t q) {
        frame.data_errors[q] ^= 1;
    });
    std::fill(frame.meas_errors.begin(), frame.meas_errors.end(), 0);
    rng.for_each_bernoulli(frame.meas_errors.size(), params.p_meas, [&](size_t k) {
        frame.meas_errors[k] = 1;
    });
    SyndromeRound reported = syndrome_of(lattice, frame.data_errors, frame.type);
    for (size_t k = 0; k < reported.size(); k++) {
        reported[k] ^= frame.meas_errors[k];
    }
    return reported;
}

NoisyBlock run_block(
    const Lattice &lattice, CheckType type, const NoiseParams &params, int rounds, bool perfect_final,
    RngStream &rng) {
    if (rounds < 1) {
        throw std::invalid_argument("a block needs at least one round");
    }
    params.validate();
    NoisyBlock block;
    block.final_frame = ErrorFrame::empty(lattice, type);
    for (int t = 0; t < rounds; t++) {
        block.rounds.push_back(step(lattice, block.final_frame, params, rng));
    }
    if (perfect_final) {
        NoiseParams last = params;
        last.p_meas = 0;
        block.rounds.push_back(step(lattice, block.final_frame, last, rng));
    }
    return block;
}

NoisyBlock run_block(const Lattice &lattice, CheckType type, const NoiseParams &params, int rounds, bool perfect_final) {
    RngStream rng(params.seed, {static_cast<uint64_t>(type)});
    return run_block(lattice, type, params, rounds, perfect_final, rng);
}

Bits xor_bits(const Bits &a, const Bits &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("xor_bits: length mismatch");
    }
    Bits out(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        out[i] = a[i] ^ b[i];
    }
    return out;
}

std::vector<Bits> detection_events(const std::vector<SyndromeRound> &rounds) {
    std::vector<Bits> flips;
    flips.reserve(rounds.size());
    for (size_t t = 0; t < rounds.size(); t++) {
        flips.push_back(t == 0 ? rounds[0] : xor_bits(rounds[t], rounds[t - 1]));
    }
    return flips;
}

}  // namespace btwc
