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

#ifndef BTWC_COMPRESSION_H
#define BTWC_COMPRESSION_H

#include <cstdint>
#include <string_view>

#include "btwc/clique_decoder.h"
#include "btwc/lattice.h"

namespace btwc {

enum class Scheme : uint8_t { Raw, Afs, CliqueBtwc };

std::string_view to_string(Scheme scheme);

struct BitsAccount {
    Scheme scheme = Scheme::Raw;
    double avg_bits_per_cycle = 0;
    /// raw bits / avg bits; infinite when nothing is shipped.
    double reduction_vs_raw = 1;
};

/// Sparse representation size of an N-bit vector with k set bits: a single
/// flag bit when k = 0, else the flag plus k indices of ceil(log2 N) bits.
uint64_t afs_bits(uint64_t n, uint64_t k);
uint64_t afs_bits(const Bits &syndrome);

/// Bits shipped off-chip for one cycle: nothing unless the cycle is Complex,
/// in which case the whole raw window goes.
uint64_t clique_bits(TriageClass cls, uint64_t n_window);

/// Raw syndrome bits of one logical qubit over `rounds` rounds (both types).
uint64_t window_bits(int distance, int rounds);

struct CompressionComparison {
    int distance = 0;
    double p = 0;
    uint64_t cycles = 0;
    uint64_t seed = 0;
    /// Raw bits per cycle: one round of every check.
    double raw_bits = 0;
    BitsAccount afs;
    BitsAccount clique;
    /// afs / clique average bits; infinite when Clique ships nothing.
    double ratio = 0;
    double frac_complex = 0;
};

/// Accounts both schemes on the same decode-cycle stream. AFS compresses each
/// round's detection events over all d^2-1 checks; Clique ships a d-round raw
/// window on every Complex cycle.
CompressionComparison compare(int distance, double p, uint64_t cycles, uint64_t seed, unsigned threads = 1);

}  // namespace btwc

#endif
