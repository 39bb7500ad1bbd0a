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

#ifndef BTWC_MONTECARLO_H
#define BTWC_MONTECARLO_H

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "btwc/clique_decoder.h"
#include "btwc/lattice.h"
#include "btwc/matching_decoder.h"
#include "btwc/noise.h"

namespace btwc {

/// Cycles per independently seeded chunk of a continuous noise stream.
constexpr uint64_t kCycleChunk = 4096;

/// One decode cycle of a logical qubit, both check types side by side.
struct CycleRecord {
    uint64_t cycle;
    std::array<const Bits *, 2> flips;
    std::array<const EffectiveSyndrome *, 2> effective;
    std::array<const TriageOutcome *, 2> outcome;

    TriageClass combined() const {
        return combine(outcome[0]->cls, outcome[1]->cls);
    }
};

/// Streams `count` stationary decode cycles of chunk `chunk` through the
/// persistence filter and triage, calling visit() once per cycle in order.
/// The chunk's noise is drawn from its own sub-stream of `seed`.
void run_cycle_chunk(
    const Lattice &lattice, double p, uint64_t seed, uint64_t chunk, uint64_t count,
    const std::function<void(const CycleRecord &)> &visit);

struct ClassCounts {
    uint64_t all0 = 0;
    uint64_t local1 = 0;
    uint64_t complex = 0;

    void add(TriageClass cls);
    void merge(const ClassCounts &other);
    uint64_t total() const {
        return all0 + local1 + complex;
    }
    double fraction(TriageClass cls) const;
    /// Fraction of cycles resolved without the off-chip decoder.
    double coverage() const;
};

struct CoverageStats {
    int distance = 0;
    double p = 0;
    uint64_t seed = 0;
    uint64_t cycles = 0;
    /// Per cycle, X and Z verdicts merged (Complex if either is).
    ClassCounts combined;
    std::array<ClassCounts, 2> per_type;
    uint64_t cancelled_pairs = 0;

    double frac_all0() const {
        return combined.fraction(TriageClass::AllZero);
    }
    double frac_local1() const {
        return combined.fraction(TriageClass::Trivial);
    }
    double frac_complex() const {
        return combined.fraction(TriageClass::Complex);
    }
    double coverage() const {
        return combined.coverage();
    }
};

/// Signature-class distribution over `cycles` decode cycles. When
/// `per_cycle_complex` is given it receives one 0/1 entry per cycle marking
/// combined Complex verdicts. The result does not depend on `threads`.
CoverageStats classify_cycles(
    int distance, double p, uint64_t cycles, uint64_t seed, unsigned threads = 1,
    std::vector<uint8_t> *per_cycle_complex = nullptr);

enum class DecoderMode : uint8_t { Baseline = 0, CliquePlusBaseline = 1 };

std::string_view to_string(DecoderMode mode);
DecoderMode parse_decoder_mode(std::string_view text);

/// How one block was decoded. Defect accounting: every detection event is
/// either corrected by the clique decoder, cancelled as a readout pair, or
/// forwarded to matching.
struct BlockDecode {
    bool logical_failure = false;
    bool forwarded = false;
    uint64_t defects = 0;
    uint64_t clique_defects = 0;
    uint64_t cancelled_defects = 0;
    uint64_t forwarded_defects = 0;
    std::vector<uint32_t> clique_corrections;
    std::vector<uint32_t> matching_corrections;
};

/// Decodes one block (rounds plus final frame) of checks of `decoder.type()`.
BlockDecode decode_block(const MatchingDecoder &decoder, const NoisyBlock &block, DecoderMode mode);

struct WilsonInterval {
    double lo;
    double hi;
};

/// Wilson score interval for k successes in n trials (z = 1.96 gives 95%).
WilsonInterval wilson_interval(uint64_t k, uint64_t n, double z = 1.959963984540054);

struct LerResult {
    int distance = 0;
    double p = 0;
    DecoderMode mode = DecoderMode::Baseline;
    uint64_t trials = 0;
    uint64_t logical_failures = 0;
    uint64_t forwarded_blocks = 0;
    double ler = 0;
    WilsonInterval wilson_ci{0, 0};
};

/// Logical failure rate per block of d noisy rounds plus one readout-perfect
/// round, for errors detected by X checks. Trial i uses the same noise in
/// both modes, so mode comparisons are paired.
LerResult estimate_ler(int distance, double p, uint64_t trials, DecoderMode mode, uint64_t seed, unsigned threads = 1);

}  // namespace btwc

#endif
