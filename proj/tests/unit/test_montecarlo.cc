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

#include "btwc/montecarlo.h"

#include <gtest/gtest.h>

#include <cmath>

namespace btwc {
namespace {

void expect_same(const ClassCounts &a, const ClassCounts &b) {
    EXPECT_EQ(a.all0, b.all0);
    EXPECT_EQ(a.local1, b.local1);
    EXPECT_EQ(a.complex, b.complex);
}

TEST(Coverage, NoiselessStreamIsAllZero) {
    for (int d : {3, 5, 11}) {
        CoverageStats s = classify_cycles(d, 0.0, 5000, 1);
        EXPECT_EQ(s.cycles, 5000u);
        EXPECT_EQ(s.combined.all0, 5000u);
        EXPECT_DOUBLE_EQ(s.frac_all0(), 1.0);
        EXPECT_DOUBLE_EQ(s.coverage(), 1.0);
        EXPECT_EQ(s.cancelled_pairs, 0u);
    }
}

TEST(Coverage, FractionsPartitionTheCycles) {
    CoverageStats s = classify_cycles(7, 5e-3, 9000, 4);
    EXPECT_EQ(s.combined.total(), 9000u);
    EXPECT_NEAR(s.frac_all0() + s.frac_local1() + s.frac_complex(), 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(s.coverage(), 1.0 - s.frac_complex());
    for (const ClassCounts &c : s.per_type) {
        EXPECT_EQ(c.total(), 9000u);
        // A combined verdict is Complex whenever either type is.
        EXPECT_LE(c.complex, s.combined.complex);
    }
    EXPECT_GT(s.cancelled_pairs, 0u);
}

TEST(Coverage, IndependentOfThreadCount) {
    // Crosses several chunk boundaries, with a partial last chunk.
    const uint64_t cycles = 3 * kCycleChunk + 123;
    CoverageStats one = classify_cycles(5, 1e-2, cycles, 17, 1);
    CoverageStats three = classify_cycles(5, 1e-2, cycles, 17, 3);
    expect_same(one.combined, three.combined);
    expect_same(one.per_type[0], three.per_type[0]);
    expect_same(one.per_type[1], three.per_type[1]);
    EXPECT_EQ(one.cancelled_pairs, three.cancelled_pairs);
    CoverageStats other_seed = classify_cycles(5, 1e-2, cycles, 18, 1);
    EXPECT_NE(one.combined.complex, other_seed.combined.complex);
}

TEST(Coverage, PerCycleFlagsAgreeWithCounts) {
    std::vector<uint8_t> flags;
    CoverageStats s = classify_cycles(5, 1e-2, 10000, 2, 2, &flags);
    ASSERT_EQ(flags.size(), 10000u);
    uint64_t sum = 0;
    for (uint8_t f : flags) {
        sum += f;
    }
    EXPECT_EQ(sum, s.combined.complex);
}

TEST(Coverage, ChunkStreamReplaysTheClassification) {
    Lattice lat = Lattice::build(5);
    ClassCounts tally;
    uint64_t expected_cycle = 0;
    run_cycle_chunk(lat, 5e-3, 9, 0, 2000, [&](const CycleRecord &r) {
        EXPECT_EQ(r.cycle, expected_cycle++);
        for (int t = 0; t < 2; t++) {
            TriageOutcome again = triage(lat, *r.effective[t], kCheckTypes[t]);
            EXPECT_EQ(again.cls, r.outcome[t]->cls);
        }
        tally.add(r.combined());
    });
    CoverageStats s = classify_cycles(5, 5e-3, 2000, 9);
    expect_same(tally, s.combined);
}

// The parity rule is at least as strict as the reference classifier on a real
// noise stream: whatever the reference cannot explain, the triage flags too.
TEST(Coverage, ReferenceComplexCyclesAreFlagged) {
    Lattice lat = Lattice::build(5);
    uint64_t oracle_complex = 0;
    uint64_t flagged = 0;
    for (uint64_t chunk = 0; chunk < 25; chunk++) {
        run_cycle_chunk(lat, 1e-3, 1, chunk, kCycleChunk, [&](const CycleRecord &r) {
            TriageClass ref = combine(
                triage_oracle(lat, r.effective[0]->bits, CheckType::X),
                triage_oracle(lat, r.effective[1]->bits, CheckType::Z));
            if (ref == TriageClass::Complex) {
                oracle_complex++;
                flagged += r.combined() == TriageClass::Complex;
            }
            if (r.combined() == TriageClass::AllZero) {
                EXPECT_EQ(ref, TriageClass::AllZero);
            }
        });
    }
    EXPECT_GT(oracle_complex, 10u);
    EXPECT_EQ(flagged, oracle_complex);
}

TEST(Ler, NoiselessBlocksNeverFail) {
    for (DecoderMode mode : {DecoderMode::Baseline, DecoderMode::CliquePlusBaseline}) {
        LerResult r = estimate_ler(5, 0.0, 2000, mode, 1);
        EXPECT_EQ(r.trials, 2000u);
        EXPECT_EQ(r.logical_failures, 0u);
        EXPECT_EQ(r.ler, 0.0);
        EXPECT_EQ(r.forwarded_blocks, 0u);
        EXPECT_EQ(r.wilson_ci.lo, 0.0);
        EXPECT_GT(r.wilson_ci.hi, 0.0);
    }
}

TEST(Ler, IndependentOfThreadCount) {
    for (DecoderMode mode : {DecoderMode::Baseline, DecoderMode::CliquePlusBaseline}) {
        LerResult a = estimate_ler(3, 2e-2, 3000, mode, 5, 1);
        LerResult b = estimate_ler(3, 2e-2, 3000, mode, 5, 3);
        EXPECT_EQ(a.logical_failures, b.logical_failures);
        EXPECT_EQ(a.forwarded_blocks, b.forwarded_blocks);
        EXPECT_GT(a.logical_failures, 0u);
    }
}

TEST(Ler, BaselineForwardsEveryNonEmptyBlock) {
    LerResult r = estimate_ler(3, 1e-2, 2000, DecoderMode::Baseline, 3);
    LerResult c = estimate_ler(3, 1e-2, 2000, DecoderMode::CliquePlusBaseline, 3);
    EXPECT_LT(c.forwarded_blocks, r.forwarded_blocks);
}

TEST(DecodeBlock, AccountsForEveryDefect) {
    for (int d : {3, 5, 7}) {
        Lattice lat = Lattice::build(d);
        MatchingDecoder dec(lat, CheckType::X);
        RngStream rng(d);
        for (int trial = 0; trial < 400; trial++) {
            NoisyBlock block = run_block(lat, CheckType::X, NoiseParams::uniform(1e-2), d, true, rng);
            uint64_t events = 0;
            for (const Bits &f : detection_events(block.rounds)) {
                events += popcount(f);
            }
            for (DecoderMode mode : {DecoderMode::Baseline, DecoderMode::CliquePlusBaseline}) {
                BlockDecode r = decode_block(dec, block, mode);
                EXPECT_EQ(r.defects, events);
                EXPECT_EQ(r.defects, r.clique_defects + r.cancelled_defects + r.forwarded_defects);
                if (mode == DecoderMode::Baseline) {
                    EXPECT_EQ(r.clique_defects + r.cancelled_defects, 0u);
                    EXPECT_TRUE(r.clique_corrections.empty());
                }
                EXPECT_EQ(r.forwarded, r.forwarded_defects > 0);
                Bits residual = block.final_frame.data_errors;
                for (uint32_t q : r.clique_corrections) {
                    residual[q] ^= 1;
                }
                for (uint32_t q : r.matching_corrections) {
                    residual[q] ^= 1;
                }
                ASSERT_EQ(popcount(syndrome_of(lat, residual, CheckType::X)), 0u);
                EXPECT_EQ(r.logical_failure, logical_flip(lat, residual, CheckType::X));
            }
        }
    }
}

TEST(Wilson, KnownIntervals) {
    const double z = 1.959963984540054;
    WilsonInterval none = wilson_interval(0, 10);
    EXPECT_DOUBLE_EQ(none.lo, 0.0);
    EXPECT_NEAR(none.hi, z * z / (10 + z * z), 1e-12);
    WilsonInterval all = wilson_interval(10, 10);
    EXPECT_NEAR(all.hi, 1.0, 1e-12);
    WilsonInterval half = wilson_interval(5, 10);
    double half_width = z * std::sqrt(2.5 + z * z / 4) / (10 + z * z);
    EXPECT_NEAR(half.lo, 0.5 - half_width, 1e-12);
    EXPECT_NEAR(half.hi, 0.5 + half_width, 1e-12);
    EXPECT_THROW(wilson_interval(3, 2), std::invalid_argument);
}

TEST(Wilson, BracketsTheEstimate) {
    for (uint64_t n : {1u, 7u, 100u, 100000u}) {
        for (uint64_t k = 0; k <= n; k += std::max<uint64_t>(1, n / 13)) {
            WilsonInterval w = wilson_interval(k, n);
            double phat = static_cast<double>(k) / static_cast<double>(n);
            EXPECT_LE(w.lo, phat + 1e-12);
            EXPECT_GE(w.hi, phat - 1e-12);
            EXPECT_GE(w.lo, 0.0);
            EXPECT_LE(w.hi, 1.0);
        }
    }
}

TEST(DecoderMode, ParsesNames) {
    EXPECT_EQ(parse_decoder_mode("baseline"), DecoderMode::Baseline);
    EXPECT_EQ(parse_decoder_mode("clique+baseline"), DecoderMode::CliquePlusBaseline);
    EXPECT_EQ(to_string(DecoderMode::CliquePlusBaseline), "clique+baseline");
    EXPECT_THROW(parse_decoder_mode("mwpm"), std::invalid_argument);
}

}  // namespace
}  // namespace btwc
