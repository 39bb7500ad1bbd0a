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

#include "btwc/compression.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "btwc/montecarlo.h"
#include "btwc/parallel.h"

namespace btwc {

namespace {

uint64_t ceil_log2(uint64_t n) {
    uint64_t bits = 0;
    while ((uint64_t{1} << bits) < n) {
        bits++;
    }
    return bits;
}

double ratio_or_inf(double num, double den) {
    return den == 0 ? std::numeric_limits<double>::infinity() : num / den;
}

}  // namespace

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::Raw:
            return "raw";
        case Scheme::Afs:
            return "afs";
        case Scheme::CliqueBtwc:
            return "clique";
    }
    return "?";
}

uint64_t afs_bits(uint64_t n, uint64_t k) {
    if (n < 1) {
        throw std::invalid_argument("afs_bits: empty syndrome");
    }
    if (k > n) {
        throw std::invalid_argument("afs_bits: more set bits than syndrome bits");
    }
    return k == 0 ? 1 : 1 + k * ceil_log2(n);
}

uint64_t afs_bits(const Bits &syndrome) {
    return afs_bits(syndrome.size(), popcount(syndrome));
}

uint64_t clique_bits(TriageClass cls, uint64_t n_window) {
    return cls == TriageClass::Complex ? n_window : 0;
}

uint64_t window_bits(int distance, int rounds) {
    uint64_t d = static_cast<uint64_t>(distance);
    return (d * d - 1) * static_cast<uint64_t>(rounds);
}

CompressionComparison compare(int distance, double p, uint64_t cycles, uint64_t seed, unsigned threads) {
    if (cycles < 1) {
        throw std::invalid_argument("compare: need at least one cycle");
    }
    Lattice lattice = Lattice::build(distance);
    const uint64_t n = lattice.num_ancillas();
    const uint64_t n_window = window_bits(distance, distance);

    // Same chunking and sub-streams as classify_cycles, so a shared seed gives
    // identical cycles.
    uint64_t chunks = (cycles + kCycleChunk - 1) / kCycleChunk;
    std::vector<uint64_t> afs_total(chunks, 0);
    std::vector<uint64_t> clique_total(chunks, 0);
    std::vector<uint64_t> complex_total(chunks, 0);
    parallel_for(chunks, threads, [&](size_t chunk) {
        uint64_t count = std::min<uint64_t>(kCycleChunk, cycles - chunk * kCycleChunk);
        run_cycle_chunk(lattice, p, seed, chunk, count, [&](const CycleRecord &rec) {
            uint64_t k = popcount(*rec.flips[0]) + popcount(*rec.flips[1]);
            afs_total[chunk] += afs_bits(n, k);
            TriageClass cls = rec.combined();
            clique_total[chunk] += clique_bits(cls, n_window);
            complex_total[chunk] += cls == TriageClass::Complex;
        });
    });

    uint64_t afs_sum = 0;
    uint64_t clique_sum = 0;
    uint64_t complex_sum = 0;
    for (uint64_t c = 0; c < chunks; c++) {
        afs_sum += afs_total[c];
        clique_sum += clique_total[c];
        complex_sum += complex_total[c];
    }
    const double cyc = static_cast<double>(cycles);
    CompressionComparison out;
    out.distance = distance;
    out.p = p;
    out.cycles = cycles;
    out.seed = seed;
    out.raw_bits = static_cast<double>(n);
    out.afs = {Scheme::Afs, afs_sum / cyc, 0};
    out.afs.reduction_vs_raw = ratio_or_inf(out.raw_bits, out.afs.avg_bits_per_cycle);
    out.clique = {Scheme::CliqueBtwc, clique_sum / cyc, 0};
    out.clique.reduction_vs_raw = ratio_or_inf(out.raw_bits, out.clique.avg_bits_per_cycle);
    out.ratio = ratio_or_inf(out.afs.avg_bits_per_cycle, out.clique.avg_bits_per_cycle);
    out.frac_complex = complex_sum / cyc;
    return out;
}

}  // namespace btwc
