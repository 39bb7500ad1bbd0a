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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "btwc/parallel.h"
#include "btwc/rng.h"

namespace btwc {

namespace {

// Sub-stream tags keep coverage and LER noise disjoint under one root seed.
constexpr uint64_t kCoverageStream = 1;
constexpr uint64_t kLerStream = 2;
constexpr uint64_t kLerChunk = 1024;

struct TypeStream {
    TypeStream(const Lattice &lattice, CheckType type, double p, uint64_t seed, uint64_t chunk)
        : lattice(lattice),
          params(NoiseParams::uniform(p, seed)),
          frame(ErrorFrame::empty(lattice, type)),
          rng(seed, {kCoverageStream, chunk, static_cast<uint64_t>(type)}) {
        last = step(lattice, frame, params, rng);
        prev = advance();
        curr = advance();
    }

    Bits advance() {
        SyndromeRound r = step(lattice, frame, params, rng);
        Bits f = xor_bits(r, last);
        last = std::move(r);
        return f;
    }

    const Lattice &lattice;
    NoiseParams params;
    ErrorFrame frame;
    RngStream rng;
    Bits last;
    Bits prev;
    Bits curr;
};

}  // namespace

void run_cycle_chunk(
    const Lattice &lattice, double p, uint64_t seed, uint64_t chunk, uint64_t count,
    const std::function<void(const CycleRecord &)> &visit) {
    NoiseParams::uniform(p).validate();
    // Two rounds of warm-up give the first visited cycle a stationary past.
    TypeStream x(lattice, CheckType::X, p, seed, chunk);
    TypeStream z(lattice, CheckType::Z, p, seed, chunk);
    std::array<TypeStream *, 2> streams{&x, &z};
    for (uint64_t c = 0; c < count; c++) {
        std::array<EffectiveSyndrome, 2> eff;
        std::array<TriageOutcome, 2> outcome;
        std::array<Bits, 2> next;
        for (size_t k = 0; k < 2; k++) {
            TypeStream &s = *streams[k];
            next[k] = s.advance();
            eff[k] = filter_rounds(s.prev, s.curr, next[k]);
            outcome[k] = triage(lattice, eff[k].bits, kCheckTypes[k]);
        }
        CycleRecord rec{
            chunk * kCycleChunk + c,
            {&x.curr, &z.curr},
            {&eff[0], &eff[1]},
            {&outcome[0], &outcome[1]}};
        visit(rec);
        for (size_t k = 0; k < 2; k++) {
            streams[k]->prev = std::move(streams[k]->curr);
            streams[k]->curr = std::move(next[k]);
        }
    }
}

void ClassCounts::add(TriageClass cls) {
    switch (cls) {
        case TriageClass::AllZero:
            all0++;
            break;
        case TriageClass::Trivial:
            local1++;
            break;
        case TriageClass::Complex:
            complex++;
            break;
    }
}

void ClassCounts::merge(const ClassCounts &other) {
    all0 += other.all0;
    local1 += other.local1;
    complex += other.complex;
}

double ClassCounts::fraction(TriageClass cls) const {
    uint64_t n = total();
    if (n == 0) {
        return 0;
    }
    uint64_t k = cls == TriageClass::AllZero ? all0 : cls == TriageClass::Trivial ? local1 : complex;
    return static_cast<double>(k) / static_cast<double>(n);
}

double ClassCounts::coverage() const {
    uint64_t n = total();
    return n == 0 ? 0 : static_cast<double>(all0 + local1) / static_cast<double>(n);
}

CoverageStats classify_cycles(
    int distance, double p, uint64_t cycles, uint64_t seed, unsigned threads,
    std::vector<uint8_t> *per_cycle_complex) {
    if (cycles < 1) {
        throw std::invalid_argument("classify_cycles: need at least one cycle");
    }
    Lattice lattice = Lattice::build(distance);
    uint64_t chunks = (cycles + kCycleChunk - 1) / kCycleChunk;
    std::vector<CoverageStats> partial(chunks);
    std::vector<std::vector<uint8_t>> traces(per_cycle_complex ? chunks : 0);

    parallel_for(chunks, threads, [&](size_t chunk) {
        uint64_t count = std::min<uint64_t>(kCycleChunk, cycles - chunk * kCycleChunk);
        CoverageStats &s = partial[chunk];
        run_cycle_chunk(lattice, p, seed, chunk, count, [&](const CycleRecord &rec) {
            TriageClass cls = rec.combined();
            s.combined.add(cls);
            for (size_t k = 0; k < 2; k++) {
                s.per_type[k].add(rec.outcome[k]->cls);
                s.cancelled_pairs += rec.effective[k]->cancelled_pairs;
            }
            if (per_cycle_complex) {
                traces[chunk].push_back(cls == TriageClass::Complex);
            }
        });
    });

    CoverageStats out;
    out.distance = distance;
    out.p = p;
    out.seed = seed;
    out.cycles = cycles;
    for (uint64_t chunk = 0; chunk < chunks; chunk++) {
        out.combined.merge(partial[chunk].combined);
        for (size_t k = 0; k < 2; k++) {
            out.per_type[k].merge(partial[chunk].per_type[k]);
        }
        out.cancelled_pairs += partial[chunk].cancelled_pairs;
    }
    if (per_cycle_complex) {
        per_cycle_complex->clear();
        per_cycle_complex->reserve(cycles);
        for (const auto &t : traces) {
            per_cycle_complex->insert(per_cycle_complex->end(), t.begin(), t.end());
        }
    }
    return out;
}

std::string_view to_string(DecoderMode mode) {
    return mode == DecoderMode::Baseline ? "baseline" : "clique+baseline";
}

DecoderMode parse_decoder_mode(std::string_view text) {
    if (text == "baseline") {
        return DecoderMode::Baseline;
    }
    if (text == "clique+baseline" || text == "clique") {
        return DecoderMode::CliquePlusBaseline;
    }
    throw std::invalid_argument("unknown decoder mode '" + std::string(text) + "'");
}

BlockDecode decode_block(const MatchingDecoder &decoder, const NoisyBlock &block, DecoderMode mode) {
    const Lattice &lattice = decoder.lattice();
    const CheckType type = decoder.type();
    const size_t n = lattice.layer(type).size();
    if (block.final_frame.type != type) {
        throw std::invalid_argument("block type does not match the decoder");
    }
    std::vector<Bits> flips = detection_events(block.rounds);
    const size_t rounds = flips.size();

    BlockDecode out;
    for (const Bits &f : flips) {
        out.defects += popcount(f);
    }
    std::vector<Bits> pending = flips;
    Bits mask(lattice.num_data(), 0);

    if (mode == DecoderMode::CliquePlusBaseline) {
        const Bits zero(n, 0);
        for (size_t t = 0; t < rounds; t++) {
            const Bits &prev = t > 0 ? flips[t - 1] : zero;
            const Bits &next = t + 1 < rounds ? flips[t + 1] : zero;
            // Vertical pairs are readout errors; a run is paired off from its
            // start so every defect joins at most one pair.
            if (t + 1 < rounds) {
                for (size_t a = 0; a < n; a++) {
                    if (pending[t][a] && pending[t + 1][a]) {
                        pending[t][a] = pending[t + 1][a] = 0;
                        out.cancelled_defects += 2;
                    }
                }
            }
            EffectiveSyndrome eff = filter_rounds(prev, flips[t], next);
            TriageOutcome outcome = triage(lattice, eff.bits, type);
            if (outcome.cls != TriageClass::Trivial) {
                continue;
            }
            for (size_t a = 0; a < n; a++) {
                if (eff.bits[a]) {
                    pending[t][a] = 0;
                    out.clique_defects++;
                }
            }
            for (uint32_t q : outcome.corrections) {
                mask[q] ^= 1;
            }
            out.clique_corrections.insert(
                out.clique_corrections.end(), outcome.corrections.begin(), outcome.corrections.end());
        }
    }

    std::vector<Defect> forwarded;
    for (size_t t = 0; t < rounds; t++) {
        for (size_t a = 0; a < n; a++) {
            if (pending[t][a]) {
                forwarded.push_back({static_cast<uint32_t>(a), static_cast<int32_t>(t)});
            }
        }
    }
    out.forwarded_defects = forwarded.size();
    if (out.clique_defects + out.cancelled_defects + out.forwarded_defects != out.defects) {
        throw std::logic_error("defect bookkeeping does not balance");
    }
    if (!forwarded.empty()) {
        out.forwarded = true;
        MatchingResult m = decoder.decode(forwarded);
        for (uint32_t q : m.corrections) {
            mask[q] ^= 1;
        }
        out.matching_corrections = std::move(m.corrections);
    }

    Bits residual = xor_bits(block.final_frame.data_errors, mask);
    if (popcount(syndrome_of(lattice, residual, type)) != 0) {
        throw std::logic_error("corrections leave a nonzero final syndrome");
    }
    out.logical_failure = logical_flip(lattice, residual, type);
    return out;
}

WilsonInterval wilson_interval(uint64_t k, uint64_t n, double z) {
    if (k > n) {
        throw std::invalid_argument("wilson_interval: more successes than trials");
    }
    if (n == 0) {
        return {0, 1};
    }
    double nn = static_cast<double>(n);
    double phat = static_cast<double>(k) / nn;
    double z2 = z * z;
    double denom = 1 + z2 / nn;
    double center = (phat + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / denom;
    // The bounds are exact at the extremes; rounding would otherwise leave
    // a spurious 1e-19 above zero.
    double lo = k == 0 ? 0.0 : std::max(0.0, center - half);
    double hi = k == n ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

LerResult estimate_ler(int distance, double p, uint64_t trials, DecoderMode mode, uint64_t seed, unsigned threads) {
    if (trials < 1) {
        throw std::invalid_argument("estimate_ler: need at least one trial");
    }
    NoiseParams::uniform(p).validate();
    Lattice lattice = Lattice::build(distance);
    MatchingDecoder decoder(lattice, CheckType::X);
    NoiseParams params = NoiseParams::uniform(p, seed);

    uint64_t chunks = (trials + kLerChunk - 1) / kLerChunk;
    std::vector<uint64_t> failures(chunks, 0);
    std::vector<uint64_t> forwarded(chunks, 0);
    parallel_for(chunks, threads, [&](size_t chunk) {
        uint64_t end = std::min<uint64_t>(trials, (chunk + 1) * kLerChunk);
        for (uint64_t trial = chunk * kLerChunk; trial < end; trial++) {
            RngStream rng(seed, {kLerStream, trial});
            NoisyBlock block = run_block(lattice, CheckType::X, params, distance, true, rng);
            BlockDecode r = decode_block(decoder, block, mode);
            failures[chunk] += r.logical_failure;
            forwarded[chunk] += r.forwarded;
        }
    });

    LerResult out;
    out.distance = distance;
    out.p = p;
    out.mode = mode;
    out.trials = trials;
    for (uint64_t chunk = 0; chunk < chunks; chunk++) {
        out.logical_failures += failures[chunk];
        out.forwarded_blocks += forwarded[chunk];
    }
    out.ler = static_cast<double>(out.logical_failures) / static_cast<double>(trials);
    out.wilson_ci = wilson_interval(out.logical_failures, trials);
    return out;
}

}  // namespace btwc
