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

#ifndef BTWC_BANDWIDTH_H
#define BTWC_BANDWIDTH_H

#include <cstdint>
#include <vector>

namespace btwc {

/// Per-cycle off-chip decode demand of L logical qubits. In Bernoulli mode each
/// qubit independently requests with probability q; in trace mode `trace`
/// gives the request count of each cycle and overrides q.
struct DemandModel {
    uint32_t num_qubits = 1000;
    double q_complex = 0.05;
    std::vector<uint32_t> trace;

    bool trace_mode() const {
        return !trace.empty();
    }
    double mean() const;
    void validate() const;
};

/// Per-cycle request counts of `num_qubits` independent logical qubits, each
/// drawn from its own combined-Complex coverage stream at (distance, p).
DemandModel demand_from_montecarlo(
    int distance, double p, uint32_t num_qubits, uint64_t cycles, uint64_t seed, unsigned threads = 1);

/// Smallest B with P(new requests <= B) >= percentile/100. Bernoulli mode uses
/// the exact binomial distribution; trace mode the empirical distribution of
/// the first `sample_cycles` trace entries (all entries if 0).
uint32_t percentile_provision(const DemandModel &model, double percentile, uint64_t sample_cycles = 0);

/// `carryover` is the backlog entering the cycle; a cycle is a stall iff it
/// enters with backlog.
struct CycleTrace {
    uint64_t cycle;
    uint32_t new_requests;
    uint64_t carryover;
    uint64_t served;
    bool is_stall;
};

struct BandwidthSummary {
    uint32_t provisioned_b = 0;
    uint64_t cycles = 0;
    uint64_t stall_cycles = 0;
    uint64_t work_cycles = 0;
    uint64_t total_generated = 0;
    uint64_t total_served = 0;
    uint64_t max_backlog = 0;
    uint64_t final_backlog = 0;
    double stall_fraction = 0;
    /// stall_cycles / work_cycles; infinite when no work cycle completes.
    double exec_time_overhead = 0;
};

struct BandwidthTrace {
    std::vector<CycleTrace> cycles;
    BandwidthSummary summary;
};

/// FIFO backlog under a per-cycle service budget of B requests. Every cycle,
/// stall or not, generates fresh demand. With `keep_cycles` false only the
/// summary is filled.
BandwidthTrace simulate(const DemandModel &model, uint32_t b, uint64_t cycles, uint64_t seed, bool keep_cycles = true);

/// Stall counts of consecutive `window`-cycle windows starting at `from`.
std::vector<uint32_t> stalls_per_window(const BandwidthTrace &trace, uint64_t window, uint64_t from = 0);

struct TradeoffPoint {
    double percentile;
    uint32_t provisioned_b;
    /// Bandwidth of shipping every qubit's window every cycle over B windows.
    double bandwidth_reduction;
    double exec_time_increase;
    double stall_fraction;
};

/// One point per percentile, all simulated on the same demand stream.
std::vector<TradeoffPoint> tradeoff_curve(
    const DemandModel &model, const std::vector<double> &percentile_grid, uint64_t cycles, uint64_t seed);

/// Largest reduction among points whose execution-time increase is at most
/// `max_increase`; 0 if none qualifies.
double best_reduction_within(const std::vector<TradeoffPoint> &curve, double max_increase);

}  // namespace btwc

#endif
