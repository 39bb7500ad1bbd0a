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

#include "btwc/bandwidth.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "btwc/montecarlo.h"
#include "btwc/rng.h"

namespace btwc {

namespace {

constexpr uint64_t kBandwidthStream = 3;
constexpr uint64_t kDemandStream = 4;

}  // namespace

double DemandModel::mean() const {
    if (!trace_mode()) {
        return num_qubits * q_complex;
    }
    double sum = 0;
    for (uint32_t v : trace) {
        sum += v;
    }
    return sum / static_cast<double>(trace.size());
}

void DemandModel::validate() const {
    if (num_qubits < 1) {
        throw std::invalid_argument("num_qubits must be at least 1");
    }
    if (!(q_complex >= 0 && q_complex <= 1)) {
        throw std::invalid_argument("q_complex must lie in [0, 1], got " + std::to_string(q_complex));
    }
    for (uint32_t v : trace) {
        if (v > num_qubits) {
            throw std::invalid_argument("trace entry exceeds the number of logical qubits");
        }
    }
}

DemandModel demand_from_montecarlo(
    int distance, double p, uint32_t num_qubits, uint64_t cycles, uint64_t seed, unsigned threads) {
    DemandModel model;
    model.num_qubits = num_qubits;
    model.trace.assign(cycles, 0);
    std::vector<uint8_t> complex;
    for (uint32_t qubit = 0; qubit < num_qubits; qubit++) {
        uint64_t qubit_seed = mix64(mix64(seed ^ kDemandStream) + qubit);
        classify_cycles(distance, p, cycles, qubit_seed, threads, &complex);
        for (uint64_t c = 0; c < cycles; c++) {
            model.trace[c] += complex[c];
        }
    }
    model.q_complex = model.mean() / std::max<uint32_t>(1, num_qubits);
    return model;
}

uint32_t percentile_provision(const DemandModel &model, double percentile, uint64_t sample_cycles) {
    model.validate();
    if (!(percentile >= 0 && percentile <= 100)) {
        throw std::invalid_argument("percentile must lie in [0, 100], got " + std::to_string(percentile));
    }
    const double target = percentile / 100.0;
    if (model.trace_mode()) {
        uint64_t n = sample_cycles == 0 ? model.trace.size() : std::min<uint64_t>(sample_cycles, model.trace.size());
        std::vector<uint32_t> sorted(model.trace.begin(), model.trace.begin() + n);
        std::sort(sorted.begin(), sorted.end());
        // Smallest value whose empirical CDF reaches the target.
        uint64_t rank = static_cast<uint64_t>(std::ceil(target * static_cast<double>(n) - 1e-9));
        return sorted[rank == 0 ? 0 : rank - 1];
    }
    const uint32_t l = model.num_qubits;
    const double q = model.q_complex;
    if (percentile >= 100 || q >= 1) {
        return q <= 0 ? 0 : l;
    }
    if (q <= 0) {
        return 0;
    }
    const double log_q = std::log(q);
    const double log_1q = std::log1p(-q);
    const double log_norm = std::lgamma(l + 1.0);
    double cdf = 0;
    for (uint32_t k = 0; k <= l; k++) {
        double log_pmf = log_norm - std::lgamma(k + 1.0) - std::lgamma(l - k + 1.0) + k * log_q + (l - k) * log_1q;
        cdf += std::exp(log_pmf);
        if (cdf >= target - 1e-12) {
            return k;
        }
    }
    return l;
}

BandwidthTrace simulate(const DemandModel &model, uint32_t b, uint64_t cycles, uint64_t seed, bool keep_cycles) {
    model.validate();
    if (cycles < 1) {
        throw std::invalid_argument("simulate: need at least one cycle");
    }
    if (model.trace_mode() && model.trace.size() < cycles) {
        throw std::invalid_argument("demand trace is shorter than the simulated horizon");
    }
    RngStream rng(seed, {kBandwidthStream});
    std::binomial_distribution<uint32_t> demand(model.num_qubits, model.q_complex);

    BandwidthTrace out;
    BandwidthSummary &s = out.summary;
    s.provisioned_b = b;
    s.cycles = cycles;
    if (keep_cycles) {
        out.cycles.reserve(cycles);
    }
    uint64_t backlog = 0;
    for (uint64_t t = 0; t < cycles; t++) {
        uint32_t fresh = model.trace_mode() ? model.trace[t] : demand(rng.engine());
        bool stall = backlog > 0;
        uint64_t queued = backlog + fresh;
        uint64_t served = std::min<uint64_t>(b, queued);
        if (keep_cycles) {
            out.cycles.push_back({t, fresh, backlog, served, stall});
        }
        s.stall_cycles += stall;
        s.total_generated += fresh;
        s.total_served += served;
        backlog = queued - served;
        s.max_backlog = std::max(s.max_backlog, backlog);
    }
    s.final_backlog = backlog;
    s.work_cycles = cycles - s.stall_cycles;
    s.stall_fraction = static_cast<double>(s.stall_cycles) / static_cast<double>(cycles);
    s.exec_time_overhead = s.work_cycles == 0
                               ? std::numeric_limits<double>::infinity()
                               : static_cast<double>(s.stall_cycles) / static_cast<double>(s.work_cycles);
    return out;
}

std::vector<uint32_t> stalls_per_window(const BandwidthTrace &trace, uint64_t window, uint64_t from) {
    if (window == 0) {
        throw std::invalid_argument("window must be positive");
    }
    std::vector<uint32_t> out;
    for (uint64_t start = from; start + window <= trace.cycles.size(); start += window) {
        uint32_t n = 0;
        for (uint64_t t = start; t < start + window; t++) {
            n += trace.cycles[t].is_stall;
        }
        out.push_back(n);
    }
    return out;
}

std::vector<TradeoffPoint> tradeoff_curve(
    const DemandModel &model, const std::vector<double> &percentile_grid, uint64_t cycles, uint64_t seed) {
    if (percentile_grid.empty()) {
        throw std::invalid_argument("percentile grid is empty");
    }
    std::vector<TradeoffPoint> curve;
    for (double pct : percentile_grid) {
        uint32_t b = percentile_provision(model, pct);
        BandwidthSummary s = simulate(model, b, cycles, seed, false).summary;
        double reduction = b == 0 ? std::numeric_limits<double>::infinity()
                                  : static_cast<double>(model.num_qubits) / static_cast<double>(b);
        curve.push_back({pct, b, reduction, s.exec_time_overhead, s.stall_fraction});
    }
    return curve;
}

double best_reduction_within(const std::vector<TradeoffPoint> &curve, double max_increase) {
    double best = 0;
    for (const TradeoffPoint &pt : curve) {
        if (pt.exec_time_increase <= max_increase) {
            best = std::max(best, pt.bandwidth_reduction);
        }
    }
    return best;
}

}  // namespace btwc
