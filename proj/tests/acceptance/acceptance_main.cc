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

// Acceptance gate. `btwc_acceptance N` checks criterion N and prints one
// "[PASS]" or "[FAIL]" line; the exit status is 0 only on a pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "btwc/bandwidth.h"
#include "btwc/clique_decoder.h"
#include "btwc/compression.h"
#include "btwc/hwcost.h"
#include "btwc/lattice.h"
#include "btwc/matching_decoder.h"
#include "btwc/montecarlo.h"
#include "btwc/noise.h"

namespace btwc {
namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char *pattern, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char *pattern, ...) {
    char buf[1024];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

double binomial_sigma(double frac, double n) {
    return std::sqrt(std::max(frac * (1 - frac), 0.0) / n);
}

// ---------------------------------------------------------------------------
// 1. Coverage at d = 21, p = 1e-2.

Verdict coverage_headline() {
    CoverageStats s = classify_cycles(21, 1e-2, 1'000'000, 1, 0);
    double c = s.coverage();
    double per_type[2] = {s.per_type[0].coverage(), s.per_type[1].coverage()};
    bool pass = std::abs(c - 0.70) <= 0.05;
    return {pass, fmt("coverage d=21 p=1e-2 over 1e6 cycles = %.4f (target 0.70 +/- 0.05); per type X %.4f, Z %.4f",
                      c, per_type[0], per_type[1])};
}

// ---------------------------------------------------------------------------
// 2. Coverage limits and trends.

Verdict coverage_limits() {
    const std::vector<int> ds{3, 5, 7, 11};
    const std::vector<double> ps{5e-4, 1e-3, 5e-3, 1e-2};
    const uint64_t cycles = 200'000;
    std::string problems;
    for (int d : ds) {
        CoverageStats zero = classify_cycles(d, 0.0, 20'000, 1, 0);
        if (zero.coverage() != 1.0) {
            problems += fmt(" p=0 d=%d coverage %.6f;", d, zero.coverage());
        }
    }
    std::map<std::pair<int, double>, double> cov;
    for (int d : ds) {
        for (double p : ps) {
            cov[{d, p}] = classify_cycles(d, p, cycles, 1, 0).coverage();
        }
    }
    auto sigma = [&](double a, double b) {
        return std::sqrt(std::pow(binomial_sigma(a, cycles), 2) + std::pow(binomial_sigma(b, cycles), 2));
    };
    size_t checks = 0;
    // Lower p must not cover less; larger d must not cover more.
    for (int d : ds) {
        for (size_t i = 0; i + 1 < ps.size(); i++) {
            double lo = cov[{d, ps[i]}];
            double hi = cov[{d, ps[i + 1]}];
            checks++;
            if (lo < hi - 3 * sigma(lo, hi)) {
                problems += fmt(" d=%d: cov(p=%g)=%.5f < cov(p=%g)=%.5f;", d, ps[i], lo, ps[i + 1], hi);
            }
        }
    }
    for (double p : ps) {
        for (size_t i = 0; i + 1 < ds.size(); i++) {
            double small = cov[{ds[i], p}];
            double large = cov[{ds[i + 1], p}];
            checks++;
            if (large > small + 3 * sigma(small, large)) {
                problems += fmt(" p=%g: cov(d=%d)=%.5f > cov(d=%d)=%.5f;", p, ds[i + 1], large, ds[i], small);
            }
        }
    }
    return {problems.empty(), fmt("p=0 exact at d in {3,5,7,11}; %zu adjacent-pair trend checks at 3 sigma, %.0e cycles "
                                  "per point; d=11 p=1e-2 coverage %.4f%s",
                                  checks, double(cycles), cov[{11, 1e-2}], problems.c_str())};
}

// ---------------------------------------------------------------------------
// 3. LER parity between the two decoders.

Verdict ler_parity() {
    const uint64_t trials = 200'000;
    std::string detail;
    bool pass = true;
    for (int d : {3, 5}) {
        for (double p : {1e-3, 3e-3}) {
            LerResult base = estimate_ler(d, p, trials, DecoderMode::Baseline, 1, 0);
            LerResult clique = estimate_ler(d, p, trials, DecoderMode::CliquePlusBaseline, 1, 0);
            bool overlap = base.wilson_ci.lo <= clique.wilson_ci.hi && clique.wilson_ci.lo <= base.wilson_ci.hi;
            pass = pass && overlap;
            detail += fmt(" d=%d p=%g base %lu [%.2e,%.2e] clique %lu [%.2e,%.2e]%s;", d, p,
                          static_cast<unsigned long>(base.logical_failures), base.wilson_ci.lo, base.wilson_ci.hi,
                          static_cast<unsigned long>(clique.logical_failures), clique.wilson_ci.lo, clique.wilson_ci.hi,
                          overlap ? "" : " DISJOINT");
        }
    }
    return {pass, fmt("%.0e blocks per point:", double(trials)) + detail};
}

// ---------------------------------------------------------------------------
// 4. Sub-threshold scaling.

Verdict subthreshold() {
    const uint64_t trials = 1'000'000;
    LerResult d3 = estimate_ler(3, 1e-3, trials, DecoderMode::Baseline, 1, 0);
    LerResult d5 = estimate_ler(5, 1e-3, trials, DecoderMode::Baseline, 1, 0);
    double n = static_cast<double>(trials);
    double sigma = std::sqrt(std::pow(binomial_sigma(d3.ler, n), 2) + std::pow(binomial_sigma(d5.ler, n), 2));
    double z = sigma > 0 ? (d3.ler - d5.ler) / sigma : 0;
    return {z > 3, fmt("baseline LER at p=1e-3 over %.0e blocks: d=3 %.3e, d=5 %.3e, separation %.1f sigma (need > 3)",
                       n, d3.ler, d5.ler, z)};
}

// ---------------------------------------------------------------------------
// 5. Matching exactness against exhaustive pairing.

struct HopOracle {
    std::vector<std::vector<uint32_t>> hops;
    std::vector<uint32_t> boundary;
};

HopOracle hop_oracle(const Lattice &lat, CheckType t) {
    const CheckLayer &layer = lat.layer(t);
    const size_t n = layer.size();
    HopOracle o;
    o.hops.assign(n, std::vector<uint32_t>(n, std::numeric_limits<uint32_t>::max()));
    o.boundary.assign(n, std::numeric_limits<uint32_t>::max());
    for (uint32_t s = 0; s < n; s++) {
        std::deque<uint32_t> queue{s};
        o.hops[s][s] = 0;
        while (!queue.empty()) {
            uint32_t a = queue.front();
            queue.pop_front();
            for (uint32_t b : layer.neighbors[a]) {
                if (o.hops[s][b] == std::numeric_limits<uint32_t>::max()) {
                    o.hops[s][b] = o.hops[s][a] + 1;
                    queue.push_back(b);
                }
            }
        }
    }
    for (uint32_t a = 0; a < n; a++) {
        for (uint32_t b = 0; b < n; b++) {
            if (!layer.discharge[b].empty()) {
                o.boundary[a] = std::min(o.boundary[a], o.hops[a][b] + 1);
            }
        }
    }
    return o;
}

int64_t exhaustive_weight(const HopOracle &o, const std::vector<Defect> &defects, std::vector<uint8_t> &used) {
    size_t i = 0;
    while (i < defects.size() && used[i]) {
        i++;
    }
    if (i == defects.size()) {
        return 0;
    }
    used[i] = 1;
    int64_t best = o.boundary[defects[i].check] + exhaustive_weight(o, defects, used);
    for (size_t j = i + 1; j < defects.size(); j++) {
        if (used[j]) {
            continue;
        }
        used[j] = 1;
        int64_t w = o.hops[defects[i].check][defects[j].check] + std::abs(defects[i].round - defects[j].round);
        best = std::min(best, w + exhaustive_weight(o, defects, used));
        used[j] = 0;
    }
    used[i] = 0;
    return best;
}

Verdict matching_exactness() {
    std::mt19937_64 rng(5);
    size_t total = 0;
    size_t agree = 0;
    for (int d : {3, 5, 7}) {
        Lattice lat = Lattice::build(d);
        for (CheckType t : kCheckTypes) {
            MatchingDecoder dec(lat, t);
            HopOracle oracle = hop_oracle(lat, t);
            const uint32_t n = static_cast<uint32_t>(lat.layer(t).size());
            for (int trial = 0; trial < 500; trial++) {
                size_t count = std::uniform_int_distribution<size_t>(1, 8)(rng);
                std::set<Defect> set;
                while (set.size() < count) {
                    set.insert({std::uniform_int_distribution<uint32_t>(0, n - 1)(rng),
                                std::uniform_int_distribution<int32_t>(0, d)(rng)});
                }
                std::vector<Defect> defects(set.begin(), set.end());
                std::shuffle(defects.begin(), defects.end(), rng);
                std::vector<uint8_t> used(defects.size(), 0);
                total++;
                agree += dec.decode(defects).total_weight == exhaustive_weight(oracle, defects, used);
            }
        }
    }
    return {agree == total, fmt("%zu of %zu random defect sets (1-8 defects, d in {3,5,7}, 1000 per distance) match "
                                "exhaustive pairing weight",
                                agree, total)};
}

// ---------------------------------------------------------------------------
// 6. Triage against the reference classifier on isolated single errors.

struct TriageTally {
    size_t sets = 0;
    size_t class_mismatch = 0;
    size_t trivial = 0;
    size_t not_stabilizer = 0;
};

// Single errors whose check groups are pairwise disjoint.
bool isolated(const Lattice &lat, CheckType t, const std::vector<uint32_t> &errors) {
    std::vector<uint8_t> hit(lat.layer(t).size(), 0);
    for (uint32_t q : errors) {
        for (int32_t k : lat.layer(t).data_checks[q]) {
            if (k < 0) {
                continue;
            }
            if (hit[k]) {
                return false;
            }
            hit[k] = 1;
        }
    }
    return true;
}

void tally(const Lattice &lat, CheckType t, const std::vector<uint32_t> &errors, TriageTally &out) {
    Bits s = syndrome_of(lat, errors, t);
    TriageOutcome got = triage(lat, s, t);
    out.sets++;
    out.class_mismatch += got.cls != triage_oracle(lat, s, t);
    if (got.cls == TriageClass::Trivial) {
        out.trivial++;
        Bits residual(lat.num_data(), 0);
        for (uint32_t q : errors) {
            residual[q] ^= 1;
        }
        for (uint32_t q : got.corrections) {
            residual[q] ^= 1;
        }
        out.not_stabilizer += popcount(syndrome_of(lat, residual, t)) != 0 || logical_flip(lat, residual, t);
    }
}

Verdict triage_equivalence() {
    TriageTally exhaustive;
    Lattice d3 = Lattice::build(3);
    for (CheckType t : kCheckTypes) {
        for (uint32_t mask = 1; mask < (1u << d3.num_data()); mask++) {
            std::vector<uint32_t> e;
            for (uint32_t q = 0; q < d3.num_data(); q++) {
                if ((mask >> q) & 1) {
                    e.push_back(q);
                }
            }
            if (isolated(d3, t, e)) {
                tally(d3, t, e, exhaustive);
            }
        }
    }
    TriageTally sampled;
    Lattice d5 = Lattice::build(5);
    std::mt19937_64 rng(6);
    while (sampled.sets < 100'000) {
        CheckType t = kCheckTypes[sampled.sets % 2];
        size_t weight = std::uniform_int_distribution<size_t>(1, 6)(rng);
        std::set<uint32_t> pick;
        while (pick.size() < weight) {
            pick.insert(std::uniform_int_distribution<uint32_t>(0, d5.num_data() - 1)(rng));
        }
        std::vector<uint32_t> e(pick.begin(), pick.end());
        if (isolated(d5, t, e)) {
            tally(d5, t, e, sampled);
        }
    }
    bool pass = exhaustive.class_mismatch == 0 && exhaustive.not_stabilizer == 0 && sampled.class_mismatch == 0 &&
                sampled.not_stabilizer == 0;
    return {pass, fmt("d=3 exhaustive: %zu isolated sets, %zu class mismatches, %zu of %zu Trivial corrections leave a "
                      "non-stabilizer residual; d=5 sampled: %zu sets, %zu class mismatches, %zu of %zu non-stabilizer",
                      exhaustive.sets, exhaustive.class_mismatch, exhaustive.not_stabilizer, exhaustive.trivial,
                      sampled.sets, sampled.class_mismatch, sampled.not_stabilizer, sampled.trivial)};
}

// ---------------------------------------------------------------------------
// 7. Backlog under median and 99th-percentile provisioning.

Verdict provisioning() {
    DemandModel model{1000, 0.05, {}};
    const uint64_t cycles = 1'000'000;
    const uint64_t warmup = 100'000;
    uint32_t b50 = percentile_provision(model, 50);
    uint32_t b99 = percentile_provision(model, 99);

    BandwidthTrace median = simulate(model, b50, cycles, 1);
    std::vector<uint32_t> windows = stalls_per_window(median, 100, warmup);
    double mean_stalls = 0;
    for (uint32_t w : windows) {
        mean_stalls += w;
    }
    mean_stalls /= static_cast<double>(windows.size());
    size_t windows_over_90 = std::count_if(windows.begin(), windows.end(), [](uint32_t w) { return w > 90; });

    BandwidthTrace high = simulate(model, b99, cycles, 1);
    uint64_t late_max = 0;
    uint64_t early_max = 0;
    for (const CycleTrace &c : high.cycles) {
        (c.cycle < cycles / 2 ? early_max : late_max) = std::max(c.cycle < cycles / 2 ? early_max : late_max, c.carryover);
    }
    // Bounded: the backlog never reaches one cycle's budget and does not grow
    // between the two halves of the run.
    bool bounded = high.summary.max_backlog < b99 && late_max <= 2 * early_max + 1;
    bool pass = mean_stalls > 90 && high.summary.stall_fraction < 0.05 && bounded;
    return {pass, fmt("B50=%u: %.2f stalls per 100-cycle window after %lu warm-up cycles (%zu of %zu windows > 90), "
                      "final backlog %lu; B99=%u: stall fraction %.4f, max backlog %lu (first half %lu, second half %lu)",
                      b50, mean_stalls, static_cast<unsigned long>(warmup), windows_over_90, windows.size(),
                      static_cast<unsigned long>(median.summary.final_backlog), b99, high.summary.stall_fraction,
                      static_cast<unsigned long>(high.summary.max_backlog), static_cast<unsigned long>(early_max),
                      static_cast<unsigned long>(late_max))};
}

// ---------------------------------------------------------------------------
// 8. Compression gap on shared streams.

Verdict compression_gap() {
    const uint64_t cycles = 200'000;
    std::string detail;
    bool pass = true;
    double worst = std::numeric_limits<double>::infinity();
    std::string worst_at;
    for (int d : {3, 5, 7, 11}) {
        for (double p : {5e-4, 1e-3, 5e-3, 1e-2}) {
            CompressionComparison c = compare(d, p, cycles, 1, 0);
            if (c.ratio < 10) {
                pass = false;
                detail += fmt(" d=%d p=%g ratio %.2f (AFS %.2fx, Clique %.2fx);", d, p, c.ratio, c.afs.reduction_vs_raw,
                              c.clique.reduction_vs_raw);
            }
            if (c.ratio < worst) {
                worst = c.ratio;
                worst_at = fmt("d=%d p=%g", d, p);
            }
        }
    }
    return {pass, fmt("Clique/AFS reduction ratio over d in {3,5,7,11} x p in {5e-4,1e-3,5e-3,1e-2}, %.0e cycles per "
                      "point; smallest %.2f at %s;",
                      double(cycles), worst, worst_at.c_str()) +
                      detail};
}

// ---------------------------------------------------------------------------
// 9. Netlist equivalence and cell costs.

Verdict netlist_equivalence() {
    std::mt19937_64 rng(9);
    size_t windows = 0;
    size_t mismatches = 0;
    for (int d : {3, 5, 7}) {
        Lattice lat = Lattice::build(d);
        Netlist net = build_netlist(lat);
        for (int trial = 0; trial < 10'000; trial++) {
            double density = std::array<double, 4>{0.01, 0.05, 0.15, 0.4}[trial % 4];
            std::bernoulli_distribution flip(density);
            std::bernoulli_distribution half(0.5);
            DecodeWindow w;
            for (int t = 0; t < 2; t++) {
                size_t k = lat.layer(kCheckTypes[t]).size();
                w.prev_flip[t].resize(k);
                w.s_prev[t].resize(k);
                w.s_curr[t].resize(k);
                w.s_next[t].resize(k);
                for (size_t a = 0; a < k; a++) {
                    w.prev_flip[t][a] = flip(rng);
                    w.s_prev[t][a] = half(rng);
                    w.s_curr[t][a] = w.s_prev[t][a] ^ flip(rng);
                    w.s_next[t][a] = w.s_curr[t][a] ^ flip(rng);
                }
            }
            CircuitDecision got = run_circuit(net, w);
            bool ok = true;
            bool any_complex = false;
            for (int t = 0; t < 2; t++) {
                Bits curr = xor_bits(w.s_curr[t], w.s_prev[t]);
                Bits next = xor_bits(w.s_next[t], w.s_curr[t]);
                TriageOutcome ref = triage(lat, filter_rounds(w.prev_flip[t], curr, next), kCheckTypes[t]);
                bool cx = ref.cls == TriageClass::Complex;
                any_complex = any_complex || cx;
                std::vector<uint32_t> want = ref.cls == TriageClass::Trivial ? ref.corrections : std::vector<uint32_t>{};
                ok = ok && got.type_complex[t] == cx && got.corrections[t] == want && got.stored_flip[t] == curr;
            }
            ok = ok && got.complex == any_complex;
            windows++;
            mismatches += !ok;
        }
    }

    CellLibrary lib = CellLibrary::ersfq();
    struct Row {
        GateKind kind;
        double delay;
        double area;
        uint64_t jj;
    };
    size_t row_errors = 0;
    for (Row r : {Row{GateKind::XOR2, 6.2, 7000, 18}, Row{GateKind::AND2, 8.2, 7000, 16}, Row{GateKind::OR2, 5.4, 7000, 14},
                  Row{GateKind::NOT, 12.8, 7000, 12}, Row{GateKind::DFF, 8.6, 5600, 10}, Row{GateKind::SPLIT, 7.0, 3500, 4}}) {
        Netlist one;
        one.num_inputs = 2;
        uint8_t arity = (r.kind == GateKind::XOR2 || r.kind == GateKind::AND2 || r.kind == GateKind::OR2) ? 2 : 1;
        one.gates.push_back({r.kind, {0, arity == 2 ? 1u : 0u}, arity});
        one.outputs.push_back({"y", one.gate_signal(0)});
        NetlistCost c = evaluate(one, lib);
        row_errors += c.jj_count != r.jj || c.area_um2 != r.area || std::abs(c.critical_path_ps - r.delay) > 1e-9;
    }
    Netlist composite;
    composite.num_inputs = 3;
    composite.gates.push_back({GateKind::XOR2, {0, 1}, 2});
    composite.gates.push_back({GateKind::AND2, {composite.gate_signal(0), 2}, 2});
    composite.outputs.push_back({"y", composite.gate_signal(1)});
    NetlistCost c = evaluate(composite, lib);
    bool composite_ok = c.jj_count == 34 && c.area_um2 == 14000 && std::abs(c.critical_path_ps - 14.4) < 1e-9;

    bool pass = mismatches == 0 && row_errors == 0 && composite_ok;
    return {pass, fmt("%zu of %zu random windows (d in {3,5,7}) disagree with filter+triage; %zu cell rows off; "
                      "XOR2->AND2 composite %lu JJ, %.0f um2, %.1f ps",
                      mismatches, windows, row_errors, static_cast<unsigned long>(c.jj_count), c.area_um2,
                      c.critical_path_ps)};
}

// ---------------------------------------------------------------------------
// 10. Byte-identical outputs across runs and thread counts.

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict determinism() {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("btwc_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, std::string>> runs{
        {"coverage", "coverage -d 3,5,7 -p 1e-3,1e-2 --cycles 3e4"},
        {"ler", "ler -d 3,5 -p 3e-3 --trials 2e4"},
        {"bandwidth", "bandwidth --cycles 1e5 --percentile 95"},
        {"bandwidth-tradeoff", "bandwidth --cycles 1e5 --tradeoff 50,90,99,99.9"},
        {"bandwidth-trace", "bandwidth --demand trace --num-qubits 40 -d 3 -p 1e-2 --cycles 5000"},
        {"compress", "compress -d 3,5,7 -p 1e-3,5e-3 --cycles 3e4"},
        {"cost", "cost -d 3,5,7,9"},
    };
    std::string detail;
    bool pass = true;
    for (const auto &[name, args] : runs) {
        std::string outputs[3];
        int attempt = 0;
        for (const char *threads : {"1", "1", "4"}) {
            fs::path prefix = dir / (name + "_" + std::to_string(attempt));
            std::string cmd = std::string(BTWC_CLI_PATH) + " " + args + " --seed 11 --threads " + threads + " --out " +
                              prefix.string() + " > /dev/null 2>&1";
            int rc = std::system(cmd.c_str());
            outputs[attempt] = rc == 0 ? slurp(prefix.string() + ".csv") + "\x1e" + slurp(prefix.string() + ".json")
                                       : "exit " + std::to_string(rc) + " " + std::to_string(attempt);
            attempt++;
        }
        bool same = outputs[0] == outputs[1] && outputs[1] == outputs[2] && outputs[0].rfind("exit", 0) != 0;
        pass = pass && same;
        detail += " " + name + (same ? " ok" : " DIFFERS") + ";";
    }
    fs::remove_all(dir);
    return {pass, "three runs per subcommand (threads 1, 1, 4), CSV and JSON bytes compared:" + detail};
}

}  // namespace
}  // namespace btwc

int main(int argc, char **argv) {
    using namespace btwc;
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria{
        {"coverage headline", coverage_headline},
        {"coverage limits", coverage_limits},
        {"LER parity", ler_parity},
        {"sub-threshold scaling", subthreshold},
        {"matching exactness", matching_exactness},
        {"triage oracle equivalence", triage_equivalence},
        {"backlog and provisioning", provisioning},
        {"compression gap", compression_gap},
        {"netlist equivalence and cell costs", netlist_equivalence},
        {"determinism", determinism},
    };
    std::vector<size_t> selected;
    if (argc < 2) {
        for (size_t i = 0; i < criteria.size(); i++) {
            selected.push_back(i);
        }
    } else {
        for (int a = 1; a < argc; a++) {
            int n = std::atoi(argv[a]);
            if (n < 1 || n > static_cast<int>(criteria.size())) {
                std::cerr << "usage: btwc_acceptance [criterion 1-" << criteria.size() << "]...\n";
                return 2;
            }
            selected.push_back(static_cast<size_t>(n - 1));
        }
    }
    bool all = true;
    for (size_t i : selected) {
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] C%zu %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str(),
                    secs);
        std::fflush(stdout);
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
