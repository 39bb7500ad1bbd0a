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

#include "btwc/cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "btwc/bandwidth.h"
#include "btwc/compression.h"
#include "btwc/hwcost.h"
#include "btwc/lattice.h"
#include "btwc/montecarlo.h"

namespace btwc {

namespace {

std::string fmt(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

std::string fmt(uint64_t v) {
    return std::to_string(v);
}

// JSON has no infinity; such values are written as the string "inf".
nlohmann::ordered_json num(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

nlohmann::ordered_json class_json(const ClassCounts &c) {
    nlohmann::ordered_json j;
    j["all0"] = c.all0;
    j["local1"] = c.local1;
    j["complex"] = c.complex;
    j["coverage"] = c.coverage();
    return j;
}

ExperimentOutput run_coverage(const ExperimentConfig &cfg) {
    ExperimentOutput out;
    out.header = {"d", "p", "cycles", "frac_all0", "frac_local1", "frac_complex", "coverage"};
    out.summary["points"] = nlohmann::ordered_json::array();
    for (int d : cfg.distances) {
        for (double p : cfg.ps) {
            CoverageStats s = classify_cycles(d, p, cfg.cycles, cfg.seed, cfg.threads);
            out.rows.push_back(
                {std::to_string(d), fmt(p), fmt(s.cycles), fmt(s.frac_all0()), fmt(s.frac_local1()),
                 fmt(s.frac_complex()), fmt(s.coverage())});
            nlohmann::ordered_json pt;
            pt["d"] = d;
            pt["p"] = p;
            pt["combined"] = class_json(s.combined);
            pt["X"] = class_json(s.per_type[0]);
            pt["Z"] = class_json(s.per_type[1]);
            pt["cancelled_pairs"] = s.cancelled_pairs;
            out.summary["points"].push_back(pt);
        }
    }
    return out;
}

ExperimentOutput run_ler(const ExperimentConfig &cfg) {
    std::vector<DecoderMode> modes;
    if (cfg.mode == "both") {
        modes = {DecoderMode::Baseline, DecoderMode::CliquePlusBaseline};
    } else {
        modes = {parse_decoder_mode(cfg.mode)};
    }
    ExperimentOutput out;
    out.header = {"d", "p", "trials", "mode", "failures", "ler", "ci_lo", "ci_hi"};
    out.summary["points"] = nlohmann::ordered_json::array();
    for (int d : cfg.distances) {
        for (double p : cfg.ps) {
            for (DecoderMode mode : modes) {
                LerResult r = estimate_ler(d, p, cfg.trials, mode, cfg.seed, cfg.threads);
                out.rows.push_back(
                    {std::to_string(d), fmt(p), fmt(r.trials), std::string(to_string(mode)), fmt(r.logical_failures),
                     fmt(r.ler), fmt(r.wilson_ci.lo), fmt(r.wilson_ci.hi)});
                nlohmann::ordered_json pt;
                pt["d"] = d;
                pt["p"] = p;
                pt["mode"] = to_string(mode);
                pt["failures"] = r.logical_failures;
                pt["forwarded_blocks"] = r.forwarded_blocks;
                pt["ler"] = r.ler;
                out.summary["points"].push_back(pt);
            }
        }
    }
    return out;
}

ExperimentOutput run_bandwidth(const ExperimentConfig &cfg) {
    DemandModel model;
    model.num_qubits = cfg.num_qubits;
    model.q_complex = cfg.q;
    if (cfg.demand == "trace") {
        model = demand_from_montecarlo(cfg.distances.front(), cfg.ps.front(), cfg.num_qubits, cfg.cycles, cfg.seed, cfg.threads);
    }
    ExperimentOutput out;
    out.summary["mean_demand"] = model.mean();
    if (!cfg.tradeoff.empty()) {
        out.header = {"percentile", "b", "bandwidth_reduction", "exec_time_increase", "stall_fraction"};
        for (const TradeoffPoint &pt : tradeoff_curve(model, cfg.tradeoff, cfg.cycles, cfg.seed)) {
            out.rows.push_back(
                {fmt(pt.percentile), fmt(static_cast<uint64_t>(pt.provisioned_b)), fmt(pt.bandwidth_reduction),
                 fmt(pt.exec_time_increase), fmt(pt.stall_fraction)});
        }
        return out;
    }
    uint32_t b = cfg.bandwidth ? *cfg.bandwidth : percentile_provision(model, cfg.percentile);
    BandwidthTrace trace = simulate(model, b, cfg.cycles, cfg.seed);
    out.header = {"cycle", "new", "carryover", "served", "is_stall"};
    for (const CycleTrace &c : trace.cycles) {
        out.rows.push_back(
            {fmt(c.cycle), fmt(static_cast<uint64_t>(c.new_requests)), fmt(c.carryover), fmt(c.served),
             c.is_stall ? "1" : "0"});
    }
    const BandwidthSummary &s = trace.summary;
    out.summary["provisioned_b"] = s.provisioned_b;
    out.summary["stall_cycles"] = s.stall_cycles;
    out.summary["work_cycles"] = s.work_cycles;
    out.summary["stall_fraction"] = s.stall_fraction;
    out.summary["exec_time_overhead"] = num(s.exec_time_overhead);
    out.summary["max_backlog"] = s.max_backlog;
    out.summary["final_backlog"] = s.final_backlog;
    out.summary["total_generated"] = s.total_generated;
    out.summary["total_served"] = s.total_served;
    return out;
}

ExperimentOutput run_compress(const ExperimentConfig &cfg) {
    ExperimentOutput out;
    out.header = {"d", "p", "raw_bits", "afs_avg_bits", "clique_avg_bits", "afs_reduction", "clique_reduction", "ratio"};
    out.summary["points"] = nlohmann::ordered_json::array();
    for (int d : cfg.distances) {
        for (double p : cfg.ps) {
            CompressionComparison c = compare(d, p, cfg.cycles, cfg.seed, cfg.threads);
            out.rows.push_back(
                {std::to_string(d), fmt(p), fmt(c.raw_bits), fmt(c.afs.avg_bits_per_cycle),
                 fmt(c.clique.avg_bits_per_cycle), fmt(c.afs.reduction_vs_raw), fmt(c.clique.reduction_vs_raw),
                 fmt(c.ratio)});
            nlohmann::ordered_json pt;
            pt["d"] = d;
            pt["p"] = p;
            pt["frac_complex"] = c.frac_complex;
            pt["ratio"] = num(c.ratio);
            out.summary["points"].push_back(pt);
        }
    }
    return out;
}

ExperimentOutput run_cost(const ExperimentConfig &cfg) {
    CellLibrary lib = cfg.lib.empty() ? CellLibrary::ersfq() : CellLibrary::load(cfg.lib);
    ExperimentOutput out;
    out.header = {"d"};
    for (GateKind kind : kGateKinds) {
        out.header.emplace_back(to_string(kind));
    }
    for (const char *col : {"jj", "area_um2", "delay_ps", "power_w"}) {
        out.header.emplace_back(col);
    }
    out.summary["points"] = nlohmann::ordered_json::array();
    for (int d : cfg.distances) {
        Netlist nl = build_netlist(Lattice::build(d), 2, lib);
        NetlistCost cost = evaluate(nl, lib);
        double power = power_estimate(nl, lib, cfg.clock_hz, cfg.energy_j, cfg.activity);
        std::vector<std::string> row{std::to_string(d)};
        for (uint64_t n : cost.gate_counts) {
            row.push_back(fmt(n));
        }
        row.push_back(fmt(cost.jj_count));
        row.push_back(fmt(cost.area_um2));
        row.push_back(fmt(cost.critical_path_ps));
        row.push_back(fmt(power));
        out.rows.push_back(row);
        nlohmann::ordered_json pt;
        pt["d"] = d;
        pt["stages"] = cost.stages;
        pt["path_balanced"] = is_path_balanced(nl);
        pt["power_is_approximate"] = true;
        out.summary["points"].push_back(pt);
    }
    return out;
}

void write_atomically(const std::string &path, const std::string &content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot write '" + tmp + "'");
        }
        f << content;
        f.close();
        if (!f) {
            throw std::runtime_error("failed writing '" + tmp + "'");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot move '" + tmp + "' to '" + path + "'");
    }
}

}  // namespace

ExperimentOutput run_experiment(const ExperimentConfig &config) {
    config.validate();
    if (config.subcommand == "coverage") {
        return run_coverage(config);
    }
    if (config.subcommand == "ler") {
        return run_ler(config);
    }
    if (config.subcommand == "bandwidth") {
        return run_bandwidth(config);
    }
    if (config.subcommand == "compress") {
        return run_compress(config);
    }
    return run_cost(config);
}

std::string format_csv(const ExperimentConfig &config, const ExperimentOutput &output) {
    std::ostringstream os;
    os << "# config: " << config.to_json().dump() << "\n";
    auto line = [&](const std::vector<std::string> &cells) {
        for (size_t i = 0; i < cells.size(); i++) {
            os << (i ? "," : "") << cells[i];
        }
        os << "\n";
    };
    line(output.header);
    for (const auto &row : output.rows) {
        line(row);
    }
    return os.str();
}

std::string format_summary(const ExperimentConfig &config, const ExperimentOutput &output) {
    nlohmann::ordered_json j;
    j["config"] = config.to_json();
    j["columns"] = output.header;
    j["summary"] = output.summary;
    return j.dump(2) + "\n";
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    ExperimentConfig cfg;
    std::string cycles = std::to_string(cfg.cycles);
    std::string trials = std::to_string(cfg.trials);
    std::optional<uint32_t> bandwidth;

    CLI::App app{"Clique triage / matching decoder simulation toolkit"};
    app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--distance,-d", cfg.distances, "code distance list")->delimiter(',');
    app.add_option("--p,-p", cfg.ps, "physical error rate list")->delimiter(',');
    app.add_option("--cycles", cycles, "decode cycles per grid point (exponent notation accepted)");
    app.add_option("--trials", trials, "blocks per LER point (exponent notation accepted)");
    app.add_option("--seed", cfg.seed, "root seed")->envname("BTWC_SEED");
    app.add_option("--threads", cfg.threads, "worker threads (0 = all cores); never changes results");
    app.add_option("--mode", cfg.mode, "ler decoder: baseline, clique+baseline or both");
    app.add_option("--num-qubits", cfg.num_qubits, "logical qubits sharing the off-chip link");
    app.add_option("--q", cfg.q, "per-qubit per-cycle off-chip request probability");
    app.add_option("--percentile", cfg.percentile, "bandwidth provisioning percentile");
    app.add_option("--bandwidth", bandwidth, "absolute bandwidth in decodes per cycle (overrides --percentile)");
    app.add_option("--tradeoff", cfg.tradeoff, "percentile grid for a bandwidth/stall trade-off curve")->delimiter(',');
    app.add_option("--demand", cfg.demand, "bandwidth demand source: bernoulli or trace");
    app.add_option("--lib", cfg.lib, "cell library file (default: built-in ERSFQ)");
    app.add_option("--clock-hz", cfg.clock_hz, "clock frequency for the power estimate");
    app.add_option("--energy", cfg.energy_j, "switching energy per junction in joules");
    app.add_option("--activity", cfg.activity, "switching activity factor in [0, 1]");
    app.add_option("--out,-o", cfg.out, "output prefix; writes PREFIX.csv and PREFIX.json");
    app.add_subcommand("coverage", "signature-class distribution and on-chip coverage");
    app.add_subcommand("ler", "logical error rate per block, baseline vs clique+baseline");
    app.add_subcommand("bandwidth", "off-chip demand, backlog and stalls");
    app.add_subcommand("compress", "sparse compression vs complex-only shipping");
    app.add_subcommand("cost", "decoder netlist cost");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        cfg.cycles = parse_count(cycles);
        cfg.trials = parse_count(trials);
        cfg.bandwidth = bandwidth;
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        ExperimentOutput result = run_experiment(cfg);
        std::string csv = format_csv(cfg, result);
        if (cfg.out.empty()) {
            out << csv;
        } else {
            std::string json = format_summary(cfg, result);
            write_atomically(cfg.out + ".csv", csv);
            write_atomically(cfg.out + ".json", json);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace btwc
