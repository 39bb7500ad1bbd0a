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

#include "btwc/hwcost.h"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace btwc {

namespace {

bool is_clocked(GateKind kind) {
    return kind != GateKind::SPLIT;
}

uint8_t arity_of(GateKind kind) {
    switch (kind) {
        case GateKind::XOR2:
        case GateKind::AND2:
        case GateKind::OR2:
            return 2;
        default:
            return 1;
    }
}

class LogicBuilder {
   public:
    explicit LogicBuilder(Netlist &nl) : nl_(nl) {
    }

    uint32_t add(GateKind kind, uint32_t a, uint32_t b = 0) {
        uint8_t arity = arity_of(kind);
        nl_.gates.push_back({kind, {a, arity == 2 ? b : 0}, arity});
        uint32_t stage = stage_of(a);
        if (arity == 2) {
            stage = std::max(stage, stage_of(b));
        }
        stage_.push_back(stage + (kind == GateKind::SPLIT ? 0 : 1));
        double arrival = arrival_of(a);
        if (arity == 2) {
            arrival = std::max(arrival, arrival_of(b));
        }
        arrival_.push_back(arrival + lib_.at(kind).delay_ps);
        return nl_.gate_signal(nl_.gates.size() - 1);
    }

    // Binary reduction joining the two earliest signals first (by clocked
    // stage, then by nominal delay), so late leaves sit near the root; n
    // leaves cost n - 1 gates.
    uint32_t tree(GateKind kind, const std::vector<uint32_t> &leaves) {
        if (leaves.empty()) {
            throw std::logic_error("reduction over no signals");
        }
        using Item = std::tuple<uint32_t, double, size_t, uint32_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        size_t order = 0;
        for (uint32_t leaf : leaves) {
            queue.emplace(stage_of(leaf), arrival_of(leaf), order++, leaf);
        }
        while (queue.size() > 1) {
            uint32_t a = std::get<3>(queue.top());
            queue.pop();
            uint32_t b = std::get<3>(queue.top());
            queue.pop();
            uint32_t joined = add(kind, a, b);
            queue.emplace(stage_of(joined), arrival_of(joined), order++, joined);
        }
        return std::get<3>(queue.top());
    }

    uint32_t output(std::string name, uint32_t signal) {
        nl_.outputs.push_back({std::move(name), signal});
        return static_cast<uint32_t>(nl_.outputs.size() - 1);
    }

   private:
    uint32_t stage_of(uint32_t signal) const {
        if (signal == Netlist::kConstZero || signal < nl_.num_inputs) {
            return 0;
        }
        return stage_[signal - nl_.num_inputs];
    }

    double arrival_of(uint32_t signal) const {
        if (signal == Netlist::kConstZero || signal < nl_.num_inputs) {
            return 0;
        }
        return arrival_[signal - nl_.num_inputs];
    }

    Netlist &nl_;
    // Shaping only: nominal cell delays order otherwise equal-stage leaves.
    const CellLibrary lib_ = CellLibrary::ersfq();
    std::vector<uint32_t> stage_;
    std::vector<double> arrival_;
};

// Metadata survives structural rewrites; only gates and output signals move.
Netlist copy_metadata(const Netlist &src) {
    Netlist out;
    out.num_inputs = src.num_inputs;
    out.ancilla_inputs = src.ancilla_inputs;
    out.complex_output = src.complex_output;
    out.type_complex_output = src.type_complex_output;
    out.correction_outputs = src.correction_outputs;
    out.state_outputs = src.state_outputs;
    return out;
}

}  // namespace

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::XOR2:
            return "XOR2";
        case GateKind::AND2:
            return "AND2";
        case GateKind::OR2:
            return "OR2";
        case GateKind::NOT:
            return "NOT";
        case GateKind::DFF:
            return "DFF";
        case GateKind::SPLIT:
            return "SPLIT";
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view text) {
    for (GateKind kind : kGateKinds) {
        if (to_string(kind) == text) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(text) + "'");
}

CellLibrary CellLibrary::ersfq() {
    CellLibrary lib;
    lib.set(GateKind::XOR2, {6.2, 7000, 18});
    lib.set(GateKind::AND2, {8.2, 7000, 16});
    lib.set(GateKind::OR2, {5.4, 7000, 14});
    lib.set(GateKind::NOT, {12.8, 7000, 12});
    lib.set(GateKind::DFF, {8.6, 5600, 10});
    lib.set(GateKind::SPLIT, {7.0, 3500, 4});
    return lib;
}

CellLibrary CellLibrary::parse(std::istream &in) {
    CellLibrary lib;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        line = line.substr(0, line.find('#'));
        std::istringstream row(line);
        std::string kind;
        if (!(row >> kind)) {
            continue;
        }
        CellSpec spec;
        std::string extra;
        if (!(row >> spec.delay_ps >> spec.area_um2 >> spec.jj_count) || (row >> extra)) {
            throw std::invalid_argument("cell library line " + std::to_string(lineno) + ": expected 'kind delay area jj'");
        }
        if (!(spec.delay_ps > 0 && spec.area_um2 > 0 && spec.jj_count > 0)) {
            throw std::invalid_argument("cell library line " + std::to_string(lineno) + ": entries must be positive");
        }
        lib.set(parse_gate_kind(kind), spec);
    }
    return lib;
}

CellLibrary CellLibrary::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open cell library '" + path + "'");
    }
    return parse(in);
}

void CellLibrary::set(GateKind kind, CellSpec spec) {
    cells_[static_cast<size_t>(kind)] = spec;
}

const CellSpec &CellLibrary::at(GateKind kind) const {
    const auto &cell = cells_[static_cast<size_t>(kind)];
    if (!cell) {
        throw std::invalid_argument("cell library has no entry for " + std::string(to_string(kind)));
    }
    return *cell;
}

size_t Netlist::count(GateKind kind) const {
    return static_cast<size_t>(std::count_if(gates.begin(), gates.end(), [&](const Gate &g) {
        return g.kind == kind;
    }));
}

Netlist build_logic(const Lattice &lattice, int rounds) {
    if (rounds != 2) {
        throw std::invalid_argument("only the two-round filter is supported, got rounds=" + std::to_string(rounds));
    }
    Netlist nl;
    for (CheckType type : kCheckTypes) {
        size_t t = static_cast<size_t>(type);
        for (size_t k = 0; k < lattice.layer(type).size(); k++) {
            uint32_t base = nl.num_inputs;
            nl.ancilla_inputs[t].push_back({base, base + 1, base + 2, base + 3});
            nl.num_inputs += 4;
        }
    }

    LogicBuilder b(nl);
    std::array<uint32_t, 2> type_complex{};
    std::vector<std::pair<uint32_t, uint32_t>> corr_lines[2];
    std::vector<uint32_t> state[2];

    for (CheckType type : kCheckTypes) {
        size_t t = static_cast<size_t>(type);
        const CheckLayer &layer = lattice.layer(type);
        const size_t n = layer.size();

        // e = f(t) & ~f(t+1) & ~f(t-1), with f(t) stored for the next cycle.
        std::vector<uint32_t> e(n);
        for (size_t k = 0; k < n; k++) {
            auto [prev_flip, s_prev, s_curr, s_next] = nl.ancilla_inputs[t][k];
            uint32_t f = b.add(GateKind::XOR2, s_prev, s_curr);
            uint32_t f_next = b.add(GateKind::XOR2, s_curr, s_next);
            uint32_t not_next = b.add(GateKind::NOT, f_next);
            uint32_t not_prev = b.add(GateKind::NOT, prev_flip);
            uint32_t held = b.add(GateKind::AND2, f, not_next);
            e[k] = b.add(GateKind::AND2, held, not_prev);
            state[t].push_back(b.add(GateKind::DFF, f));
        }

        // Complex iff the neighbour parity is even, except that an empty
        // neighbourhood is fine when a discharge qubit exists.
        std::vector<uint32_t> terms;
        std::vector<int64_t> any_set(n, -1);
        for (size_t k = 0; k < n; k++) {
            const auto &nbrs = layer.neighbors[k];
            std::vector<uint32_t> nb;
            for (uint32_t j : nbrs) {
                nb.push_back(e[j]);
            }
            bool discharge = !layer.discharge[k].empty();
            if (discharge) {
                if (nb.size() == 2) {
                    terms.push_back(b.add(GateKind::AND2, b.add(GateKind::AND2, e[k], nb[0]), nb[1]));
                } else if (nb.size() >= 3) {
                    uint32_t even = b.add(GateKind::NOT, b.tree(GateKind::XOR2, nb));
                    any_set[k] = b.tree(GateKind::OR2, nb);
                    terms.push_back(b.add(GateKind::AND2, b.add(GateKind::AND2, e[k], even), static_cast<uint32_t>(any_set[k])));
                }
            } else {
                uint32_t even = b.add(GateKind::NOT, b.tree(GateKind::XOR2, nb));
                terms.push_back(b.add(GateKind::AND2, e[k], even));
            }
        }
        type_complex[t] = terms.empty() ? Netlist::kConstZero : b.tree(GateKind::OR2, terms);

        // Correction lines are suppressed while this type is Complex.
        uint32_t ok = type_complex[t] == Netlist::kConstZero ? Netlist::kConstZero : b.add(GateKind::NOT, type_complex[t]);
        auto gated = [&](uint32_t line) {
            return ok == Netlist::kConstZero ? line : b.add(GateKind::AND2, line, ok);
        };
        for (size_t k = 0; k < n; k++) {
            const auto &nbrs = layer.neighbors[k];
            for (size_t slot = 0; slot < nbrs.size(); slot++) {
                if (nbrs[slot] > k) {
                    uint32_t pair = b.add(GateKind::AND2, e[k], e[nbrs[slot]]);
                    corr_lines[t].push_back({layer.shared[k][slot], gated(pair)});
                }
            }
            if (!layer.discharge[k].empty()) {
                uint32_t any;
                if (nbrs.size() == 1) {
                    any = e[nbrs[0]];
                } else if (any_set[k] >= 0) {
                    any = static_cast<uint32_t>(any_set[k]);
                } else {
                    std::vector<uint32_t> nb;
                    for (uint32_t j : nbrs) {
                        nb.push_back(e[j]);
                    }
                    any = b.tree(GateKind::OR2, nb);
                }
                uint32_t alone = b.add(GateKind::AND2, e[k], b.add(GateKind::NOT, any));
                corr_lines[t].push_back({layer.discharge[k].front(), gated(alone)});
            }
        }
    }

    uint32_t complex;
    if (type_complex[0] == Netlist::kConstZero) {
        complex = type_complex[1];
    } else if (type_complex[1] == Netlist::kConstZero) {
        complex = type_complex[0];
    } else {
        complex = b.add(GateKind::OR2, type_complex[0], type_complex[1]);
    }
    nl.complex_output = b.output("COMPLEX", complex);
    for (CheckType type : kCheckTypes) {
        size_t t = static_cast<size_t>(type);
        nl.type_complex_output[t] = b.output("COMPLEX_" + std::string(to_string(type)), type_complex[t]);
    }
    for (CheckType type : kCheckTypes) {
        size_t t = static_cast<size_t>(type);
        std::string tag(to_string(type));
        for (auto [qubit, signal] : corr_lines[t]) {
            nl.correction_outputs[t].push_back({qubit, b.output("CORR_" + tag + "_q" + std::to_string(qubit), signal)});
        }
        for (size_t k = 0; k < state[t].size(); k++) {
            nl.state_outputs[t].push_back(b.output("FLIP_" + tag + "_a" + std::to_string(k), state[t][k]));
        }
    }
    return nl;
}

std::vector<uint32_t> signal_stages(const Netlist &netlist) {
    std::vector<uint32_t> stage(netlist.num_inputs + netlist.gates.size(), 0);
    for (size_t g = 0; g < netlist.gates.size(); g++) {
        const Gate &gate = netlist.gates[g];
        uint32_t s = 0;
        for (uint8_t p = 0; p < gate.arity; p++) {
            if (gate.in[p] != Netlist::kConstZero) {
                s = std::max(s, stage[gate.in[p]]);
            }
        }
        stage[netlist.gate_signal(g)] = s + (is_clocked(gate.kind) ? 1 : 0);
    }
    return stage;
}

bool is_path_balanced(const Netlist &netlist) {
    std::vector<uint32_t> stage = signal_stages(netlist);
    for (const Gate &gate : netlist.gates) {
        if (gate.arity == 2 && gate.in[0] != Netlist::kConstZero && gate.in[1] != Netlist::kConstZero &&
            stage[gate.in[0]] != stage[gate.in[1]]) {
            return false;
        }
    }
    int64_t out_stage = -1;
    for (const NetlistOutput &o : netlist.outputs) {
        if (o.signal == Netlist::kConstZero) {
            continue;
        }
        if (out_stage >= 0 && stage[o.signal] != out_stage) {
            return false;
        }
        out_stage = stage[o.signal];
    }
    return true;
}

Netlist balance_paths(const Netlist &netlist) {
    const std::vector<uint32_t> stage = signal_stages(netlist);
    uint32_t out_stage = 0;
    for (const NetlistOutput &o : netlist.outputs) {
        if (o.signal != Netlist::kConstZero) {
            out_stage = std::max(out_stage, stage[o.signal]);
        }
    }

    Netlist out = copy_metadata(netlist);
    std::vector<uint32_t> remap(stage.size(), Netlist::kConstZero);
    // chains[s][k] carries signal s delayed by k stages; taps share one chain.
    std::vector<std::vector<uint32_t>> chains(stage.size());
    for (uint32_t i = 0; i < netlist.num_inputs; i++) {
        remap[i] = i;
        chains[i].push_back(i);
    }
    auto tap = [&](uint32_t s, uint32_t delay) {
        auto &chain = chains[s];
        while (chain.size() <= delay) {
            out.gates.push_back({GateKind::DFF, {chain.back(), 0}, 1});
            chain.push_back(out.gate_signal(out.gates.size() - 1));
        }
        return chain[delay];
    };
    for (size_t g = 0; g < netlist.gates.size(); g++) {
        Gate gate = netlist.gates[g];
        uint32_t self = netlist.gate_signal(g);
        uint32_t want = is_clocked(gate.kind) ? stage[self] - 1 : stage[self];
        for (uint8_t p = 0; p < gate.arity; p++) {
            if (gate.in[p] != Netlist::kConstZero) {
                gate.in[p] = tap(gate.in[p], want - stage[gate.in[p]]);
            }
        }
        out.gates.push_back(gate);
        remap[self] = out.gate_signal(out.gates.size() - 1);
        chains[self].push_back(remap[self]);
    }
    for (const NetlistOutput &o : netlist.outputs) {
        uint32_t s = o.signal == Netlist::kConstZero ? o.signal : tap(o.signal, out_stage - stage[o.signal]);
        out.outputs.push_back({o.name, s});
    }
    return out;
}

Netlist insert_splitters(const Netlist &netlist, const CellLibrary &lib) {
    const size_t num_signals = netlist.num_inputs + netlist.gates.size();
    // Sink ids: 2*g + pin for gate pins, 2*gates + o for outputs.
    const size_t output_base = 2 * netlist.gates.size();
    std::vector<std::vector<size_t>> sinks(num_signals);
    for (size_t g = 0; g < netlist.gates.size(); g++) {
        const Gate &gate = netlist.gates[g];
        for (uint8_t p = 0; p < gate.arity; p++) {
            if (gate.in[p] != Netlist::kConstZero) {
                sinks[gate.in[p]].push_back(2 * g + p);
            }
        }
    }
    for (size_t o = 0; o < netlist.outputs.size(); o++) {
        if (netlist.outputs[o].signal != Netlist::kConstZero) {
            sinks[netlist.outputs[o].signal].push_back(output_base + o);
        }
    }

    // Tree shapes, built from the outputs backwards. Each tree repeatedly joins
    // the two subtrees with the least remaining delay to an output, which
    // minimises the worst sink arrival for f - 1 splitters.
    struct Node {
        size_t sink;  // leaf when children[0] == kLeaf
        std::array<size_t, 2> children;
    };
    constexpr size_t kLeaf = static_cast<size_t>(-1);
    const double split_delay = lib.at(GateKind::SPLIT).delay_ps;
    std::vector<double> remaining(num_signals, 0);
    std::vector<std::vector<Node>> trees(num_signals);
    for (size_t s = num_signals; s-- > 0;) {
        const auto &list = sinks[s];
        if (list.empty()) {
            continue;
        }
        std::vector<Node> &nodes = trees[s];
        using Item = std::tuple<double, size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        for (size_t sink : list) {
            double tail = 0;
            if (sink < output_base) {
                size_t g = sink / 2;
                tail = lib.at(netlist.gates[g].kind).delay_ps + remaining[netlist.gate_signal(g)];
            }
            nodes.push_back({sink, {kLeaf, kLeaf}});
            queue.emplace(tail, nodes.size() - 1);
        }
        while (queue.size() > 1) {
            auto [ta, a] = queue.top();
            queue.pop();
            auto [tb, b] = queue.top();
            queue.pop();
            nodes.push_back({0, {a, b}});
            queue.emplace(std::max(ta, tb) + split_delay, nodes.size() - 1);
        }
        remaining[s] = std::get<0>(queue.top());
    }

    Netlist out = copy_metadata(netlist);
    std::vector<uint32_t> driver(output_base + netlist.outputs.size(), Netlist::kConstZero);
    auto emit = [&](auto &self, uint32_t src, const std::vector<Node> &nodes, size_t at) -> void {
        const Node &node = nodes[at];
        if (node.children[0] == kLeaf) {
            driver[node.sink] = src;
            return;
        }
        out.gates.push_back({GateKind::SPLIT, {src, 0}, 1});
        uint32_t split = out.gate_signal(out.gates.size() - 1);
        self(self, split, nodes, node.children[0]);
        self(self, split, nodes, node.children[1]);
    };
    auto distribute = [&](uint32_t old_signal, uint32_t new_signal) {
        const auto &nodes = trees[old_signal];
        if (!nodes.empty()) {
            emit(emit, new_signal, nodes, nodes.size() - 1);
        }
    };
    for (uint32_t i = 0; i < netlist.num_inputs; i++) {
        distribute(i, i);
    }
    for (size_t g = 0; g < netlist.gates.size(); g++) {
        Gate gate = netlist.gates[g];
        for (uint8_t p = 0; p < gate.arity; p++) {
            if (gate.in[p] != Netlist::kConstZero) {
                gate.in[p] = driver[2 * g + p];
            }
        }
        out.gates.push_back(gate);
        distribute(netlist.gate_signal(g), out.gate_signal(out.gates.size() - 1));
    }
    for (size_t o = 0; o < netlist.outputs.size(); o++) {
        const NetlistOutput &src = netlist.outputs[o];
        out.outputs.push_back({src.name, src.signal == Netlist::kConstZero ? src.signal : driver[output_base + o]});
    }
    return out;
}

bool is_fanout_legal(const Netlist &netlist) {
    std::vector<uint32_t> fanout(netlist.num_inputs + netlist.gates.size(), 0);
    for (const Gate &gate : netlist.gates) {
        for (uint8_t p = 0; p < gate.arity; p++) {
            if (gate.in[p] != Netlist::kConstZero) {
                fanout[gate.in[p]]++;
            }
        }
    }
    for (const NetlistOutput &o : netlist.outputs) {
        if (o.signal != Netlist::kConstZero) {
            fanout[o.signal]++;
        }
    }
    for (size_t s = 0; s < fanout.size(); s++) {
        bool split = s >= netlist.num_inputs && netlist.gates[s - netlist.num_inputs].kind == GateKind::SPLIT;
        if (fanout[s] > (split ? 2u : 1u)) {
            return false;
        }
    }
    return true;
}

Netlist build_netlist(const Lattice &lattice, int rounds, const CellLibrary &lib) {
    return insert_splitters(balance_paths(build_logic(lattice, rounds)), lib);
}

NetlistCost evaluate(const Netlist &netlist, const CellLibrary &lib) {
    NetlistCost cost;
    std::vector<double> arrival(netlist.num_inputs + netlist.gates.size(), 0);
    for (size_t g = 0; g < netlist.gates.size(); g++) {
        const Gate &gate = netlist.gates[g];
        const CellSpec &cell = lib.at(gate.kind);
        cost.gate_counts[static_cast<size_t>(gate.kind)]++;
        cost.jj_count += cell.jj_count;
        cost.area_um2 += cell.area_um2;
        double t = 0;
        for (uint8_t p = 0; p < gate.arity; p++) {
            if (gate.in[p] != Netlist::kConstZero) {
                t = std::max(t, arrival[gate.in[p]]);
            }
        }
        arrival[netlist.gate_signal(g)] = t + cell.delay_ps;
    }
    std::vector<uint32_t> stage = signal_stages(netlist);
    for (const NetlistOutput &o : netlist.outputs) {
        if (o.signal != Netlist::kConstZero) {
            cost.critical_path_ps = std::max(cost.critical_path_ps, arrival[o.signal]);
            cost.stages = std::max(cost.stages, stage[o.signal]);
        }
    }
    if (netlist.outputs.empty()) {
        for (double a : arrival) {
            cost.critical_path_ps = std::max(cost.critical_path_ps, a);
        }
    }
    return cost;
}

double power_estimate(
    const Netlist &netlist, const CellLibrary &lib, double clock_hz, double energy_per_switch_j, double activity) {
    if (!(clock_hz > 0 && energy_per_switch_j > 0 && activity >= 0 && activity <= 1)) {
        throw std::invalid_argument("power_estimate: clock and energy must be positive, activity in [0, 1]");
    }
    return static_cast<double>(evaluate(netlist, lib).jj_count) * activity * energy_per_switch_j * clock_hz;
}

Bits simulate(const Netlist &netlist, const Bits &inputs) {
    if (inputs.size() != netlist.num_inputs) {
        throw std::invalid_argument("simulate: expected " + std::to_string(netlist.num_inputs) + " inputs");
    }
    Bits value(netlist.num_inputs + netlist.gates.size(), 0);
    std::copy(inputs.begin(), inputs.end(), value.begin());
    auto read = [&](uint32_t s) -> uint8_t {
        return s == Netlist::kConstZero ? 0 : value[s];
    };
    for (size_t g = 0; g < netlist.gates.size(); g++) {
        const Gate &gate = netlist.gates[g];
        uint8_t a = read(gate.in[0]);
        uint8_t v = 0;
        switch (gate.kind) {
            case GateKind::XOR2:
                v = a ^ read(gate.in[1]);
                break;
            case GateKind::AND2:
                v = a & read(gate.in[1]);
                break;
            case GateKind::OR2:
                v = a | read(gate.in[1]);
                break;
            case GateKind::NOT:
                v = a ^ 1;
                break;
            case GateKind::DFF:
            case GateKind::SPLIT:
                v = a;
                break;
        }
        value[netlist.gate_signal(g)] = v & 1;
    }
    Bits out(netlist.outputs.size());
    for (size_t o = 0; o < out.size(); o++) {
        out[o] = read(netlist.outputs[o].signal);
    }
    return out;
}

CircuitDecision run_circuit(const Netlist &netlist, const DecodeWindow &window) {
    Bits inputs(netlist.num_inputs, 0);
    for (size_t t = 0; t < 2; t++) {
        const auto &slots = netlist.ancilla_inputs[t];
        const std::array<const Bits *, 4> src{
            &window.prev_flip[t], &window.s_prev[t], &window.s_curr[t], &window.s_next[t]};
        for (const Bits *bits : src) {
            if (bits->size() != slots.size()) {
                throw std::invalid_argument("decode window does not match the netlist's check layer");
            }
        }
        for (size_t k = 0; k < slots.size(); k++) {
            for (size_t j = 0; j < 4; j++) {
                inputs[slots[k][j]] = (*src[j])[k];
            }
        }
    }
    Bits out = simulate(netlist, inputs);
    CircuitDecision d;
    d.complex = out[netlist.complex_output];
    for (size_t t = 0; t < 2; t++) {
        d.type_complex[t] = out[netlist.type_complex_output[t]];
        for (auto [qubit, index] : netlist.correction_outputs[t]) {
            if (out[index]) {
                d.corrections[t].push_back(qubit);
            }
        }
        std::sort(d.corrections[t].begin(), d.corrections[t].end());
        for (uint32_t index : netlist.state_outputs[t]) {
            d.stored_flip[t].push_back(out[index]);
        }
    }
    return d;
}

}  // namespace btwc
