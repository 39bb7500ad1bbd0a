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

#ifndef BTWC_HWCOST_H
#define BTWC_HWCOST_H

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "btwc/lattice.h"

namespace btwc {

enum class GateKind : uint8_t { XOR2 = 0, AND2, OR2, NOT, DFF, SPLIT };

constexpr std::array<GateKind, 6> kGateKinds{
    GateKind::XOR2, GateKind::AND2, GateKind::OR2, GateKind::NOT, GateKind::DFF, GateKind::SPLIT};

std::string_view to_string(GateKind kind);
GateKind parse_gate_kind(std::string_view text);

struct CellSpec {
    double delay_ps = 0;
    double area_um2 = 0;
    uint32_t jj_count = 0;
};

/// Per-kind delay, area and Josephson-junction count.
class CellLibrary {
   public:
    /// The ERSFQ cells used for the decoder.
    static CellLibrary ersfq();
    /// Whitespace-separated rows `kind delay_ps area_um2 jj_count`; `#` starts
    /// a comment.
    static CellLibrary parse(std::istream &in);
    static CellLibrary load(const std::string &path);

    void set(GateKind kind, CellSpec spec);
    bool has(GateKind kind) const {
        return cells_[static_cast<size_t>(kind)].has_value();
    }
    /// Throws std::invalid_argument when the kind is missing.
    const CellSpec &at(GateKind kind) const;

   private:
    std::array<std::optional<CellSpec>, 6> cells_;
};

struct Gate {
    GateKind kind;
    std::array<uint32_t, 2> in;
    uint8_t arity;
};

struct NetlistOutput {
    std::string name;
    uint32_t signal;
};

/// Gate-level circuit. Signals 0..num_inputs-1 are primary inputs and signal
/// num_inputs+g is the output of gates[g]; every gate reads only earlier
/// signals, so gate order is a topological order.
struct Netlist {
    static constexpr uint32_t kConstZero = 0xffffffffu;

    uint32_t num_inputs = 0;
    std::vector<Gate> gates;
    std::vector<NetlistOutput> outputs;

    /// Per check type and layer-local ancilla: input signals for the stored
    /// flip f(t-1) and the raw readouts s(t-1), s(t), s(t+1).
    std::array<std::vector<std::array<uint32_t, 4>>, 2> ancilla_inputs;
    /// Output indices.
    uint32_t complex_output = 0;
    std::array<uint32_t, 2> type_complex_output{};
    std::array<std::vector<std::pair<uint32_t, uint32_t>>, 2> correction_outputs;
    std::array<std::vector<uint32_t>, 2> state_outputs;

    uint32_t gate_signal(size_t g) const {
        return num_inputs + static_cast<uint32_t>(g);
    }
    size_t count(GateKind kind) const;
};

/// Clique decision circuit for both check types of `lattice`, fully path
/// balanced with DFFs and with a binary SPLIT tree on every multi-sink net.
/// Only rounds == 2 (the two-round persistence filter) is supported.
Netlist build_netlist(const Lattice &lattice, int rounds = 2, const CellLibrary &lib = CellLibrary::ersfq());

/// The same circuit before DFF balancing and SPLIT insertion.
Netlist build_logic(const Lattice &lattice, int rounds = 2);

/// Pads every gate input and every output to equal clocked-stage depth.
Netlist balance_paths(const Netlist &netlist);
/// Gives every signal with f > 1 sinks a binary tree of f - 1 SPLIT gates,
/// shaped so that the sinks with the longest remaining path under `lib` sit
/// closest to the driver.
Netlist insert_splitters(const Netlist &netlist, const CellLibrary &lib = CellLibrary::ersfq());

/// Clocked stage of every signal (SPLIT is unclocked).
std::vector<uint32_t> signal_stages(const Netlist &netlist);
/// Every clocked gate sees equal-stage inputs and all outputs share one stage.
bool is_path_balanced(const Netlist &netlist);
/// No signal drives more than one sink except through SPLIT gates, which
/// drive at most two.
bool is_fanout_legal(const Netlist &netlist);

struct NetlistCost {
    std::array<uint64_t, 6> gate_counts{};
    uint64_t jj_count = 0;
    double area_um2 = 0;
    double critical_path_ps = 0;
    uint32_t stages = 0;
};

NetlistCost evaluate(const Netlist &netlist, const CellLibrary &lib);

/// Dynamic switching power: jj_count * activity * energy_per_switch_j * clock_hz.
double power_estimate(
    const Netlist &netlist, const CellLibrary &lib, double clock_hz, double energy_per_switch_j, double activity);

/// Values of all outputs for the given primary input values.
Bits simulate(const Netlist &netlist, const Bits &inputs);

/// One decode window of raw readouts per check type, indexed by layer position.
struct DecodeWindow {
    std::array<Bits, 2> prev_flip;
    std::array<Bits, 2> s_prev;
    std::array<Bits, 2> s_curr;
    std::array<Bits, 2> s_next;
};

struct CircuitDecision {
    bool complex = false;
    std::array<bool, 2> type_complex{};
    /// Sorted data qubits whose correction line fired.
    std::array<std::vector<uint32_t>, 2> corrections;
    std::array<Bits, 2> stored_flip;
};

CircuitDecision run_circuit(const Netlist &netlist, const DecodeWindow &window);

}  // namespace btwc

#endif
