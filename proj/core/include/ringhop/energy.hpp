#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ringhop/action_space.hpp"
#include "ringhop/link_model.hpp"
#include "ringhop/topology.hpp"

namespace ringhop {

/// Fixed-size data packet carrying up to max_payloads_per_packet payloads.
struct PacketModel {
    int payload_bytes = 15;
    int header_bytes = 2;
    int packet_bytes = 65;
    int max_payloads_per_packet = 4;

    std::int64_t packet_bits() const noexcept { return std::int64_t{8} * packet_bytes; }

    void validate() const;

    bool operator==(const PacketModel&) const = default;
};

/// Per-round traffic carried by the worst-loaded node of one ring.
struct RingLoad {
    std::int64_t payloads_out = 0;  // own payload plus everything received
    std::int64_t packets_out = 0;   // ceil(payloads_out / max_payloads_per_packet)
    double rx_seconds = 0.0;        // listening time for the children's packets
    TransmissionConfiguration tx_config;
};

/// Ring-by-ring load of an action; index r-1 holds ring r. The gateway's
/// intake is tracked separately and never enters the bottleneck search.
struct LoadProfile {
    std::vector<RingLoad> rings;
    std::int64_t gw_payloads_in = 0;
    std::int64_t gw_packets_in = 0;
    double gw_rx_seconds = 0.0;
};

/// Per-ring TX/RX energy of one routing action, for the worst-loaded node of
/// each ring, plus the bottleneck station over rings 1..R.
struct EnergyReport {
    HopsCombination action;
    std::vector<double> tx_j;  // index r-1 holds ring r
    std::vector<double> rx_j;
    double gw_rx_j = 0.0;
    int bottleneck_ring = 0;
    double bottleneck_j = 0.0;  // e_b
    LoadProfile loads;

    double ring_total_j(int ring) const {
        return tx_j[static_cast<std::size_t>(ring - 1)] +
               rx_j[static_cast<std::size_t>(ring - 1)];
    }

    /// Sum of the per-ring representative-node energies (the ledger the
    /// experiment harness accumulates per ring).
    double sum_ring_energy_j() const;
};

/// Computes per-ring traffic for an action, processing rings outermost-in.
/// Every node originates one payload per round and re-packs everything it
/// carries into ceil(payloads / max_payloads_per_packet) packets. Throws
/// InfeasibleActionError naming the ring whose link cannot close.
LoadProfile ring_loads(const NetworkStructure& net, const HopsCombination& action,
                       const TransceiverProfile& profile, const LinkBudgetModel& model,
                       const PacketModel& packet);

/// TX energy: packets_out * (packet_bits / rate) * I_tx * V_DD.
/// RX energy: rx_seconds * I_rx * V_DD (ideal TDMA: a parent listens exactly
/// while its children transmit). Bottleneck ties break to the lower ring.
EnergyReport evaluate_action(const NetworkStructure& net, const HopsCombination& action,
                             const TransceiverProfile& profile, const LinkBudgetModel& model,
                             const PacketModel& packet);

/// Deterministic reward: 1 / e_b.
double reward(const EnergyReport& report);

/// Evaluates every action in the space; returns the e_b minimizer
/// (lexicographically smallest on ties). Throws ConfigurationError when no
/// action is feasible.
std::pair<HopsCombination, EnergyReport> brute_force_optimal(const NetworkStructure& net,
                                                             const TransceiverProfile& profile,
                                                             const LinkBudgetModel& model,
                                                             const PacketModel& packet);

/// Memoizing evaluator bound to one scenario. A pure cache: the same action
/// index always yields the same report. Use one instance per experiment (or
/// share read-only after warm-up).
class ScenarioEvaluator {
public:
    ScenarioEvaluator(NetworkStructure net, TransceiverProfile profile, LinkBudgetModel model,
                      PacketModel packet);

    const NetworkStructure& network() const noexcept { return net_; }
    const ActionSpace& space() const noexcept { return space_; }
    std::size_t action_count() const noexcept { return space_.size(); }

    /// Report for a feasible action, nullptr for an infeasible one.
    const EnergyReport* report_if_feasible(std::size_t action_index);

    /// Report for a feasible action; throws InfeasibleActionError otherwise.
    const EnergyReport& report(std::size_t action_index);

    /// 1 / e_b, or 0 when the action is infeasible.
    double reward_or_zero(std::size_t action_index);

    /// Index and e_b of the optimum (lexicographically smallest on ties).
    /// Evaluates the whole space on first use.
    std::pair<std::size_t, double> optimal();

private:
    struct Entry {
        bool evaluated = false;
        std::optional<EnergyReport> report;  // empty == infeasible
    };

    const Entry& entry(std::size_t action_index);

    NetworkStructure net_;
    TransceiverProfile profile_;
    LinkBudgetModel model_;
    PacketModel packet_;
    ActionSpace space_;
    std::vector<Entry> cache_;
    std::optional<std::pair<std::size_t, double>> optimal_;
};

}  // namespace ringhop
