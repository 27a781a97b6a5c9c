#include "ringhop/energy.hpp"

#include <stdexcept>
#include <string>

namespace ringhop {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

double packet_airtime_s(const PacketModel& packet, const TransmissionConfiguration& cfg) {
    return static_cast<double>(packet.packet_bits()) / cfg.bits_per_second;
}

}  // namespace

void PacketModel::validate() const {
    if (payload_bytes < 1) throw ValidationError("packet.payload_bytes", "must be >= 1");
    if (header_bytes < 0) throw ValidationError("packet.header_bytes", "must be >= 0");
    if (max_payloads_per_packet < 1) {
        throw ValidationError("packet.max_payloads_per_packet", "must be >= 1");
    }
    if (packet_bytes < header_bytes + payload_bytes) {
        throw ValidationError("packet.packet_bytes", "must hold at least one payload");
    }
    if (static_cast<std::int64_t>(max_payloads_per_packet) * payload_bytes + header_bytes >
        packet_bytes) {
        throw ValidationError("packet.max_payloads_per_packet",
                              "payloads do not fit in packet_bytes");
    }
}

double EnergyReport::sum_ring_energy_j() const {
    double total = 0.0;
    for (std::size_t i = 0; i < tx_j.size(); ++i) total += tx_j[i] + rx_j[i];
    return total;
}

LoadProfile ring_loads(const NetworkStructure& net, const HopsCombination& action,
                       const TransceiverProfile& profile, const LinkBudgetModel& model,
                       const PacketModel& packet) {
    const int rings = net.rings();
    if (action.size() != rings) {
        throw std::invalid_argument("action " + action.to_string() + " has " +
                                    std::to_string(action.size()) + " hops for " +
                                    std::to_string(rings) + " rings");
    }
    if (!action.valid()) {
        throw ValidationError("action", action.to_string() + " violates 1 <= hop(r) <= r");
    }

    LoadProfile out;
    out.rings.resize(static_cast<std::size_t>(rings));

    // Select the transmission configuration of every ring's uplink first so
    // an infeasible link is reported before any accounting.
    for (int r = 1; r <= rings; ++r) {
        const double d = net.link_distance_m(r, action.hop(r));
        try {
            out.rings[static_cast<std::size_t>(r - 1)].tx_config =
                select_tx_config(profile, model, d, packet.packet_bits());
        } catch (const InfeasibleLinkError& e) {
            throw InfeasibleActionError(r, e);
        }
    }

    // Outermost-in: all rings feeding ring r lie strictly above it, so their
    // outputs are final when r is reached. Ring node counts are exact powers
    // of the children ratio, so the per-parent shares divide evenly and the
    // ceilings below are exact for every valid structure.
    std::vector<std::int64_t> payloads_in(static_cast<std::size_t>(rings) + 1, 0);
    for (int r = rings; r >= 1; --r) {
        RingLoad& load = out.rings[static_cast<std::size_t>(r - 1)];
        load.payloads_out = 1 + payloads_in[static_cast<std::size_t>(r)];
        load.packets_out = ceil_div(load.payloads_out, packet.max_payloads_per_packet);

        const int dest = r - action.hop(r);
        const std::int64_t senders = net.nodes_in_ring(r);
        const double airtime = packet_airtime_s(packet, load.tx_config);
        if (dest == 0) {
            out.gw_payloads_in += senders * load.payloads_out;
            out.gw_packets_in += senders * load.packets_out;
            out.gw_rx_seconds += static_cast<double>(senders * load.packets_out) * airtime;
        } else {
            const std::int64_t parents = net.nodes_in_ring(dest);
            const std::int64_t recv_payloads = ceil_div(senders * load.payloads_out, parents);
            const std::int64_t recv_packets = ceil_div(senders * load.packets_out, parents);
            payloads_in[static_cast<std::size_t>(dest)] += recv_payloads;
            out.rings[static_cast<std::size_t>(dest - 1)].rx_seconds +=
                static_cast<double>(recv_packets) * airtime;
        }
    }
    return out;
}

EnergyReport evaluate_action(const NetworkStructure& net, const HopsCombination& action,
                             const TransceiverProfile& profile, const LinkBudgetModel& model,
                             const PacketModel& packet) {
    EnergyReport report;
    report.action = action;
    report.loads = ring_loads(net, action, profile, model, packet);

    const int rings = net.rings();
    report.tx_j.resize(static_cast<std::size_t>(rings));
    report.rx_j.resize(static_cast<std::size_t>(rings));

    for (int r = 1; r <= rings; ++r) {
        const RingLoad& load = report.loads.rings[static_cast<std::size_t>(r - 1)];
        const double airtime = packet_airtime_s(packet, load.tx_config);
        report.tx_j[static_cast<std::size_t>(r - 1)] =
            static_cast<double>(load.packets_out) * airtime * load.tx_config.tx_current_ma *
            1e-3 * profile.supply_volts;
        report.rx_j[static_cast<std::size_t>(r - 1)] =
            load.rx_seconds * profile.rx_current_ma * 1e-3 * profile.supply_volts;
    }
    report.gw_rx_j =
        report.loads.gw_rx_seconds * profile.rx_current_ma * 1e-3 * profile.supply_volts;

    report.bottleneck_ring = 1;
    report.bottleneck_j = report.ring_total_j(1);
    for (int r = 2; r <= rings; ++r) {
        const double e = report.ring_total_j(r);
        if (e > report.bottleneck_j) {
            report.bottleneck_j = e;
            report.bottleneck_ring = r;
        }
    }
    return report;
}

double reward(const EnergyReport& report) {
    if (!(report.bottleneck_j > 0.0)) {
        throw ConfigurationError("degenerate network: bottleneck energy is zero");
    }
    return 1.0 / report.bottleneck_j;
}

std::pair<HopsCombination, EnergyReport> brute_force_optimal(const NetworkStructure& net,
                                                             const TransceiverProfile& profile,
                                                             const LinkBudgetModel& model,
                                                             const PacketModel& packet) {
    const ActionSpace space(net.rings());
    bool found = false;
    EnergyReport best;
    for (const HopsCombination& action : space.actions()) {
        EnergyReport report;
        try {
            report = evaluate_action(net, action, profile, model, packet);
        } catch (const InfeasibleActionError&) {
            continue;
        }
        // Lexicographic scan order keeps the smallest action on exact ties.
        if (!found || report.bottleneck_j < best.bottleneck_j) {
            found = true;
            best = std::move(report);
        }
    }
    if (!found) {
        throw ConfigurationError(
            "no feasible action: the profile cannot close even the single-hop links");
    }
    return {best.action, best};
}

ScenarioEvaluator::ScenarioEvaluator(NetworkStructure net, TransceiverProfile profile,
                                     LinkBudgetModel model, PacketModel packet)
    : net_(std::move(net)),
      profile_(std::move(profile)),
      model_(model),
      packet_(packet),
      space_(net_.rings()),
      cache_(space_.size()) {}

const ScenarioEvaluator::Entry& ScenarioEvaluator::entry(std::size_t action_index) {
    Entry& e = cache_.at(action_index);
    if (!e.evaluated) {
        try {
            e.report = evaluate_action(net_, space_.action(action_index), profile_, model_,
                                       packet_);
        } catch (const InfeasibleActionError&) {
            e.report.reset();
        }
        e.evaluated = true;
    }
    return e;
}

const EnergyReport* ScenarioEvaluator::report_if_feasible(std::size_t action_index) {
    const Entry& e = entry(action_index);
    return e.report ? &*e.report : nullptr;
}

const EnergyReport& ScenarioEvaluator::report(std::size_t action_index) {
    const EnergyReport* r = report_if_feasible(action_index);
    if (!r) {
        // Re-evaluate to surface the original ring/shortfall detail.
        evaluate_action(net_, space_.action(action_index), profile_, model_, packet_);
        throw ConfigurationError("evaluator cache marked a feasible action infeasible");
    }
    return *r;
}

double ScenarioEvaluator::reward_or_zero(std::size_t action_index) {
    const EnergyReport* r = report_if_feasible(action_index);
    return r ? 1.0 / r->bottleneck_j : 0.0;
}

std::pair<std::size_t, double> ScenarioEvaluator::optimal() {
    if (!optimal_) {
        bool found = false;
        std::size_t best_index = 0;
        double best_eb = 0.0;
        for (std::size_t i = 0; i < space_.size(); ++i) {
            const EnergyReport* r = report_if_feasible(i);
            if (!r) continue;
            if (!found || r->bottleneck_j < best_eb) {
                found = true;
                best_index = i;
                best_eb = r->bottleneck_j;
            }
        }
        if (!found) {
            throw ConfigurationError(
                "no feasible action: the profile cannot close even the single-hop links");
        }
        optimal_ = {best_index, best_eb};
    }
    return *optimal_;
}

}  // namespace ringhop
