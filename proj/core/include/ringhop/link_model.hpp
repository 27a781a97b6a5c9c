#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringhop/errors.hpp"

namespace ringhop {

/// One selectable transmission power level. Level 1 is maximum power;
/// levels are ordered by strictly decreasing output power.
struct PowerLevel {
    int level = 0;
    double tx_power_dbm = 0.0;
    double tx_current_ma = 0.0;
};

/// One selectable data rate together with the receiver sensitivity it needs.
struct RateLevel {
    double bits_per_second = 0.0;
    double sensitivity_dbm = 0.0;
};

/// Radio capabilities: power levels, rate levels, RX draw and supply voltage.
struct TransceiverProfile {
    std::string name;
    double supply_volts = 0.0;
    double rx_current_ma = 0.0;
    std::vector<PowerLevel> power_levels;  // level 1 (max power) first
    std::vector<RateLevel> rate_levels;    // ascending bits_per_second

    /// Throws ValidationError naming the bad field.
    void validate() const;

    const PowerLevel& max_power() const { return power_levels.front(); }
    const RateLevel& min_rate() const { return rate_levels.front(); }
};

/// Log-distance path loss PL(d) = intercept + slope * log10(d), plus the
/// antenna gains entering the link budget. Frequency is informational.
struct LinkBudgetModel {
    double intercept_db = 0.0;       // A
    double slope_db_per_decade = 0.0;  // K
    double frequency_hz = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;

    void validate() const;
};

/// An ordered (transmission power, data rate) pair for one child-parent link.
struct TransmissionConfiguration {
    int power_level = 0;
    double tx_power_dbm = 0.0;
    double tx_current_ma = 0.0;
    double bits_per_second = 0.0;
    double sensitivity_dbm = 0.0;

    bool operator==(const TransmissionConfiguration&) const = default;
};

/// PL(d) in dB. d must be positive; throws std::domain_error otherwise.
double path_loss_db(const LinkBudgetModel& model, double distance_m);

/// Link margin in dB: P_tx + G_tx + G_rx - PL(d) - sensitivity.
double link_margin_db(const LinkBudgetModel& model, double tx_power_dbm,
                      double sensitivity_dbm, double distance_m);

/// True iff the budget closes. Boundary equality counts as feasible; a tiny
/// slack (1e-9 dB) absorbs round-trip rounding at the exact range limit.
bool link_feasible(const TransceiverProfile& profile, const LinkBudgetModel& model,
                   const TransmissionConfiguration& cfg, double distance_m);

/// Picks the feasible (power, rate) pair minimizing per-packet TX energy
/// (packet_bits / rate) * I_tx * V_DD. Ties prefer the higher rate, then the
/// lower power. Throws InfeasibleLinkError when no pair closes the budget.
TransmissionConfiguration select_tx_config(const TransceiverProfile& profile,
                                           const LinkBudgetModel& model, double distance_m,
                                           std::int64_t packet_bits);

/// Largest feasible distance at (max power, min rate):
/// 10^((P_max + G_tx + G_rx - sensitivity_min - A) / K).
double max_range_m(const TransceiverProfile& profile, const LinkBudgetModel& model);

}  // namespace ringhop
