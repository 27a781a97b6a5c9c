#include "ringhop/link_model.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace ringhop {

namespace {

// Absorbs log10/pow round-trip noise at the exact feasibility boundary.
constexpr double kBoundarySlackDb = 1e-9;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

InfeasibleLinkError::InfeasibleLinkError(double distance_m, double shortfall_db)
    : std::runtime_error("no feasible transmission configuration at " + fmt(distance_m) +
                         " m (best pair short by " + fmt(shortfall_db) + " dB)"),
      distance_m_(distance_m),
      shortfall_db_(shortfall_db) {}

InfeasibleActionError::InfeasibleActionError(int ring, const InfeasibleLinkError& cause)
    : std::runtime_error("ring " + std::to_string(ring) + ": " + cause.what()),
      ring_(ring),
      distance_m_(cause.distance_m()),
      shortfall_db_(cause.shortfall_db()) {}

void TransceiverProfile::validate() const {
    if (power_levels.empty()) throw ValidationError("power_levels", "must not be empty");
    if (rate_levels.empty()) throw ValidationError("rate_levels", "must not be empty");
    if (!(supply_volts > 0.0)) throw ValidationError("supply_volts", "must be > 0");
    if (!(rx_current_ma > 0.0)) throw ValidationError("rx_current_ma", "must be > 0");
    for (std::size_t i = 0; i < power_levels.size(); ++i) {
        const PowerLevel& p = power_levels[i];
        if (p.level != static_cast<int>(i) + 1) {
            throw ValidationError("power_levels", "level indices must run 1..n in order");
        }
        if (!(p.tx_current_ma > 0.0)) {
            throw ValidationError("power_levels", "tx_current_ma must be > 0 at level " +
                                                      std::to_string(p.level));
        }
        if (i > 0 && !(p.tx_power_dbm < power_levels[i - 1].tx_power_dbm)) {
            throw ValidationError("power_levels",
                                  "tx_power_dbm must strictly decrease with level index");
        }
    }
    for (std::size_t i = 0; i < rate_levels.size(); ++i) {
        const RateLevel& r = rate_levels[i];
        if (!(r.bits_per_second > 0.0)) {
            throw ValidationError("rate_levels", "bits_per_second must be > 0");
        }
        if (!std::isfinite(r.sensitivity_dbm)) {
            throw ValidationError("rate_levels", "sensitivity_dbm must be finite");
        }
        if (i > 0 && !(r.bits_per_second > rate_levels[i - 1].bits_per_second)) {
            throw ValidationError("rate_levels",
                                  "bits_per_second must strictly increase");
        }
    }
}

void LinkBudgetModel::validate() const {
    if (!(slope_db_per_decade > 0.0)) {
        throw ValidationError("path_loss.slope_db_per_decade", "must be > 0");
    }
    if (!std::isfinite(intercept_db)) {
        throw ValidationError("path_loss.intercept_db", "must be finite");
    }
}

double path_loss_db(const LinkBudgetModel& model, double distance_m) {
    if (!(distance_m > 0.0)) {
        throw std::domain_error("path loss undefined for distance <= 0");
    }
    return model.intercept_db + model.slope_db_per_decade * std::log10(distance_m);
}

double link_margin_db(const LinkBudgetModel& model, double tx_power_dbm,
                      double sensitivity_dbm, double distance_m) {
    return tx_power_dbm + model.tx_gain_dbi + model.rx_gain_dbi -
           path_loss_db(model, distance_m) - sensitivity_dbm;
}

bool link_feasible(const TransceiverProfile& profile, const LinkBudgetModel& model,
                   const TransmissionConfiguration& cfg, double distance_m) {
    (void)profile;
    return link_margin_db(model, cfg.tx_power_dbm, cfg.sensitivity_dbm, distance_m) >=
           -kBoundarySlackDb;
}

TransmissionConfiguration select_tx_config(const TransceiverProfile& profile,
                                           const LinkBudgetModel& model, double distance_m,
                                           std::int64_t packet_bits) {
    if (!(distance_m > 0.0)) throw std::domain_error("distance must be > 0");
    if (packet_bits <= 0) throw ValidationError("packet_bits", "must be > 0");

    const double pl = path_loss_db(model, distance_m);
    const double gains = model.tx_gain_dbi + model.rx_gain_dbi;

    bool found = false;
    TransmissionConfiguration best{};
    double best_energy = std::numeric_limits<double>::infinity();
    double best_shortfall = std::numeric_limits<double>::infinity();

    for (const PowerLevel& p : profile.power_levels) {
        for (const RateLevel& r : profile.rate_levels) {
            const double margin = p.tx_power_dbm + gains - pl - r.sensitivity_dbm;
            if (margin < -kBoundarySlackDb) {
                best_shortfall = std::min(best_shortfall, -margin);
                continue;
            }
            const double energy = static_cast<double>(packet_bits) / r.bits_per_second *
                                  p.tx_current_ma * 1e-3 * profile.supply_volts;
            const bool better =
                !found || energy < best_energy ||
                (energy == best_energy &&
                 (r.bits_per_second > best.bits_per_second ||
                  (r.bits_per_second == best.bits_per_second &&
                   p.tx_power_dbm < best.tx_power_dbm)));
            if (better) {
                found = true;
                best_energy = energy;
                best = TransmissionConfiguration{p.level, p.tx_power_dbm, p.tx_current_ma,
                                                 r.bits_per_second, r.sensitivity_dbm};
            }
        }
    }
    if (!found) throw InfeasibleLinkError(distance_m, best_shortfall);
    return best;
}

double max_range_m(const TransceiverProfile& profile, const LinkBudgetModel& model) {
    const double budget = profile.max_power().tx_power_dbm + model.tx_gain_dbi +
                          model.rx_gain_dbi - profile.min_rate().sensitivity_dbm -
                          model.intercept_db;
    return std::pow(10.0, budget / model.slope_db_per_decade);
}

}  // namespace ringhop
