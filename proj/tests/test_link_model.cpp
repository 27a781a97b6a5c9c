#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ringhop/link_model.hpp"
#include "support/test_radios.hpp"

using namespace ringhop;
using testing::flat_model;
using testing::two_by_two_profile;

namespace {

// Exhaustive reference: scan all pairs with link_feasible and the energy
// objective, applying the tie rules independently of select_tx_config.
TransmissionConfiguration scan_best_pair(const TransceiverProfile& profile,
                                         const LinkBudgetModel& model, double d,
                                         std::int64_t bits, bool& found) {
    found = false;
    TransmissionConfiguration best{};
    double best_energy = 0.0;
    for (const PowerLevel& p : profile.power_levels) {
        for (const RateLevel& r : profile.rate_levels) {
            TransmissionConfiguration cfg{p.level, p.tx_power_dbm, p.tx_current_ma,
                                          r.bits_per_second, r.sensitivity_dbm};
            if (!link_feasible(profile, model, cfg, d)) continue;
            const double energy = static_cast<double>(bits) / r.bits_per_second *
                                  p.tx_current_ma * 1e-3 * profile.supply_volts;
            if (!found || energy < best_energy ||
                (energy == best_energy && r.bits_per_second > best.bits_per_second) ||
                (energy == best_energy && r.bits_per_second == best.bits_per_second &&
                 p.tx_power_dbm < best.tx_power_dbm)) {
                found = true;
                best = cfg;
                best_energy = energy;
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("path loss follows the log-distance law") {
    CHECK(path_loss_db(flat_model(0.0, 20.0), 1.0) == doctest::Approx(0.0));
    CHECK(path_loss_db(flat_model(10.0, 20.0), 100.0) == doctest::Approx(50.0));
    CHECK(path_loss_db(flat_model(23.3, 37.6), 10.0) == doctest::Approx(60.9));
    CHECK_THROWS_AS(path_loss_db(flat_model(0.0, 20.0), 0.0), std::domain_error);
    CHECK_THROWS_AS(path_loss_db(flat_model(0.0, 20.0), -1.0), std::domain_error);
}

TEST_CASE("link feasibility against the budget") {
    TransceiverProfile p = two_by_two_profile();
    TransmissionConfiguration cfg{1, 14.0, 46.0, 50000.0, -110.0};

    // 14 dBm + 0 + 3 dBi - 100 dB = -83 dBm >= -110 dBm.
    LinkBudgetModel m = flat_model(100.0, 20.0, 0.0, 3.0);
    CHECK(link_feasible(p, m, cfg, 1.0));

    // Boundary equality counts as feasible.
    TransmissionConfiguration zero{1, 0.0, 1.0, 1000.0, 0.0};
    CHECK(link_feasible(p, flat_model(0.0, 20.0), zero, 1.0));

    // One dB short.
    CHECK_FALSE(link_feasible(p, flat_model(1.0, 20.0), zero, 1.0));
}

TEST_CASE("feasibility is monotone in distance") {
    const TransceiverProfile p = two_by_two_profile();
    const LinkBudgetModel m = flat_model(23.3, 37.6, 0.0, 3.0);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(1.0, 2000.0);
    for (int trial = 0; trial < 200; ++trial) {
        double d1 = dist(rng);
        double d2 = dist(rng);
        if (d1 > d2) std::swap(d1, d2);
        for (const PowerLevel& pl : p.power_levels) {
            for (const RateLevel& rl : p.rate_levels) {
                TransmissionConfiguration cfg{pl.level, pl.tx_power_dbm, pl.tx_current_ma,
                                              rl.bits_per_second, rl.sensitivity_dbm};
                if (link_feasible(p, m, cfg, d2)) {
                    CHECK(link_feasible(p, m, cfg, d1));
                }
            }
        }
    }
}

TEST_CASE("configuration selection minimizes per-packet TX energy") {
    const TransceiverProfile p = two_by_two_profile();
    const LinkBudgetModel m = flat_model(23.3, 37.6, 0.0, 3.0);

    SUBCASE("short link: the cheapest I/s pair wins") {
        // At 10 m everything is feasible; 25 mA / 50 kbps minimizes I/s.
        const TransmissionConfiguration cfg = select_tx_config(p, m, 10.0, 520);
        CHECK(cfg.bits_per_second == 50000.0);
        CHECK(cfg.tx_power_dbm == 0.0);
    }

    SUBCASE("at maximum range only (max power, min rate) closes the budget") {
        const double d = max_range_m(p, m);
        const TransmissionConfiguration cfg = select_tx_config(p, m, d, 520);
        CHECK(cfg.power_level == 1);
        CHECK(cfg.bits_per_second == 1200.0);
    }

    SUBCASE("lower power at a higher rate beats max-power/min-rate") {
        // At 200 m the (0 dBm, 50 kbps) pair closes the budget and wins on
        // bits/s * I against every min-rate pair.
        const double d = 200.0;
        bool found = false;
        const TransmissionConfiguration expect = scan_best_pair(p, m, d, 520, found);
        REQUIRE(found);
        const TransmissionConfiguration cfg = select_tx_config(p, m, d, 520);
        CHECK(cfg == expect);
        CHECK(cfg.bits_per_second == 50000.0);
        CHECK(cfg.power_level == 2);
    }

    SUBCASE("farther out the high rate needs max power yet still wins") {
        const double d = 400.0;
        const TransmissionConfiguration cfg = select_tx_config(p, m, d, 520);
        CHECK(cfg.bits_per_second == 50000.0);
        CHECK(cfg.power_level == 1);
    }

    SUBCASE("infeasible links raise with distance and shortfall") {
        const double d = max_range_m(p, m) * 2.0;
        CHECK_THROWS_AS(select_tx_config(p, m, d, 520), InfeasibleLinkError);
        try {
            select_tx_config(p, m, d, 520);
        } catch (const InfeasibleLinkError& e) {
            CHECK(e.distance_m() == d);
            CHECK(e.shortfall_db() > 0.0);
        }
    }
}

TEST_CASE("selection agrees with the exhaustive scan on random radios") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> power(-10.0, 16.0);
    std::uniform_real_distribution<double> current(10.0, 60.0);
    std::uniform_real_distribution<double> sens(-130.0, -80.0);
    std::uniform_real_distribution<double> dists(1.0, 3000.0);

    for (int trial = 0; trial < 50; ++trial) {
        TransceiverProfile p;
        p.name = "random";
        p.supply_volts = 3.0;
        p.rx_current_ma = 19.0;
        std::vector<double> dbms;
        for (int i = 0; i < 4; ++i) dbms.push_back(power(rng));
        std::sort(dbms.rbegin(), dbms.rend());
        for (int i = 0; i < 4; ++i) {
            p.power_levels.push_back({i + 1, dbms[static_cast<std::size_t>(i)] - i * 1e-3,
                                      current(rng)});
        }
        double bps = 1000.0;
        for (int i = 0; i < 4; ++i) {
            p.rate_levels.push_back({bps, sens(rng)});
            bps *= 4.0;
        }
        p.validate();
        const LinkBudgetModel m = flat_model(23.3, 37.6, 0.0, 3.0);

        for (int k = 0; k < 20; ++k) {
            const double d = dists(rng);
            bool found = false;
            const TransmissionConfiguration expect = scan_best_pair(p, m, d, 520, found);
            if (!found) {
                CHECK_THROWS_AS(select_tx_config(p, m, d, 520), InfeasibleLinkError);
            } else {
                CHECK(select_tx_config(p, m, d, 520) == expect);
            }
        }
    }
}

TEST_CASE("maximum range inverts the budget") {
    TransceiverProfile p;
    p.name = "budget-40";
    p.supply_volts = 3.0;
    p.rx_current_ma = 10.0;
    p.power_levels = {{1, 20.0, 30.0}};
    p.rate_levels = {{1000.0, -20.0}};
    CHECK(max_range_m(p, flat_model(0.0, 20.0)) == doctest::Approx(100.0).epsilon(1e-12));

    TransceiverProfile q = p;
    q.power_levels = {{1, 0.0, 30.0}};
    q.rate_levels = {{1000.0, 0.0}};
    CHECK(max_range_m(q, flat_model(0.0, 20.0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("maximum range is the feasibility boundary") {
    const TransceiverProfile p = two_by_two_profile();
    const LinkBudgetModel m = flat_model(23.3, 37.6, 0.0, 3.0);
    const double d = max_range_m(p, m);
    TransmissionConfiguration cfg{p.max_power().level, p.max_power().tx_power_dbm,
                                  p.max_power().tx_current_ma, p.min_rate().bits_per_second,
                                  p.min_rate().sensitivity_dbm};
    CHECK(link_feasible(p, m, cfg, d));
    CHECK(link_feasible(p, m, cfg, d * (1.0 - 1e-9)));
    CHECK_FALSE(link_feasible(p, m, cfg, d * (1.0 + 1e-9)));
    CHECK_FALSE(link_feasible(p, m, cfg, d * 1.01));
}

TEST_CASE("profile validation names the bad field") {
    TransceiverProfile p = two_by_two_profile();
    p.power_levels.clear();
    try {
        p.validate();
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "power_levels");
    }

    TransceiverProfile q = two_by_two_profile();
    q.power_levels[1].tx_power_dbm = 20.0;  // not decreasing
    CHECK_THROWS_AS(q.validate(), ValidationError);

    TransceiverProfile r = two_by_two_profile();
    r.rate_levels[0].bits_per_second = r.rate_levels[1].bits_per_second;
    CHECK_THROWS_AS(r.validate(), ValidationError);
}
