#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "ringhop/action_space.hpp"

using namespace ringhop;

namespace {

// Brute-force reference: filter the full grid {1..R}^R by the validity rule.
std::vector<std::vector<int>> grid_filter(int rings) {
    std::vector<std::vector<int>> out;
    std::vector<int> hops(static_cast<std::size_t>(rings), 1);
    for (;;) {
        bool valid = true;
        for (int r = 1; r <= rings; ++r) {
            if (hops[static_cast<std::size_t>(r - 1)] > r) valid = false;
        }
        if (valid) out.push_back(hops);
        int r = rings - 1;
        while (r >= 0 && hops[static_cast<std::size_t>(r)] == rings) --r;
        if (r < 0) break;
        ++hops[static_cast<std::size_t>(r)];
        std::fill(hops.begin() + r + 1, hops.end(), 1);
    }
    return out;
}

}  // namespace

TEST_CASE("action space size is R!") {
    CHECK(enumerate_actions(3).size() == 6);
    CHECK(enumerate_actions(4).size() == 24);
    CHECK(enumerate_actions(7).size() == 5040);
    CHECK(enumerate_actions(1).size() == 1);
    CHECK(enumerate_actions(1).action(0) == HopsCombination{1});

    std::size_t factorial = 1;
    for (int rings = 1; rings <= 8; ++rings) {
        factorial *= static_cast<std::size_t>(rings);
        CHECK(enumerate_actions(rings).size() == factorial);
    }

    CHECK_THROWS_AS(enumerate_actions(11), CapacityError);
    CHECK_THROWS_AS(enumerate_actions(0), ValidationError);
}

TEST_CASE("enumeration matches the grid filter and is lexicographic") {
    for (int rings = 1; rings <= 6; ++rings) {
        const ActionSpace space = enumerate_actions(rings);
        const auto reference = grid_filter(rings);
        REQUIRE(space.size() == reference.size());
        for (std::size_t i = 0; i < space.size(); ++i) {
            const HopsCombination& a = space.action(i);
            CHECK(a.valid());
            for (int r = 1; r <= rings; ++r) {
                CHECK(a.hop(r) == reference[i][static_cast<std::size_t>(r - 1)]);
            }
            if (i > 0) CHECK(space.action(i - 1) < a);
            CHECK(space.index_of(a) == i);
        }
    }
}

TEST_CASE("single hop and next ring hop") {
    CHECK(HopsCombination::single_hop(2) == HopsCombination{1, 2});
    CHECK(HopsCombination::next_ring_hop(2) == HopsCombination{1, 1});
    CHECK(HopsCombination::single_hop(1) == HopsCombination::next_ring_hop(1));
    CHECK(HopsCombination::single_hop(4) == HopsCombination{1, 2, 3, 4});
}

TEST_CASE("action string round trip") {
    CHECK(HopsCombination({1, 1, 3}).to_string() == "(1 1 3)");
    CHECK(HopsCombination::parse("(1 1 3)") == HopsCombination{1, 1, 3});
    CHECK(HopsCombination::parse("1 2 2") == HopsCombination{1, 2, 2});
    CHECK(HopsCombination::parse("(1, 2, 2)") == HopsCombination{1, 2, 2});
    CHECK_THROWS_AS(HopsCombination::parse("(1 x 3)"), ValidationError);
    CHECK_THROWS_AS(HopsCombination::parse(""), ValidationError);
    CHECK_THROWS_AS(HopsCombination::parse("(0 1)"), ValidationError);

    const ActionSpace space5 = enumerate_actions(5);
    for (const auto& action : space5.actions()) {
        CHECK(HopsCombination::parse(action.to_string()) == action);
    }
}

TEST_CASE("similarity is the inverse hop distance") {
    CHECK(similarity(HopsCombination{1, 1, 1}, HopsCombination{1, 1, 2}) == doctest::Approx(1.0));
    CHECK(similarity(HopsCombination{1, 2, 1}, HopsCombination{1, 2, 3}) == doctest::Approx(0.5));
    CHECK(std::isinf(similarity(HopsCombination{1, 2, 1}, HopsCombination{1, 2, 1})));
    CHECK_THROWS_AS(similarity(HopsCombination{1, 1}, HopsCombination{1, 1, 1}),
                    std::invalid_argument);

    // Symmetric and positive for distinct actions.
    const ActionSpace space = enumerate_actions(4);
    for (std::size_t i = 0; i < space.size(); ++i) {
        for (std::size_t j = i + 1; j < space.size(); ++j) {
            const double s = similarity(space.action(i), space.action(j));
            CHECK(s == similarity(space.action(j), space.action(i)));
            CHECK(s > 0.0);
            CHECK(std::isfinite(s));
        }
    }
}

TEST_CASE("most similar unexplored actions") {
    const ActionSpace space = enumerate_actions(3);
    const auto index = [&](std::initializer_list<int> hops) {
        return space.index_of(HopsCombination(hops));
    };

    SUBCASE("unique best candidate") {
        const std::vector<std::size_t> unexplored = {index({1, 1, 2}), index({1, 2, 2})};
        const auto pool = most_similar_unexplored(space, unexplored, HopsCombination{1, 1, 1});
        REQUIRE(pool.size() == 1);
        CHECK(space.action(pool[0]) == HopsCombination{1, 1, 2});
    }

    SUBCASE("ties are all returned") {
        // (1 2 1) and (1 2 3) sit at distance 1 from (1 2 2); (1 1 1) at 2.
        const std::vector<std::size_t> unexplored = {index({1, 2, 1}), index({1, 2, 3}),
                                                     index({1, 1, 1})};
        auto pool = most_similar_unexplored(space, unexplored, HopsCombination{1, 2, 2});
        std::set<std::size_t> got(pool.begin(), pool.end());
        CHECK(got == std::set<std::size_t>{index({1, 2, 1}), index({1, 2, 3})});
    }

    SUBCASE("single remaining action is returned") {
        const std::vector<std::size_t> unexplored = {index({1, 2, 3})};
        const auto pool = most_similar_unexplored(space, unexplored, HopsCombination{1, 1, 1});
        REQUIRE(pool.size() == 1);
        CHECK(space.action(pool[0]) == HopsCombination{1, 2, 3});
    }

    SUBCASE("empty pool is an error") {
        CHECK_THROWS_AS(most_similar_unexplored(space, {}, HopsCombination{1, 1, 1}),
                        ConfigurationError);
    }
}
