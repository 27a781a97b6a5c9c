#include <doctest.h>

#include "ringhop/topology.hpp"

using namespace ringhop;

TEST_CASE("node counts and branch loads") {
    const NetworkStructure net1 = build_network(3, 2, 3, 900.0);
    CHECK(net1.node_count() == 21);
    CHECK(net1.branch_load() == 7);

    const NetworkStructure net2 = build_network(2, 1, 4, 900.0);
    CHECK(net2.node_count() == 8);
    CHECK(net2.branch_load() == 2);

    const NetworkStructure net3 = build_network(1, 5, 1, 900.0);
    CHECK(net3.node_count() == 1);
    CHECK(net3.branch_load() == 1);

    // 1 + 8 + 64 + 512
    const NetworkStructure net4 = build_network(4, 8, 1, 900.0);
    CHECK(net4.node_count() == 585);
}

TEST_CASE("nodes per ring") {
    const NetworkStructure net = build_network(3, 2, 3, 900.0);
    CHECK(net.nodes_in_ring(3) == 12);
    CHECK(net.nodes_in_ring(1) == 3);
    CHECK(build_network(4, 8, 1, 900.0).nodes_in_ring(4) == 512);

    CHECK_THROWS_AS(net.nodes_in_ring(0), std::out_of_range);
    CHECK_THROWS_AS(net.nodes_in_ring(4), std::out_of_range);
}

TEST_CASE("ring node counts sum to the total") {
    for (int rings = 1; rings <= 5; ++rings) {
        for (int c = 1; c <= 4; ++c) {
            for (int b = 1; b <= 3; ++b) {
                const NetworkStructure net = build_network(rings, c, b, 100.0);
                std::int64_t sum = 0;
                for (int r = 1; r <= rings; ++r) sum += net.nodes_in_ring(r);
                CHECK(sum == net.node_count());
            }
        }
    }
}

TEST_CASE("link distances under equidistant spreading") {
    const NetworkStructure net = build_network(3, 2, 1, 900.0);
    CHECK(net.link_distance_m(3, 3) == doctest::Approx(900.0).epsilon(1e-12));
    CHECK(net.link_distance_m(2, 1) == doctest::Approx(300.0).epsilon(1e-12));
    CHECK(net.link_distance_m(1, 1) == doctest::Approx(300.0).epsilon(1e-12));

    // Hop to the gateway spans the ring's own distance; any hop of length d
    // spans d * D / R.
    for (int rings = 1; rings <= 6; ++rings) {
        const NetworkStructure n = build_network(rings, 2, 1, 1234.5);
        for (int r = 1; r <= rings; ++r) {
            CHECK(n.link_distance_m(r, r) == n.ring_distance_m(r));
            for (int hop = 1; hop <= r; ++hop) {
                CHECK(n.link_distance_m(r, hop) ==
                      doctest::Approx(hop * 1234.5 / rings).epsilon(1e-12));
            }
        }
        CHECK(n.ring_distance_m(rings) == 1234.5);  // exact by construction
        CHECK(n.ring_distance_m(0) == 0.0);
    }
}

TEST_CASE("invalid hops and parameters are rejected") {
    const NetworkStructure net = build_network(3, 2, 1, 900.0);
    CHECK_THROWS_AS(net.link_distance_m(2, 3), ValidationError);
    CHECK_THROWS_AS(net.link_distance_m(1, 0), ValidationError);

    CHECK_THROWS_AS(build_network(0, 2, 1, 900.0), ValidationError);
    CHECK_THROWS_AS(build_network(3, 0, 1, 900.0), ValidationError);
    CHECK_THROWS_AS(build_network(3, 2, 0, 900.0), ValidationError);
    CHECK_THROWS_AS(build_network(3, 2, 1, 0.0), ValidationError);
    CHECK_THROWS_AS(build_network(3, 2, 1, -5.0), ValidationError);

    try {
        build_network(0, 2, 1, 900.0);
    } catch (const ValidationError& e) {
        CHECK(e.field() == "rings");
    }
}

TEST_CASE("construction is deterministic") {
    const NetworkStructure a = build_network(4, 3, 2, 777.0);
    const NetworkStructure b = build_network(4, 3, 2, 777.0);
    CHECK(a.node_count() == b.node_count());
    for (int r = 0; r <= 4; ++r) {
        CHECK(a.ring_distance_m(r) == b.ring_distance_m(r));
    }
}
