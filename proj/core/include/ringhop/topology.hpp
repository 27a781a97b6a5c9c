#pragma once

#include <cstdint>
#include <vector>

#include "ringhop/errors.hpp"

namespace ringhop {

/// How consecutive rings are spaced between the gateway and the last ring.
enum class Spreading {
    Equidistant,
};

/// Immutable ring/branch tree structure. Nodes of ring r (1-based) sit at a
/// common distance from the gateway, which occupies ring 0 at distance 0.
/// Ring r holds branches * children_ratio^(r-1) stations.
class NetworkStructure {
public:
    NetworkStructure(int rings, int children_ratio, int branches, double max_distance_m,
                     Spreading spreading = Spreading::Equidistant);

    int rings() const noexcept { return rings_; }
    int children_ratio() const noexcept { return children_ratio_; }
    int branches() const noexcept { return branches_; }
    double max_distance_m() const noexcept { return max_distance_m_; }
    Spreading spreading() const noexcept { return spreading_; }

    /// Total number of stations (the gateway is not counted).
    std::int64_t node_count() const noexcept { return node_count_; }

    /// Stations per branch: sum over rings of children_ratio^(r-1).
    std::int64_t branch_load() const noexcept { return branch_load_; }

    /// Stations in ring r (1 <= r <= rings).
    std::int64_t nodes_in_ring(int ring) const;

    /// Distance of ring r to the gateway; ring 0 is the gateway itself.
    double ring_distance_m(int ring) const;

    /// Distance covered by a transmission from ring r with hop length hop,
    /// i.e. towards ring r - hop (1 <= hop <= r).
    double link_distance_m(int ring, int hop) const;

private:
    int rings_;
    int children_ratio_;
    int branches_;
    double max_distance_m_;
    Spreading spreading_;
    std::vector<double> ring_distances_;  // index 0..rings, [0] == 0
    std::int64_t branch_load_ = 0;
    std::int64_t node_count_ = 0;
};

/// Validating factory; throws ValidationError naming the bad field.
NetworkStructure build_network(int rings, int children_ratio, int branches,
                               double max_distance_m,
                               Spreading spreading = Spreading::Equidistant);

}  // namespace ringhop
