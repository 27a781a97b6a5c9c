#include "ringhop/topology.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace ringhop {

namespace {

std::int64_t checked_pow(int base, int exp) {
    std::int64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (result > std::numeric_limits<std::int64_t>::max() / base) {
            throw ValidationError("children_ratio", "network too large: node count overflows");
        }
        result *= base;
    }
    return result;
}

}  // namespace

NetworkStructure::NetworkStructure(int rings, int children_ratio, int branches,
                                   double max_distance_m, Spreading spreading)
    : rings_(rings),
      children_ratio_(children_ratio),
      branches_(branches),
      max_distance_m_(max_distance_m),
      spreading_(spreading) {
    if (rings < 1) throw ValidationError("rings", "must be >= 1");
    if (children_ratio < 1) throw ValidationError("children_ratio", "must be >= 1");
    if (branches < 1) throw ValidationError("branches", "must be >= 1");
    if (!(max_distance_m > 0.0)) throw ValidationError("max_distance", "must be > 0");

    for (int r = 1; r <= rings; ++r) {
        std::int64_t per_branch = checked_pow(children_ratio, r - 1);
        if (branch_load_ > std::numeric_limits<std::int64_t>::max() - per_branch) {
            throw ValidationError("children_ratio", "network too large: node count overflows");
        }
        branch_load_ += per_branch;
    }
    if (branch_load_ > std::numeric_limits<std::int64_t>::max() / branches) {
        throw ValidationError("branches", "network too large: node count overflows");
    }
    node_count_ = branch_load_ * branches;

    ring_distances_.resize(static_cast<std::size_t>(rings) + 1);
    ring_distances_[0] = 0.0;
    // r/R evaluated first so the last ring lands exactly on max_distance.
    for (int r = 1; r <= rings; ++r) {
        ring_distances_[static_cast<std::size_t>(r)] =
            max_distance_m * (static_cast<double>(r) / static_cast<double>(rings));
    }
}

std::int64_t NetworkStructure::nodes_in_ring(int ring) const {
    if (ring < 1 || ring > rings_) {
        throw std::out_of_range("ring index " + std::to_string(ring) + " not in [1, " +
                                std::to_string(rings_) + "]");
    }
    std::int64_t per_branch = 1;
    for (int i = 1; i < ring; ++i) per_branch *= children_ratio_;
    return per_branch * branches_;
}

double NetworkStructure::ring_distance_m(int ring) const {
    if (ring < 0 || ring > rings_) {
        throw std::out_of_range("ring index " + std::to_string(ring) + " not in [0, " +
                                std::to_string(rings_) + "]");
    }
    return ring_distances_[static_cast<std::size_t>(ring)];
}

double NetworkStructure::link_distance_m(int ring, int hop) const {
    if (ring < 1 || ring > rings_) {
        throw std::out_of_range("ring index " + std::to_string(ring) + " not in [1, " +
                                std::to_string(rings_) + "]");
    }
    if (hop < 1 || hop > ring) {
        throw ValidationError("hop", "hop length " + std::to_string(hop) +
                                         " invalid for ring " + std::to_string(ring));
    }
    return ring_distances_[static_cast<std::size_t>(ring)] -
           ring_distances_[static_cast<std::size_t>(ring - hop)];
}

NetworkStructure build_network(int rings, int children_ratio, int branches,
                               double max_distance_m, Spreading spreading) {
    return NetworkStructure(rings, children_ratio, branches, max_distance_m, spreading);
}

}  // namespace ringhop
