#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ringhop/errors.hpp"

namespace ringhop {

/// A routing action: per-ring hop lengths. hop(r) rings are skipped by the
/// transmissions of ring r, so its parents live in ring r - hop(r). Valid
/// actions satisfy 1 <= hop(r) <= r. Fixed capacity avoids heap churn when
/// enumerating large spaces.
class HopsCombination {
public:
    static constexpr int kMaxRings = 10;

    HopsCombination() = default;
    HopsCombination(std::initializer_list<int> hops);

    static HopsCombination single_hop(int rings);     // hop(r) == r, straight to the GW
    static HopsCombination next_ring_hop(int rings);  // hop(r) == 1

    int size() const noexcept { return size_; }
    int hop(int ring) const;  // 1-based ring index

    void push_back(int hop);

    /// True iff every hop satisfies 1 <= hop(r) <= r.
    bool valid() const noexcept;

    bool operator==(const HopsCombination& other) const noexcept;
    bool operator<(const HopsCombination& other) const noexcept;  // lexicographic

    /// "(1 2 3)" -- the notation used in logs and on the CLI.
    std::string to_string() const;

    /// Parses "(1 2 3)" or "1 2 3"; throws ValidationError on malformed input.
    static HopsCombination parse(std::string_view text);

private:
    std::uint8_t size_ = 0;
    std::array<std::uint8_t, kMaxRings> hops_{};  // unused tail stays zero
};

/// All valid hops combinations for a ring count, in lexicographic order.
/// |actions| == rings!.
class ActionSpace {
public:
    static constexpr int kMaxRingsEnumerable = 10;  // 10! = 3,628,800 actions

    explicit ActionSpace(int rings);

    int rings() const noexcept { return rings_; }
    std::size_t size() const noexcept { return actions_.size(); }
    const HopsCombination& action(std::size_t index) const { return actions_[index]; }
    const std::vector<HopsCombination>& actions() const noexcept { return actions_; }

    /// Index of an action in lexicographic order; throws if not a member.
    std::size_t index_of(const HopsCombination& action) const;

private:
    int rings_;
    std::vector<HopsCombination> actions_;
};

ActionSpace enumerate_actions(int rings);

/// L1 distance between two hop vectors; throws std::invalid_argument on
/// length mismatch.
int hop_distance(const HopsCombination& a, const HopsCombination& b);

/// Inverse L1 distance; +infinity for identical actions.
double similarity(const HopsCombination& a, const HopsCombination& b);

/// Indices (into `unexplored`... returned values index the space) of the
/// unexplored actions most similar to `best`; all ties are returned. Throws
/// ConfigurationError when the pool is empty.
std::vector<std::size_t> most_similar_unexplored(const ActionSpace& space,
                                                 const std::vector<std::size_t>& unexplored,
                                                 const HopsCombination& best);

}  // namespace ringhop

template <>
struct std::hash<ringhop::HopsCombination> {
    std::size_t operator()(const ringhop::HopsCombination& a) const noexcept {
        std::size_t h = static_cast<std::size_t>(a.size());
        for (int r = 1; r <= a.size(); ++r) {
            h = h * 1099511628211ull + static_cast<std::size_t>(a.hop(r));
        }
        return h;
    }
};
