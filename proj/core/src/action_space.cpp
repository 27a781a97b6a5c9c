#include "ringhop/action_space.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ringhop {

HopsCombination::HopsCombination(std::initializer_list<int> hops) {
    for (int h : hops) push_back(h);
}

HopsCombination HopsCombination::single_hop(int rings) {
    if (rings < 1 || rings > kMaxRings) {
        throw ValidationError("rings", "must be in [1, " + std::to_string(kMaxRings) + "]");
    }
    HopsCombination a;
    for (int r = 1; r <= rings; ++r) a.push_back(r);
    return a;
}

HopsCombination HopsCombination::next_ring_hop(int rings) {
    if (rings < 1 || rings > kMaxRings) {
        throw ValidationError("rings", "must be in [1, " + std::to_string(kMaxRings) + "]");
    }
    HopsCombination a;
    for (int r = 1; r <= rings; ++r) a.push_back(1);
    return a;
}

int HopsCombination::hop(int ring) const {
    if (ring < 1 || ring > size_) {
        throw std::out_of_range("ring index " + std::to_string(ring) + " not in [1, " +
                                std::to_string(size_) + "]");
    }
    return hops_[static_cast<std::size_t>(ring - 1)];
}

void HopsCombination::push_back(int hop) {
    if (size_ >= kMaxRings) {
        throw CapacityError("hops combination limited to " + std::to_string(kMaxRings) +
                            " rings");
    }
    if (hop < 1 || hop > 255) {
        throw ValidationError("hop", "hop length must be in [1, 255]");
    }
    hops_[size_++] = static_cast<std::uint8_t>(hop);
}

bool HopsCombination::valid() const noexcept {
    for (int r = 1; r <= size_; ++r) {
        int h = hops_[static_cast<std::size_t>(r - 1)];
        if (h < 1 || h > r) return false;
    }
    return size_ > 0;
}

bool HopsCombination::operator==(const HopsCombination& other) const noexcept {
    return size_ == other.size_ && hops_ == other.hops_;
}

bool HopsCombination::operator<(const HopsCombination& other) const noexcept {
    return std::lexicographical_compare(hops_.begin(), hops_.begin() + size_,
                                        other.hops_.begin(), other.hops_.begin() + other.size_);
}

std::string HopsCombination::to_string() const {
    std::string out = "(";
    for (int r = 1; r <= size_; ++r) {
        if (r > 1) out += ' ';
        out += std::to_string(hops_[static_cast<std::size_t>(r - 1)]);
    }
    out += ')';
    return out;
}

HopsCombination HopsCombination::parse(std::string_view text) {
    HopsCombination out;
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text) {
        if (c == '(' || c == ')' || c == ',') {
            cleaned += ' ';
        } else {
            cleaned += c;
        }
    }
    std::istringstream in(cleaned);
    std::string token;
    while (in >> token) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw ValidationError("action", "malformed hop '" + token + "'");
        }
        if (pos != token.size()) {
            throw ValidationError("action", "malformed hop '" + token + "'");
        }
        out.push_back(value);
    }
    if (out.size() == 0) throw ValidationError("action", "no hop lengths given");
    return out;
}

ActionSpace::ActionSpace(int rings) : rings_(rings) {
    if (rings < 1) throw ValidationError("rings", "must be >= 1");
    if (rings > kMaxRingsEnumerable) {
        throw CapacityError("action space for " + std::to_string(rings) +
                            " rings exceeds the supported ceiling of " +
                            std::to_string(kMaxRingsEnumerable) + "! actions");
    }

    std::size_t count = 1;
    for (int r = 1; r <= rings; ++r) count *= static_cast<std::size_t>(r);
    actions_.reserve(count);

    // Odometer over (hop_1, ..., hop_R) with hop_r in [1, r]; the last digit
    // runs fastest, which is exactly lexicographic order.
    std::vector<int> hops(static_cast<std::size_t>(rings), 1);
    for (;;) {
        HopsCombination a;
        for (int h : hops) a.push_back(h);
        actions_.push_back(a);
        int r = rings - 1;
        while (r >= 0) {
            if (hops[static_cast<std::size_t>(r)] < r + 1) {
                ++hops[static_cast<std::size_t>(r)];
                std::fill(hops.begin() + r + 1, hops.end(), 1);
                break;
            }
            --r;
        }
        if (r < 0) break;
    }
}

std::size_t ActionSpace::index_of(const HopsCombination& action) const {
    auto it = std::lower_bound(actions_.begin(), actions_.end(), action);
    if (it == actions_.end() || !(*it == action)) {
        throw std::out_of_range("action " + action.to_string() + " not in the space");
    }
    return static_cast<std::size_t>(it - actions_.begin());
}

ActionSpace enumerate_actions(int rings) { return ActionSpace(rings); }

int hop_distance(const HopsCombination& a, const HopsCombination& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("hop vectors differ in length: " +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
    int d = 0;
    for (int r = 1; r <= a.size(); ++r) d += std::abs(a.hop(r) - b.hop(r));
    return d;
}

double similarity(const HopsCombination& a, const HopsCombination& b) {
    const int d = hop_distance(a, b);
    if (d == 0) return std::numeric_limits<double>::infinity();
    return 1.0 / static_cast<double>(d);
}

std::vector<std::size_t> most_similar_unexplored(const ActionSpace& space,
                                                 const std::vector<std::size_t>& unexplored,
                                                 const HopsCombination& best) {
    if (unexplored.empty()) {
        throw ConfigurationError("no unexplored actions left; exploit instead");
    }
    // Max similarity == min integer L1 distance, so ties are exact.
    int best_distance = std::numeric_limits<int>::max();
    std::vector<std::size_t> pool;
    for (std::size_t idx : unexplored) {
        const int d = hop_distance(space.action(idx), best);
        if (d < best_distance) {
            best_distance = d;
            pool.clear();
            pool.push_back(idx);
        } else if (d == best_distance) {
            pool.push_back(idx);
        }
    }
    return pool;
}

}  // namespace ringhop
