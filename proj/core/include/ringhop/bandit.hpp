#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ringhop/action_space.hpp"

namespace ringhop {

enum class ScheduleKind {
    Constant,
    QuadraticDecreasing,
};

/// Exploration-randomness schedule. Constant keeps the initial value;
/// QuadraticDecreasing applies eps_i = min{1, sqrt(eps_o / i)}, i.e. eps^2
/// falls off as 1/i, which spends about 2 * sqrt(eps_o * I) iterations
/// exploring over a horizon of I.
struct EpsilonSchedule {
    ScheduleKind kind = ScheduleKind::Constant;
    double initial = 1.0;

    void validate() const;

    bool operator==(const EpsilonSchedule&) const = default;
};

/// Value of epsilon at iteration i (i >= 2); iteration 1 uses the schedule's
/// initial value directly. `previous` is accepted for schedule families that
/// need it; the built-in ones are closed-form in i.
double epsilon_next(const EpsilonSchedule& schedule, double previous, std::int64_t iteration);

/// Which reading of the similarity-randomness parameter applies while
/// exploring. Results: similarity-driven with probability 1 - eps_s (so a
/// decreasing eps_s makes similarity take over). Definition: similarity-driven
/// with probability eps_s.
enum class SimilaritySemantics {
    Results,
    Definition,
};

struct PolicyConfig {
    bool similarity_enabled = false;
    EpsilonSchedule epsilon;
    EpsilonSchedule epsilon_s;
    SimilaritySemantics semantics = SimilaritySemantics::Results;

    void validate() const;

    bool operator==(const PolicyConfig&) const = default;
};

/// Epsilon-greedy learner over a deterministic-reward action space, with an
/// optional similarity-driven second exploration layer. Exploration samples
/// without replacement: an explored action is never drawn again by the
/// exploring branch. Rewards of value 0 mark failed evaluations and never
/// become the best action.
class EpsilonGreedyLearner {
public:
    /// Reward oracle; must return 0 for actions that cannot be evaluated.
    using Environment = std::function<double(std::size_t action_index)>;

    struct StepResult {
        std::size_t action_index = 0;
        double reward = 0.0;
        bool explored_new = false;
    };

    EpsilonGreedyLearner(const ActionSpace& space, PolicyConfig config, std::uint64_t seed);

    /// Draws the action the current iteration would take. Consumes
    /// randomness but commits nothing; step() performs the same draw and
    /// then commits it.
    std::size_t select_action();

    /// Runs one iteration: select, evaluate (memoized), record, advance.
    StepResult step(const Environment& env);

    std::int64_t iteration() const noexcept { return iteration_; }
    double epsilon() const noexcept { return epsilon_; }
    double epsilon_s() const noexcept { return epsilon_s_; }
    std::size_t explored_count() const noexcept { return explored_count_; }
    bool fully_explored() const noexcept { return unexplored_.empty(); }

    /// Best explored action; empty until a positive reward has been seen.
    std::optional<std::size_t> best_action() const noexcept { return best_; }
    double best_reward() const noexcept { return best_reward_; }

    bool explored(std::size_t action_index) const { return explored_flag_.at(action_index); }
    double recorded_reward(std::size_t action_index) const {
        return rewards_.at(action_index);
    }

    const std::vector<std::size_t>& history() const noexcept { return history_; }
    const std::vector<double>& reward_history() const noexcept { return reward_history_; }

    /// Iteration at which the last action was explored, or -1 while some
    /// remain unexplored.
    std::int64_t all_explored_iteration() const noexcept { return all_explored_iteration_; }

private:
    std::size_t draw_uniform(const std::vector<std::size_t>& pool);
    void commit(std::size_t action_index, double reward_value);

    const ActionSpace& space_;
    PolicyConfig config_;
    std::mt19937_64 rng_;

    std::int64_t iteration_ = 1;
    double epsilon_;
    double epsilon_s_;

    std::vector<std::size_t> unexplored_;     // swap-removed as actions commit
    std::vector<std::size_t> pool_position_;  // action index -> slot in unexplored_
    std::vector<char> explored_flag_;
    std::vector<double> rewards_;
    std::size_t explored_count_ = 0;

    std::optional<std::size_t> best_;
    double best_reward_ = 0.0;

    std::vector<std::size_t> history_;
    std::vector<double> reward_history_;
    std::int64_t all_explored_iteration_ = -1;
};

}  // namespace ringhop
