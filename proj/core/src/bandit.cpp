#include "ringhop/bandit.hpp"

#include <cmath>

#include "ringhop/errors.hpp"

namespace ringhop {

void EpsilonSchedule::validate() const {
    if (!(initial >= 0.0 && initial <= 1.0)) {
        throw ValidationError("epsilon_initial", "must be in [0, 1]");
    }
}

double epsilon_next(const EpsilonSchedule& schedule, double previous, std::int64_t iteration) {
    (void)previous;
    switch (schedule.kind) {
        case ScheduleKind::Constant:
            return schedule.initial;
        case ScheduleKind::QuadraticDecreasing:
            return std::min(1.0,
                            std::sqrt(schedule.initial / static_cast<double>(iteration)));
    }
    return schedule.initial;
}

void PolicyConfig::validate() const {
    epsilon.validate();
    if (similarity_enabled) epsilon_s.validate();
}

EpsilonGreedyLearner::EpsilonGreedyLearner(const ActionSpace& space, PolicyConfig config,
                                           std::uint64_t seed)
    : space_(space),
      config_(config),
      rng_(seed),
      epsilon_(config.epsilon.initial),
      epsilon_s_(config.epsilon_s.initial),
      pool_position_(space.size()),
      explored_flag_(space.size(), 0),
      rewards_(space.size(), 0.0) {
    config_.validate();
    unexplored_.resize(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        unexplored_[i] = i;
        pool_position_[i] = i;
    }
}

std::size_t EpsilonGreedyLearner::draw_uniform(const std::vector<std::size_t>& pool) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng_)];
}

std::size_t EpsilonGreedyLearner::select_action() {
    // Nothing left to explore: exploit unconditionally.
    if (unexplored_.empty()) {
        if (!best_) {
            throw ConfigurationError("all actions explored but none produced a reward");
        }
        return *best_;
    }
    // Iteration 1 (and any state without a usable best) must explore.
    if (!best_) {
        return draw_uniform(unexplored_);
    }

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const bool explore = unit(rng_) < epsilon_;
    if (!explore) {
        return *best_;
    }
    if (!config_.similarity_enabled) {
        return draw_uniform(unexplored_);
    }

    const double u = unit(rng_);
    const bool uniform_branch = config_.semantics == SimilaritySemantics::Results
                                    ? u < epsilon_s_
                                    : u >= epsilon_s_;
    if (uniform_branch) {
        return draw_uniform(unexplored_);
    }
    const std::vector<std::size_t> pool =
        most_similar_unexplored(space_, unexplored_, space_.action(*best_));
    return draw_uniform(pool);
}

void EpsilonGreedyLearner::commit(std::size_t action_index, double reward_value) {
    explored_flag_[action_index] = 1;
    rewards_[action_index] = reward_value;
    ++explored_count_;

    const std::size_t pos = pool_position_[action_index];
    const std::size_t last = unexplored_.back();
    unexplored_[pos] = last;
    pool_position_[last] = pos;
    unexplored_.pop_back();
    if (unexplored_.empty() && all_explored_iteration_ < 0) {
        all_explored_iteration_ = iteration_;
    }

    // Zero marks a failed evaluation; it never becomes the best action.
    if (reward_value > 0.0) {
        const bool better =
            !best_ || reward_value > best_reward_ ||
            (reward_value == best_reward_ && space_.action(action_index) < space_.action(*best_));
        if (better) {
            best_ = action_index;
            best_reward_ = reward_value;
        }
    }
}

EpsilonGreedyLearner::StepResult EpsilonGreedyLearner::step(const Environment& env) {
    if (iteration_ >= 2) {
        epsilon_ = epsilon_next(config_.epsilon, epsilon_, iteration_);
        if (config_.similarity_enabled) {
            epsilon_s_ = epsilon_next(config_.epsilon_s, epsilon_s_, iteration_);
        }
    }

    const std::size_t index = select_action();
    StepResult result;
    result.action_index = index;
    if (explored_flag_[index]) {
        result.reward = rewards_[index];
        result.explored_new = false;
    } else {
        result.reward = env(index);
        result.explored_new = true;
        commit(index, result.reward);
    }

    history_.push_back(index);
    reward_history_.push_back(result.reward);
    ++iteration_;
    return result;
}

}  // namespace ringhop
