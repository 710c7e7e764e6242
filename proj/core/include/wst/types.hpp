#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wst/errors.hpp"

namespace wst {

enum class TaskKind { reasoning, alignment };

const char* to_string(TaskKind kind) noexcept;
TaskKind task_kind_from_string(std::string_view name);

/// One task instance: a math problem or an alignment prompt.
struct Query {
  std::string id;
  TaskKind task_kind = TaskKind::reasoning;
  std::string text;
  std::optional<std::string> reference_answer;  // reasoning only
};

/// Teacher output composed into the student prompt. action_index and
/// logprob_old are present together for the toy policy teacher (they feed
/// the policy update) and absent together for remote teachers.
struct Instruction {
  std::string text;
  std::optional<int> action_index;
  std::optional<double> logprob_old;
};

/// Two-objective alignment score. Serialized order is [harmless, helpful].
struct RewardVector {
  double helpful = 0.0;
  double harmless = 0.0;
};

/// One student output plus its grade(s), filled in once scored.
struct Generation {
  std::string text;
  std::optional<double> scalar_reward;
  std::optional<RewardVector> reward_vector;
};

/// Simplex weights over [harmless, helpful].
struct PreferenceWeights {
  std::array<double, 2> w{0.5, 0.5};

  double harmless_weight() const noexcept { return w[0]; }
  double helpful_weight() const noexcept { return w[1]; }
};

/// Returns w unchanged when every component is >= 0 and the sum is within
/// 1e-9 of 1; throws Error(invalid_weights) naming the violated constraint.
PreferenceWeights validate_weights(const PreferenceWeights& weights);

struct SamplingConfig {
  int K = 1;  // student samples per episode; 10 for reasoning, 1 for alignment
  double temperature = 0.7;
  int max_tokens = 512;
  std::uint64_t seed = 0;
};

/// One (query, instruction, K generations) record with its scalar reward:
/// reward = mean_reward - baseline.
struct Episode {
  std::string query_id;
  Instruction instruction;
  std::vector<Generation> generations;
  double mean_reward = 0.0;
  double baseline = 0.0;
  double reward = 0.0;
};

/// Builds an Episode from graded generations; every generation must carry a
/// scalar reward. Throws Error(empty_input) on an empty generation list.
Episode make_episode(std::string query_id, Instruction instruction,
                     std::vector<Generation> graded, double baseline);

}  // namespace wst
