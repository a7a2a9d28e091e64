#pragma once

#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "embedplan/dataset.hpp"
#include "embedplan/model.hpp"
#include "embedplan/rng.hpp"

namespace embedplan::train {

using model::Mat;
using model::Vec;

struct TrainConfig {
    double lambda = 2.0;
    double tau = 0.07;
    std::size_t batch_size = 128;
    double lr = 4e-5;
    double weight_decay = 1e-2;
    std::size_t max_epochs = 400;
    std::size_t warmup_epochs = 10;
    std::size_t patience = 100;
    std::size_t k_actions = 50;
    std::uint64_t seed = 42;

    void validate() const;  // throws ConfigError
    // Missing fields keep their defaults; unknown fields are rejected.
    static TrainConfig from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

// Loss value plus gradients w.r.t. the (unnormalized) predictions and targets.
struct ContrastiveResult {
    double loss = 0;
    Mat d_pred;
    Mat d_target;
};

// InfoNCE over in-batch targets: row i scores prediction i against every target
// by cosine / tau; the positive is target i.
ContrastiveResult infonce_state_loss(const Mat& pred, const Mat& target, double tau);

// Softmax over candidate predictions (columns) against one target; the positive
// is column `positive`.
ContrastiveResult candidate_loss(const Mat& preds, const Vec& target, std::size_t positive, double tau);

struct ActionCandidates {
    std::vector<std::size_t> actions;  // action columns, true action first
    std::size_t positive = 0;
};

// The true action plus up to K-1 distractors drawn uniformly without replacement
// from the other applicable actions. Empty when fewer than two actions apply.
std::optional<ActionCandidates> sample_action_candidates(std::size_t true_action,
                                                         std::span<const std::size_t> applicable, std::size_t k,
                                                         Rng& rng);

struct LossBreakdown {
    double l_state = 0;
    double l_action = 0;
    double l_total = 0;  // l_state + lambda * l_action
    double grad_norm = 0;
    std::size_t skipped_action = 0;  // samples with fewer than two applicable actions
};

enum class Terms { State, Action, Both };

// Losses for one batch and, if grad is given, their gradient accumulated into it.
// Terms::Action yields the unweighted action-loss gradient; Terms::Both yields
// grad(l_state) + lambda * grad(l_action).
LossBreakdown batch_gradient(const model::TransitionModel& m, const EncodedCorpus& data,
                             std::span<const std::size_t> items, const TrainConfig& cfg, std::uint64_t sample_seed,
                             Terms terms, model::ParamVector* grad);

struct AdamState {
    std::vector<double> m, v;
    std::size_t t = 0;
};

inline constexpr double kAdamBeta1 = 0.9;
inline constexpr double kAdamBeta2 = 0.999;
inline constexpr double kAdamEps = 1e-8;

// Decoupled weight decay; parameters are rounded to f32 afterwards.
void adamw_step(model::ParamVector& params, const model::ParamVector& grad, AdamState& state, double lr, double wd);

// Linear warmup from lr/warmup to lr over the first warmup epochs, then constant.
double learning_rate(const TrainConfig& cfg, std::size_t epoch);

struct HistoryRow {
    std::size_t epoch = 0;
    double l_state = 0;
    double l_action = 0;
    double val_hit5 = 0;
    double lr = 0;
};

struct FitResult {
    model::TransitionModel model;  // best validation checkpoint
    std::vector<HistoryRow> history;
    std::size_t best_epoch = 0;
    double best_val_hit5 = -1;
    std::size_t steps = 0;
    std::size_t skipped_action = 0;
    std::vector<std::string> validation_keys;
};

struct FitOptions {
    PoolPolicy policy = PoolPolicy::UniformDomain;
    std::set<std::string>* accessed = nullptr;  // every transition id read during training
    std::function<void(const HistoryRow&)> on_epoch;
};

// Throws EmptySplit when train_keys is empty.
FitResult fit(const EncodedCorpus& data, std::span<const std::string> train_keys, const TrainConfig& cfg,
              const model::ModelConfig& model_cfg, const FitOptions& options = {});

}  // namespace embedplan::train
