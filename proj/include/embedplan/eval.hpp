#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "embedplan/dataset.hpp"
#include "embedplan/model.hpp"
#include "embedplan/rng.hpp"

namespace embedplan::eval {

inline constexpr std::size_t kPoolSize = 128;

struct CandidatePool {
    std::string query;
    std::vector<std::size_t> candidates;  // state columns, shuffled
    std::size_t truth_pos = 0;            // index of the ground truth in candidates
    PoolPolicy policy = PoolPolicy::UniformDomain;
    std::size_t effective_size() const { return candidates.size(); }
    bool underfull() const { return candidates.size() < kPoolSize; }
};

// Ground truth plus up to pool_size-1 distinct distractors drawn without
// replacement from the policy's eligible states. The query's own current
// state may be drawn as a distractor.
CandidatePool build_pool(const EncodedCorpus& data, const EncodedCorpus::Item& query, PoolPolicy policy, Rng& rng,
                         std::size_t pool_size = kPoolSize);

// 1-based rank of scores[truth]; ties with other candidates are resolved by a
// uniform draw over the tied positions.
std::size_t sampled_rank(std::span<const double> scores, std::size_t truth, Rng& rng);

// Frozen snapshot of a model for retrieval: corpus states projected through the
// state head and unit-normalized. Projection is done on demand unless eager.
class Scorer {
public:
    Scorer(const model::TransitionModel& m, const EncodedCorpus& data, bool eager = true);

    const model::TransitionModel& model() const { return *model_; }
    const EncodedCorpus& data() const { return *data_; }

    // Projects any of the given state columns not yet projected.
    void prepare(std::span<const std::size_t> state_cols) const;
    Eigen::VectorXd projected_state(std::size_t col) const;

    // Unit-normalized predictions, one column per item.
    model::Mat predict(std::span<const EncodedCorpus::Item* const> items) const;

    // Rank of the ground-truth next state within the query's pool.
    std::size_t retrieval_rank(const EncodedCorpus::Item& item, const Eigen::VectorXd& prediction,
                               const CandidatePool& pool, Rng& tie_rng) const;
    // Rank of the true action among all ground actions of the query's problem.
    std::size_t action_rank(const EncodedCorpus::Item& item, Rng& tie_rng) const;

private:
    const model::TransitionModel* model_;
    const EncodedCorpus* data_;
    mutable model::Mat states_;
    mutable std::vector<bool> ready_;
};

struct QueryOutcome {
    std::string key;
    std::size_t rank = 0;       // retrieval rank
    std::size_t pool_size = 0;
    std::size_t action_rank = 0;
    std::size_t action_count = 0;
};

// Per-query RNG streams are derived from (seed, transition key).
std::vector<QueryOutcome> evaluate_queries(const Scorer& scorer, std::span<const std::string> keys, PoolPolicy policy,
                                           std::uint64_t seed, bool with_actions = true);

// Fraction of queries whose rank is within k.
double hit_rate(std::span<const QueryOutcome> outcomes, std::size_t k);
double action_rate(std::span<const QueryOutcome> outcomes, std::size_t k);

bool hit_at_k(const Scorer& scorer, const CandidatePool& pool, std::size_t k, Rng& tie_rng);
bool action_acc_at_k(const Scorer& scorer, const EncodedCorpus::Item& item, std::size_t k, Rng& tie_rng);

struct PlanScore {
    double mean = 0.0;
    bool exact = false;
};

// Teacher-forced: each step is scored from its ground-truth state.
PlanScore score_plan(const std::vector<bool>& step_hits);
PlanScore plan_execute(const Scorer& scorer, std::span<const std::string> step_keys, PoolPolicy policy,
                       std::uint64_t seed, std::size_t k = 5);

// Groups outcomes by (domain, problem, plan_id) in step order.
std::vector<PlanScore> plan_scores(std::span<const QueryOutcome> outcomes, std::size_t k = 5);

struct MetricReport {
    std::string protocol;
    std::string domain;
    double hit1 = 0, hit5 = 0, hit10 = 0;
    double acc1 = 0, acc5 = 0, acc10 = 0;
    double plan_mean5 = 0, plan_exact5 = 0;
    std::size_t n_queries = 0;
    std::size_t n_plans = 0;
    std::size_t underfull_pools = 0;
    double mean_pool_size = 0;
    std::vector<std::uint64_t> seeds;
    std::map<std::string, double> std_err;  // per metric, across seeds
};

MetricReport summarize(std::string protocol, std::string domain, std::span<const QueryOutcome> outcomes);
// Mean over seeds with standard error of the mean.
MetricReport aggregate_seeds(std::span<const MetricReport> per_seed);

// ---- transfer matrix ----

struct TransferMatrix {
    std::vector<std::string> domains;
    std::map<std::pair<std::string, std::string>, double> cells;  // (source, target) -> Hit@5
    std::map<std::string, double> row_mean, col_mean;
    double mean = 0;
};

// Throws MissingModel when an off-diagonal cell is absent.
TransferMatrix cross_domain_matrix(const std::map<std::pair<std::string, std::string>, double>& cells,
                                   const std::vector<std::string>& domains);

// ---- statistics ----

struct StatsResult {
    std::size_t n = 0;
    double df = 0;
    double mean_diff = 0;
    double t = 0;
    double p = 1;
    double cohen_d = 0;  // mean difference over the root mean square of the two population SDs
    double d_z = 0;      // mean difference over the SD of the paired differences
    double ci_low = 0, ci_high = 0;
};

// Two-sided t test (paired, or Welch when unpaired); 95% CI of the mean difference.
StatsResult stats_compare(std::span<const double> a, std::span<const double> b, bool paired);

double pearson(std::span<const double> x, std::span<const double> y);

struct LdaResult {
    std::size_t n = 0;
    double pearson_r = 0;
    double partial_r = 0;  // controlling for text length
};

// Correlation between latent distance and optimal cost, and the same with text length partialled out.
LdaResult lda_probe(std::span<const double> distance, std::span<const double> cost, std::span<const double> length);

// Every state of the domain against the terminal state of its problem's first plan.
LdaResult lda_probe(const EncodedCorpus& data, const std::string& domain);

// Rows of points (columns of x) projected on the top principal directions.
model::Mat pca_project(const model::Mat& x, std::size_t dims = 2);

}  // namespace embedplan::eval
