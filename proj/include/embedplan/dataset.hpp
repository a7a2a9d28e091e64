#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "embedplan/corpus.hpp"
#include "embedplan/embed.hpp"
#include "embedplan/model.hpp"

namespace embedplan {

// Where retrieval distractors come from.
enum class PoolPolicy { UniformDomain, WithinProblem };
std::string to_string(PoolPolicy p);
PoolPolicy pool_policy_from_string(const std::string& s);

// Corpus joined with an embedding table: every state and action as a matrix
// column, every transition as column indices.
class EncodedCorpus {
public:
    struct Item {
        std::string key;
        std::string domain, problem;
        std::size_t s = 0, a = 0, next = 0;  // state / action / state columns
    };

    // Throws MissingText when the table lacks a state or action of the corpus.
    EncodedCorpus(const Corpus& corpus, const embed::EmbeddingTable& table);

    const Corpus& corpus() const { return *corpus_; }
    std::size_t dim() const { return static_cast<std::size_t>(states_.rows()); }

    const model::Mat& states() const { return states_; }
    const model::Mat& actions() const { return actions_; }
    std::size_t state_count() const { return static_cast<std::size_t>(states_.cols()); }
    std::size_t action_count() const { return static_cast<std::size_t>(actions_.cols()); }

    const Item& item(const std::string& key) const;
    const std::vector<Item>& items() const { return items_; }

    std::size_t state_col(world::StateId id) const;
    world::StateId state_id(std::size_t col) const { return state_ids_[col]; }
    std::size_t action_col(const std::string& action_id) const;
    const std::string& action_id(std::size_t col) const { return action_ids_[col]; }

    // Action columns applicable in the state (per gen's state_info).
    const std::vector<std::size_t>& applicable(std::size_t state_col) const { return applicable_[state_col]; }
    const std::vector<std::size_t>& problem_actions(const std::string& domain, const std::string& problem) const;
    const std::vector<std::size_t>& problem_states(const std::string& domain, const std::string& problem) const;
    const std::vector<std::size_t>& domain_states(const std::string& domain) const;

    // Eligible distractor source for a query under a pool policy.
    const std::vector<std::size_t>& pool_source(const Item& item, PoolPolicy policy) const;

private:
    const Corpus* corpus_;
    model::Mat states_, actions_;
    std::vector<world::StateId> state_ids_;
    std::vector<std::string> action_ids_;
    std::unordered_map<std::uint64_t, std::size_t> state_index_;
    std::unordered_map<std::string, std::size_t> action_index_;
    std::vector<std::vector<std::size_t>> applicable_;
    std::vector<Item> items_;
    std::unordered_map<std::string, std::size_t> item_index_;
    std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> problem_actions_, problem_states_;
    std::map<std::string, std::vector<std::size_t>> domain_states_;
};

}  // namespace embedplan
