#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "embedplan/corpus.hpp"
#include "embedplan/dataset.hpp"

namespace embedplan::protocols {

enum class Protocol { Interpolation, PlanVariant, Extrapolation, MultiDomain, CrossDomain, Loo };
std::string to_string(Protocol p);
Protocol protocol_from_string(const std::string& s);

struct SplitResult {
    Protocol name = Protocol::Interpolation;
    std::uint64_t seed = 0;
    std::vector<std::string> train_ids;  // sorted transition ids
    std::vector<std::string> test_ids;
    PoolPolicy pool_policy = PoolPolicy::UniformDomain;

    // metadata
    std::vector<std::string> train_domains, test_domains;
    double ratio = 0.8;                                           // interpolation, extrapolation
    std::string held_out;                                         // loo
    std::map<std::string, std::vector<std::string>> train_problems;  // domain -> problems (extrapolation, multi)
    std::map<std::string, std::vector<std::string>> test_problems;
    std::map<std::string, std::vector<int>> train_plans;  // "domain/problem" -> plan ids (plan variant)
    std::map<std::string, std::vector<int>> test_plans;
    std::vector<std::string> excluded_problems;  // plan variant: single-plan problems

    nlohmann::ordered_json to_json() const;
    static SplitResult from_json(const nlohmann::json& j);
};

void write_split(const SplitResult& split, const std::filesystem::path& path);
SplitResult read_split(const std::filesystem::path& path);

// Random 80/20 over a domain's transitions. Throws TooFewTransitions (< 5).
SplitResult split_interpolation(const Corpus& corpus, const std::string& domain, std::uint64_t seed,
                                double ratio = 0.8);
// Per multi-plan problem, ceil(half) of its plans train and the rest test. Throws NoMultiPlanProblems.
SplitResult split_plan_variant(const Corpus& corpus, const std::string& domain, std::uint64_t seed);
// Whole problems to train or test, at least one test problem. Throws TooFewProblems (< 2).
SplitResult split_extrapolation(const Corpus& corpus, const std::string& domain, std::uint64_t seed,
                                double ratio = 0.8);
// Union of per-domain extrapolation splits.
SplitResult make_multi_domain(const Corpus& corpus, std::uint64_t seed);
// Throws SameDomain or UnknownDomain.
SplitResult make_cross_domain(const Corpus& corpus, const std::string& source, const std::string& target);
// Throws UnknownDomain.
SplitResult make_loo(const Corpus& corpus, const std::string& held_out);

// Disjointness and protocol-specific properties; returns one message per violation.
std::vector<std::string> check_invariants(const SplitResult& split, const Corpus& corpus);

}  // namespace embedplan::protocols
