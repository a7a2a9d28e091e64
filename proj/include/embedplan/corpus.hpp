#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "embedplan/pddl.hpp"
#include "embedplan/world.hpp"

namespace embedplan {

struct GenOptions {
    std::size_t max_plans = 100;
    std::size_t state_cap = 1'000'000;
    pddl::GroundingOptions grounding;
};

struct ProblemData {
    pddl::ProblemDef def;
    pddl::GroundedProblem grounded;
    world::StateGraph graph;
    std::vector<int> distance;  // per graph node
    std::vector<world::Trajectory> plans;
};

struct DomainData {
    std::string name;
    pddl::DomainDef def;
    world::TemplateSet templates;
    std::vector<ProblemData> problems;  // sorted by file name p01, p02, ...
    std::vector<world::Transition> transitions;
};

// Reads <dir>/domain.pddl, <dir>/p*.pddl and <dir>/templates.json.
DomainData generate_domain(const std::filesystem::path& dir, const GenOptions& options = {});

struct StateRecord {
    std::string domain, problem;
    world::StateId id;
    std::string text;
    int cost = world::kUnreachable;  // optimal plan length to the problem's goal
    std::vector<std::string> applicable;  // action ids applicable in this state
};

struct ActionRecord {
    std::string domain, problem;
    std::string id;
    std::string text;
};

// Everything downstream stages need, as read from (or written to) the gen artifacts.
class Corpus {
public:
    Corpus() = default;
    Corpus(std::vector<world::Transition> transitions, std::vector<StateRecord> states,
           std::vector<ActionRecord> actions);

    static Corpus from_domains(const std::vector<DomainData>& domains);

    const std::vector<world::Transition>& transitions() const { return transitions_; }
    const std::vector<StateRecord>& states() const { return states_; }
    const std::vector<ActionRecord>& actions() const { return actions_; }

    // Domains in first-appearance order.
    const std::vector<std::string>& domains() const { return domain_order_; }
    std::vector<std::string> problems_of(const std::string& domain) const;

    // Distinct state ids, sorted.
    const std::vector<world::StateId>& domain_states(const std::string& domain) const;
    const std::vector<world::StateId>& problem_states(const std::string& domain, const std::string& problem) const;
    const std::vector<std::string>& problem_actions(const std::string& domain, const std::string& problem) const;
    const StateRecord& state(const std::string& domain, const std::string& problem, world::StateId id) const;
    const std::string& state_text(world::StateId id) const;

    const world::Transition& transition(const std::string& key) const;
    bool has_transition(const std::string& key) const { return by_key_.count(key) > 0; }

    // Writes transitions.jsonl, states.jsonl, actions.jsonl, state_info.jsonl.
    void write(const std::filesystem::path& dir) const;
    static Corpus read(const std::filesystem::path& dir);

private:
    void build_index();

    using ProblemKey = std::pair<std::string, std::string>;
    std::vector<world::Transition> transitions_;
    std::vector<StateRecord> states_;
    std::vector<ActionRecord> actions_;

    std::vector<std::string> domain_order_;
    std::map<std::string, std::vector<std::string>> problems_;
    std::map<std::string, std::vector<world::StateId>> domain_states_;
    std::map<ProblemKey, std::vector<world::StateId>> problem_states_;
    std::map<ProblemKey, std::vector<std::string>> problem_actions_;
    std::map<std::pair<ProblemKey, std::uint64_t>, std::size_t> state_index_;
    std::map<std::uint64_t, std::size_t> text_index_;
    std::map<std::string, std::size_t> by_key_;
};

}  // namespace embedplan
