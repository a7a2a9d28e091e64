#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "embedplan/pddl.hpp"

namespace embedplan::world {

struct StateId {
    std::uint64_t value = 0;
    auto operator<=>(const StateId&) const = default;
    std::string str() const { return std::to_string(value); }
};

// 64-bit FNV-1a of the canonical serialization.
StateId state_id_of(std::string_view canonical_serialization);

// Tracks id -> serialization and hard-fails on collisions.
class StateRegistry {
public:
    StateId intern(const std::string& canonical_serialization);
    std::size_t size() const { return by_id_.size(); }

private:
    std::unordered_map<std::uint64_t, std::string> by_id_;
};

struct Edge {
    std::size_t from;
    std::size_t action;  // index into GroundedProblem::actions
    std::size_t to;
};

struct StateGraph {
    std::vector<pddl::AtomSet> states;  // BFS discovery order; states[0] is initial
    std::vector<StateId> ids;
    std::vector<Edge> edges;            // grouped by source, actions in id order
    std::vector<std::vector<std::size_t>> out_edges;  // state -> edge indices

    std::size_t index_of(const pddl::AtomSet& s) const;  // npos if absent
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::map<pddl::AtomSet, std::size_t> index;
};

StateGraph reachable_states(const pddl::GroundedProblem& gp, std::size_t cap,
                            StateRegistry* registry = nullptr);

inline constexpr int kUnreachable = -1;
// Exact number of actions from each state to the nearest goal state, or kUnreachable.
std::vector<int> distance_to_goal(const pddl::GroundedProblem& gp, const StateGraph& graph);

struct Trajectory {
    std::string domain;
    std::string problem;
    int plan_id = 0;
    std::vector<StateId> states;
    std::vector<std::string> actions;
    std::vector<std::size_t> nodes;  // graph indices parallel to states
};

std::vector<Trajectory> optimal_plans(const pddl::GroundedProblem& gp, const StateGraph& graph,
                                      std::size_t max_plans = 100);

struct TemplateSet {
    std::map<std::string, std::string> predicates;  // name -> "text with {0} {1}"

    static TemplateSet from_json_text(std::string_view text);
    static TemplateSet load(const std::filesystem::path& path);
    std::string to_json_text() const;
    // Throws MissingTemplate for any predicate of the domain without a template.
    void check_coverage(const pddl::DomainDef& domain) const;
};

// Atoms must be in canonical order. "A, B, and C." / "A, and B." / "A." / "".
std::string render_state(std::span<const pddl::GroundAtom> atoms, const TemplateSet& templates);
std::string render_state(const pddl::GroundedProblem& gp, const pddl::AtomSet& state,
                         const TemplateSet& templates);
std::string render_action(const pddl::GroundAction& action);

struct Transition {
    std::string domain;
    std::string problem;
    int plan_id = 0;
    int step = 0;
    StateId s;
    std::string a;
    StateId s_next;
    std::string s_text;
    std::string a_text;
    std::string s_next_text;

    // "<domain>/<problem>/<plan_id>/<step>"; unique within a corpus.
    std::string key() const;
};

std::vector<Transition> extract_transitions(const pddl::GroundedProblem& gp, const StateGraph& graph,
                                            std::span<const Trajectory> trajectories,
                                            const TemplateSet& templates);

}  // namespace embedplan::world
