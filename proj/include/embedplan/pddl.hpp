#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace embedplan::pddl {

struct TypedParam {
    std::string name;  // "?x" for variables, object name in :objects
    std::string type;  // "object" when untyped
    bool operator==(const TypedParam&) const = default;
};

struct AtomTemplate {
    std::string predicate;
    std::vector<std::string> args;  // variable names, "?x"
    bool operator==(const AtomTemplate&) const = default;
};

struct PredicateDef {
    std::string name;
    std::vector<TypedParam> params;
};

struct ActionSchema {
    std::string name;
    std::vector<TypedParam> params;
    std::vector<AtomTemplate> preconditions;
    std::vector<AtomTemplate> add_effects;
    std::vector<AtomTemplate> del_effects;
};

struct DomainDef {
    std::string name;
    std::vector<std::pair<std::string, std::string>> types;  // (type, parent)
    std::vector<PredicateDef> predicates;
    std::vector<ActionSchema> action_schemas;

    const PredicateDef* find_predicate(std::string_view name) const;
    bool has_type(std::string_view type) const;
    // Reflexive; every type is a subtype of "object".
    bool is_subtype(std::string_view type, std::string_view ancestor) const;
};

struct GroundAtom {
    std::string predicate;
    std::vector<std::string> args;

    // Lexicographic on predicate, then args: the canonical atom order.
    auto operator<=>(const GroundAtom&) const = default;
    bool operator==(const GroundAtom&) const = default;

    // "(pred a b)"
    std::string to_string() const;
};

struct ProblemDef {
    std::string name;
    std::string domain_name;
    std::vector<std::pair<std::string, std::string>> objects;  // (name, type)
    std::vector<GroundAtom> init;  // canonical order, no duplicates
    std::vector<GroundAtom> goal;  // canonical order, no duplicates
};

using AtomId = std::uint32_t;

struct GroundAction {
    std::string schema;
    std::vector<std::string> binding;
    std::vector<AtomId> pre;  // sorted
    std::vector<AtomId> add;  // sorted
    std::vector<AtomId> del;  // sorted
    std::string id;           // "(schema arg1 arg2)"
};

// A set of true atoms, stored as sorted atom ids. Because atom ids follow the
// canonical atom order, a sorted id list is also the canonical serialization order.
using AtomSet = std::vector<AtomId>;

struct GroundedProblem {
    std::string domain_name;
    std::string problem_name;
    std::vector<std::pair<std::string, std::string>> objects;
    std::vector<GroundAtom> atoms;       // index = AtomId, canonical order
    std::vector<GroundAction> actions;   // ordered by id
    AtomSet init;
    AtomSet goal;

    std::optional<AtomId> find_atom(const GroundAtom& atom) const;
    bool applicable(const AtomSet& state, const GroundAction& action) const;
    // (state \ del) U add; requires applicable().
    AtomSet apply(const AtomSet& state, const GroundAction& action) const;
    bool satisfies_goal(const AtomSet& state) const;
    // Canonical serialization: sorted atoms joined with a single space.
    std::string serialize(const AtomSet& state) const;
};

DomainDef parse_domain(std::string_view text);
ProblemDef parse_problem(std::string_view text, const DomainDef& domain);

struct GroundingOptions {
    std::size_t max_ground_actions = 1'000'000;
};

GroundedProblem ground(const DomainDef& domain, const ProblemDef& problem,
                       const GroundingOptions& options = {});

}  // namespace embedplan::pddl
