#pragma once

#include <stdexcept>
#include <string>

namespace embedplan {

// Broad classes used by the CLI to pick an exit code.
enum class ErrorClass { Input, MissingArtifact, Internal };

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what, ErrorClass cls = ErrorClass::Internal)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)), class_(cls) {}

    const std::string& kind() const noexcept { return kind_; }
    ErrorClass error_class() const noexcept { return class_; }

private:
    std::string kind_;
    ErrorClass class_;
};

#define EMBEDPLAN_ERROR(Name, Cls)                                            \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what, Cls) {}   \
    };

// pddl
EMBEDPLAN_ERROR(ParseError, ErrorClass::Input)
EMBEDPLAN_ERROR(UnsupportedFeature, ErrorClass::Input)
EMBEDPLAN_ERROR(TypeMismatch, ErrorClass::Input)
EMBEDPLAN_ERROR(GroundingExplosion, ErrorClass::Input)
// world
EMBEDPLAN_ERROR(StateCapExceeded, ErrorClass::Input)
EMBEDPLAN_ERROR(GoalUnreachable, ErrorClass::Input)
EMBEDPLAN_ERROR(MissingTemplate, ErrorClass::Input)
EMBEDPLAN_ERROR(StateIdCollision, ErrorClass::Internal)
// embed
EMBEDPLAN_ERROR(FormatError, ErrorClass::Input)
EMBEDPLAN_ERROR(DimensionMismatch, ErrorClass::Input)
EMBEDPLAN_ERROR(MissingText, ErrorClass::Input)
// model
EMBEDPLAN_ERROR(BudgetExceeded, ErrorClass::Input)
EMBEDPLAN_ERROR(NonFiniteActivation, ErrorClass::Internal)
// train
EMBEDPLAN_ERROR(EmptySplit, ErrorClass::Input)
// protocols
EMBEDPLAN_ERROR(TooFewTransitions, ErrorClass::Input)
EMBEDPLAN_ERROR(NoMultiPlanProblems, ErrorClass::Input)
EMBEDPLAN_ERROR(TooFewProblems, ErrorClass::Input)
EMBEDPLAN_ERROR(SameDomain, ErrorClass::Input)
EMBEDPLAN_ERROR(UnknownDomain, ErrorClass::Input)
// eval
EMBEDPLAN_ERROR(MissingModel, ErrorClass::MissingArtifact)
EMBEDPLAN_ERROR(DegenerateVariance, ErrorClass::Input)
EMBEDPLAN_ERROR(ConstantInput, ErrorClass::Input)
// cli
EMBEDPLAN_ERROR(ConfigError, ErrorClass::Input)
EMBEDPLAN_ERROR(StaleArtifact, ErrorClass::MissingArtifact)
EMBEDPLAN_ERROR(MissingArtifact, ErrorClass::MissingArtifact)

#undef EMBEDPLAN_ERROR

}  // namespace embedplan
