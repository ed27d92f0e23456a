#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamcay {

enum class ErrorKind {
    InconsistentPresentation,
    MalformedInput,
    UnknownSymbol,
    NotAHamiltonianCycleInQuotient,
    VoltageDoesNotGenerate,
    NoCycleWorks,
    WrongFamilySize,
    AssemblyFailed,
    PatternNotFound,
    HypothesisViolated,
    FamilyCheckFailed,
    NotApplicable,
    BadParameters,
    NoCaseApplies,
    BudgetExceeded,
};

std::string_view to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hamcay
