#pragma once

#include <stdexcept>
#include <string>

namespace effitest {

/// Failure of a statistical computation on otherwise well-formed input.
enum class StatErrorKind {
    InsufficientData,
    ZeroVariance,
    SingularDesign,
    DegenerateClassification,
    Domain,
    Alignment,
};

class StatError : public std::domain_error {
public:
    StatError(StatErrorKind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
    [[nodiscard]] StatErrorKind kind() const noexcept { return kind_; }

private:
    StatErrorKind kind_;
};

enum class InputErrorKind {
    InvalidInput,
    Schema,
    EmptyInput,
    Io,
};

/// Bad or unreadable user data (CLI exit code 1).
class InputError : public std::invalid_argument {
public:
    InputError(InputErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    [[nodiscard]] InputErrorKind kind() const noexcept { return kind_; }

private:
    InputErrorKind kind_;
};

/// Bad configuration (CLI exit code 2).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace effitest
