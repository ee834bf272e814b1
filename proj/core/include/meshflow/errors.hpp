#pragma once

#include <stdexcept>
#include <string>

namespace meshflow {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

struct MissingLink : std::runtime_error {
    explicit MissingLink(const std::string& what) : std::runtime_error(what) {}
};

struct StalePlan : std::runtime_error {
    explicit StalePlan(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroTime : std::runtime_error {
    explicit ZeroTime(const std::string& what) : std::runtime_error(what) {}
};

struct InfeasiblePath : std::runtime_error {
    explicit InfeasiblePath(const std::string& what) : std::runtime_error(what) {}
};

struct NoPath : std::runtime_error {
    explicit NoPath(const std::string& what) : std::runtime_error(what) {}
};

struct SameNode : std::runtime_error {
    explicit SameNode(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace meshflow
