#pragma once

#include <stdexcept>
#include <string>

namespace iscover {

struct parameter_error : std::invalid_argument {
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed (query, response) references: ids outside the instance.
struct malformed_pair_error : std::invalid_argument {
    explicit malformed_pair_error(const std::string& what) : std::invalid_argument(what) {}
};

// A policy emitted a query outside Q, or an oracle a response outside R.
struct protocol_error : std::runtime_error {
    explicit protocol_error(const std::string& what) : std::runtime_error(what) {}
};

// Run loop exceeded its step limit: infeasible instance or broken policy.
struct nontermination_error : std::runtime_error {
    explicit nontermination_error(const std::string& what) : std::runtime_error(what) {}
};

// A policy proved it cannot reach its stopping condition.
struct infeasible_error : std::runtime_error {
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// The version space emptied under an oracle a policy assumed consistent.
struct inconsistent_oracle_error : std::runtime_error {
    explicit inconsistent_oracle_error(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive computation refused: instance exceeds the configured limits.
struct size_limit_error : std::runtime_error {
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iscover
