#pragma once

#include <stdexcept>
#include <string>

namespace cotangent {

/// Requested tensor power exceeds the configured cap on n^k.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The graph fails Artin's criterion p_a(Z) = 0.
class NotRational : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The singularity is rational but the dimension formulas need multiplicity >= 3.
class NotApplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GraphErrc {
    syntax,
    unknown_field,
    duplicate_id,
    unknown_vertex,
    self_loop,
    empty_graph,
    non_minimal,
    disconnected,
    not_negative_definite,
};

inline const char* to_string(GraphErrc c) {
    switch (c) {
        case GraphErrc::syntax: return "syntax";
        case GraphErrc::unknown_field: return "unknown-field";
        case GraphErrc::duplicate_id: return "duplicate-id";
        case GraphErrc::unknown_vertex: return "unknown-vertex";
        case GraphErrc::self_loop: return "self-loop";
        case GraphErrc::empty_graph: return "empty-graph";
        case GraphErrc::non_minimal: return "non-minimal";
        case GraphErrc::disconnected: return "disconnected";
        case GraphErrc::not_negative_definite: return "not-negative-definite";
    }
    return "unknown";
}

/// Invalid resolution graph input. code() says which validation failed.
class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    GraphErrc code() const noexcept { return code_; }

private:
    GraphErrc code_;
};

}  // namespace cotangent
