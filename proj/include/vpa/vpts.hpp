#pragma once

#include "vpa/closures.hpp"
#include "vpa/model.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vpa {

Vpa induced_vpa(const Vpts& vpts);
// Requires every state to be final. ε-self-loops are dropped.
Vpts induced_vpts(const Vpa& vpa);

struct VptsDeterminism {
    bool deterministic = true; // bounded semantic verdict
    bool syntactic = true;     // ς-free and the induced VPA passes check_deterministic
    DeterminismReport report;
    std::string diagnostics;
};

VptsDeterminism check_vpts_deterministic(const Vpts& vpts, std::size_t max_len);

inline constexpr std::size_t kBoundedStackHeight = 64;

// budget == 0 selects the exact check; otherwise a configuration BFS bounded by
// `budget` configurations and kBoundedStackHeight, returning nullopt when it hits either.
std::optional<bool> is_contracted(const Vpts& vpts, std::size_t budget = 0);

struct ContractionReport {
    Vpts result;
    std::set<Transition> removed_transitions;
    std::set<StateId> removed_states;
};

ContractionReport contract(const Vpts& vpts);

struct NormalizeReport {
    Vpts result;
    std::vector<std::string> warnings;
};

// Drops states unreachable from the initial states.
NormalizeReport prune_unreachable(const Vpts& vpts);

// Throws PreconditionError unless `vpts`, or its contraction, is syntactically deterministic.
void require_deterministic_vpts(const Vpts& vpts, const char* op);

} // namespace vpa
