#pragma once

#include "vpa/model.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vpa {

enum class ViolationKind { MultiInitial, PushConflict, PopSimpleConflict, EpsConflict };

std::string to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::vector<Transition> transitions;
};

struct DeterminismReport {
    bool deterministic = true;
    std::vector<Violation> violations;

    std::string describe() const;
};

DeterminismReport check_deterministic(const Automaton& m);

Vpa remove_epsilon(const Vpa& vpa);
Vpa remove_epsilon_deterministic(const Vpa& vpa);
// Picks the determinism-preserving variant when it applies; identity on ε-free input.
Vpa normalize_epsilon(const Vpa& vpa);

Vpa product(const Vpa& a, const Vpa& b);

struct NamedProduct {
    Vpa vpa;
    std::map<std::pair<StateId, StateId>, StateId> names;
};

NamedProduct product_named(const Vpa& a, const Vpa& b);
Vpa intersect(const Vpa& a, const Vpa& b);
Vpa make_non_blocking(const Vpa& vpa);
Vpa union_of(const Vpa& a, const Vpa& b);
Vpa complement(const Vpa& vpa);
Vpa concat_suffix(const Vpa& vpa, const std::set<Symbol>& b_set);

// Drops states unreachable from the initial states in the transition graph.
Vpa trim(const Vpa& vpa);

struct EmptinessResult {
    bool empty = true;
    std::optional<Word> witness;
    std::size_t saturation_pairs = 0;
};

EmptinessResult is_empty(const Vpa& vpa);

// Convenience languages over a given alphabet.
Vpa empty_language(const Alphabet& a);
Vpa universal_language(const Alphabet& a);

} // namespace vpa
