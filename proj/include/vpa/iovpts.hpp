#pragma once

#include "vpa/model.hpp"

#include <optional>
#include <string>

namespace vpa {

struct FaultModel {
    Iovpts model; // I/O roles swapped with respect to the specification
    StateId fail_state;
};

struct Stats {
    std::size_t states = 0;
    std::size_t transitions = 0;
    std::size_t saturation_pairs = 0;
};

struct Verdict {
    bool conforms = true;
    std::optional<Word> witness;
    std::string diagnostics;
    Stats stats;
};

FaultModel build_fault_model(const Iovpts& spec);

// VPTS induced by the product of the induced VPAs, restricted to reachable states.
Vpts cross_product(const Vpts& t, const Vpts& i);

Verdict passes(const Iovpts& impl, const FaultModel& t);

} // namespace vpa
