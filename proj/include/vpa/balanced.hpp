#pragma once

#include "vpa/iovpts.hpp"
#include "vpa/model.hpp"

#include <optional>
#include <set>

namespace vpa {

inline const std::string kPush2 = "_push2";
inline const std::string kPop1 = "_pop1";
inline const std::string kZ2 = "_Z2";

struct BalancedRun {
    std::optional<Word> word; // may contain kTau
    std::size_t enqueued = 0;
    std::size_t max_enqueue_per_pair = 0;
    std::size_t saturation_pairs = 0;
};

// Balanced run (s_i,⊥) => (s_e,⊥). Requires s_i != s_e and no pops on ⊥.
BalancedRun find_balanced_run(const Vpts& vpts, const StateId& s_i, const StateId& s_e);

struct EmptyStackTransform {
    Vpts vpts;
    StateId f2;
    Symbol b1;
};

EmptyStackTransform transform_empty_stack(const Vpts& vpts, const std::set<StateId>& fail_states);

struct NoEmptyPopsTransform {
    Vpts vpts;
    StateId s0;
    Symbol a2;
    StackSym z2;
};

NoEmptyPopsTransform transform_no_empty_pops(const Vpts& vpts);

Verdict check_ioco(const Iovpts& spec, const Iovpts& impl);

} // namespace vpa
