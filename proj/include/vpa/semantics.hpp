#pragma once

#include "vpa/model.hpp"

#include <cstddef>
#include <set>

namespace vpa {

using ConfigSet = std::set<Configuration>;

struct EnumOptions {
    std::size_t max_len_cap = 10;
    std::size_t config_budget = 1'000'000;
};

// One elementary move on `label` (kTau for ε/ς).
ConfigSet step(const Automaton& m, const Configuration& c, const Symbol& label);
ConfigSet step(const Automaton& m, const ConfigSet& cs, const Symbol& label);

// Closure under internal moves.
ConfigSet run_closure(const Automaton& m, const ConfigSet& cs);

ConfigSet initial_configs(const Automaton& m);

bool accepts(const Vpa& vpa, const Word& w);

std::set<Word> enumerate_language(const Vpa& vpa, std::size_t max_len,
                                  const EnumOptions& opt = {});

// tr(S) (internal moves appear as kTau) or otr(S), up to max_len symbols.
std::set<Word> traces(const Automaton& vpts, std::size_t max_len, bool observable,
                      const EnumOptions& opt = {});

// Configurations reached from `from` along the observable word `w`.
ConfigSet after(const Automaton& m, const ConfigSet& from, const Word& w);

// Output symbols enabled at some configuration of `cs`.
std::set<Symbol> out(const Automaton& m, const ConfigSet& cs);

} // namespace vpa
