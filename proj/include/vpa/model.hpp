#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace vpa {

using Symbol = std::string;
using StateId = std::string;
using StackSym = std::string;
using Word = std::vector<Symbol>;

// Reserved spellings. kTau labels both ε-moves (VPA) and ς-moves (VPTS).
inline const std::string kBottom = "_bot";
inline const std::string kDiamond = "_dia";
inline const std::string kTau = "_tau";
inline const std::string kNone = "_none";

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SymKind { Call, Return, Simple, Internal, Unknown };

struct Alphabet {
    std::set<Symbol> calls;
    std::set<Symbol> returns;
    std::set<Symbol> simples;
    std::set<Symbol> inputs;
    std::set<Symbol> outputs;

    SymKind kind(const Symbol& a) const;
    bool contains(const Symbol& a) const { return kind(a) != SymKind::Unknown && a != kTau; }
    bool has_io() const { return !inputs.empty() || !outputs.empty(); }
    std::set<Symbol> all() const;
    // Same call/return/simple partition; the I/O view is ignored.
    bool same_partition(const Alphabet& o) const;
    Alphabet swapped_io() const;

    bool operator==(const Alphabet&) const = default;
};

struct Transition {
    StateId from;
    Symbol label;   // kTau for ε/ς
    StackSym stack; // Γ symbol, kBottom, or kDiamond
    StateId to;

    auto operator<=>(const Transition&) const = default;
    bool operator==(const Transition&) const = default;
};

struct Automaton {
    std::set<StateId> states;
    std::set<StateId> initial;
    Alphabet alphabet;
    std::set<StackSym> stack_symbols;
    std::set<Transition> transitions;

    // Transitions leaving `s`, in sorted order.
    std::vector<Transition> out(const StateId& s) const;
    bool has_internal_out(const StateId& s) const;
    bool has_internal() const;
    void add(Transition t) { transitions.insert(std::move(t)); }

    bool operator==(const Automaton&) const = default;
};

struct Vpa : Automaton {
    std::set<StateId> finals;
    bool operator==(const Vpa&) const = default;
};

struct Vpts : Automaton {
    bool operator==(const Vpts&) const = default;
};

// I/O partition lives in the alphabet.
struct Iovpts : Vpts {
    Iovpts() = default;
    explicit Iovpts(Vpts v) : Vpts(std::move(v)) {}
    bool operator==(const Iovpts&) const = default;
};

struct Configuration {
    StateId state;
    std::vector<StackSym> stack; // topmost first, ⊥ implicit

    auto operator<=>(const Configuration&) const = default;
    bool operator==(const Configuration&) const = default;
};

// Throws DomainError describing the first violated rule.
void validate_alphabet(const Alphabet& a);
void validate(const Automaton& m);
void validate(const Vpa& m);
void validate_vpts(const Vpts& m); // adds the no-ς-self-loop rule
void validate(const Iovpts& m);

// `base` if unused, otherwise `base.1`, `base.2`, ...
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

std::string to_string(const Transition& t);
std::string to_string(const Configuration& c);
std::string to_string(const Word& w);

// Drops every occurrence of the given symbols.
Word erase(const Word& w, const std::set<Symbol>& symbols);

// States reachable from the initial states in the transition graph (stack ignored).
std::set<StateId> graph_reachable(const Automaton& m);

} // namespace vpa
