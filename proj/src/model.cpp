#include "vpa/model.hpp"

#include <algorithm>
#include <deque>

namespace vpa {

namespace {

bool reserved(const std::string& s)
{
    return s == kBottom || s == kDiamond || s == kTau || s == kNone;
}

} // namespace

SymKind Alphabet::kind(const Symbol& a) const
{
    if (a == kTau)
        return SymKind::Internal;
    if (calls.count(a))
        return SymKind::Call;
    if (returns.count(a))
        return SymKind::Return;
    if (simples.count(a))
        return SymKind::Simple;
    return SymKind::Unknown;
}

std::set<Symbol> Alphabet::all() const
{
    std::set<Symbol> r = calls;
    r.insert(returns.begin(), returns.end());
    r.insert(simples.begin(), simples.end());
    return r;
}

bool Alphabet::same_partition(const Alphabet& o) const
{
    return calls == o.calls && returns == o.returns && simples == o.simples;
}

Alphabet Alphabet::swapped_io() const
{
    Alphabet r = *this;
    std::swap(r.inputs, r.outputs);
    return r;
}

std::vector<Transition> Automaton::out(const StateId& s) const
{
    std::vector<Transition> r;
    for (auto it = transitions.lower_bound(Transition{s, "", "", ""});
         it != transitions.end() && it->from == s; ++it)
        r.push_back(*it);
    return r;
}

bool Automaton::has_internal_out(const StateId& s) const
{
    auto it = transitions.lower_bound(Transition{s, kTau, "", ""});
    return it != transitions.end() && it->from == s && it->label == kTau;
}

bool Automaton::has_internal() const
{
    return std::any_of(transitions.begin(), transitions.end(),
                       [](const Transition& t) { return t.label == kTau; });
}

void validate_alphabet(const Alphabet& a)
{
    auto disjoint = [](const std::set<Symbol>& x, const std::set<Symbol>& y) {
        return std::none_of(x.begin(), x.end(), [&](const Symbol& s) { return y.count(s); });
    };
    if (!disjoint(a.calls, a.returns) || !disjoint(a.calls, a.simples) ||
        !disjoint(a.returns, a.simples))
        throw DomainError("alphabet: calls, returns and simples must be pairwise disjoint");
    for (const auto& s : a.all()) {
        if (s.empty())
            throw DomainError("alphabet: empty symbol");
        if (reserved(s))
            throw DomainError("alphabet: reserved symbol '" + s + "'");
    }
    if (a.has_io()) {
        if (!disjoint(a.inputs, a.outputs))
            throw DomainError("alphabet: inputs and outputs overlap");
        std::set<Symbol> io = a.inputs;
        io.insert(a.outputs.begin(), a.outputs.end());
        if (io != a.all())
            throw DomainError("alphabet: inputs and outputs must cover the alphabet exactly");
    }
}

void validate(const Automaton& m)
{
    validate_alphabet(m.alphabet);
    for (const auto& s : m.states)
        if (s.empty() || reserved(s))
            throw DomainError("state id '" + s + "' is reserved or empty");
    for (const auto& z : m.stack_symbols)
        if (z.empty() || reserved(z))
            throw DomainError("stack symbol '" + z + "' is reserved or empty");
    for (const auto& s : m.initial)
        if (!m.states.count(s))
            throw DomainError("initial state '" + s + "' is not a state");
    for (const auto& t : m.transitions) {
        if (!m.states.count(t.from) || !m.states.count(t.to))
            throw DomainError("transition " + to_string(t) + " has an unknown endpoint");
        switch (m.alphabet.kind(t.label)) {
        case SymKind::Call:
            if (!m.stack_symbols.count(t.stack))
                throw DomainError("push " + to_string(t) + " needs a stack symbol");
            break;
        case SymKind::Return:
            if (t.stack != kBottom && !m.stack_symbols.count(t.stack))
                throw DomainError("pop " + to_string(t) + " needs a stack symbol or _bot");
            break;
        case SymKind::Simple:
        case SymKind::Internal:
            if (t.stack != kDiamond)
                throw DomainError("transition " + to_string(t) + " must carry _dia");
            break;
        case SymKind::Unknown:
            throw DomainError("transition " + to_string(t) + " has an unknown label");
        }
    }
}

void validate(const Vpa& m)
{
    validate(static_cast<const Automaton&>(m));
    for (const auto& s : m.finals)
        if (!m.states.count(s))
            throw DomainError("final state '" + s + "' is not a state");
}

void validate_vpts(const Vpts& m)
{
    validate(static_cast<const Automaton&>(m));
    for (const auto& t : m.transitions)
        if (t.label == kTau && t.from == t.to)
            throw DomainError("internal self-loop " + to_string(t));
}

void validate(const Iovpts& m)
{
    validate_vpts(m);
    if (!m.alphabet.has_io() && !m.alphabet.all().empty())
        throw DomainError("IOVPTS needs an input/output partition");
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken)
{
    if (!taken.count(base))
        return base;
    for (std::size_t k = 1;; ++k) {
        std::string c = base + "." + std::to_string(k);
        if (!taken.count(c))
            return c;
    }
}

std::string to_string(const Transition& t)
{
    return "(" + t.from + "," + t.label + "," + t.stack + "," + t.to + ")";
}

std::string to_string(const Configuration& c)
{
    std::string r = "(" + c.state + ",";
    for (const auto& z : c.stack)
        r += z + " ";
    return r + kBottom + ")";
}

std::string to_string(const Word& w)
{
    std::string r;
    for (const auto& a : w) {
        if (!r.empty())
            r += ' ';
        r += a;
    }
    return r;
}

Word erase(const Word& w, const std::set<Symbol>& symbols)
{
    Word r;
    for (const auto& a : w)
        if (!symbols.count(a))
            r.push_back(a);
    return r;
}

std::set<StateId> graph_reachable(const Automaton& m)
{
    std::set<StateId> seen(m.initial.begin(), m.initial.end());
    std::deque<StateId> todo(m.initial.begin(), m.initial.end());
    while (!todo.empty()) {
        StateId s = todo.front();
        todo.pop_front();
        for (const auto& t : m.out(s))
            if (seen.insert(t.to).second)
                todo.push_back(t.to);
    }
    return seen;
}

} // namespace vpa
