#include "vpa/semantics.hpp"

#include <deque>
#include <map>

namespace vpa {

ConfigSet step(const Automaton& m, const Configuration& c, const Symbol& label)
{
    if (!m.states.count(c.state))
        throw DomainError("unknown state '" + c.state + "'");
    SymKind k = m.alphabet.kind(label);
    if (k == SymKind::Unknown)
        throw DomainError("unknown label '" + label + "'");

    ConfigSet r;
    for (auto it = m.transitions.lower_bound(Transition{c.state, label, "", ""});
         it != m.transitions.end() && it->from == c.state && it->label == label; ++it) {
        const Transition& t = *it;
        switch (k) {
        case SymKind::Call: {
            Configuration n{t.to, {}};
            n.stack.reserve(c.stack.size() + 1);
            n.stack.push_back(t.stack);
            n.stack.insert(n.stack.end(), c.stack.begin(), c.stack.end());
            r.insert(std::move(n));
            break;
        }
        case SymKind::Return:
            if (t.stack == kBottom) {
                if (c.stack.empty())
                    r.insert(Configuration{t.to, {}});
            } else if (!c.stack.empty() && c.stack.front() == t.stack) {
                r.insert(Configuration{t.to, {c.stack.begin() + 1, c.stack.end()}});
            }
            break;
        default:
            r.insert(Configuration{t.to, c.stack});
        }
    }
    return r;
}

ConfigSet step(const Automaton& m, const ConfigSet& cs, const Symbol& label)
{
    ConfigSet r;
    for (const auto& c : cs)
        r.merge(step(m, c, label));
    return r;
}

ConfigSet run_closure(const Automaton& m, const ConfigSet& cs)
{
    ConfigSet seen = cs;
    std::deque<Configuration> todo(cs.begin(), cs.end());
    while (!todo.empty()) {
        Configuration c = std::move(todo.front());
        todo.pop_front();
        for (auto it = m.transitions.lower_bound(Transition{c.state, kTau, "", ""});
             it != m.transitions.end() && it->from == c.state && it->label == kTau; ++it) {
            Configuration n{it->to, c.stack};
            if (!seen.count(n)) {
                seen.insert(n);
                todo.push_back(std::move(n));
            }
        }
    }
    return seen;
}

ConfigSet initial_configs(const Automaton& m)
{
    ConfigSet r;
    for (const auto& s : m.initial)
        r.insert(Configuration{s, {}});
    return r;
}

ConfigSet after(const Automaton& m, const ConfigSet& from, const Word& w)
{
    ConfigSet cur = run_closure(m, from);
    for (const auto& a : w) {
        if (cur.empty())
            break;
        cur = run_closure(m, step(m, cur, a));
    }
    return cur;
}

bool accepts(const Vpa& vpa, const Word& w)
{
    for (const auto& c : after(vpa, initial_configs(vpa), w))
        if (vpa.finals.count(c.state))
            return true;
    return false;
}

std::set<Symbol> out(const Automaton& m, const ConfigSet& cs)
{
    std::set<Symbol> r;
    for (const auto& l : m.alphabet.outputs)
        for (const auto& c : cs)
            if (!step(m, c, l).empty()) {
                r.insert(l);
                break;
            }
    return r;
}

namespace {

void check_bound(std::size_t max_len, const EnumOptions& opt)
{
    if (max_len > opt.max_len_cap)
        throw UsageError("max_len " + std::to_string(max_len) + " exceeds the cap " +
                         std::to_string(opt.max_len_cap));
}

// Breadth-first over words, carrying the set of configurations reached so far.
// `accept` decides membership of the current word from its configuration set.
template <class Accept>
std::set<Word> explore(const Automaton& m, std::size_t max_len, bool close_internal,
                       const std::set<Symbol>& letters, const EnumOptions& opt, Accept accept)
{
    check_bound(max_len, opt);
    std::set<Word> result;
    std::size_t budget = 0;
    auto close = [&](ConfigSet cs) { return close_internal ? run_closure(m, cs) : cs; };

    std::vector<std::pair<Word, ConfigSet>> level{{Word{}, close(initial_configs(m))}};
    for (std::size_t len = 0; !level.empty(); ++len) {
        std::vector<std::pair<Word, ConfigSet>> next;
        for (auto& [w, cs] : level) {
            budget += cs.size();
            if (budget > opt.config_budget)
                throw UsageError("configuration budget exhausted");
            if (accept(cs))
                result.insert(w);
            if (len == max_len)
                continue;
            for (const auto& a : letters) {
                ConfigSet n = close(step(m, cs, a));
                if (n.empty())
                    continue;
                Word w2 = w;
                w2.push_back(a);
                next.emplace_back(std::move(w2), std::move(n));
            }
        }
        level = std::move(next);
    }
    return result;
}

} // namespace

std::set<Word> enumerate_language(const Vpa& vpa, std::size_t max_len, const EnumOptions& opt)
{
    return explore(vpa, max_len, true, vpa.alphabet.all(), opt, [&](const ConfigSet& cs) {
        for (const auto& c : cs)
            if (vpa.finals.count(c.state))
                return true;
        return false;
    });
}

std::set<Word> traces(const Automaton& vpts, std::size_t max_len, bool observable,
                      const EnumOptions& opt)
{
    std::set<Symbol> letters = vpts.alphabet.all();
    if (!observable)
        letters.insert(kTau);
    return explore(vpts, max_len, observable, letters, opt,
                   [](const ConfigSet& cs) { return !cs.empty(); });
}

} // namespace vpa
