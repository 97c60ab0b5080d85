#pragma once

// Reference semantics written independently of the library: plain DFS/BFS over
// explicit configurations. Slow, small, and only used as a test oracle.

#include "vpa/model.hpp"

#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using namespace vpa;

using Stack = std::vector<StackSym>; // top at back
using Config = std::pair<StateId, Stack>;

inline bool is_call(const Automaton& m, const Symbol& a) { return m.alphabet.calls.count(a) > 0; }
inline bool is_return(const Automaton& m, const Symbol& a) { return m.alphabet.returns.count(a) > 0; }

// Moves on exactly `a` (kTau included) without any closure.
inline std::vector<Config> moves(const Automaton& m, const Config& c, const Symbol& a)
{
    std::vector<Config> r;
    for (const auto& t : m.transitions) {
        if (t.from != c.first || t.label != a)
            continue;
        Stack s = c.second;
        if (is_call(m, a)) {
            s.push_back(t.stack);
        } else if (is_return(m, a)) {
            if (t.stack == kBottom) {
                if (!s.empty())
                    continue;
            } else {
                if (s.empty() || s.back() != t.stack)
                    continue;
                s.pop_back();
            }
        }
        r.emplace_back(t.to, std::move(s));
    }
    return r;
}

inline std::set<Config> eps_closure(const Automaton& m, std::set<Config> cs)
{
    std::vector<Config> todo(cs.begin(), cs.end());
    while (!todo.empty()) {
        Config c = todo.back();
        todo.pop_back();
        for (auto& n : moves(m, c, kTau))
            if (cs.insert(n).second)
                todo.push_back(n);
    }
    return cs;
}

inline std::set<Config> start(const Automaton& m)
{
    std::set<Config> cs;
    for (const auto& s : m.initial)
        cs.insert({s, {}});
    return eps_closure(m, cs);
}

inline std::set<Config> advance(const Automaton& m, const std::set<Config>& cs, const Symbol& a)
{
    std::set<Config> n;
    for (const auto& c : cs)
        for (auto& d : moves(m, c, a))
            n.insert(std::move(d));
    return eps_closure(m, n);
}

inline bool accepts(const Vpa& m, const Word& w)
{
    auto cs = start(m);
    for (const auto& a : w)
        cs = advance(m, cs, a);
    for (const auto& c : cs)
        if (m.finals.count(c.first))
            return true;
    return false;
}

// All words over `sigma` of length <= max_len.
inline std::vector<Word> universe(const std::set<Symbol>& sigma, std::size_t max_len)
{
    std::vector<Word> all{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = all.size();
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& a : sigma) {
                Word w = all[i];
                w.push_back(a);
                all.push_back(std::move(w));
            }
        begin = end;
    }
    return all;
}

// Language up to max_len by walking the word tree with configuration sets.
inline std::set<Word> language(const Vpa& m, std::size_t max_len)
{
    std::set<Word> r;
    auto sigma = m.alphabet.all();
    std::vector<std::pair<Word, std::set<Config>>> todo{{Word{}, start(m)}};
    while (!todo.empty()) {
        auto [w, cs] = std::move(todo.back());
        todo.pop_back();
        for (const auto& c : cs)
            if (m.finals.count(c.first)) {
                r.insert(w);
                break;
            }
        if (w.size() == max_len)
            continue;
        for (const auto& a : sigma) {
            auto n = advance(m, cs, a);
            if (n.empty())
                continue;
            Word w2 = w;
            w2.push_back(a);
            todo.emplace_back(std::move(w2), std::move(n));
        }
    }
    return r;
}

// Traces with internal moves kept as kTau, up to max_len labels.
inline std::set<Word> raw_traces(const Automaton& m, std::size_t max_len)
{
    std::set<Word> r;
    std::set<Config> init;
    for (const auto& s : m.initial)
        init.insert({s, {}});
    std::vector<std::pair<Word, std::set<Config>>> todo{{Word{}, init}};
    auto sigma = m.alphabet.all();
    sigma.insert(kTau);
    while (!todo.empty()) {
        auto [w, cs] = std::move(todo.back());
        todo.pop_back();
        r.insert(w);
        if (w.size() == max_len)
            continue;
        for (const auto& a : sigma) {
            std::set<Config> n;
            for (const auto& c : cs)
                for (auto& d : moves(m, c, a))
                    n.insert(std::move(d));
            if (n.empty())
                continue;
            Word w2 = w;
            w2.push_back(a);
            todo.emplace_back(std::move(w2), std::move(n));
        }
    }
    return r;
}

// States `to` with (from, ⊥) => (to, ⊥) by a nonempty run of stack height <= bound.
inline std::set<StateId> balanced_targets(const Automaton& m, const StateId& from, std::size_t bound)
{
    std::set<StateId> r;
    std::set<Config> seen{{from, {}}};
    std::deque<Config> todo{{from, {}}};
    auto sigma = m.alphabet.all();
    sigma.insert(kTau);
    while (!todo.empty()) {
        Config c = todo.front();
        todo.pop_front();
        for (const auto& a : sigma)
            for (auto& n : moves(m, c, a)) {
                if (n.second.size() > bound)
                    continue;
                if (n.second.empty())
                    r.insert(n.first);
                if (seen.insert(n).second)
                    todo.push_back(std::move(n));
            }
    }
    return r;
}

inline std::size_t max_height(const Automaton& m, const Word& w)
{
    std::size_t h = 0, best = 0;
    for (const auto& a : w) {
        if (is_call(m, a))
            best = std::max(best, ++h);
        else if (is_return(m, a) && h > 0)
            --h;
    }
    return best;
}

// Does `w` (kTau as an explicit move) lead from (from, ⊥) to (to, ⊥)?
inline bool replays_balanced(const Automaton& m, const Word& w, const StateId& from, const StateId& to)
{
    std::set<Config> cs{{from, {}}};
    for (const auto& a : w) {
        std::set<Config> n;
        for (const auto& c : cs)
            for (auto& d : moves(m, c, a))
                n.insert(std::move(d));
        cs = std::move(n);
    }
    return cs.count({to, {}}) > 0;
}

// Every pop is enabled at some reachable configuration (BFS, stack height <= bound).
inline bool pops_exercised(const Automaton& m, std::size_t bound)
{
    std::set<Transition> pops;
    for (const auto& t : m.transitions)
        if (is_return(m, t.label))
            pops.insert(t);
    std::set<Config> seen;
    std::deque<Config> todo;
    for (const auto& s : m.initial)
        if (seen.insert({s, {}}).second)
            todo.push_back({s, {}});
    auto sigma = m.alphabet.all();
    sigma.insert(kTau);
    while (!todo.empty() && !pops.empty()) {
        Config c = todo.front();
        todo.pop_front();
        std::erase_if(pops, [&](const Transition& t) {
            return t.from == c.first && (t.stack == kBottom ? c.second.empty()
                                                            : !c.second.empty() && c.second.back() == t.stack);
        });
        for (const auto& a : sigma)
            for (auto& n : moves(m, c, a))
                if (n.second.size() <= bound && seen.insert(n).second)
                    todo.push_back(std::move(n));
    }
    return pops.empty();
}

} // namespace oracle
