#pragma once

// Seeded random model generators for property tests.

#include "vpa/model.hpp"

#include <random>
#include <string>

namespace testgen {

using namespace vpa;

struct Params {
    int max_states = 5;
    int max_stack = 2;
    int max_labels = 4;
    double density = 0.35;
    double eps = 0.0;         // chance that a state gets an internal move
    bool deterministic = false;
    bool bot_pops = true;
    bool all_final = false;   // VPTS-style
    bool io = false;
};

inline int pick(std::mt19937& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(std::mt19937& rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

// At least one call and one return; remaining labels are random.
inline Alphabet random_alphabet(std::mt19937& rng, int max_labels, bool io)
{
    Alphabet a;
    int n = pick(rng, 2, std::max(2, max_labels));
    a.calls.insert("a");
    a.returns.insert("b");
    const char* extra[] = {"c", "d", "e", "f"};
    for (int i = 2; i < n; ++i) {
        int k = pick(rng, 0, 2);
        (k == 0 ? a.calls : k == 1 ? a.returns : a.simples).insert(extra[i - 2]);
    }
    if (io)
        for (const auto& s : a.all())
            (coin(rng, 0.5) ? a.inputs : a.outputs).insert(s);
    return a;
}

inline Vpa random_vpa(std::mt19937& rng, const Params& p, const Alphabet* given = nullptr)
{
    Vpa m;
    m.alphabet = given ? *given : random_alphabet(rng, p.max_labels, p.io);
    int n = pick(rng, 1, p.max_states);
    int g = pick(rng, 1, p.max_stack);
    std::vector<StateId> Q;
    for (int i = 0; i < n; ++i)
        Q.push_back("q" + std::to_string(i));
    std::vector<StackSym> G;
    for (int i = 0; i < g; ++i)
        G.push_back(std::string(1, static_cast<char>('A' + i)));
    m.states.insert(Q.begin(), Q.end());
    m.stack_symbols.insert(G.begin(), G.end());
    m.initial.insert(Q[0]);
    if (!p.deterministic && n > 1 && coin(rng, 0.2))
        m.initial.insert(Q[pick(rng, 1, n - 1)]);
    for (const auto& q : Q)
        if (p.all_final || coin(rng, 0.4))
            m.finals.insert(q);

    auto any_state = [&] { return Q[pick(rng, 0, n - 1)]; };
    std::vector<StackSym> pop_syms = G;
    if (p.bot_pops)
        pop_syms.push_back(kBottom);

    for (const auto& q : Q) {
        if (coin(rng, p.eps)) {
            StateId to = any_state();
            if (p.all_final && to == q)
                to = Q[(std::stoi(q.substr(1)) + 1) % n];
            if (to != q || !p.all_final)
                m.add({q, kTau, kDiamond, to});
            if (p.deterministic)
                continue;
        }
        int copies = p.deterministic ? 1 : 2;
        for (const auto& a : m.alphabet.calls) {
            if (p.deterministic) {
                if (coin(rng, p.density))
                    m.add({q, a, G[pick(rng, 0, g - 1)], any_state()});
            } else {
                for (int k = 0; k < copies; ++k)
                    if (coin(rng, p.density))
                        m.add({q, a, G[pick(rng, 0, g - 1)], any_state()});
            }
        }
        for (const auto& a : m.alphabet.returns)
            for (const auto& z : pop_syms)
                for (int k = 0; k < copies; ++k)
                    if (coin(rng, p.density))
                        m.add({q, a, z, any_state()});
        for (const auto& a : m.alphabet.simples)
            for (int k = 0; k < copies; ++k)
                if (coin(rng, p.density))
                    m.add({q, a, kDiamond, any_state()});
    }
    return m;
}

inline Vpts random_vpts(std::mt19937& rng, Params p)
{
    p.all_final = true;
    Vpa a = random_vpa(rng, p);
    Vpts v;
    static_cast<Automaton&>(v) = a;
    return v;
}

} // namespace testgen
