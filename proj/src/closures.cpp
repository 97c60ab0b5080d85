#include "vpa/closures.hpp"

#include "saturation.hpp"
#include "vpa/semantics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace vpa {

std::string to_string(ViolationKind k)
{
    switch (k) {
    case ViolationKind::MultiInitial: return "multi-initial";
    case ViolationKind::PushConflict: return "push-conflict";
    case ViolationKind::PopSimpleConflict: return "pop-simple-conflict";
    case ViolationKind::EpsConflict: return "eps-conflict";
    }
    return "?";
}

std::string DeterminismReport::describe() const
{
    if (deterministic)
        return "deterministic";
    std::string r;
    for (const auto& v : violations) {
        r += to_string(v.kind) + ":";
        for (const auto& t : v.transitions)
            r += " " + to_string(t);
        r += "\n";
    }
    return r;
}

DeterminismReport check_deterministic(const Automaton& m)
{
    DeterminismReport rep;
    auto flag = [&](ViolationKind k, std::vector<Transition> ts) {
        rep.deterministic = false;
        rep.violations.push_back(Violation{k, std::move(ts)});
    };
    if (m.initial.size() > 1)
        flag(ViolationKind::MultiInitial, {});

    for (const auto& s : m.states) {
        std::vector<Transition> ts = m.out(s);
        std::map<Symbol, std::vector<Transition>> by_label;
        std::map<std::pair<Symbol, StackSym>, std::vector<Transition>> by_label_stack;
        std::vector<Transition> internal, visible;
        for (const auto& t : ts) {
            switch (m.alphabet.kind(t.label)) {
            case SymKind::Call:
                by_label[t.label].push_back(t);
                visible.push_back(t);
                break;
            case SymKind::Internal:
                internal.push_back(t);
                break;
            default:
                by_label_stack[{t.label, t.stack}].push_back(t);
                visible.push_back(t);
            }
        }
        for (auto& [a, group] : by_label)
            if (group.size() > 1)
                flag(ViolationKind::PushConflict, group);
        for (auto& [key, group] : by_label_stack)
            if (group.size() > 1)
                flag(ViolationKind::PopSimpleConflict, group);
        if (!internal.empty() && !visible.empty()) {
            std::vector<Transition> g = internal;
            g.push_back(visible.front());
            flag(ViolationKind::EpsConflict, g);
        }
        if (internal.size() > 1)
            flag(ViolationKind::EpsConflict, internal);
    }
    return rep;
}

namespace {

std::set<StateId> eps_closure(const Automaton& m, const StateId& s)
{
    std::set<StateId> seen{s};
    std::deque<StateId> todo{s};
    while (!todo.empty()) {
        StateId p = todo.front();
        todo.pop_front();
        for (auto it = m.transitions.lower_bound(Transition{p, kTau, "", ""});
             it != m.transitions.end() && it->from == p && it->label == kTau; ++it)
            if (seen.insert(it->to).second)
                todo.push_back(it->to);
    }
    return seen;
}

// Builds product states and stack symbols with deterministic pair names.
struct Pairing {
    std::map<std::pair<std::string, std::string>, std::string> names;
    std::set<std::string> used;

    const std::string& name(const std::string& x, const std::string& y)
    {
        auto key = std::make_pair(x, y);
        auto it = names.find(key);
        if (it != names.end())
            return it->second;
        std::string n = fresh_name("(" + x + "," + y + ")", used);
        used.insert(n);
        return names.emplace(key, n).first->second;
    }
};

struct ProductResult {
    Vpa vpa;
    Pairing states;
};

ProductResult product_impl(const Vpa& a, const Vpa& b)
{
    if (!a.alphabet.same_partition(b.alphabet))
        throw DomainError("product: alphabets differ");
    ProductResult r;
    Vpa& p = r.vpa;
    p.alphabet = a.alphabet;
    Pairing stacks;
    for (const auto& x : a.states)
        for (const auto& y : b.states)
            p.states.insert(r.states.name(x, y));
    for (const auto& x : a.initial)
        for (const auto& y : b.initial)
            p.initial.insert(r.states.name(x, y));
    for (const auto& x : a.finals)
        for (const auto& y : b.finals)
            p.finals.insert(r.states.name(x, y));
    for (const auto& z : a.stack_symbols)
        for (const auto& w : b.stack_symbols)
            p.stack_symbols.insert(stacks.name(z, w));

    std::map<Symbol, std::vector<const Transition*>> bx;
    for (const auto& t : b.transitions)
        bx[t.label].push_back(&t);

    for (const auto& ta : a.transitions) {
        if (ta.label == kTau) {
            for (const auto& y : b.states)
                p.add({r.states.name(ta.from, y), kTau, kDiamond, r.states.name(ta.to, y)});
            continue;
        }
        auto it = bx.find(ta.label);
        if (it == bx.end())
            continue;
        SymKind k = a.alphabet.kind(ta.label);
        for (const Transition* tb : it->second) {
            StackSym z;
            if (k == SymKind::Call) {
                z = stacks.name(ta.stack, tb->stack);
            } else if (k == SymKind::Return) {
                bool ba = ta.stack == kBottom, bb = tb->stack == kBottom;
                if (ba != bb)
                    continue;
                z = ba ? kBottom : stacks.name(ta.stack, tb->stack);
            } else {
                z = kDiamond;
            }
            p.add({r.states.name(ta.from, tb->from), ta.label, z, r.states.name(ta.to, tb->to)});
        }
    }
    for (const auto& tb : b.transitions)
        if (tb.label == kTau)
            for (const auto& x : a.states)
                p.add({r.states.name(x, tb.from), kTau, kDiamond, r.states.name(x, tb.to)});
    return r;
}

void require_deterministic(const Automaton& m, const char* op)
{
    auto rep = check_deterministic(m);
    if (!rep.deterministic)
        throw PreconditionError(std::string(op) + ": input is not deterministic\n" +
                                rep.describe());
}

} // namespace

Vpa remove_epsilon(const Vpa& vpa)
{
    if (!vpa.has_internal())
        return vpa;
    Vpa r = vpa;
    r.transitions.clear();
    r.initial.clear();
    std::map<StateId, std::set<StateId>> E;
    for (const auto& s : vpa.states)
        E[s] = eps_closure(vpa, s);
    for (const auto& s0 : vpa.initial)
        r.initial.insert(E[s0].begin(), E[s0].end());
    for (const auto& rr : vpa.states)
        for (const auto& s : E[rr])
            for (const auto& t : vpa.out(s)) {
                if (t.label == kTau)
                    continue;
                for (const auto& q : E[t.to])
                    r.add({rr, t.label, t.stack, q});
            }
    return r;
}

Vpa remove_epsilon_deterministic(const Vpa& vpa)
{
    require_deterministic(vpa, "remove_epsilon_deterministic");
    if (!vpa.has_internal())
        return vpa;
    Vpa b = vpa;

    // Phase 1: contract each ε-cycle onto its least state.
    std::map<StateId, StateId> succ;
    for (const auto& t : b.transitions)
        if (t.label == kTau)
            succ[t.from] = t.to;
    std::map<StateId, int> color; // 0 new, 1 on current walk, 2 done
    for (const auto& [start, _] : succ) {
        std::vector<StateId> walk;
        StateId s = start;
        while (succ.count(s) && color[s] == 0) {
            color[s] = 1;
            walk.push_back(s);
            s = succ[s];
        }
        if (color[s] == 1) {
            std::set<StateId> J;
            for (auto it = std::find(walk.begin(), walk.end(), s); it != walk.end(); ++it)
                J.insert(*it);
            const StateId s1 = *J.begin();
            std::set<Transition> mu;
            for (const auto& t : b.transitions) {
                if (t.label == kTau && J.count(t.from) && J.count(t.to))
                    continue;
                if (!J.count(t.from) && J.count(t.to))
                    mu.insert({t.from, t.label, t.stack, s1});
                else
                    mu.insert(t);
            }
            b.transitions = std::move(mu);
            bool final_hit = false, init_hit = false;
            for (const auto& j : J) {
                final_hit |= b.finals.count(j) > 0;
                init_hit |= b.initial.count(j) > 0;
                if (j != s1) {
                    b.states.erase(j);
                    b.finals.erase(j);
                    b.initial.erase(j);
                }
            }
            if (final_hit)
                b.finals.insert(s1);
            if (init_hit)
                b.initial = {s1};
        }
        for (const auto& w : walk)
            color[w] = 2;
    }

    // Phase 2: splice ε-edges whose target has no ε-move, until none remain.
    for (;;) {
        const Transition* pick = nullptr;
        for (const auto& t : b.transitions)
            if (t.label == kTau && !b.has_internal_out(t.to)) {
                pick = &t;
                break;
            }
        if (!pick)
            break;
        Transition t = *pick;
        b.transitions.erase(t);
        for (const auto& u : b.out(t.to))
            b.add({t.from, u.label, u.stack, u.to});
        if (b.initial.count(t.from) && !b.finals.count(t.from))
            b.initial = {t.to};
        if (b.finals.count(t.to))
            b.finals.insert(t.from);
    }
    return b;
}

Vpa normalize_epsilon(const Vpa& vpa)
{
    if (!vpa.has_internal())
        return vpa;
    if (check_deterministic(vpa).deterministic)
        return remove_epsilon_deterministic(vpa);
    return remove_epsilon(vpa);
}

Vpa product(const Vpa& a, const Vpa& b)
{
    return product_impl(a, b).vpa;
}

NamedProduct product_named(const Vpa& a, const Vpa& b)
{
    ProductResult r = product_impl(a, b);
    return NamedProduct{std::move(r.vpa), std::move(r.states.names)};
}

Vpa intersect(const Vpa& a, const Vpa& b)
{
    return product(a, b);
}

Vpa make_non_blocking(const Vpa& vpa)
{
    Vpa r = vpa;
    const StateId sink = fresh_name("_sink", vpa.states);
    r.states.insert(sink);
    if (r.initial.empty())
        r.initial.insert(sink);
    StackSym z;
    if (!r.alphabet.calls.empty()) {
        if (r.stack_symbols.empty())
            r.stack_symbols.insert("_nb");
        z = *r.stack_symbols.begin();
    }
    std::vector<StackSym> gamma_bot{kBottom};
    gamma_bot.insert(gamma_bot.end(), r.stack_symbols.begin(), r.stack_symbols.end());

    for (const auto& s : vpa.states) {
        if (vpa.has_internal_out(s))
            continue;
        std::set<std::pair<Symbol, StackSym>> have;
        std::set<Symbol> have_label;
        for (const auto& t : vpa.out(s)) {
            have.insert({t.label, t.stack});
            have_label.insert(t.label);
        }
        for (const auto& a : vpa.alphabet.simples)
            if (!have_label.count(a))
                r.add({s, a, kDiamond, sink});
        for (const auto& a : vpa.alphabet.calls)
            if (!have_label.count(a))
                r.add({s, a, z, sink});
        for (const auto& a : vpa.alphabet.returns)
            for (const auto& w : gamma_bot)
                if (!have.count({a, w}))
                    r.add({s, a, w, sink});
    }
    for (const auto& a : vpa.alphabet.simples)
        r.add({sink, a, kDiamond, sink});
    for (const auto& a : vpa.alphabet.calls)
        r.add({sink, a, z, sink});
    for (const auto& a : vpa.alphabet.returns)
        for (const auto& w : gamma_bot)
            r.add({sink, a, w, sink});
    return r;
}

Vpa union_of(const Vpa& a, const Vpa& b)
{
    Vpa na = make_non_blocking(normalize_epsilon(a));
    Vpa nb = make_non_blocking(normalize_epsilon(b));
    ProductResult pr = product_impl(na, nb);
    pr.vpa.finals.clear();
    for (const auto& x : na.states)
        for (const auto& y : nb.states)
            if (na.finals.count(x) || nb.finals.count(y))
                pr.vpa.finals.insert(pr.states.name(x, y));
    return pr.vpa;
}

Vpa complement(const Vpa& vpa)
{
    require_deterministic(vpa, "complement");
    Vpa r = make_non_blocking(remove_epsilon_deterministic(vpa));
    std::set<StateId> flipped;
    for (const auto& s : r.states)
        if (!r.finals.count(s))
            flipped.insert(s);
    r.finals = std::move(flipped);
    return r;
}

Vpa concat_suffix(const Vpa& vpa, const std::set<Symbol>& b_set)
{
    for (const auto& b : b_set)
        if (!vpa.alphabet.contains(b))
            throw DomainError("concat_suffix: '" + b + "' is not in the alphabet");
    Vpa s = make_non_blocking(normalize_epsilon(vpa));
    Vpa q;
    q.alphabet = s.alphabet;
    q.stack_symbols = s.stack_symbols;
    q.states = s.states;
    q.initial = s.initial;
    std::map<StateId, StateId> hat;
    std::set<std::string> used = s.states;
    for (const auto& x : s.states) {
        StateId h = fresh_name(x + "^", used);
        used.insert(h);
        hat[x] = h;
        q.states.insert(h);
        q.finals.insert(h);
    }
    for (const auto& t : s.transitions) {
        bool marks = b_set.count(t.label) && s.finals.count(t.from);
        q.add({t.from, t.label, t.stack, marks ? hat[t.to] : t.to});
        q.add({hat[t.from], t.label, t.stack, marks ? hat[t.to] : t.to});
    }
    return q;
}

Vpa trim(const Vpa& vpa)
{
    std::set<StateId> keep = graph_reachable(vpa);
    if (keep.size() == vpa.states.size())
        return vpa;
    Vpa r;
    r.alphabet = vpa.alphabet;
    r.stack_symbols = vpa.stack_symbols;
    r.states = keep;
    r.initial = vpa.initial;
    for (const auto& f : vpa.finals)
        if (keep.count(f))
            r.finals.insert(f);
    for (const auto& t : vpa.transitions)
        if (keep.count(t.from))
            r.add(t);
    return r;
}

EmptinessResult is_empty(const Vpa& input)
{
    EmptinessResult res;
    Vpa vpa = trim(input);
    if (vpa.finals.empty() || vpa.initial.empty())
        return res;

    detail::IndexedPds g(vpa);
    detail::Saturation sat(g);
    sat.run(0, -1);
    res.saturation_pairs = sat.set_pairs();

    // Layer 0: stack empty, ⊥-pops allowed. Layer 1: pending pushes, no ⊥-pops.
    const int n = g.n();
    struct Edge { int prev; int kind; int label; }; // kind 0 summary, 1 single label
    std::vector<Edge> parent(2 * n, Edge{-2, 0, -1});
    std::deque<int> todo;
    for (const auto& s : vpa.initial) {
        int v = g.index.at(s);
        parent[v] = Edge{-1, 0, -1};
        todo.push_back(v);
    }
    int goal = -1;
    while (!todo.empty() && goal < 0) {
        int v = todo.front();
        todo.pop_front();
        int p = v % n, layer = v / n;
        if (vpa.finals.count(g.names[p])) {
            goal = v;
            break;
        }
        auto visit = [&](int u, Edge e) {
            if (parent[u].prev == -2) {
                parent[u] = e;
                todo.push_back(u);
            }
        };
        // Single-symbol edges first so short witnesses win ties.
        for (const auto& t : g.out[p]) {
            if (t.kind == SymKind::Call)
                visit(n + t.to, Edge{v, 1, t.label});
            else if (layer == 0 && t.kind == SymKind::Return && t.stack == detail::IndexedPds::kBotIndex)
                visit(t.to, Edge{v, 1, t.label});
        }
        for (int q : sat.successors(p))
            visit(layer * n + q, Edge{v, 0, -1});
    }
    if (goal < 0)
        return res;

    std::vector<Word> pieces;
    for (int v = goal; parent[v].prev != -1; v = parent[v].prev) {
        const Edge& e = parent[v];
        if (e.kind == 1)
            pieces.push_back(Word{g.labels[e.label]});
        else
            pieces.push_back(sat.getstring(e.prev % n, v % n));
    }
    Word w;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    w = erase(w, {kTau});
    if (!accepts(input, w))
        throw std::logic_error("is_empty: witness " + to_string(w) + " does not replay");
    res.empty = false;
    res.witness = std::move(w);
    return res;
}

Vpa empty_language(const Alphabet& a)
{
    Vpa r;
    r.alphabet = a;
    r.states = {"e0"};
    r.initial = {"e0"};
    return r;
}

Vpa universal_language(const Alphabet& a)
{
    Vpa r = empty_language(a);
    r.finals = {"e0"};
    r.stack_symbols = {"_u"};
    for (const auto& x : a.simples)
        r.add({"e0", x, kDiamond, "e0"});
    for (const auto& x : a.calls)
        r.add({"e0", x, "_u", "e0"});
    for (const auto& x : a.returns) {
        r.add({"e0", x, "_u", "e0"});
        r.add({"e0", x, kBottom, "e0"});
    }
    return r;
}

} // namespace vpa
