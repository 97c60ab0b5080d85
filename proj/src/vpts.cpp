#include "vpa/vpts.hpp"

#include "saturation.hpp"
#include "vpa/semantics.hpp"

#include <array>
#include <deque>

namespace vpa {

Vpa induced_vpa(const Vpts& vpts)
{
    Vpa r;
    static_cast<Automaton&>(r) = vpts;
    r.finals = vpts.states;
    return r;
}

Vpts induced_vpts(const Vpa& vpa)
{
    if (vpa.finals != vpa.states)
        throw DomainError("induced_vpts: every state must be final");
    Vpts r;
    static_cast<Automaton&>(r) = vpa;
    std::erase_if(r.transitions,
                  [](const Transition& t) { return t.label == kTau && t.from == t.to; });
    return r;
}

VptsDeterminism check_vpts_deterministic(const Vpts& vpts, std::size_t max_len)
{
    VptsDeterminism d;
    d.report = check_deterministic(vpts);
    d.syntactic = !vpts.has_internal() && d.report.deterministic;

    std::vector<std::pair<Word, ConfigSet>> level{{Word{}, run_closure(vpts, initial_configs(vpts))}};
    for (std::size_t len = 0; !level.empty() && d.deterministic; ++len) {
        std::vector<std::pair<Word, ConfigSet>> next;
        for (auto& [w, cs] : level) {
            if (cs.size() > 1) {
                d.deterministic = false;
                d.diagnostics = "trace '" + to_string(w) + "' reaches " +
                                std::to_string(cs.size()) + " configurations";
                break;
            }
            if (len == max_len)
                continue;
            for (const auto& a : vpts.alphabet.all()) {
                ConfigSet n = run_closure(vpts, step(vpts, cs, a));
                if (n.empty())
                    continue;
                Word w2 = w;
                w2.push_back(a);
                next.emplace_back(std::move(w2), std::move(n));
            }
        }
        level = std::move(next);
    }
    if (d.diagnostics.empty())
        d.diagnostics = d.syntactic ? "syntactically deterministic"
                                    : "no violation up to the bound; syntactic check failed";
    return d;
}

namespace {

// Nonterminals [s,Z,p] of the trace grammar, Z = 0 standing for ⊥ and
// p = n for the placeholder "-".
class TraceGrammar {
public:
    explicit TraceGrammar(const Vpts& m) : g_(m), n_(g_.n()), z_(static_cast<int>(g_.stacks.size()))
    {
        std::size_t size = static_cast<std::size_t>(n_) * z_ * (n_ + 1);
        productive_.assign(size, 0);
        leftmost_.assign(size, 0);
        rsimple_.resize(n_);
        pushes_into_.resize(static_cast<std::size_t>(n_) * z_);
        by_first_.resize(n_);
        by_target_.resize(static_cast<std::size_t>(z_) * n_);
        for (int s = 0; s < n_; ++s)
            for (const auto& t : g_.out[s]) {
                if (t.kind == SymKind::Simple || t.kind == SymKind::Internal)
                    rsimple_[t.to].push_back(s);
                else if (t.kind == SymKind::Call)
                    pushes_into_[static_cast<std::size_t>(t.to) * z_ + t.stack].push_back(s);
            }
        compute_productive();
        compute_leftmost(m);
    }

    bool leftmost(int s, int z, int p) const { return leftmost_[id(s, z, p)]; }
    int n() const { return n_; }
    const detail::IndexedPds& graph() const { return g_; }

    // Rules (3)/(4): transitions used by some leftmost derivation.
    std::set<Transition> kept() const
    {
        std::set<Transition> r;
        for (int s = 0; s < n_; ++s)
            for (const auto& t : g_.out[s]) {
                bool keep = false;
                if (t.kind != SymKind::Return) {
                    for (int z = 0; z < z_ && !keep; ++z)
                        for (int p = 0; p <= n_ && !keep; ++p)
                            keep = leftmost_[id(s, z, p)];
                } else if (t.stack == detail::IndexedPds::kBotIndex) {
                    keep = leftmost(s, 0, n_);
                } else {
                    keep = leftmost(s, t.stack, t.to);
                }
                if (keep)
                    r.insert(Transition{g_.names[s], g_.labels[t.label],
                                        t.stack < 0 ? kDiamond : g_.stacks[t.stack], g_.names[t.to]});
            }
        return r;
    }

private:
    std::size_t id(int s, int z, int p) const
    {
        return (static_cast<std::size_t>(s) * z_ + z) * (n_ + 1) + p;
    }

    void compute_productive()
    {
        std::deque<std::array<int, 3>> todo;
        auto mark = [&](int s, int z, int p) {
            auto& f = productive_[id(s, z, p)];
            if (f)
                return;
            f = 1;
            by_first_[s].push_back({z, p});
            by_target_[static_cast<std::size_t>(z) * n_ + p].push_back(s);
            todo.push_back({s, z, p});
        };
        // (2c.i) [s,Z,q] -> t for a pop of Z ≠ ⊥.
        for (int s = 0; s < n_; ++s)
            for (const auto& t : g_.out[s])
                if (t.kind == SymKind::Return && t.stack != detail::IndexedPds::kBotIndex)
                    mark(s, t.stack, t.to);
        while (!todo.empty()) {
            auto [x, y, w] = todo.front();
            todo.pop_front();
            // (2b) [s,Y,w] -> t [x,Y,w].
            for (int s : rsimple_[x])
                mark(s, y, w);
            // (2a) with [x,Y,w] as the first nonterminal: [s,Z,p] -> t [x,Y,w][w,Z,p].
            for (int s : pushes_into_[static_cast<std::size_t>(x) * z_ + y])
                for (std::size_t i = 0; i < by_first_[w].size(); ++i) {
                    auto [z, p] = by_first_[w][i];
                    mark(s, z, p);
                }
            // (2a) with [x,Y,w] as the second nonterminal: [s,Y,w] -> t [q,W,x][x,Y,w].
            for (int W = 1; W < z_; ++W) {
                const auto& qs = by_target_[static_cast<std::size_t>(W) * n_ + x];
                for (std::size_t i = 0; i < qs.size(); ++i)
                    for (int s : pushes_into_[static_cast<std::size_t>(qs[i]) * z_ + W])
                        mark(s, y, w);
            }
        }
    }

    void compute_leftmost(const Vpts& m)
    {
        std::deque<std::array<int, 3>> todo;
        auto mark = [&](int s, int z, int p) {
            auto& f = leftmost_[id(s, z, p)];
            if (!f) {
                f = 1;
                todo.push_back({s, z, p});
            }
        };
        for (const auto& s0 : m.initial)
            mark(g_.index.at(s0), 0, n_);
        while (!todo.empty()) {
            auto [s, z, p] = todo.front();
            todo.pop_front();
            for (const auto& t : g_.out[s]) {
                switch (t.kind) {
                case SymKind::Call:
                    for (int r = 0; r < n_; ++r) {
                        mark(t.to, t.stack, r);
                        if (productive_[id(t.to, t.stack, r)])
                            mark(r, z, p);
                    }
                    break;
                case SymKind::Return:
                    if (t.stack == 0 && z == 0 && p == n_)
                        mark(t.to, 0, n_);
                    break;
                default:
                    mark(t.to, z, p);
                }
            }
        }
    }

    detail::IndexedPds g_;
    int n_, z_;
    std::vector<std::uint8_t> productive_, leftmost_;
    std::vector<std::vector<int>> rsimple_, pushes_into_;
    std::vector<std::vector<std::pair<int, int>>> by_first_;
    std::vector<std::vector<int>> by_target_;
};

Vpts restrict_to(const Vpts& m, const std::set<StateId>& keep, const std::set<Transition>& ts)
{
    Vpts r;
    r.alphabet = m.alphabet;
    r.stack_symbols = m.stack_symbols;
    r.states = keep;
    for (const auto& s : m.initial)
        if (keep.count(s))
            r.initial.insert(s);
    for (const auto& t : ts)
        if (keep.count(t.from) && keep.count(t.to))
            r.add(t);
    return r;
}

} // namespace

std::optional<bool> is_contracted(const Vpts& vpts, std::size_t budget)
{
    std::set<Transition> pops;
    for (const auto& t : vpts.transitions)
        if (vpts.alphabet.kind(t.label) == SymKind::Return)
            pops.insert(t);

    if (budget == 0) {
        TraceGrammar g(vpts);
        const auto& ix = g.graph();
        for (const auto& t : pops) {
            int s = ix.index.at(t.from);
            bool ok = t.stack == kBottom
                          ? g.leftmost(s, 0, g.n())
                          : g.leftmost(s, ix.stack_index.at(t.stack), ix.index.at(t.to));
            if (!ok)
                return false;
        }
        return true;
    }

    ConfigSet seen = initial_configs(vpts);
    std::deque<Configuration> todo(seen.begin(), seen.end());
    auto cover = [&](const Configuration& c) {
        for (auto it = pops.begin(); it != pops.end();) {
            bool hit = it->from == c.state &&
                       (it->stack == kBottom ? c.stack.empty()
                                             : !c.stack.empty() && c.stack.front() == it->stack);
            it = hit ? pops.erase(it) : std::next(it);
        }
    };
    bool truncated = false;
    while (!todo.empty() && !pops.empty()) {
        Configuration c = std::move(todo.front());
        todo.pop_front();
        cover(c);
        for (const auto& t : vpts.out(c.state))
            for (auto& n : step(vpts, c, t.label)) {
                if (n.stack.size() > kBoundedStackHeight) {
                    truncated = true;
                    continue;
                }
                if (seen.insert(n).second) {
                    if (seen.size() > budget)
                        return std::nullopt;
                    todo.push_back(n);
                }
            }
    }
    if (pops.empty())
        return true;
    return truncated ? std::nullopt : std::optional<bool>(false);
}

ContractionReport contract(const Vpts& vpts)
{
    TraceGrammar g(vpts);
    std::set<Transition> kept = g.kept();

    Vpts tmp = restrict_to(vpts, vpts.states, kept);
    std::set<StateId> reach = graph_reachable(tmp);

    ContractionReport rep;
    rep.result = restrict_to(vpts, reach, kept);
    for (const auto& t : vpts.transitions)
        if (!rep.result.transitions.count(t))
            rep.removed_transitions.insert(t);
    for (const auto& s : vpts.states)
        if (!reach.count(s))
            rep.removed_states.insert(s);
    return rep;
}

NormalizeReport prune_unreachable(const Vpts& vpts)
{
    NormalizeReport rep;
    std::set<StateId> reach = graph_reachable(vpts);
    for (const auto& s : vpts.states)
        if (!reach.count(s))
            rep.warnings.push_back("state '" + s + "' is unreachable and was removed");
    rep.result = rep.warnings.empty() ? vpts : restrict_to(vpts, reach, vpts.transitions);
    return rep;
}

void require_deterministic_vpts(const Vpts& vpts, const char* op)
{
    if (!vpts.has_internal() && check_deterministic(vpts).deterministic)
        return;
    Vpts c = contract(vpts).result;
    if (c.has_internal())
        throw PreconditionError(std::string(op) + ": model has internal moves, so it is not deterministic");
    auto rep = check_deterministic(c);
    if (!rep.deterministic)
        throw PreconditionError(std::string(op) + ": model is not deterministic\n" + rep.describe());
}

} // namespace vpa
