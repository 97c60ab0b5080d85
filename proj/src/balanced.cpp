#include "vpa/balanced.hpp"

#include "saturation.hpp"
#include "vpa/closures.hpp"
#include "vpa/semantics.hpp"
#include "vpa/vpts.hpp"

namespace vpa {

BalancedRun find_balanced_run(const Vpts& vpts, const StateId& s_i, const StateId& s_e)
{
    if (!vpts.states.count(s_i) || !vpts.states.count(s_e))
        throw DomainError("find_balanced_run: unknown state");
    if (s_i == s_e)
        throw DomainError("find_balanced_run: start and end states must differ");
    for (const auto& t : vpts.transitions)
        if (t.stack == kBottom)
            throw DomainError("find_balanced_run: pop on the empty stack " + to_string(t));

    detail::IndexedPds g(vpts);
    detail::Saturation sat(g);
    int si = g.index.at(s_i), se = g.index.at(s_e);
    BalancedRun r;
    if (sat.run(si, se))
        r.word = sat.getstring(si, se);
    r.enqueued = sat.enqueued();
    r.max_enqueue_per_pair = sat.max_enqueue_per_pair();
    r.saturation_pairs = sat.set_pairs();
    return r;
}

namespace {

std::set<std::string> taken_symbols(const Automaton& m)
{
    std::set<std::string> r = m.alphabet.all();
    r.insert(m.stack_symbols.begin(), m.stack_symbols.end());
    return r;
}

} // namespace

EmptyStackTransform transform_empty_stack(const Vpts& vpts, const std::set<StateId>& fail_states)
{
    if (fail_states.empty())
        throw DomainError("transform_empty_stack: no fail states");
    EmptyStackTransform r{vpts, "", ""};
    Vpts& v = r.vpts;
    StateId f1 = fresh_name("_f1", v.states);
    v.states.insert(f1);
    r.f2 = fresh_name("_f2", v.states);
    v.states.insert(r.f2);
    r.b1 = fresh_name(kPop1, taken_symbols(v));
    v.alphabet.returns.insert(r.b1);
    if (v.alphabet.has_io())
        v.alphabet.outputs.insert(r.b1);
    for (const auto& f : fail_states)
        v.add({f, kTau, kDiamond, f1});
    for (const auto& w : v.stack_symbols)
        v.add({f1, r.b1, w, f1});
    v.add({f1, r.b1, kBottom, r.f2});
    return r;
}

NoEmptyPopsTransform transform_no_empty_pops(const Vpts& vpts)
{
    NoEmptyPopsTransform r{Vpts{}, "", "", ""};
    Vpts& v = r.vpts;
    v.alphabet = vpts.alphabet;
    v.stack_symbols = vpts.stack_symbols;
    v.states = vpts.states;
    r.s0 = fresh_name("_s0", v.states);
    v.states.insert(r.s0);
    r.a2 = fresh_name(kPush2, taken_symbols(vpts));
    v.alphabet.calls.insert(r.a2);
    if (v.alphabet.has_io())
        v.alphabet.inputs.insert(r.a2);
    r.z2 = fresh_name(kZ2, taken_symbols(vpts));
    v.stack_symbols.insert(r.z2);
    v.initial = {r.s0};
    v.add({r.s0, r.a2, r.z2, r.s0});
    for (const auto& s : vpts.initial)
        v.add({r.s0, kTau, kDiamond, s});
    for (const auto& t : vpts.transitions)
        v.add(t.stack == kBottom ? Transition{t.from, t.label, r.z2, t.to} : t);
    return r;
}

Verdict check_ioco(const Iovpts& spec, const Iovpts& impl)
{
    if (!spec.alphabet.same_partition(impl.alphabet) || spec.alphabet.inputs != impl.alphabet.inputs)
        throw DomainError("check_ioco: specification and implementation alphabets differ");
    FaultModel fm = build_fault_model(spec);
    Verdict v = passes(impl, fm);
    if (v.conforms)
        return v;

    const Word& w = *v.witness;
    Vpa as = induced_vpa(spec), ai = induced_vpa(impl);
    bool in_impl = accepts(ai, w);
    bool out_spec = !accepts(as, w);
    bool suffix = !w.empty() && spec.alphabet.outputs.count(w.back()) &&
                  accepts(as, Word(w.begin(), w.end() - 1));
    if (!in_impl || !out_spec || !suffix)
        throw std::logic_error("check_ioco: witness " + to_string(w) + " failed validation");
    v.diagnostics += "; witness is a trace of the implementation, not of the specification, "
                     "and extends a specification trace by an output";
    return v;
}

} // namespace vpa
