#include "vpa/iovpts.hpp"

#include "vpa/balanced.hpp"
#include "vpa/closures.hpp"
#include "vpa/semantics.hpp"
#include "vpa/vpts.hpp"

namespace vpa {

FaultModel build_fault_model(const Iovpts& spec)
{
    require_deterministic_vpts(spec, "build_fault_model");
    FaultModel fm;
    Iovpts& t = fm.model;
    t = spec;
    t.alphabet = spec.alphabet.swapped_io();
    fm.fail_state = fresh_name("_fail", spec.states);
    t.states.insert(fm.fail_state);

    const auto& L = spec.alphabet;
    bool need_z = false;
    for (const auto& l : L.outputs)
        need_z |= L.calls.count(l) > 0;
    StackSym z;
    if (need_z) {
        if (t.stack_symbols.empty())
            t.stack_symbols.insert("_nb");
        z = *t.stack_symbols.begin();
    }
    std::vector<StackSym> gamma_bot{kBottom};
    gamma_bot.insert(gamma_bot.end(), spec.stack_symbols.begin(), spec.stack_symbols.end());

    for (const auto& s : spec.states) {
        std::set<std::pair<Symbol, StackSym>> have;
        std::set<Symbol> have_label;
        for (const auto& tr : spec.out(s)) {
            have.insert({tr.label, tr.stack});
            have_label.insert(tr.label);
        }
        for (const auto& l : L.outputs) {
            switch (L.kind(l)) {
            case SymKind::Call:
                if (!have_label.count(l))
                    t.add({s, l, z, fm.fail_state});
                break;
            case SymKind::Return:
                for (const auto& w : gamma_bot)
                    if (!have.count({l, w}))
                        t.add({s, l, w, fm.fail_state});
                break;
            default:
                if (!have_label.count(l))
                    t.add({s, l, kDiamond, fm.fail_state});
            }
        }
    }
    return fm;
}

namespace {

struct Cross {
    Vpts vpts;
    std::set<StateId> fail_states;
};

Cross cross_impl(const Vpts& t, const Vpts& i, const StateId* fail)
{
    NamedProduct p = product_named(induced_vpa(t), induced_vpa(i));
    Vpts v = induced_vpts(p.vpa);
    v.alphabet = i.alphabet;
    Cross c;
    c.vpts = prune_unreachable(v).result;
    if (fail)
        for (const auto& q : i.states) {
            const StateId& s = p.names.at({*fail, q});
            if (c.vpts.states.count(s))
                c.fail_states.insert(s);
        }
    return c;
}

} // namespace

Vpts cross_product(const Vpts& t, const Vpts& i)
{
    return cross_impl(t, i, nullptr).vpts;
}

Verdict passes(const Iovpts& impl, const FaultModel& t)
{
    Verdict v;
    Cross c = cross_impl(t.model, impl, &t.fail_state);
    v.stats.states = c.vpts.states.size();
    v.stats.transitions = c.vpts.transitions.size();
    if (c.fail_states.empty()) {
        v.diagnostics = "no fail state is reachable in the cross product graph";
        return v;
    }
    EmptyStackTransform es = transform_empty_stack(c.vpts, c.fail_states);
    NoEmptyPopsTransform ne = transform_no_empty_pops(es.vpts);
    BalancedRun run = find_balanced_run(ne.vpts, ne.s0, es.f2);
    v.stats.saturation_pairs = run.saturation_pairs;
    if (!run.word) {
        v.diagnostics = "no balanced run reaches a fail state";
        return v;
    }
    Word eta = erase(*run.word, {ne.a2, es.b1, kTau});
    bool reached = false;
    for (const auto& cfg : after(c.vpts, initial_configs(c.vpts), eta))
        reached |= c.fail_states.count(cfg.state) > 0;
    if (!reached)
        throw std::logic_error("passes: witness " + to_string(eta) + " does not reach fail");
    v.conforms = false;
    v.witness = std::move(eta);
    v.diagnostics = "witness reaches a fail state of the cross product";
    return v;
}

} // namespace vpa
