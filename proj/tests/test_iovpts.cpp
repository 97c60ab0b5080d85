#include "support/models.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

#include "vpa/closures.hpp"
#include "vpa/iovpts.hpp"
#include "vpa/semantics.hpp"
#include "vpa/vpts.hpp"

#include <doctest.h>

using namespace vpa;
using corpus::word;

namespace {

std::set<std::pair<Symbol, StackSym>> fail_labels(const FaultModel& fm, const StateId& s)
{
    std::set<std::pair<Symbol, StackSym>> r;
    for (const auto& t : fm.model.out(s))
        if (t.to == fm.fail_state)
            r.insert({t.label, t.stack});
    return r;
}

std::set<std::pair<Symbol, StackSym>> all_output_pops()
{
    std::set<std::pair<Symbol, StackSym>> r;
    for (const char* o : {"chg", "dwt", "dte", "dco"})
        for (const char* z : {"C", "_bot"})
            r.insert({o, z});
    return r;
}

} // namespace

TEST_SUITE("iovpts")
{
    TEST_CASE("drink fault model")
    {
        Iovpts spec = corpus::iovpts_of("drink_spec.json");
        FaultModel fm = build_fault_model(spec);
        CHECK(fm.model.states.size() == spec.states.size() + 1);
        CHECK(fm.model.alphabet.inputs == spec.alphabet.outputs);
        CHECK(fm.model.alphabet.outputs == spec.alphabet.inputs);
        CHECK(fm.model.out(fm.fail_state).empty());

        const auto all = all_output_pops();
        for (const char* s : {"s1", "s4", "s6", "s7"})
            CHECK(fail_labels(fm, s) == all);
        auto minus = [&](const char* o, const char* z) {
            auto r = all;
            r.erase({o, z});
            return r;
        };
        CHECK(fail_labels(fm, "s3") == minus("chg", "_bot"));
        CHECK(fail_labels(fm, "s2") == minus("dwt", "C"));
        CHECK(fail_labels(fm, "s5") == minus("dte", "C"));
        CHECK(fail_labels(fm, "s8") == minus("dco", "C"));

        Vpts shipped = corpus::vpts_of("fig12_fault_model.json");
        CHECK(shipped == static_cast<const Vpts&>(fm.model));
        CHECK(check_deterministic(induced_vpa(fm.model)).deterministic);
    }

    TEST_CASE("a specification enabling every output gains only the fail state")
    {
        Iovpts s;
        s.alphabet.calls = {"i"};
        s.alphabet.simples = {"o"};
        s.alphabet.inputs = {"i"};
        s.alphabet.outputs = {"o"};
        s.stack_symbols = {"Z"};
        s.states = {"p"};
        s.initial = {"p"};
        s.add({"p", "i", "Z", "p"});
        s.add({"p", "o", kDiamond, "p"});
        FaultModel fm = build_fault_model(s);
        CHECK(fm.model.states.size() == 2);
        CHECK(fm.model.transitions == s.transitions);
    }

    TEST_CASE("fault models of random deterministic specifications are deterministic")
    {
        std::mt19937 rng(8);
        testgen::Params p;
        p.deterministic = true;
        p.io = true;
        for (int i = 0; i < 60; ++i) {
            Iovpts s(testgen::random_vpts(rng, p));
            s = Iovpts(prune_unreachable(s).result);
            FaultModel fm = build_fault_model(s);
            CHECK(fm.model.states.size() == s.states.size() + 1);
            CHECK(check_deterministic(induced_vpa(fm.model)).deterministic);
        }
    }

    TEST_CASE("cross product with a universal tester behaves as the implementation")
    {
        Vpts i = corpus::vpts_of("iut_c.json");
        Vpts u = induced_vpts(universal_language(i.alphabet));
        Vpts x = cross_product(u, i);
        CHECK(traces(x, 6, true) == traces(i, 6, true));
        CHECK_FALSE(x.has_internal());
    }

    TEST_CASE("cross product reaches the fail pair on the iut_a witness")
    {
        Iovpts spec = corpus::iovpts_of("drink_spec.json");
        FaultModel fm = build_fault_model(spec);
        Vpts x = cross_product(fm.model, corpus::vpts_of("iut_a.json"));
        auto cs = after(x, initial_configs(x), word("coi coi coi rch crd crd chg"));
        bool hit = false;
        for (const auto& c : cs)
            hit |= c.state == "(" + fm.fail_state + ",s1)" && c.stack.empty();
        CHECK(hit);
    }

    TEST_CASE("passes")
    {
        Iovpts spec = corpus::iovpts_of("drink_spec.json");
        FaultModel fm = build_fault_model(spec);
        Verdict a = passes(corpus::iovpts_of("iut_a.json"), fm);
        CHECK_FALSE(a.conforms);
        REQUIRE(a.witness);
        CHECK(a.witness->back() == "chg");
        CHECK(passes(spec, fm).conforms);
        CHECK(passes(corpus::iovpts_of("iut_d.json"), fm).conforms);
    }
}
