#include "vpa/conformance.hpp"

#include "vpa/closures.hpp"
#include "vpa/semantics.hpp"
#include "vpa/vpts.hpp"

namespace vpa {

namespace {

void require_det(const Vpa& m, const char* what)
{
    auto rep = check_deterministic(m);
    if (!rep.deterministic)
        throw PreconditionError(std::string(what) + " is not deterministic\n" + rep.describe());
}

} // namespace

TestSuiteVpa build_test_suite(const Iovpts& spec, const ConformanceSpec& cs)
{
    require_deterministic_vpts(spec, "build_test_suite");
    require_det(cs.desired, "desired language D");
    require_det(cs.forbidden, "forbidden language F");

    Vpa a1 = induced_vpa(contract(spec).result);
    Vpa b1 = complement(a1);
    Vpa a2 = trim(intersect(cs.forbidden, a1));
    Vpa b2 = trim(intersect(cs.desired, b1));

    TestSuiteVpa t;
    t.suite = trim(union_of(a2, b2));
    std::size_t ns = spec.states.size(), nf = cs.forbidden.states.size(),
                nd = cs.desired.states.size();
    t.bound = (ns * nf + 1) * (ns * nd + nd + 1);
    if (t.suite.states.size() > t.bound)
        throw std::logic_error("build_test_suite: suite exceeds its state bound");
    return t;
}

Verdict check_conf(const Iovpts& impl, const Iovpts& spec, const ConformanceSpec& cs)
{
    Verdict v;
    bool impl_det = true;
    try {
        require_deterministic_vpts(impl, "check_conf");
    } catch (const PreconditionError&) {
        impl_det = false;
    }

    TestSuiteVpa t = build_test_suite(spec, cs);
    Vpa ai = induced_vpa(contract(impl).result);
    Vpa p = trim(intersect(ai, t.suite));
    EmptinessResult e = is_empty(p);
    v.stats.states = p.states.size();
    v.stats.transitions = p.transitions.size();
    v.stats.saturation_pairs = e.saturation_pairs;

    if (e.empty) {
        v.diagnostics = impl_det ? "the implementation adheres to the complete test suite"
                                 : "no violation found; the implementation is not deterministic, "
                                   "so completeness of this verdict is not guaranteed";
        return v;
    }
    const Word& w = *e.witness;
    bool in_spec = accepts(induced_vpa(spec), w);
    bool ok = accepts(induced_vpa(impl), w) && accepts(t.suite, w) &&
              ((accepts(cs.desired, w) && !in_spec) || (accepts(cs.forbidden, w) && in_spec));
    if (!ok)
        throw std::logic_error("check_conf: witness " + to_string(w) + " failed validation");
    v.conforms = false;
    v.witness = w;
    v.diagnostics = in_spec ? "witness is a forbidden specification trace of the implementation"
                            : "witness is a desired trace of the implementation outside the specification";
    return v;
}

bool adheres(const Iovpts& impl, const TestSuiteVpa& suite)
{
    Vpa ai = induced_vpa(contract(impl).result);
    return is_empty(trim(intersect(ai, suite.suite))).empty;
}

ConformanceSpec ioco_conformance_spec(const Iovpts& spec)
{
    ConformanceSpec cs;
    cs.desired = concat_suffix(induced_vpa(spec), spec.alphabet.outputs);
    cs.forbidden = empty_language(spec.alphabet);
    return cs;
}

} // namespace vpa
