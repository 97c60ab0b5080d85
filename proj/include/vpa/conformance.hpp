#pragma once

#include "vpa/iovpts.hpp"
#include "vpa/model.hpp"

namespace vpa {

struct ConformanceSpec {
    Vpa desired;   // D
    Vpa forbidden; // F
};

struct TestSuiteVpa {
    Vpa suite;
    std::size_t bound = 0; // (nS nF + 1)(nS nD + nD + 1)
};

TestSuiteVpa build_test_suite(const Iovpts& spec, const ConformanceSpec& cs);

Verdict check_conf(const Iovpts& impl, const Iovpts& spec, const ConformanceSpec& cs);

bool adheres(const Iovpts& impl, const TestSuiteVpa& suite);

// D = otr(S)·L_U and F = ∅: the pair under which conf coincides with ioco-like.
ConformanceSpec ioco_conformance_spec(const Iovpts& spec);

} // namespace vpa
