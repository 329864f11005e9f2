#pragma once

#include <vector>

#include "coorbit/composition.hpp"
#include "coorbit/orbits.hpp"

namespace coorbit {

// The one place allowed to see both the closed forms and the enumeration
// oracles, so they can be compared without either calling the other.

struct CrossCheckReport {
    Composition composition;
    std::vector<SplitCertificate> comparisons;  // closed form vs each oracle
    bool all_agree = false;
};

/// Compares poincare_partial_flag(p) against the coset-enumeration oracle
/// and, for two-block compositions, against the box-partition oracle.
/// Mismatches are reported in the verdicts, never thrown.
CrossCheckReport cross_check(const Composition& p);

}  // namespace coorbit
