#pragma once

// Report builders behind the verification verbs.  Every record is computed
// from scratch at the given family and bindings: nothing consults a table of
// expected outcomes, so a parameter locus that breaks an identity turns the
// corresponding record into a fail whose witness carries the residual.
// Published closed forms that disagree with what the engine derives are
// surfaced the same way and never auto-corrected.

#include "qsp/hopf.hpp"
#include "qsp/report.hpp"
#include "qsp/rmatrix.hpp"

namespace qsp {

struct RunOptions {
    Family family = Family::I;
    Bindings bindings;
    int fuel = 100;
    uint64_t seed = 42;
    AntipodeConvention convention = AntipodeConvention::Graded;
    SwapConvention legs = SwapConvention::Graded;
};

Report verify_consistency(const RunOptions& o);
Report verify_calculus(const RunOptions& o);
Report verify_hopf(const RunOptions& o);
Report verify_omega(const RunOptions& o);
Report verify_braid(const RunOptions& o);
Report verify_all(const RunOptions& o);  // the five above, in that order

Report solve_consistency_report(const RunOptions& o);
Report derive_twoforms_report(const RunOptions& o);
Report derive_forms_report(const RunOptions& o);

}  // namespace qsp
