#pragma once

#include <cstdint>
#include <map>

#include "wb/urm.hpp"
#include "wb/wf.hpp"

namespace wb {

// Recursion along a finite well-founded relation: returns an index e with
// run(e, [n]) = step(n, values at n's direct predecessors) for every n in
// the domain. The step program receives n in register 0 and the value at
// the i-th smallest predecessor in register i+1 (absent registers read 0).
// Inputs outside the domain diverge.
//
// Raises NotWellFounded (with a replayable cycle) or StepDiverged when a
// step evaluation exceeds budget.
ProgramIndex etr_define(const FiniteRelation& rel, const ProgramIndex& step,
                        std::uint64_t budget);

}  // namespace wb
