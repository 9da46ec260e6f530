#pragma once

#include "wb/urm.hpp"

namespace wb {

// In-machine self-specializer: on input u, outputs the index smn(u, [u]).
// Agrees with the host smn bit for bit; this is the machinery that makes
// recursion-theorem indices genuinely self-referential.
Program smn1_program();

// In-machine universal interpreter: on input (k, x), computes the value of
// program k on the single input x, diverging exactly when it does. Register
// state is kept as a coded association list, so it is only practical for
// object programs touching a few small registers.
Program universal_program();

// Recursion theorem: returns e with phi_e = phi_{psi(e)} by the standard
// self-application construction (no search). The constructed index is
// astronomically expensive to *run*, but cheap to build and reason about.
// When require_psi_halts is set, psi is run on the constructed index within
// budget and PsiDiverged is raised if it fails to halt.
ProgramIndex fixed_point(const ProgramIndex& psi, std::uint64_t budget,
                         bool require_psi_halts = false);

}  // namespace wb
