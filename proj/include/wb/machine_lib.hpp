#pragma once

#include "wb/urm.hpp"

namespace wb {

// Small catalogue of concrete programs used throughout the workbench.

Program identity_program();                 // arity 1, output = input
Program succ_program();                     // arity 1, output = input + 1
Program loop_program();                     // arity 1, never halts
Program add_program();                      // arity 2, output = x + y
Program const_program(const Nat& k);        // arity 1, ignores input, outputs k

// arity 2 on [x, y]: outputs 1 iff y < x, else 0. As a relation program this
// makes "edge below x" the usual strict order.
Program second_less_first_program();

// arity 2 on [x, y]: halts with 1 iff y < x, diverges otherwise. Exercises
// the Unknown paths of relation probing.
Program second_less_first_partial_program();

// Recursion-step program: on [n, v_1, ..., v_max_preds] outputs
// 1 + sum of the v_i. Absent inputs read as zero, so one fixed arity
// serves every node of a relation with at most max_preds predecessors.
Program sum_plus_one_program(std::uint64_t max_preds);

}  // namespace wb
