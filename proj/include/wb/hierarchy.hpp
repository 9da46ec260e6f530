#pragma once

#include <cstdint>
#include <variant>

#include "wb/dnr.hpp"
#include "wb/ordinal.hpp"
#include "wb/urm.hpp"

namespace wb {

// Wainer fast-growing hierarchy: F_0(x) = x+1, F_{a+1}(x) = F_a^{x+1}(x),
// F_l(x) = F_{l[x]}(x). The budget counts hierarchy unfoldings, so values
// stay within a budget-sized window and infeasible points (F_3(3), ...)
// come back as an honest OutOfBudget.
std::variant<Nat, OutOfBudget> fgh_eval(const CnfOrdinal& a, const Nat& x,
                                        std::uint64_t budget);

// Least x <= horizon with F_a(x) != F_b(x); requires a != b. Unresolved
// points below the witness raise UnresolvedAt.
std::variant<std::uint64_t, NoWitnessUpTo> hierarchy_distinct(
    const CnfOrdinal& a, const CnfOrdinal& b, std::uint64_t horizon,
    std::uint64_t budget);

// Windowed containment proxy between hierarchy classes: the higher level
// must majorize the lower one past a threshold on the sampled window.
struct ContainmentReport {
    Ordering order;  // cnf_compare(a, b)
    std::variant<std::uint64_t, NoWitnessUpTo> threshold;
    bool contained = false;  // higher majorizes lower past the threshold
};

ContainmentReport class_containment(const CnfOrdinal& a, const CnfOrdinal& b,
                                    std::uint64_t horizon, std::uint64_t budget);

}  // namespace wb
