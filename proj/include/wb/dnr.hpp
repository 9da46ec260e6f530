#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "wb/urm.hpp"

namespace wb {

// Three-valued verdict for a budgeted query.
struct BudgetedAnswer {
    enum class Kind { Yes, No, Unknown } kind;
    Nat value;             // carried witness value for Yes answers
    std::uint64_t budget;  // budget at which the verdict was issued

    bool yes() const { return kind == Kind::Yes; }
    bool unknown() const { return kind == Kind::Unknown; }
};

// String over alphabet {0..k-1}.
struct KString {
    std::vector<Nat> values;
    std::uint64_t k = 2;

    bool operator==(const KString&) const = default;
};

// Budgeted classification of indices against the canonical recursively
// inseparable pair A = {e : phi_e(e) = 0}, B = {e : phi_e(e) = 1}.
// Indices resolving to other values land in `undecided` together with the
// genuinely unresolved ones; the three sets partition the swept range.
struct SeparationReport {
    std::vector<std::uint64_t> in_a;
    std::vector<std::uint64_t> in_b;
    std::vector<std::uint64_t> undecided;
    std::uint64_t budget = 0;
};

// phi_e(e) with the halting value flipped through (v == 0): Yes(1) when
// phi_e(e) = 0, Yes(0) when it halts on anything else, Unknown otherwise.
BudgetedAnswer diagonal_value(const ProgramIndex& e, std::uint64_t budget);

SeparationReport inseparable_membership(std::uint64_t range_max,
                                        std::uint64_t budget);

// A function given either as a program index (evaluated within budget,
// UnresolvedAt on overrun) or as a table covering 0..horizon.
using Fn = std::variant<ProgramIndex, std::vector<Nat>>;

struct NoWitnessUpTo {
    std::uint64_t horizon;
};

// Least y <= horizon with g(x) < f(x) for all y < x <= horizon, or
// NoWitnessUpTo when g(horizon) >= f(horizon).
std::variant<std::uint64_t, NoWitnessUpTo> majorizes(const Fn& f, const Fn& g,
                                                     std::uint64_t horizon,
                                                     std::uint64_t budget);

// Diagonal-avoidance check for an initial segment s: s is consistent with
// being DNR_k iff s[e] != phi_e(e) for every e < |s| whose diagonal value
// resolves within budget to a letter below k. `constraining` lists the
// indices that actually constrain s.
struct ConsistencyReport {
    bool consistent = true;
    std::vector<std::uint64_t> constraining;
    std::vector<std::uint64_t> violations;
    std::uint64_t budget = 0;
};

ConsistencyReport dnr_consistent(const KString& s, std::uint64_t budget);

// Family-level diagonal report for a finite assignment F on {0..|F|-1}
// against the enumerated family `indices`:
//   (1) F avoids every resolved diagonal value of the family, and stays
//       below Omega(e_i) (prime factors of e_i with multiplicity) at
//       positions e with e + 1 <= Omega(e_i);
//   (2) F agrees with the resolved A/B classification of the family
//       members that fall inside F's domain.
struct DiagMajorReport {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> clause1_violations;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> bound_violations;
    std::vector<std::uint64_t> separation_violations;
    SeparationReport family;  // resolved classification of `indices`
    bool verdict = false;
};

DiagMajorReport diag_majorizes(const std::vector<Nat>& f,
                               const std::vector<std::uint64_t>& indices,
                               std::uint64_t budget);

// prime factors with multiplicity
std::uint64_t big_omega(std::uint64_t n);

}  // namespace wb
