#include "wb/dnr.hpp"

#include <optional>

#include "wb/errors.hpp"

namespace wb {

std::uint64_t big_omega(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            n /= p;
            ++count;
        }
    if (n > 1) ++count;
    return count;
}

BudgetedAnswer diagonal_value(const ProgramIndex& e, std::uint64_t budget) {
    auto r = run_value(e, {e.value}, budget);
    if (std::holds_alternative<OutOfBudget>(r))
        return {BudgetedAnswer::Kind::Unknown, 0, budget};
    const Nat& v = std::get<Nat>(r);
    return {BudgetedAnswer::Kind::Yes, v == 0 ? Nat(1) : Nat(0), budget};
}

SeparationReport inseparable_membership(std::uint64_t range_max,
                                        std::uint64_t budget) {
    SeparationReport rep;
    rep.budget = budget;
    for (std::uint64_t e = 0; e < range_max; ++e) {
        auto r = run_value(ProgramIndex{e}, {Nat(e)}, budget);
        if (std::holds_alternative<OutOfBudget>(r)) {
            rep.undecided.push_back(e);
        } else if (std::get<Nat>(r) == 0) {
            rep.in_a.push_back(e);
        } else if (std::get<Nat>(r) == 1) {
            rep.in_b.push_back(e);
        } else {
            // halted outside {0,1}: settled to be in neither set; kept with
            // the unresolved so the three buckets partition the range
            rep.undecided.push_back(e);
        }
    }
    return rep;
}

namespace {

Nat eval_fn(const Fn& f, std::uint64_t x, std::uint64_t budget) {
    if (const auto* table = std::get_if<std::vector<Nat>>(&f)) {
        if (x >= table->size()) throw UnresolvedAt(x);
        return (*table)[x];
    }
    auto r = run_value(std::get<ProgramIndex>(f), {Nat(x)}, budget);
    if (std::holds_alternative<OutOfBudget>(r)) throw UnresolvedAt(x);
    return std::get<Nat>(r);
}

}  // namespace

std::variant<std::uint64_t, NoWitnessUpTo> majorizes(const Fn& f, const Fn& g,
                                                     std::uint64_t horizon,
                                                     std::uint64_t budget) {
    std::uint64_t witness = 0;
    bool violated = false;
    for (std::uint64_t x = 0; x <= horizon; ++x) {
        if (eval_fn(g, x, budget) >= eval_fn(f, x, budget)) {
            witness = x;
            violated = true;
        }
    }
    if (violated && witness == horizon) return NoWitnessUpTo{horizon};
    return violated ? witness : 0;
}

ConsistencyReport dnr_consistent(const KString& s, std::uint64_t budget) {
    ConsistencyReport rep;
    rep.budget = budget;
    for (std::uint64_t e = 0; e < s.values.size(); ++e) {
        auto r = run_value(ProgramIndex{e}, {Nat(e)}, budget);
        if (std::holds_alternative<OutOfBudget>(r)) continue;
        const Nat& v = std::get<Nat>(r);
        if (v >= s.k) continue;  // not a letter, cannot constrain
        rep.constraining.push_back(e);
        if (s.values[e] == v) {
            rep.consistent = false;
            rep.violations.push_back(e);
        }
    }
    return rep;
}

DiagMajorReport diag_majorizes(const std::vector<Nat>& f,
                               const std::vector<std::uint64_t>& indices,
                               std::uint64_t budget) {
    DiagMajorReport rep;
    rep.family.budget = budget;
    std::vector<std::optional<Nat>> diag(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        auto r = run_value(ProgramIndex{indices[i]}, {Nat(indices[i])}, budget);
        if (std::holds_alternative<OutOfBudget>(r)) {
            rep.family.undecided.push_back(indices[i]);
            continue;
        }
        diag[i] = std::get<Nat>(r);
        if (*diag[i] == 0)
            rep.family.in_a.push_back(indices[i]);
        else if (*diag[i] == 1)
            rep.family.in_b.push_back(indices[i]);
        else
            rep.family.undecided.push_back(indices[i]);
    }

    for (std::uint64_t e = 0; e < f.size(); ++e) {
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (diag[i] && f[e] == *diag[i])
                rep.clause1_violations.push_back({e, indices[i]});
            std::uint64_t omega = big_omega(indices[i]);
            if (e + 1 <= omega && f[e] >= omega)
                rep.bound_violations.push_back({e, indices[i]});
        }
    }

    // F must act as a separator on the resolved family members it covers
    for (std::uint64_t e : rep.family.in_a)
        if (e < f.size() && f[e] != 1) rep.separation_violations.push_back(e);
    for (std::uint64_t e : rep.family.in_b)
        if (e < f.size() && f[e] != 0) rep.separation_violations.push_back(e);

    rep.verdict = rep.clause1_violations.empty() &&
                  rep.bound_violations.empty() &&
                  rep.separation_violations.empty();
    return rep;
}

}  // namespace wb
