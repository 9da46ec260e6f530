#include "wb/hierarchy.hpp"

#include "wb/errors.hpp"

namespace wb {

namespace {

// false = unfolding budget exhausted
bool fgh(const CnfOrdinal& a, const Nat& x, std::uint64_t& left, Nat& out) {
    if (left == 0) return false;
    --left;
    if (a.is_zero()) {
        out = x + 1;
        return true;
    }
    if (a.is_successor()) {
        CnfOrdinal b = cnf_predecessor(a);
        Nat cur = x;
        for (Nat i = 0; i <= x; ++i)
            if (!fgh(b, cur, left, cur)) return false;
        out = cur;
        return true;
    }
    return fgh(fundamental_sequence(a, x), x, left, out);
}

}  // namespace

std::variant<Nat, OutOfBudget> fgh_eval(const CnfOrdinal& a, const Nat& x,
                                        std::uint64_t budget) {
    require_nonneg(x, "fgh_eval");
    std::uint64_t left = budget;
    Nat out;
    if (!fgh(a, x, left, out)) return OutOfBudget{budget};
    return out;
}

std::variant<std::uint64_t, NoWitnessUpTo> hierarchy_distinct(
    const CnfOrdinal& a, const CnfOrdinal& b, std::uint64_t horizon,
    std::uint64_t budget) {
    if (a == b) throw DomainError("hierarchy_distinct requires distinct levels");
    for (std::uint64_t x = 0; x <= horizon; ++x) {
        auto va = fgh_eval(a, Nat(x), budget);
        auto vb = fgh_eval(b, Nat(x), budget);
        if (std::holds_alternative<OutOfBudget>(va) ||
            std::holds_alternative<OutOfBudget>(vb))
            throw UnresolvedAt(x);
        if (std::get<Nat>(va) != std::get<Nat>(vb)) return x;
    }
    return NoWitnessUpTo{horizon};
}

ContainmentReport class_containment(const CnfOrdinal& a, const CnfOrdinal& b,
                                    std::uint64_t horizon,
                                    std::uint64_t budget) {
    ContainmentReport rep;
    rep.order = cnf_compare(a, b);
    if (rep.order == Ordering::Equal) {
        rep.threshold = std::uint64_t{0};
        rep.contained = true;
        return rep;
    }
    const CnfOrdinal& lo = rep.order == Ordering::Less ? a : b;
    const CnfOrdinal& hi = rep.order == Ordering::Less ? b : a;
    std::vector<Nat> lo_t, hi_t;
    for (std::uint64_t x = 0; x <= horizon; ++x) {
        auto vl = fgh_eval(lo, Nat(x), budget);
        auto vh = fgh_eval(hi, Nat(x), budget);
        if (std::holds_alternative<OutOfBudget>(vl) ||
            std::holds_alternative<OutOfBudget>(vh))
            throw UnresolvedAt(x);
        lo_t.push_back(std::get<Nat>(vl));
        hi_t.push_back(std::get<Nat>(vh));
    }
    rep.threshold = majorizes(Fn{hi_t}, Fn{lo_t}, horizon, 0);
    rep.contained = std::holds_alternative<std::uint64_t>(rep.threshold);
    return rep;
}

}  // namespace wb
