#pragma once

#include <string>
#include <vector>

#include "wb/nat.hpp"

namespace wb {

enum class Ordering { Less, Equal, Greater };

// Ordinal below epsilon_0 in Cantor normal form:
// w^{e_1}*c_1 + ... + w^{e_k}*c_k with e_1 > ... > e_k, c_i >= 1.
// The empty sum is 0.
struct CnfOrdinal {
    struct Term;
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_successor() const;
    bool is_limit() const { return !is_zero() && !is_successor(); }

    bool operator==(const CnfOrdinal&) const;
};

struct CnfOrdinal::Term {
    CnfOrdinal exponent;
    Nat coefficient;

    bool operator==(const Term&) const = default;
};

CnfOrdinal cnf_nat(const Nat& n);   // finite ordinal
CnfOrdinal cnf_omega();
// w^e * c (c >= 1)
CnfOrdinal cnf_power(const CnfOrdinal& e, const Nat& c = 1);

Ordering cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b);
CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b);
CnfOrdinal cnf_mul(const CnfOrdinal& a, const CnfOrdinal& b);

// Predecessor of a successor ordinal.
CnfOrdinal cnf_predecessor(const CnfOrdinal& a);

// Wainer assignment: (l + w^{b+1})[n] = l + w^b * n; (l + w^g)[n] = l + w^{g[n]}
// for limit g; trailing coefficients peel off to the final term first.
// Raises NotALimit unless l is a limit.
CnfOrdinal fundamental_sequence(const CnfOrdinal& l, const Nat& n);

// Literal syntax: `w^2*3 + w*1 + 4`; nested exponents parenthesized, e.g.
// `w^(w+1)*2`. Terms are summed with ordinal addition, so unnormalized
// input normalizes (absorption applies).
CnfOrdinal parse_ordinal(const std::string& text);
std::string ordinal_to_string(const CnfOrdinal& a);

}  // namespace wb
