#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wb/ordinal.hpp"
#include "wb/urm.hpp"

namespace wb {

// Structural ordinal notation: Zero, successor of a notation, or a limit
// given by a program enumerating codes of a fundamental sequence. The
// numeric code (1, 2^code(pred), 3^fseq_index) is computed on demand and
// guarded; limit codes exceed any practical guard because fseq indices are
// full program codes, so the structural form is primary.
struct Notation;
using NotationPtr = std::shared_ptr<const Notation>;

struct Notation {
    enum class Kind { Zero, Succ, Lim } kind = Kind::Zero;
    NotationPtr pred;          // Succ only
    ProgramIndex fseq_index{0};  // Lim only
    CnfOrdinal denoted;
};

NotationPtr notation_zero();
NotationPtr notation_succ(const NotationPtr& p);
NotationPtr notation_lim(const ProgramIndex& fseq, const CnfOrdinal& denoted);

enum class CodeScheme {
    PowerTower,  // 1, 2^x, 3^e
    KleeneO,     // 1, 2^x, 3 * 5^e
};

// Numeric code under the chosen scheme; CodeTooLarge beyond 2^20 bits.
Nat notation_code(const NotationPtr& n, CodeScheme scheme = CodeScheme::PowerTower);

// Canonical notation for an ordinal below `bound` (default w^w):
// finite ordinals become Succ towers, limits get a table-lookup program
// returning the codes of canonical_notation(l[n]) where those codes are
// representable (diverging elsewhere), with the ordinal's structure coded
// into a dead register so distinct limits get distinct indices.
NotationPtr canonical_notation(const CnfOrdinal& a);
NotationPtr canonical_notation(const CnfOrdinal& a, const CnfOrdinal& bound);

CnfOrdinal notation_to_ordinal(const NotationPtr& n);

Ordering compare_notation(const NotationPtr& a, const NotationPtr& b);

// Structural identity (kind, predecessor chain, fseq index).
bool notation_equal(const NotationPtr& a, const NotationPtr& b);

struct PathReport {
    bool linear = true;         // semantics pairwise distinct and ordered
    bool closed = true;         // predecessors / sampled fseq members present
    bool unique = true;         // equal semantics only with equal structure
    std::vector<std::string> issues;
    bool ok() const { return linear && closed && unique; }
};

// Checks a finite list of notations for linearity, closure under
// predecessor and sampled fundamental-sequence members, and uniqueness.
PathReport path_properties(const std::vector<NotationPtr>& path);

// Injective structural fingerprint, usable as a comparison key.
std::string notation_fingerprint(const NotationPtr& n);

}  // namespace wb
