#include "wb/notation.hpp"

#include <sstream>

#include "wb/builder.hpp"
#include "wb/errors.hpp"

namespace wb {

namespace {

constexpr std::uint64_t kCodeBits = 1u << 20;
// limits for constants embedded into fundamental-sequence table programs;
// larger codes would be representable but make the table index explode
constexpr std::uint64_t kTableBits = 4096;
constexpr std::uint64_t kTableEntries = 8;

// Godel code of the CNF structure, used to watermark fseq programs so
// distinct limits yield distinct indices.
Nat cnf_code(const CnfOrdinal& a) {
    Nat acc = 0;
    for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it)
        acc = cantor_pair(cantor_pair(cnf_code(it->exponent), it->coefficient),
                          acc) + 1;
    return acc;
}

}  // namespace

NotationPtr notation_zero() { return std::make_shared<Notation>(); }

NotationPtr notation_succ(const NotationPtr& p) {
    auto n = std::make_shared<Notation>();
    n->kind = Notation::Kind::Succ;
    n->pred = p;
    n->denoted = cnf_add(p->denoted, cnf_nat(1));
    return n;
}

NotationPtr notation_lim(const ProgramIndex& fseq, const CnfOrdinal& denoted) {
    auto n = std::make_shared<Notation>();
    n->kind = Notation::Kind::Lim;
    n->fseq_index = fseq;
    n->denoted = denoted;
    return n;
}

Nat notation_code(const NotationPtr& n, CodeScheme scheme) {
    switch (n->kind) {
        case Notation::Kind::Zero:
            return 1;
        case Notation::Kind::Succ: {
            Nat c = notation_code(n->pred, scheme);
            if (c >= kCodeBits) throw CodeTooLarge();
            return Nat(1) << to_u64(c, "notation code");
        }
        case Notation::Kind::Lim: {
            const Nat& e = n->fseq_index.value;
            // 3^e has about 1.585 e bits; 3*5^e about 2.33 e
            std::uint64_t per_unit_tenths = scheme == CodeScheme::PowerTower ? 16 : 24;
            if (e * per_unit_tenths >= Nat(kCodeBits) * 10) throw CodeTooLarge();
            Nat base = scheme == CodeScheme::PowerTower ? 3 : 5;
            Nat r = boost::multiprecision::pow(
                base, static_cast<unsigned>(to_u64(e, "fseq index")));
            if (scheme == CodeScheme::KleeneO) r *= 3;
            if (bit_length(r) > kCodeBits) throw CodeTooLarge();
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

NotationPtr canonical_notation(const CnfOrdinal& a) {
    return canonical_notation(a, cnf_power(cnf_omega()));
}

NotationPtr canonical_notation(const CnfOrdinal& a, const CnfOrdinal& bound) {
    if (cnf_compare(a, bound) != Ordering::Less) throw OrdinalTooLarge();
    if (a.is_zero()) return notation_zero();
    if (a.is_successor())
        return notation_succ(canonical_notation(cnf_predecessor(a), bound));

    // limit: table program mapping n to the code of the n-th member's
    // canonical notation, for the members whose codes stay representable;
    // other inputs diverge. The structure code in a dead register keeps
    // the index injective across limits.
    ProgramBuilder b(1, 2);
    ProgramBuilder::Reg tag = b.temp();
    ProgramBuilder::Reg probe = b.temp();
    b.load_const(tag, cnf_code(a));
    ProgramBuilder::Label done = b.make_label();
    for (std::uint64_t n = 0; n < kTableEntries; ++n) {
        Nat code;
        try {
            code = notation_code(
                canonical_notation(fundamental_sequence(a, n), bound));
        } catch (const CodeTooLarge&) {
            break;  // codes only grow along the sequence
        }
        if (bit_length(code) > kTableBits) break;
        ProgramBuilder::Label hit = b.make_label();
        ProgramBuilder::Label miss = b.make_label();
        b.load_const(probe, Nat(n));
        b.jump_if_eq(0, probe, hit);
        b.jump(miss);
        b.bind(hit);
        b.load_const(0, code);
        b.jump(done);
        b.bind(miss);
    }
    ProgramBuilder::Label spin = b.make_label();
    b.bind(spin);
    b.jump(spin);
    b.bind(done);
    return notation_lim(encode_program(b.build()), a);
}

CnfOrdinal notation_to_ordinal(const NotationPtr& n) { return n->denoted; }

Ordering compare_notation(const NotationPtr& a, const NotationPtr& b) {
    return cnf_compare(a->denoted, b->denoted);
}

bool notation_equal(const NotationPtr& a, const NotationPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Notation::Kind::Zero: return true;
        case Notation::Kind::Succ: return notation_equal(a->pred, b->pred);
        case Notation::Kind::Lim: return a->fseq_index == b->fseq_index;
    }
    return false;
}

std::string notation_fingerprint(const NotationPtr& n) {
    switch (n->kind) {
        case Notation::Kind::Zero: return "0";
        case Notation::Kind::Succ: return "S(" + notation_fingerprint(n->pred) + ")";
        case Notation::Kind::Lim: {
            std::ostringstream out;
            out << "L(" << n->fseq_index.value << ")";
            return out.str();
        }
    }
    return "?";
}

PathReport path_properties(const std::vector<NotationPtr>& path) {
    PathReport rep;
    auto present = [&](const CnfOrdinal& o) {
        for (const auto& m : path)
            if (m->denoted == o) return true;
        return false;
    };
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j)
            if (path[i]->denoted == path[j]->denoted) {
                rep.linear = false;
                if (!notation_equal(path[i], path[j])) {
                    rep.unique = false;
                    rep.issues.push_back("distinct notations for " +
                                         ordinal_to_string(path[i]->denoted));
                }
            }
    for (const auto& n : path) {
        if (n->kind == Notation::Kind::Succ && !present(n->pred->denoted)) {
            rep.closed = false;
            rep.issues.push_back("missing predecessor of " +
                                 ordinal_to_string(n->denoted));
        }
        if (n->kind == Notation::Kind::Lim) {
            if (!n->denoted.is_limit()) {
                rep.closed = false;
                rep.issues.push_back("limit notation denotes the non-limit " +
                                     ordinal_to_string(n->denoted));
                continue;
            }
            for (std::uint64_t k = 0; k < 3; ++k) {
                CnfOrdinal member = fundamental_sequence(n->denoted, k);
                if (!present(member)) {
                    rep.closed = false;
                    rep.issues.push_back("missing fseq member " +
                                         ordinal_to_string(member));
                }
            }
        }
    }
    return rep;
}

}  // namespace wb
