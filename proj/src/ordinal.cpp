#include "wb/ordinal.hpp"

#include <cctype>
#include <sstream>

#include "wb/errors.hpp"

namespace wb {

bool CnfOrdinal::is_successor() const {
    return !terms.empty() && terms.back().exponent.is_zero();
}

bool CnfOrdinal::operator==(const CnfOrdinal& other) const {
    return terms == other.terms;
}

CnfOrdinal cnf_nat(const Nat& n) {
    CnfOrdinal a;
    if (n > 0) a.terms.push_back({CnfOrdinal{}, n});
    return a;
}

CnfOrdinal cnf_omega() { return cnf_power(cnf_nat(1)); }

CnfOrdinal cnf_power(const CnfOrdinal& e, const Nat& c) {
    CnfOrdinal a;
    if (c > 0) a.terms.push_back({e, c});
    return a;
}

Ordering cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b) {
    std::size_t n = std::min(a.terms.size(), b.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        Ordering e = cnf_compare(a.terms[i].exponent, b.terms[i].exponent);
        if (e != Ordering::Equal) return e;
        if (a.terms[i].coefficient != b.terms[i].coefficient)
            return a.terms[i].coefficient < b.terms[i].coefficient
                       ? Ordering::Less
                       : Ordering::Greater;
    }
    if (a.terms.size() == b.terms.size()) return Ordering::Equal;
    return a.terms.size() < b.terms.size() ? Ordering::Less : Ordering::Greater;
}

CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b) {
    if (b.is_zero()) return a;
    const CnfOrdinal& lead = b.terms.front().exponent;
    CnfOrdinal out;
    // terms of a below b's leading exponent are absorbed
    for (const auto& t : a.terms) {
        Ordering c = cnf_compare(t.exponent, lead);
        if (c == Ordering::Less) break;
        out.terms.push_back(t);
    }
    std::size_t i = 0;
    if (!out.terms.empty() &&
        cnf_compare(out.terms.back().exponent, lead) == Ordering::Equal) {
        out.terms.back().coefficient += b.terms.front().coefficient;
        i = 1;
    }
    for (; i < b.terms.size(); ++i) out.terms.push_back(b.terms[i]);
    return out;
}

CnfOrdinal cnf_mul(const CnfOrdinal& a, const CnfOrdinal& b) {
    if (a.is_zero() || b.is_zero()) return CnfOrdinal{};
    CnfOrdinal out;
    for (const auto& t : b.terms) {
        if (t.exponent.is_zero()) {
            // right factor's natural part: multiply a's leading coefficient
            CnfOrdinal piece = a;
            piece.terms.front().coefficient *= t.coefficient;
            out = cnf_add(out, piece);
        } else {
            out = cnf_add(out, cnf_power(cnf_add(a.terms.front().exponent,
                                                 t.exponent),
                                         t.coefficient));
        }
    }
    return out;
}

CnfOrdinal cnf_predecessor(const CnfOrdinal& a) {
    if (!a.is_successor()) throw DomainError("predecessor of a non-successor");
    CnfOrdinal out = a;
    if (out.terms.back().coefficient == 1)
        out.terms.pop_back();
    else
        out.terms.back().coefficient -= 1;
    return out;
}

CnfOrdinal fundamental_sequence(const CnfOrdinal& l, const Nat& n) {
    if (!l.is_limit()) throw NotALimit();
    CnfOrdinal prefix = l;
    CnfOrdinal::Term last = prefix.terms.back();
    prefix.terms.pop_back();
    if (last.coefficient > 1) {
        last.coefficient -= 1;
        prefix.terms.push_back(last);
        last.coefficient = 1;
    }
    // prefix + (w^{last.exponent})[n]
    if (last.exponent.is_successor()) {
        // (w^{b+1})[n] = w^b * n
        return cnf_add(prefix, cnf_power(cnf_predecessor(last.exponent),
                                         n == 0 ? Nat(0) : n));
    }
    // (w^g)[n] = w^{g[n]} for limit g
    return cnf_add(prefix, cnf_power(fundamental_sequence(last.exponent, n)));
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Nat number() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start) throw ParseError("expected a number at offset " +
                                           std::to_string(start));
        return Nat(s.substr(start, pos - start));
    }

    // term := 'w' ['^' exponent] ['*' nat] | nat
    CnfOrdinal term() {
        skip();
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            CnfOrdinal e = cnf_nat(1);
            if (eat('^')) e = exponent();
            Nat c = 1;
            if (eat('*')) c = number();
            if (c == 0) return CnfOrdinal{};
            return cnf_power(e, c);
        }
        return cnf_nat(number());
    }

    // exponent := '(' sum ')' | 'w' | nat
    CnfOrdinal exponent() {
        skip();
        if (eat('(')) {
            CnfOrdinal e = sum();
            if (!eat(')')) throw ParseError("missing ')' in ordinal literal");
            return e;
        }
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            return cnf_omega();
        }
        return cnf_nat(number());
    }

    CnfOrdinal sum() {
        CnfOrdinal a = term();
        while (eat('+')) a = cnf_add(a, term());
        return a;
    }
};

void print_term(std::ostringstream& out, const CnfOrdinal::Term& t) {
    if (t.exponent.is_zero()) {
        out << t.coefficient;
        return;
    }
    out << 'w';
    if (!(t.exponent == cnf_nat(1))) {
        bool simple = t.exponent.terms.size() == 1 &&
                      t.exponent.terms.front().exponent.is_zero();
        out << '^';
        if (simple)
            out << t.exponent.terms.front().coefficient;
        else
            out << '(' << ordinal_to_string(t.exponent) << ')';
    }
    if (t.coefficient != 1) out << '*' << t.coefficient;
}

}  // namespace

CnfOrdinal parse_ordinal(const std::string& text) {
    Parser p{text};
    CnfOrdinal a = p.sum();
    p.skip();
    if (p.pos != text.size())
        throw ParseError("trailing characters in ordinal literal at offset " +
                         std::to_string(p.pos));
    return a;
}

std::string ordinal_to_string(const CnfOrdinal& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (i) out << " + ";
        print_term(out, a.terms[i]);
    }
    return out.str();
}

}  // namespace wb
