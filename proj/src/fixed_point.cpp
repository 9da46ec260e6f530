#include "wb/fixed_point.hpp"

#include "wb/builder.hpp"
#include "wb/errors.hpp"

namespace wb {
namespace {

using Reg = ProgramBuilder::Reg;
using Label = ProgramBuilder::Label;

// --- bit-stream access mirroring the host Goedel numbering ---------------
// Reading: sv holds the remaining stream in sentinel form (initially e+1);
// sv == 1 means exhausted, which reads as zeros. Writing: acc accumulates
// bits, pow = 2^len, pm1 = pow - 1 (tracked so finishing needs no bignum
// subtraction); the finished index is acc + pm1.

void emit_read_bit(ProgramBuilder& b, Reg sv, Reg bit) {
    Reg one = b.temp(), q = b.temp();
    Label end = b.make_label();
    b.zero(bit);
    b.load_const(one, 1);
    b.jump_if_eq(sv, one, end);
    b.halve(sv, q, bit);
    b.copy(q, sv);
    b.bind(end);
}

void emit_read_field(ProgramBuilder& b, Reg sv, Reg val) {
    Reg bit = b.temp(), len = b.temp(), payload = b.temp(), pw = b.temp(),
        pm1 = b.temp(), i = b.temp();
    Label ones = b.make_label(), pay0 = b.make_label(), pay = b.make_label(),
          sk = b.make_label(), end = b.make_label();
    b.zero(len);
    b.bind(ones);
    emit_read_bit(b, sv, bit);
    b.jump_if_zero(bit, pay0);
    b.succ(len);
    b.jump(ones);
    b.bind(pay0);
    b.zero(payload);
    b.zero(pm1);
    b.zero(pw);
    b.succ(pw);
    b.zero(i);
    b.bind(pay);
    b.jump_if_eq(i, len, end);
    emit_read_bit(b, sv, bit);
    b.jump_if_zero(bit, sk);
    b.add(pw, payload);
    b.bind(sk);
    b.add(pw, pw);
    b.add(pm1, pm1);
    b.succ(pm1);
    b.succ(i);
    b.jump(pay);
    b.bind(end);
    b.copy(pm1, val);
    b.add(payload, val);
}

struct Writer {
    Reg acc, pow, pm1;
};

void emit_write_bit1(ProgramBuilder& b, const Writer& w) {
    b.add(w.pow, w.acc);
    b.add(w.pow, w.pow);
    b.add(w.pm1, w.pm1);
    b.succ(w.pm1);
}

void emit_write_bit0(ProgramBuilder& b, const Writer& w) {
    b.add(w.pow, w.pow);
    b.add(w.pm1, w.pm1);
    b.succ(w.pm1);
}

void emit_write_bit_flag(ProgramBuilder& b, const Writer& w, Reg bit) {
    Label skip = b.make_label();
    b.jump_if_zero(bit, skip);
    b.add(w.pow, w.acc);
    b.bind(skip);
    b.add(w.pow, w.pow);
    b.add(w.pm1, w.pm1);
    b.succ(w.pm1);
}

void emit_write_field_const(ProgramBuilder& b, const Writer& w, std::uint64_t v) {
    std::uint64_t wv = v + 1;
    std::uint64_t len = 0;
    while (wv >> (len + 1)) ++len;
    for (std::uint64_t i = 0; i < len; ++i) emit_write_bit1(b, w);
    emit_write_bit0(b, w);
    for (std::uint64_t i = 0; i < len; ++i)
        ((wv >> i) & 1) ? emit_write_bit1(b, w) : emit_write_bit0(b, w);
}

void emit_write_field_reg(ProgramBuilder& b, const Writer& w, Reg v) {
    Reg wv = b.temp(), t = b.temp(), len = b.temp(), q = b.temp(),
        junk = b.temp(), i = b.temp(), bit = b.temp(), one = b.temp();
    Label lenloop = b.make_label(), ones0 = b.make_label(), ones = b.make_label(),
          zero_ = b.make_label(), pay = b.make_label(), end = b.make_label();
    b.copy(v, wv);
    b.succ(wv);
    b.load_const(one, 1);
    b.copy(wv, t);
    b.zero(len);
    b.bind(lenloop);
    b.jump_if_eq(t, one, ones0);
    b.halve(t, q, junk);
    b.copy(q, t);
    b.succ(len);
    b.jump(lenloop);
    b.bind(ones0);
    b.zero(i);
    b.bind(ones);
    b.jump_if_eq(i, len, zero_);
    emit_write_bit1(b, w);
    b.succ(i);
    b.jump(ones);
    b.bind(zero_);
    emit_write_bit0(b, w);
    b.copy(wv, t);
    b.zero(i);
    b.bind(pay);
    b.jump_if_eq(i, len, end);
    b.halve(t, q, bit);
    b.copy(q, t);
    emit_write_bit_flag(b, w, bit);
    b.succ(i);
    b.jump(pay);
    b.bind(end);
}

// Streams the encoding of "load constant c into register 0" (the exact
// instruction sequence emit_load_const produces: Z 0; S 0; then per bit
// below the most significant one an A 0 0 and, for set bits, an S 0).
// Each emitted instruction also bumps `off`.
void emit_load_const_encoding(ProgramBuilder& b, const Writer& w, Reg off, Reg c) {
    Reg pw = b.temp(), pw2 = b.temp(), f = b.temp(), r = b.temp(),
        r2 = b.temp(), one = b.temp();
    Label up = b.make_label(), down = b.make_label(), bits = b.make_label(),
          next = b.make_label(), done = b.make_label();
    emit_write_field_const(b, w, 0);  // Z
    emit_write_field_const(b, w, 0);
    b.succ(off);
    b.jump_if_zero(c, done);
    emit_write_field_const(b, w, 1);  // S
    emit_write_field_const(b, w, 0);
    b.succ(off);
    b.load_const(one, 1);
    b.zero(pw);
    b.succ(pw);
    b.bind(up);  // pw := highest power of two <= c
    b.copy(pw, pw2);
    b.add(pw, pw2);
    b.leq(pw2, c, f);
    b.jump_if_zero(f, down);
    b.copy(pw2, pw);
    b.jump(up);
    b.bind(down);
    b.monus(c, pw, r);
    b.bind(bits);
    b.jump_if_eq(pw, one, done);
    b.halve(pw, pw2, f);
    b.copy(pw2, pw);
    emit_write_field_const(b, w, 4);  // A 0 0
    emit_write_field_const(b, w, 0);
    emit_write_field_const(b, w, 0);
    b.succ(off);
    b.leq(pw, r, f);
    b.jump_if_zero(f, next);
    emit_write_field_const(b, w, 1);  // S 0
    emit_write_field_const(b, w, 0);
    b.succ(off);
    b.monus(r, pw, r2);
    b.copy(r2, r);
    b.bind(next);
    b.jump(bits);
    b.bind(done);
}

// m := index of smn(u, [u]) — specialize the first argument of u to the
// value u itself. Must agree with the host smn instruction for instruction.
void emit_smn1(ProgramBuilder& b, Reg u, Reg dst) {
    Reg sv = b.temp(), one = b.temp(), five = b.temp(), arity = b.temp(),
        rest = b.temp(), i = b.temp(), ip1 = b.temp(), off = b.temp(),
        raw = b.temp(), q = b.temp(), op = b.temp(), a = b.temp(),
        b2 = b.temp(), c3 = b.temp(), two = b.temp(), three = b.temp(),
        four = b.temp();
    Writer w{b.temp(), b.temp(), b.temp()};
    Label shift = b.make_label(), load = b.make_label(), obj = b.make_label(),
          opn1 = b.make_label(), opn2 = b.make_label(), opnj = b.make_label(),
          fin = b.make_label();
    b.load_const(one, 1);
    b.load_const(two, 2);
    b.load_const(three, 3);
    b.load_const(four, 4);
    b.load_const(five, 5);
    b.copy(u, sv);
    b.succ(sv);
    b.zero(w.acc);
    b.zero(w.pm1);
    b.zero(w.pow);
    b.succ(w.pow);
    b.zero(off);
    emit_read_field(b, sv, arity);
    b.monus(arity, one, rest);
    emit_write_field_reg(b, w, rest);  // new arity
    // register shift: C i (i+1) for i = rest-1 .. 0
    b.copy(rest, i);
    b.bind(shift);
    b.jump_if_zero(i, load);
    b.dec(i);
    emit_write_field_const(b, w, 2);
    emit_write_field_reg(b, w, i);
    b.copy(i, ip1);
    b.succ(ip1);
    emit_write_field_reg(b, w, ip1);
    b.succ(off);
    b.jump(shift);
    b.bind(load);
    emit_load_const_encoding(b, w, off, u);
    // object instructions, jump targets shifted by off
    b.bind(obj);
    b.jump_if_eq(sv, one, fin);
    emit_read_field(b, sv, raw);
    b.divmod(raw, five, q, op);
    emit_write_field_reg(b, w, op);
    b.jump_if_eq(op, three, opnj);
    b.jump_if_eq(op, two, opn2);
    b.jump_if_eq(op, four, opn2);
    emit_read_field(b, sv, a);  // Z/S: one operand
    emit_write_field_reg(b, w, a);
    b.jump(obj);
    b.bind(opn2);  // C/A: two operands
    emit_read_field(b, sv, a);
    emit_write_field_reg(b, w, a);
    emit_read_field(b, sv, b2);
    emit_write_field_reg(b, w, b2);
    b.jump(obj);
    b.bind(opnj);  // J: two registers and a shifted target
    emit_read_field(b, sv, a);
    emit_write_field_reg(b, w, a);
    emit_read_field(b, sv, b2);
    emit_write_field_reg(b, w, b2);
    emit_read_field(b, sv, c3);
    b.add(off, c3);
    emit_write_field_reg(b, w, c3);
    b.jump(obj);
    b.bind(fin);
    b.copy(w.acc, dst);
    b.add(w.pm1, dst);
}

// out := value of program k on input x; diverges with the object program.
void emit_universal(ProgramBuilder& b, Reg k, Reg x, Reg out) {
    Reg regs = b.temp(), nregs = b.temp(), ip = b.temp(), sv = b.temp(),
        one = b.temp(), two = b.temp(), three = b.temp(), four = b.temp(),
        five = b.temp(), zr = b.temp(), junk = b.temp(), i = b.temp(),
        raw = b.temp(), q = b.temp(), op = b.temp(), a = b.temp(),
        b2 = b.temp(), c3 = b.temp(), va = b.temp(), vb = b.temp();
    Label fetch = b.make_label(), skip = b.make_label(), sk2 = b.make_label(),
          sk3 = b.make_label(), skinc = b.make_label(), exec = b.make_label(),
          lz = b.make_label(), ls = b.make_label(), lc = b.make_label(),
          lj = b.make_label(), ljmp = b.make_label(), inc = b.make_label(),
          halt = b.make_label();
    b.load_const(one, 1);
    b.load_const(two, 2);
    b.load_const(three, 3);
    b.load_const(four, 4);
    b.load_const(five, 5);
    b.zero(zr);
    b.zero(regs);
    b.assoc_set(regs, zr, x, nregs);
    b.copy(nregs, regs);
    b.zero(ip);
    b.bind(fetch);
    b.copy(k, sv);
    b.succ(sv);
    emit_read_field(b, sv, junk);  // arity, irrelevant mid-run
    b.zero(i);
    b.bind(skip);
    b.jump_if_eq(sv, one, halt);  // instruction pointer ran off the end
    b.jump_if_eq(i, ip, exec);
    emit_read_field(b, sv, raw);
    b.divmod(raw, five, q, op);
    b.jump_if_eq(op, three, sk3);
    b.jump_if_eq(op, two, sk2);
    b.jump_if_eq(op, four, sk2);
    emit_read_field(b, sv, junk);
    b.jump(skinc);
    b.bind(sk2);
    emit_read_field(b, sv, junk);
    emit_read_field(b, sv, junk);
    b.jump(skinc);
    b.bind(sk3);
    emit_read_field(b, sv, junk);
    emit_read_field(b, sv, junk);
    emit_read_field(b, sv, junk);
    b.bind(skinc);
    b.succ(i);
    b.jump(skip);
    b.bind(exec);
    emit_read_field(b, sv, raw);
    b.divmod(raw, five, q, op);
    b.jump_if_zero(op, lz);
    b.jump_if_eq(op, one, ls);
    b.jump_if_eq(op, two, lc);
    b.jump_if_eq(op, three, lj);
    // Add
    emit_read_field(b, sv, a);
    emit_read_field(b, sv, b2);
    b.assoc_get(regs, a, va);
    b.assoc_get(regs, b2, vb);
    b.add(va, vb);
    b.assoc_set(regs, b2, vb, nregs);
    b.copy(nregs, regs);
    b.jump(inc);
    b.bind(lz);
    emit_read_field(b, sv, a);
    b.zero(va);
    b.assoc_set(regs, a, va, nregs);
    b.copy(nregs, regs);
    b.jump(inc);
    b.bind(ls);
    emit_read_field(b, sv, a);
    b.assoc_get(regs, a, va);
    b.succ(va);
    b.assoc_set(regs, a, va, nregs);
    b.copy(nregs, regs);
    b.jump(inc);
    b.bind(lc);
    emit_read_field(b, sv, a);
    emit_read_field(b, sv, b2);
    b.assoc_get(regs, a, va);
    b.assoc_set(regs, b2, va, nregs);
    b.copy(nregs, regs);
    b.jump(inc);
    b.bind(lj);
    emit_read_field(b, sv, a);
    emit_read_field(b, sv, b2);
    emit_read_field(b, sv, c3);
    b.assoc_get(regs, a, va);
    b.assoc_get(regs, b2, vb);
    b.jump_if_eq(va, vb, ljmp);
    b.succ(ip);
    b.jump(fetch);
    b.bind(ljmp);
    b.copy(c3, ip);
    b.jump(fetch);
    b.bind(inc);
    b.succ(ip);
    b.jump(fetch);
    b.bind(halt);
    b.assoc_get(regs, zr, out);
}

std::uint64_t register_span(const Program& p) {
    std::uint64_t hi = p.arity;
    for (const Instruction& ins : p.instructions) {
        hi = std::max(hi, ins.a + 1);
        if (ins.op == Op::Copy || ins.op == Op::Add || ins.op == Op::Jump)
            hi = std::max(hi, ins.b + 1);
    }
    return hi;
}

}  // namespace

Program smn1_program() {
    ProgramBuilder b(1, 4);
    Reg m = b.temp();
    emit_smn1(b, 0, m);
    b.copy(m, 0);
    return b.build();
}

Program universal_program() {
    ProgramBuilder b(2, 4);
    Reg out = b.temp();
    emit_universal(b, 0, 1, out);
    b.copy(out, 0);
    return b.build();
}

ProgramIndex fixed_point(const ProgramIndex& psi, std::uint64_t budget,
                         bool require_psi_halts) {
    Program psi_p = decode_program(psi);
    // g(u, x) = phi_{psi(smn(u,[u]))}(x); the fixed point is g specialized
    // to its own index.
    ProgramBuilder b(2, 4);
    Reg m = b.temp();
    emit_smn1(b, 0, m);
    std::uint64_t span = register_span(psi_p);
    Reg base = b.temp();
    for (std::uint64_t s = 1; s < span; ++s) b.temp();  // reserve psi's registers
    b.copy(m, base);
    b.inline_block(psi_p, base);  // base now holds psi(smn(u,[u]))
    Reg res = b.temp();
    emit_universal(b, base, 1, res);
    b.copy(res, 0);
    ProgramIndex e_g = encode_program(b.build());
    ProgramIndex e = smn(e_g, {e_g.value});
    if (require_psi_halts) {
        auto r = run_value(psi, {e.value}, budget);
        if (std::holds_alternative<OutOfBudget>(r))
            throw PsiDiverged();
    }
    return e;
}

}  // namespace wb
