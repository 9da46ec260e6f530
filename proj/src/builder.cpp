#include "wb/builder.hpp"

#include <limits>

namespace wb {

namespace {
constexpr std::size_t kUnbound = std::numeric_limits<std::size_t>::max();
}

ProgramBuilder::ProgramBuilder(std::uint64_t arity, Reg first_temp)
    : arity_(arity), next_temp_(first_temp < arity ? arity : first_temp) {}

ProgramBuilder::Reg ProgramBuilder::temp() { return next_temp_++; }

ProgramBuilder::Label ProgramBuilder::make_label() {
  label_addr_.push_back(kUnbound);
  return label_addr_.size() - 1;
}

void ProgramBuilder::bind(Label l) { label_addr_[l] = code_.size(); }

void ProgramBuilder::zero(Reg r) { code_.push_back({Op::Zero, r}); }
void ProgramBuilder::succ(Reg r) { code_.push_back({Op::Succ, r}); }
void ProgramBuilder::copy(Reg src, Reg dst) { code_.push_back({Op::Copy, src, dst}); }
void ProgramBuilder::add(Reg src, Reg dst) { code_.push_back({Op::Add, src, dst}); }
void ProgramBuilder::query(Reg r) { code_.push_back({Op::Query, r}); }

void ProgramBuilder::jump_if_eq(Reg a, Reg b, Label l) {
  fixups_.push_back({code_.size(), l});
  code_.push_back({Op::Jump, a, b, 0});
}

void ProgramBuilder::jump(Label l) { jump_if_eq(0, 0, l); }

void ProgramBuilder::load_const(Reg r, const Nat& value) {
  emit_load_const(code_, r, value);
}

void ProgramBuilder::jump_if_zero(Reg r, Label l) {
  Reg z = temp();
  zero(z);
  jump_if_eq(r, z, l);
}

void ProgramBuilder::jump_if_nonzero(Reg r, Label l) {
  Reg z = temp();
  Label skip = make_label();
  zero(z);
  jump_if_eq(r, z, skip);
  jump(l);
  bind(skip);
}

void ProgramBuilder::monus(Reg a, Reg b, Reg dst) {
  // dst counts members of [b, a); flag f latches once k passes b
  Reg k = temp(), f = temp();
  Label loop = make_label(), set = make_label(), test = make_label(),
        skip = make_label(), end = make_label();
  zero(dst);
  zero(k);
  zero(f);
  bind(loop);
  jump_if_eq(k, a, end);
  jump_if_eq(k, b, set);
  jump(test);
  bind(set);
  succ(f);
  bind(test);
  jump_if_zero(f, skip);
  succ(dst);
  bind(skip);
  succ(k);
  jump(loop);
  bind(end);
}

void ProgramBuilder::dec(Reg r) {
  Reg one = temp(), t = temp();
  zero(one);
  succ(one);
  monus(r, one, t);
  copy(t, r);
}

void ProgramBuilder::mul(Reg a, Reg b, Reg dst) {
  Reg i = temp();
  Label loop = make_label(), end = make_label();
  zero(dst);
  zero(i);
  bind(loop);
  jump_if_eq(i, b, end);
  add(a, dst);
  succ(i);
  jump(loop);
  bind(end);
}

void ProgramBuilder::leq(Reg a, Reg b, Reg dst) {
  Reg k = temp();
  Label loop = make_label(), yes = make_label(), end = make_label();
  zero(dst);
  zero(k);
  bind(loop);
  jump_if_eq(k, a, yes);
  jump_if_eq(k, b, end);
  succ(k);
  jump(loop);
  bind(yes);
  succ(dst);
  bind(end);
}

void ProgramBuilder::less(Reg a, Reg b, Reg dst) {
  // b is tested first so equality yields 0
  Reg k = temp();
  Label loop = make_label(), yes = make_label(), end = make_label();
  zero(dst);
  zero(k);
  bind(loop);
  jump_if_eq(k, b, end);
  jump_if_eq(k, a, yes);
  succ(k);
  jump(loop);
  bind(yes);
  succ(dst);
  bind(end);
}

void ProgramBuilder::halve(Reg src, Reg q, Reg parity) {
  Reg acc = temp();
  Label loop = make_label(), odd = make_label(), end = make_label();
  zero(q);
  zero(parity);
  zero(acc);
  bind(loop);
  jump_if_eq(acc, src, end);
  succ(acc);
  jump_if_eq(acc, src, odd);
  succ(acc);
  succ(q);
  jump(loop);
  bind(odd);
  succ(parity);
  bind(end);
}

void ProgramBuilder::divmod(Reg num, Reg den, Reg q, Reg r) {
  // c cycles through residues; den = 0 degenerates to q = 0, r = num
  Reg k = temp(), c = temp();
  Label loop = make_label(), reset = make_label(), cont = make_label(),
        end = make_label();
  zero(q);
  zero(c);
  zero(k);
  bind(loop);
  jump_if_eq(k, num, end);
  succ(k);
  succ(c);
  jump_if_eq(c, den, reset);
  jump(cont);
  bind(reset);
  zero(c);
  succ(q);
  bind(cont);
  jump(loop);
  bind(end);
  copy(c, r);
}

void ProgramBuilder::pair(Reg x, Reg y, Reg dst) {
  Reg s = temp(), s1 = temp(), prod = temp(), half = temp(), par = temp();
  copy(x, s);
  add(y, s);
  copy(s, s1);
  succ(s1);
  mul(s, s1, prod);
  halve(prod, half, par);
  copy(half, dst);
  add(y, dst);
}

void ProgramBuilder::unpair(Reg z, Reg x, Reg y) {
  // walk the pairing enumeration: within diagonal s, y runs 0..s and
  // x = s - y; O(z) machine steps
  Reg s = temp(), s1 = temp(), k = temp();
  Label loop = make_label(), bump = make_label(), cont = make_label(),
        end = make_label();
  zero(s);
  zero(s1);
  succ(s1);
  zero(y);
  zero(k);
  bind(loop);
  jump_if_eq(k, z, end);
  succ(k);
  succ(y);
  jump_if_eq(y, s1, bump);
  jump(cont);
  bind(bump);
  succ(s);
  succ(s1);
  zero(y);
  bind(cont);
  jump(loop);
  bind(end);
  monus(s, y, x);
}

void ProgramBuilder::assoc_get(Reg list, Reg key, Reg dst) {
  Reg cur = temp(), m = temp(), head = temp(), rest = temp(), k = temp(),
      v = temp();
  Label loop = make_label(), found = make_label(), end = make_label();
  copy(list, cur);
  zero(dst);
  bind(loop);
  jump_if_zero(cur, end);
  copy(cur, m);
  dec(m);
  unpair(m, head, rest);
  unpair(head, k, v);
  jump_if_eq(k, key, found);
  copy(rest, cur);
  jump(loop);
  bind(found);
  copy(v, dst);
  bind(end);
}

void ProgramBuilder::assoc_set(Reg list, Reg key, Reg val, Reg dst) {
  // rebuild without the key, then prepend the new binding; keeping the list
  // minimal matters because codes grow quadratically per element
  Reg cur = temp(), m = temp(), head = temp(), rest = temp(), k = temp(),
      v = temp(), outl = temp(), t = temp();
  Label loop = make_label(), skip = make_label(), done = make_label();
  copy(list, cur);
  zero(outl);
  bind(loop);
  jump_if_zero(cur, done);
  copy(cur, m);
  dec(m);
  unpair(m, head, rest);
  unpair(head, k, v);
  jump_if_eq(k, key, skip);
  pair(head, outl, t);
  copy(t, outl);
  succ(outl);
  bind(skip);
  copy(rest, cur);
  jump(loop);
  bind(done);
  pair(key, val, head);
  pair(head, outl, dst);
  succ(dst);
}

void ProgramBuilder::inline_block(const Program& p, Reg base) {
  // splice p with registers shifted by base; jump targets past the end of
  // the block fall through to the instruction after it
  const std::size_t len = p.instructions.size();
  std::vector<Label> at(len + 1);
  for (auto& l : at) l = make_label();
  for (std::size_t i = 0; i < len; ++i) {
    bind(at[i]);
    const Instruction& ins = p.instructions[i];
    switch (ins.op) {
      case Op::Zero: zero(base + ins.a); break;
      case Op::Succ: succ(base + ins.a); break;
      case Op::Copy: copy(base + ins.a, base + ins.b); break;
      case Op::Add: add(base + ins.a, base + ins.b); break;
      case Op::Query: query(base + ins.a); break;
      case Op::Jump:
        jump_if_eq(base + ins.a, base + ins.b, at[ins.c < len ? ins.c : len]);
        break;
    }
  }
  bind(at[len]);
}

Program ProgramBuilder::build() {
  for (const Fixup& f : fixups_) {
    std::size_t addr = label_addr_[f.label];
    code_[f.at].c = addr == kUnbound ? code_.size() : addr;
  }
  fixups_.clear();
  return Program{arity_, code_};
}

}  // namespace wb
