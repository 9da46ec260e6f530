#pragma once

#include <cstdint>
#include <vector>

#include "wb/urm.hpp"

namespace wb {

// Structured assembler for register-machine programs: forward labels,
// scratch-register allocation, and arithmetic macros built from the
// primitive instruction set. All macro loops count upward; the machine
// has no decrement, so derived operations cost O(value) steps or worse.
class ProgramBuilder {
 public:
  using Reg = std::uint64_t;
  using Label = std::size_t;

  // arity: number of input registers 0..arity-1; scratch registers are
  // allocated from `first_temp` upward (callers reserve below it).
  explicit ProgramBuilder(std::uint64_t arity, Reg first_temp);

  Reg temp();  // fresh scratch register, never reused

  Label make_label();
  void bind(Label l);

  // primitives
  void zero(Reg r);
  void succ(Reg r);
  void copy(Reg src, Reg dst);
  void add(Reg src, Reg dst);  // dst += src
  void jump_if_eq(Reg a, Reg b, Label l);
  void jump(Label l);
  void query(Reg r);  // oracle machines only

  // macros; source operands are preserved unless stated otherwise
  void load_const(Reg r, const Nat& value);
  void jump_if_zero(Reg r, Label l);
  void jump_if_nonzero(Reg r, Label l);
  void dec(Reg r);                        // r := max(r-1, 0)
  void monus(Reg a, Reg b, Reg dst);      // dst := max(a-b, 0)
  void mul(Reg a, Reg b, Reg dst);
  void leq(Reg a, Reg b, Reg dst);        // dst := a <= b ? 1 : 0
  void less(Reg a, Reg b, Reg dst);       // dst := a <  b ? 1 : 0
  void halve(Reg src, Reg q, Reg parity); // src = 2q + parity
  void divmod(Reg num, Reg den, Reg q, Reg r);  // den > 0 or the loop never ends
  void pair(Reg x, Reg y, Reg dst);       // Cantor pairing
  void unpair(Reg z, Reg x, Reg y);

  // association lists coded as nested Cantor pairs,
  // 0 = nil, pair(pair(key, value), rest) + 1 = cons
  void assoc_get(Reg list, Reg key, Reg dst);         // 0 when absent
  void assoc_set(Reg list, Reg key, Reg val, Reg dst);

  // Splices `p` into the current program with every register shifted up by
  // `base`; halting jump targets continue after the block.
  void inline_block(const Program& p, Reg base);

  std::size_t here() const { return code_.size(); }

  // Patches label references; unbound labels resolve past the end (halt).
  Program build();

 private:
  std::uint64_t arity_;
  Reg next_temp_;
  std::vector<Instruction> code_;
  std::vector<std::size_t> label_addr_;  // SIZE_MAX = unbound
  struct Fixup {
    std::size_t at;
    Label label;
  };
  std::vector<Fixup> fixups_;
};

}  // namespace wb
