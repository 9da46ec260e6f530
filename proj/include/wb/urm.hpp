#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wb/nat.hpp"

namespace wb {

// Unlimited-register machine. Registers hold arbitrary naturals; a jump
// target at or past the end of the program halts the machine. `Add` exists
// so that large constants load in O(bits) instructions instead of O(value)
// successor chains; without it recursion-theorem indices are not even
// representable. `Query` is legal only in oracle machines (see jump.hpp).
enum class Op : std::uint8_t { Zero, Succ, Copy, Jump, Add, Query };

struct Instruction {
    Op op = Op::Zero;
    std::uint64_t a = 0;  // register (Zero/Succ/Query), source (Copy/Add), regA (Jump)
    std::uint64_t b = 0;  // destination (Copy/Add), regB (Jump)
    std::uint64_t c = 0;  // jump target (Jump)

    bool operator==(const Instruction&) const = default;
};

struct Program {
    std::uint64_t arity = 0;
    std::vector<Instruction> instructions;

    bool operator==(const Program&) const = default;
};

struct ProgramIndex {
    Nat value;

    bool operator==(const ProgramIndex&) const = default;
};

struct Configuration {
    std::uint64_t ip = 0;
    std::map<std::uint64_t, Nat> registers;  // nonzero registers only

    bool operator==(const Configuration&) const = default;
};

struct Trace {
    std::vector<Configuration> configs;  // nonempty, first is the initial configuration
    bool halted = false;

    bool operator==(const Trace&) const = default;
};

struct Halted {
    Nat output;
    Trace trace;
};

struct OutOfBudget {
    std::uint64_t steps_used = 0;
};

using EvalOutcome = std::variant<Halted, OutOfBudget>;

inline bool halted(const EvalOutcome& o) { return std::holds_alternative<Halted>(o); }
inline const Nat& output_of(const EvalOutcome& o) { return std::get<Halted>(o).output; }

// Goedel numbering. Decoding is total: every natural is the index of some
// program. Encoding is injective and a right inverse of decoding.
ProgramIndex encode_program(const Program& p);
Program decode_program(const ProgramIndex& e);

// Step-bounded evaluation with full trace capture. budget >= 1.
EvalOutcome run_bounded(const ProgramIndex& e, const std::vector<Nat>& inputs,
                        std::uint64_t budget);
EvalOutcome run_bounded(const Program& p, const std::vector<Nat>& inputs,
                        std::uint64_t budget);

// Same semantics, no trace kept. Use for large budgets.
std::variant<Nat, OutOfBudget> run_value(const ProgramIndex& e, const std::vector<Nat>& inputs,
                                         std::uint64_t budget);
std::variant<Nat, OutOfBudget> run_value(const Program& p, const std::vector<Nat>& inputs,
                                         std::uint64_t budget);

// Initial configuration for `p` on `inputs` (inputs land in registers
// 0..arity-1; extras are ignored, missing ones read as zero).
Configuration initial_configuration(const Program& p, const std::vector<Nat>& inputs);

// One machine step. Precondition: cfg.ip < p.instructions.size().
Configuration step(const Program& p, const Configuration& cfg);

// s-m-n: specialize the first `fixed.size()` arguments of `e`. The result is
// total and effective; run(smn(e,fixed), xs) = run(e, fixed ++ xs) wherever
// both halt.
Program smn_program(const Program& p, const std::vector<Nat>& fixed);
ProgramIndex smn(const ProgramIndex& e, const std::vector<Nat>& fixed);

// Emits `Z r` followed by a double/increment chain; O(bits) instructions.
// Shared by smn_program and the in-machine specializer, which must agree
// instruction for instruction.
void emit_load_const(std::vector<Instruction>& out, std::uint64_t reg, const Nat& value);

// Oracle-machine numbering: same scheme with Query as a sixth opcode.
// The two index spaces are distinct by design.
ProgramIndex encode_oracle_program(const Program& p);
Program decode_oracle_program(const ProgramIndex& e);

// Text format: one instruction per line, `#` comments.
//   Z r | S r | C src dst | J a b target | A src dst | Q r
std::string program_to_text(const Program& p);
Program program_from_text(const std::string& text);

}  // namespace wb
