#include "wb/jump.hpp"

#include <unordered_map>

#include "wb/errors.hpp"

namespace wb {

std::function<bool(const Nat&)> approx_oracle(const OracleApprox& base) {
    return [members = base.members, range = base.range](const Nat& v) {
        if (v >= range) return false;
        return members.count(to_u64(v, "oracle query")) > 0;
    };
}

std::variant<Nat, OutOfBudget> run_oracle_value(
    const Program& p, const std::vector<Nat>& inputs, std::uint64_t budget,
    const std::function<bool(const Nat&)>& oracle) {
    std::unordered_map<std::uint64_t, Nat> regs;
    auto get = [&](std::uint64_t r) -> const Nat& {
        static const Nat zero = 0;
        auto it = regs.find(r);
        return it == regs.end() ? zero : it->second;
    };
    for (std::uint64_t i = 0; i < p.arity && i < inputs.size(); ++i) {
        require_nonneg(inputs[i], "run_oracle_value input");
        regs[i] = inputs[i];
    }
    const std::uint64_t len = p.instructions.size();
    std::uint64_t ip = 0;
    for (std::uint64_t used = 0; used < budget; ++used) {
        if (ip >= len) return get(0);
        const Instruction& ins = p.instructions[ip];
        std::uint64_t next = ip + 1;
        switch (ins.op) {
            case Op::Zero: regs[ins.a] = 0; break;
            case Op::Succ: ++regs[ins.a]; break;
            case Op::Copy: regs[ins.b] = get(ins.a); break;
            case Op::Add: regs[ins.b] += get(ins.a); break;
            case Op::Jump:
                if (get(ins.a) == get(ins.b)) next = ins.c;
                break;
            case Op::Query: regs[ins.a] = oracle(get(ins.a)) ? 1 : 0; break;
        }
        ip = next;
    }
    if (ip >= len) return get(0);
    return OutOfBudget{budget};
}

OracleApprox jump_approx(const OracleApprox& base, std::uint64_t stage,
                         std::uint64_t range) {
    OracleApprox out;
    out.level = base.level + 1;
    out.stage = stage;
    out.range = range;
    auto oracle = approx_oracle(base);
    for (std::uint64_t e = 0; e < range; ++e) {
        Program p = decode_oracle_program(ProgramIndex{e});
        auto r = run_oracle_value(p, {Nat(e)}, stage, oracle);
        if (std::holds_alternative<Nat>(r)) out.members.insert(e);
    }
    return out;
}

OracleApprox iterate_jump(std::uint64_t n, std::uint64_t stage,
                          std::uint64_t range) {
    if (n > 4) throw LevelTooLarge();
    OracleApprox cur;
    cur.stage = stage;
    cur.range = range;
    for (std::uint64_t i = 0; i < n; ++i) cur = jump_approx(cur, stage, range);
    return cur;
}

}  // namespace wb
