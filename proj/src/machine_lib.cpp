#include "wb/machine_lib.hpp"

#include "wb/builder.hpp"

namespace wb {

Program identity_program() { return Program{1, {{Op::Copy, 0, 0}}}; }

Program succ_program() { return Program{1, {{Op::Succ, 0}}}; }

Program loop_program() { return Program{1, {{Op::Jump, 0, 0, 0}}}; }

Program add_program() { return Program{2, {{Op::Add, 1, 0}}}; }

Program const_program(const Nat& k) {
    std::vector<Instruction> code;
    emit_load_const(code, 0, k);
    return Program{1, code};
}

Program second_less_first_program() {
    ProgramBuilder b(2, 4);
    b.less(1, 0, 2);
    b.copy(2, 0);
    return b.build();
}

Program second_less_first_partial_program() {
    ProgramBuilder b(2, 4);
    auto spin = b.make_label();
    b.less(1, 0, 2);
    auto out = b.make_label();
    b.jump_if_zero(2, spin);
    b.copy(2, 0);
    b.jump(out);
    b.bind(spin);
    b.jump(spin);
    b.bind(out);
    return b.build();
}

Program sum_plus_one_program(std::uint64_t max_preds) {
    std::vector<Instruction> code;
    std::uint64_t acc = max_preds + 1;
    code.push_back({Op::Zero, acc});
    for (std::uint64_t i = 1; i <= max_preds; ++i) code.push_back({Op::Add, i, acc});
    code.push_back({Op::Succ, acc});
    code.push_back({Op::Copy, acc, 0});
    return Program{max_preds + 1, code};
}

}  // namespace wb
