#include "wb/etr.hpp"

#include <algorithm>
#include <sstream>

#include "wb/builder.hpp"
#include "wb/errors.hpp"

namespace wb {

namespace {

std::string cycle_to_string(const std::vector<std::uint64_t>& cycle) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out << " -> ";
        out << cycle[i];
    }
    return out.str();
}

}  // namespace

ProgramIndex etr_define(const FiniteRelation& rel, const ProgramIndex& step,
                        std::uint64_t budget) {
    WfReport report = wf_check(rel);
    if (const Descent* d = std::get_if<Descent>(&report))
        throw NotWellFounded(cycle_to_string(d->cycle));

    Program step_p = decode_program(step);
    std::map<std::uint64_t, Nat> values;

    // evaluate along any topological order; repeated passes settle because
    // the relation is well-founded
    std::vector<std::uint64_t> pending(rel.domain.begin(), rel.domain.end());
    while (!pending.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t n : pending) {
            std::vector<std::uint64_t> preds = rel.predecessors(n);
            if (std::any_of(preds.begin(), preds.end(), [&](std::uint64_t y) {
                    return !values.count(y);
                })) {
                next.push_back(n);
                continue;
            }
            std::vector<Nat> inputs{Nat(n)};
            for (std::uint64_t y : preds) inputs.push_back(values.at(y));
            auto r = run_value(step_p, inputs, budget);
            if (std::holds_alternative<OutOfBudget>(r))
                throw StepDiverged("n=" + std::to_string(n));
            values[n] = std::get<Nat>(r);
        }
        pending = std::move(next);
    }

    // table lookup program: match the input against each domain point,
    // load its value; unmatched inputs fall into the terminal loop
    ProgramBuilder b(1, 2);
    ProgramBuilder::Reg probe = b.temp();
    ProgramBuilder::Label done = b.make_label();
    for (const auto& [n, v] : values) {
        ProgramBuilder::Label hit = b.make_label();
        ProgramBuilder::Label miss = b.make_label();
        b.load_const(probe, Nat(n));
        b.jump_if_eq(0, probe, hit);
        b.jump(miss);
        b.bind(hit);
        b.load_const(0, v);
        b.jump(done);
        b.bind(miss);
    }
    ProgramBuilder::Label spin = b.make_label();
    b.bind(spin);
    b.jump(spin);
    b.bind(done);
    return encode_program(b.build());
}

}  // namespace wb
