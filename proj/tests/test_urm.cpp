#include <random>

#include "doctest.h"
#include "wb/errors.hpp"
#include "wb/urm.hpp"

using namespace wb;

namespace {

Program identity_program() { return Program{1, {{Op::Copy, 0, 0}}}; }
Program succ_program() { return Program{1, {{Op::Succ, 0}}}; }
Program loop_program() { return Program{1, {{Op::Jump, 0, 0, 0}}}; }

Program random_program(std::mt19937& rng) {
    std::uniform_int_distribution<int> op_d(0, 4);
    std::uniform_int_distribution<std::uint64_t> reg_d(0, 9);
    std::uniform_int_distribution<std::uint64_t> len_d(0, 12);
    Program p;
    p.arity = reg_d(rng) % 4;
    std::uint64_t len = len_d(rng);
    for (std::uint64_t i = 0; i < len; ++i) {
        Instruction ins;
        switch (op_d(rng)) {
            case 0: ins = {Op::Zero, reg_d(rng)}; break;
            case 1: ins = {Op::Succ, reg_d(rng)}; break;
            case 2: ins = {Op::Copy, reg_d(rng), reg_d(rng)}; break;
            case 3: ins = {Op::Jump, reg_d(rng), reg_d(rng), reg_d(rng) + len_d(rng)}; break;
            default: ins = {Op::Add, reg_d(rng), reg_d(rng)}; break;
        }
        p.instructions.push_back(ins);
    }
    return p;
}

}  // namespace

TEST_CASE("program coding round-trips") {
    CHECK(decode_program(encode_program(Program{})) == Program{});
    Program id = identity_program();
    CHECK(decode_program(encode_program(id)) == id);

    std::mt19937 rng(20260823);
    for (int i = 0; i < 1000; ++i) {
        Program p = random_program(rng);
        CHECK(decode_program(encode_program(p)) == p);
    }
}

TEST_CASE("decoding is total") {
    CHECK(decode_program(ProgramIndex{0}) == Program{});
    for (std::uint64_t e = 0; e < 10000; ++e) {
        Program p = decode_program(ProgramIndex{Nat(e)});
        CHECK(p.instructions.size() <= 64);  // well-formed, bounded by stream length
    }
}

TEST_CASE("run_bounded basics") {
    auto e_id = encode_program(identity_program());
    auto r = run_bounded(e_id, {7}, 100);
    REQUIRE(halted(r));
    CHECK(output_of(r) == 7);

    auto e_succ = encode_program(succ_program());
    r = run_bounded(e_succ, {41}, 100);
    REQUIRE(halted(r));
    CHECK(output_of(r) == 42);

    auto e_loop = encode_program(loop_program());
    auto r2 = run_value(e_loop, {0}, 1000000);
    REQUIRE(std::holds_alternative<OutOfBudget>(r2));
    CHECK(std::get<OutOfBudget>(r2).steps_used == 1000000);
}

TEST_CASE("replay soundness and budget monotonicity") {
    std::mt19937 rng(7);
    int replayed = 0;
    for (int i = 0; i < 300; ++i) {
        Program p = random_program(rng);
        std::vector<Nat> inputs{Nat(i % 5), Nat(i % 3)};
        auto r = run_bounded(p, inputs, 200);
        if (!halted(r)) {
            // out of budget at b implies out of budget at every smaller budget
            CHECK(!halted(run_bounded(p, inputs, 50)));
            continue;
        }
        const auto& h = std::get<Halted>(r);
        ++replayed;
        // replay the trace step by step
        REQUIRE(!h.trace.configs.empty());
        CHECK(h.trace.configs.front() == initial_configuration(p, inputs));
        for (std::size_t k = 0; k + 1 < h.trace.configs.size(); ++k)
            CHECK(step(p, h.trace.configs[k]) == h.trace.configs[k + 1]);
        CHECK(h.trace.halted);
        CHECK(h.trace.configs.back().ip >= p.instructions.size());
        auto out_it = h.trace.configs.back().registers.find(0);
        Nat replay_out = out_it == h.trace.configs.back().registers.end() ? Nat(0) : out_it->second;
        CHECK(replay_out == h.output);
        // halting at budget b gives the identical result at larger budgets
        auto r2 = run_bounded(p, inputs, 401);
        REQUIRE(halted(r2));
        CHECK(output_of(r2) == h.output);
        CHECK(std::get<Halted>(r2).trace == h.trace);
    }
    CHECK(replayed > 50);
}

TEST_CASE("smn agrees with direct application") {
    // addition: reg0 += reg1 via Add
    Program add{2, {{Op::Add, 1, 0}}};
    auto e_add = encode_program(add);
    auto spec = smn(e_add, {3});
    auto r = run_bounded(spec, {4}, 100);
    REQUIRE(halted(r));
    CHECK(output_of(r) == 7);

    SUBCASE("empty specialization is behavior-preserving") {
        auto spec0 = smn(e_add, {});
        for (int x = 0; x <= 10; ++x) {
            auto lhs = run_bounded(spec0, {Nat(x), 2}, 100);
            auto rhs = run_bounded(e_add, {Nat(x), 2}, 100);
            REQUIRE(halted(lhs));
            REQUIRE(halted(rhs));
            CHECK(output_of(lhs) == output_of(rhs));
        }
    }

    SUBCASE("diverging programs stay unresolved after specialization") {
        auto e_loop = encode_program(loop_program());
        auto spec_loop = smn(e_loop, {5});
        for (int x = 0; x <= 5; ++x) {
            CHECK(std::holds_alternative<OutOfBudget>(run_value(spec_loop, {Nat(x)}, 20000)));
            CHECK(std::holds_alternative<OutOfBudget>(run_value(e_loop, {5, Nat(x)}, 20000)));
        }
    }

    SUBCASE("randomized pointwise agreement") {
        std::mt19937 rng(99);
        for (int i = 0; i < 100; ++i) {
            Program p = random_program(rng);
            p.arity = 2;
            Nat fixed = i % 4;
            auto sp = smn(encode_program(p), {fixed});
            for (int x = 0; x <= 3; ++x) {
                auto lhs = run_bounded(sp, {Nat(x)}, 500);
                auto rhs = run_bounded(p, {fixed, Nat(x)}, 500);
                REQUIRE(halted(lhs) == halted(rhs));
                if (halted(lhs)) CHECK(output_of(lhs) == output_of(rhs));
            }
        }
    }
}

TEST_CASE("load-const emission") {
    for (std::uint64_t k : {0ull, 1ull, 2ull, 3ull, 41ull, 1000ull, 65537ull}) {
        std::vector<Instruction> code;
        emit_load_const(code, 0, Nat(k));
        Program p{0, code};
        auto r = run_bounded(p, {}, 10000);
        REQUIRE(halted(r));
        CHECK(output_of(r) == k);
        CHECK(code.size() <= 2 + 2 * 64);
    }
}

TEST_CASE("program text round-trip") {
    Program p{2,
              {{Op::Zero, 3},
               {Op::Succ, 0},
               {Op::Copy, 1, 2},
               {Op::Jump, 0, 1, 9},
               {Op::Add, 2, 0}}};
    CHECK(program_from_text(program_to_text(p)) == p);
    CHECK_THROWS_AS(program_from_text("X 1\n"), ParseError);
}
