#include <algorithm>

#include "doctest.h"
#include "wb/dnr.hpp"
#include "wb/errors.hpp"
#include "wb/machine_lib.hpp"

using namespace wb;

TEST_CASE("big_omega counts prime factors with multiplicity") {
    CHECK(big_omega(1) == 0);
    CHECK(big_omega(2) == 1);
    CHECK(big_omega(12) == 3);
    CHECK(big_omega(30) == 3);
    CHECK(big_omega(64) == 6);
    CHECK(big_omega(97) == 1);
    CHECK(big_omega(2 * 3 * 5 * 7 * 11) == 5);
}

TEST_CASE("diagonal_value classifies by the flipped diagonal") {
    ProgramIndex zero = encode_program(const_program(0));
    ProgramIndex one = encode_program(const_program(1));
    ProgramIndex spin = encode_program(loop_program());

    BudgetedAnswer a = diagonal_value(zero, 1000);
    CHECK(a.yes());
    CHECK(a.value == 1);
    BudgetedAnswer b = diagonal_value(one, 1000);
    CHECK(b.yes());
    CHECK(b.value == 0);
    BudgetedAnswer c = diagonal_value(spin, 1000);
    CHECK(c.unknown());
    CHECK(c.budget == 1000);
}

TEST_CASE("inseparable_membership partitions the range") {
    SeparationReport rep = inseparable_membership(300, 2000);
    CHECK(rep.in_a.size() + rep.in_b.size() + rep.undecided.size() == 300);
    CHECK(rep.budget == 2000);
    // every classification replays against a direct diagonal run
    for (std::uint64_t e : rep.in_a) {
        auto r = run_value(ProgramIndex{e}, {Nat(e)}, 2000);
        CHECK(std::get<Nat>(r) == 0);
    }
    for (std::uint64_t e : rep.in_b) {
        auto r = run_value(ProgramIndex{e}, {Nat(e)}, 2000);
        CHECK(std::get<Nat>(r) == 1);
    }
    CHECK(!rep.in_a.empty());
    CHECK(!rep.in_b.empty());

    SUBCASE("resolved membership is stable under a budget increase") {
        SeparationReport more = inseparable_membership(300, 20000);
        CHECK(std::includes(more.in_a.begin(), more.in_a.end(),
                            rep.in_a.begin(), rep.in_a.end()));
        CHECK(std::includes(more.in_b.begin(), more.in_b.end(),
                            rep.in_b.begin(), rep.in_b.end()));
    }
}

TEST_CASE("majorizes finds the least threshold") {
    auto table = [](std::vector<std::uint64_t> v) {
        std::vector<Nat> t;
        for (auto x : v) t.push_back(Nat(x));
        return Fn{t};
    };
    std::vector<Nat> f2x, fx5, fid, fx2, fx1;
    for (std::uint64_t x = 0; x <= 20; ++x) {
        f2x.push_back(Nat(2 * x));
        fx5.push_back(Nat(x + 5));
        fid.push_back(Nat(x));
        fx2.push_back(Nat(x + 2));
        fx1.push_back(Nat(x + 1));
    }
    auto r = majorizes(Fn{f2x}, Fn{fx5}, 20, 0);
    CHECK(std::get<std::uint64_t>(r) == 5);  // x+5 >= 2x exactly up to x=5
    r = majorizes(Fn{fx2}, Fn{fx1}, 20, 0);
    CHECK(std::get<std::uint64_t>(r) == 0);
    r = majorizes(Fn{fid}, Fn{fid}, 20, 0);
    CHECK(std::holds_alternative<NoWitnessUpTo>(r));
    (void)table;

    SUBCASE("program-coded functions") {
        // x+1 majorizes x everywhere
        auto s = majorizes(Fn{encode_program(succ_program())}, Fn{fid}, 10, 1000);
        CHECK(std::get<std::uint64_t>(s) == 0);
        CHECK_THROWS_AS(
            majorizes(Fn{encode_program(loop_program())}, Fn{fid}, 10, 1000),
            UnresolvedAt);
    }
    SUBCASE("tables shorter than the horizon are unresolved") {
        CHECK_THROWS_AS(majorizes(Fn{fid}, Fn{std::vector<Nat>{Nat(0)}}, 10, 0),
                        UnresolvedAt);
    }
}

TEST_CASE("dnr_consistent checks diagonal avoidance on an initial segment") {
    std::uint64_t len = 200;
    std::uint64_t budget = 2000;

    // the diagonal rule itself always yields a consistent string
    KString diag{{}, 2};
    for (std::uint64_t e = 0; e < len; ++e) {
        BudgetedAnswer a = diagonal_value(ProgramIndex{e}, budget);
        diag.values.push_back(a.yes() ? a.value : Nat(0));
    }
    ConsistencyReport good = dnr_consistent(diag, budget);
    CHECK(good.consistent);
    CHECK(good.violations.empty());
    CHECK(!good.constraining.empty());

    SUBCASE("flipping a constrained position breaks consistency") {
        std::uint64_t e = good.constraining.front();
        KString bad = diag;
        bad.values[e] = bad.values[e] == 0 ? Nat(1) : Nat(0);
        ConsistencyReport rep = dnr_consistent(bad, budget);
        CHECK_FALSE(rep.consistent);
        CHECK(std::count(rep.violations.begin(), rep.violations.end(), e) == 1);
    }
    SUBCASE("larger alphabets are constrained by more diagonal values") {
        KString s3 = diag;
        s3.k = 3;
        ConsistencyReport rep = dnr_consistent(s3, budget);
        CHECK(rep.constraining.size() >= good.constraining.size());
    }
    SUBCASE("the empty string is consistent") {
        CHECK(dnr_consistent(KString{{}, 2}, budget).consistent);
    }
}

TEST_CASE("diag_majorizes evaluates a family-level diagonal assignment") {
    std::vector<std::uint64_t> family = {
        to_u64(encode_program(const_program(2)).value, "idx"),
        to_u64(encode_program(const_program(3)).value, "idx"),
    };

    SUBCASE("an avoiding, small-valued assignment passes clause 1") {
        std::vector<Nat> f(4, Nat(0));
        DiagMajorReport rep = diag_majorizes(f, family, 5000);
        CHECK(rep.clause1_violations.empty());
        CHECK(rep.bound_violations.empty());
        CHECK(rep.verdict);
        // constants 2 and 3 resolve but land outside the A/B pair
        CHECK(rep.family.undecided.size() == 2);
    }
    SUBCASE("matching one resolved diagonal value fails") {
        std::vector<Nat> f{Nat(0), Nat(2), Nat(0)};
        DiagMajorReport rep = diag_majorizes(f, family, 5000);
        CHECK_FALSE(rep.verdict);
        CHECK_FALSE(rep.clause1_violations.empty());
    }
    SUBCASE("exceeding the prime-factor bound at a guarded position fails") {
        std::uint64_t omega = big_omega(family[0]);
        REQUIRE(omega >= 1);
        // position 0 is guarded whenever omega >= 1; pick a value off the
        // resolved diagonal but at least omega
        Nat v = Nat(std::max<std::uint64_t>(omega, 4));
        std::vector<Nat> f{v};
        DiagMajorReport rep = diag_majorizes(f, family, 5000);
        CHECK_FALSE(rep.bound_violations.empty());
        CHECK_FALSE(rep.verdict);
    }
    SUBCASE("a covered family member must be classified as a separator would") {
        // const 0 resolves into A, so a covering assignment must put 1 there
        std::uint64_t ea = to_u64(encode_program(const_program(0)).value, "idx");
        REQUIRE(ea < 4096);  // small enough to cover with a table
        std::vector<std::uint64_t> fam{ea};
        std::vector<Nat> f(ea + 1, Nat(2));
        f[ea] = 1;
        CHECK(diag_majorizes(f, fam, 5000).separation_violations.empty());
        f[ea] = 2;
        CHECK_FALSE(diag_majorizes(f, fam, 5000).separation_violations.empty());
    }
    SUBCASE("unresolved family members do not constrain") {
        std::vector<std::uint64_t> fam{
            to_u64(encode_program(loop_program()).value, "idx")};
        std::vector<Nat> f(4, Nat(0));
        DiagMajorReport rep = diag_majorizes(f, fam, 100);
        CHECK(rep.clause1_violations.empty());
        CHECK(rep.family.undecided.size() == 1);
    }
}
