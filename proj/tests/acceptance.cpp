// Acceptance checks, one verdict line per criterion. Exit 0 iff all pass.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "wb/builder.hpp"
#include "wb/dnr.hpp"
#include "wb/errors.hpp"
#include "wb/etr.hpp"
#include "wb/fixed_point.hpp"
#include "wb/hierarchy.hpp"
#include "wb/jump.hpp"
#include "wb/machine_lib.hpp"
#include "wb/notation.hpp"
#include "wb/trace_code.hpp"
#include "wb/tree.hpp"
#include "wb/wf.hpp"

using namespace wb;

namespace {

int failures = 0;

void verdict(int n, const char* title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << n << " " << title << ": "
              << detail << "\n";
    if (!ok) ++failures;
}

// 1. Kleene normal form on sampled halting pairs.
void criterion_normal_form() {
    std::uint64_t checked = 0, mismatches = 0, skipped_guard = 0;
    for (std::uint64_t e = 0; e < 5000 && checked < 220; ++e) {
        for (std::uint64_t x = 0; x < 4 && checked < 220; ++x) {
            ProgramIndex idx{e};
            EvalOutcome o = run_bounded(idx, {Nat(x)}, 1000);
            if (!halted(o)) continue;
            std::variant<TraceCode, OutOfBudget> t;
            try {
                t = min_trace_code(idx, {Nat(x)}, 1000);
            } catch (const TraceTooLarge&) {
                ++skipped_guard;  // halting, but the trace code has no room
                continue;
            }
            const TraceCode& tc = std::get<TraceCode>(t);
            if (!t_predicate(idx, {Nat(x)}, tc) ||
                u_extract(tc) != output_of(o))
                ++mismatches;
            ++checked;
        }
    }
    std::ostringstream d;
    d << checked << " halting pairs, " << mismatches << " mismatches ("
      << skipped_guard << " over the code guard)";
    verdict(1, "Kleene normal form", checked >= 200 && mismatches == 0, d.str());
}

// 2. Recursion theorem for ten fixed transformers.
void criterion_recursion_theorem() {
    struct Psi {
        const char* name;
        Program p;
        bool runnable_on_index;  // psi(e) computable within a real budget
    };
    // "quine-builder": the self-specializer u -> smn(u, [u]), whose fixed
    // point reproduces the classical quine construction
    std::vector<Psi> psis = {
        {"identity", identity_program(), true},
        {"successor-shift", succ_program(), true},
        {"zero", const_program(0), true},
        {"double", Program{1, {{Op::Add, 0, 0}}}, true},
        {"const-to-succ", const_program(encode_program(succ_program()).value), true},
        {"const-to-identity", const_program(encode_program(identity_program()).value), true},
        {"const-to-add", const_program(encode_program(add_program()).value), true},
        {"const-to-loop", const_program(encode_program(loop_program()).value), true},
        {"const-to-const7", const_program(encode_program(const_program(7)).value), true},
        {"quine-builder", smn1_program(), false},
    };
    std::uint64_t agreements = 0, violations = 0;
    for (const Psi& psi : psis) {
        ProgramIndex pe = encode_program(psi.p);
        ProgramIndex e = fixed_point(pe, 10000);
        Nat psi_e;
        if (psi.runnable_on_index) {
            // psi is cheap, so compute psi(e) outright
            auto r = run_value(psi.p, {e.value}, 100000000);
            if (!std::holds_alternative<Nat>(r)) {
                ++violations;
                continue;
            }
            psi_e = std::get<Nat>(r);
        } else {
            // the self-specializer costs O(e) machine steps on a ~10^6-bit
            // index; its image is computed by the (componentwise-verified)
            // host equivalent instead
            psi_e = smn(e, {e.value}).value;
        }
        for (std::uint64_t x = 0; x <= 10; ++x) {
            auto lhs = run_value(e, {Nat(x)}, 10000);
            auto rhs = run_value(ProgramIndex{psi_e}, {Nat(x)}, 10000);
            if (std::holds_alternative<Nat>(lhs) && std::holds_alternative<Nat>(rhs)) {
                if (std::get<Nat>(lhs) == std::get<Nat>(rhs))
                    ++agreements;
                else
                    ++violations;
            }
        }
    }
    std::ostringstream d;
    d << psis.size() << " transformers, " << agreements
      << " co-halting points agree, " << violations << " violations";
    verdict(2, "recursion theorem", violations == 0, d.str());
}

// 3. Diagonal disagreement and DNR consistency of the diagonal string.
void criterion_diagonal() {
    std::uint64_t resolved = 0, violations = 0;
    KString diag{{}, 2};
    for (std::uint64_t e = 0; e < 500; ++e) {
        auto r = run_value(ProgramIndex{e}, {Nat(e)}, 10000);
        BudgetedAnswer d = diagonal_value(ProgramIndex{e}, 10000);
        if (std::holds_alternative<Nat>(r)) {
            ++resolved;
            if (d.unknown() || d.value == std::get<Nat>(r)) ++violations;
        } else if (!d.unknown()) {
            ++violations;
        }
        diag.values.push_back(d.yes() ? d.value : Nat(0));
    }
    ConsistencyReport rep = dnr_consistent(diag, 10000);
    std::ostringstream det;
    det << resolved << "/500 resolved, " << violations
        << " diagonal clashes, length-500 string "
        << (rep.consistent ? "consistent" : "inconsistent");
    verdict(3, "diagonal disagreement", violations == 0 && rep.consistent, det.str());
}

// 4. DNR_2 tree levels against brute force at three budgets.
void criterion_tree() {
    const std::uint64_t depth = 12;
    bool ok = true;
    std::size_t prev = SIZE_MAX;
    std::ostringstream det;
    for (std::uint64_t budget : {0u, 100u, 10000u}) {
        TreePredicate v = dnr2_predicate(budget);
        LevelSet ls = level_set(v, depth);
        std::vector<std::vector<Nat>> brute;
        for (std::uint64_t m = 0; m < (1u << depth); ++m) {
            KString s{{}, 2};
            for (std::uint64_t i = 0; i < depth; ++i)
                s.values.push_back(Nat((m >> (depth - 1 - i)) & 1));
            bool in = budget == 0 || dnr_consistent(s, budget).consistent;
            if (in) brute.push_back(s.values);
        }
        std::vector<std::vector<Nat>> got;
        for (const KString& s : ls.members) got.push_back(s.values);
        if (got != brute) ok = false;
        if (got.size() > prev) ok = false;
        prev = got.size();
        det << "budget " << budget << ": " << got.size() << " members; ";
    }
    verdict(4, "tree oracle vs brute force", ok, det.str());
}

// 5. Notation uniqueness and order isomorphism below w^3.
void criterion_notation() {
    std::vector<CnfOrdinal> all;
    for (std::uint64_t c2 = 0; c2 <= 5; ++c2)
        for (std::uint64_t c1 = 0; c1 <= 5; ++c1)
            for (std::uint64_t c0 = 0; c0 <= 5; ++c0) {
                CnfOrdinal a = cnf_add(
                    cnf_add(cnf_power(cnf_nat(2), Nat(c2)),
                            cnf_power(cnf_nat(1), Nat(c1))),
                    cnf_nat(c0));
                all.push_back(a);
            }
    bool ok = true;
    std::set<std::string> prints;
    std::vector<NotationPtr> ns;
    for (const CnfOrdinal& a : all) {
        NotationPtr n = canonical_notation(a);
        if (!(notation_to_ordinal(n) == a)) ok = false;
        prints.insert(notation_fingerprint(n));
        ns.push_back(n);
    }
    if (prints.size() != all.size()) ok = false;  // injectivity
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = 0; j < ns.size(); ++j) {
            if (compare_notation(ns[i], ns[j]) != cnf_compare(all[i], all[j]))
                ok = false;
            ++pairs;
        }
    std::ostringstream det;
    det << all.size() << " ordinals, " << prints.size() << " distinct notations, "
        << pairs << " comparisons";
    verdict(5, "notation uniqueness and order", ok, det.str());
}

// 6. Well-foundedness vs brute-force descent search on random digraphs.
void criterion_wf() {
    std::mt19937 rng(42);
    auto has_cycle = [](const FiniteRelation& rel) {
        // a descent of length |domain|+1 must repeat a node
        std::function<bool(std::uint64_t, std::vector<std::uint64_t>&)> deep =
            [&](std::uint64_t x, std::vector<std::uint64_t>& path) {
                if (std::count(path.begin(), path.end(), x)) return true;
                if (path.size() > rel.domain.size()) return false;
                path.push_back(x);
                for (std::uint64_t y : rel.predecessors(x))
                    if (deep(y, path)) return true;
                path.pop_back();
                return false;
            };
        for (std::uint64_t s : rel.domain) {
            std::vector<std::uint64_t> path;
            if (deep(s, path)) return true;
        }
        return false;
    };
    std::uint64_t agree = 0, replayed = 0, descents = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint64_t n = 1 + rng() % 8;
        FiniteRelation rel;
        for (std::uint64_t i = 0; i < n; ++i) rel.domain.insert(i);
        for (std::uint64_t x = 0; x < n; ++x)
            for (std::uint64_t y = 0; y < n; ++y)
                if (rng() % 5 == 0) rel.edges.insert({y, x});
        WfReport r = wf_check(rel);
        bool cyc = has_cycle(rel);
        if (const auto* d = std::get_if<Descent>(&r)) {
            ++descents;
            if (cyc) ++agree;
            if (verify_descent(rel, d->cycle)) ++replayed;
        } else if (!cyc) {
            ++agree;
        }
    }
    std::ostringstream det;
    det << agree << "/1000 verdicts agree, " << replayed << "/" << descents
        << " descent witnesses replay";
    verdict(6, "well-foundedness oracle", agree == 1000 && replayed == descents,
            det.str());
}

// 7. Hierarchy values, limit coherence, and distinctness witnesses.
void criterion_hierarchy() {
    bool ok = true;
    for (std::uint64_t x = 0; x <= 10; ++x) {
        auto f0 = fgh_eval(cnf_nat(0), Nat(x), 1000);
        auto f1 = fgh_eval(cnf_nat(1), Nat(x), 1000);
        if (std::get<Nat>(f0) != x + 1) ok = false;
        if (std::get<Nat>(f1) != 2 * x + 1) ok = false;
    }
    if (std::get<Nat>(fgh_eval(cnf_nat(2), Nat(3), 1000)) != 63) ok = false;

    // limit coherence: one unfolding of slack makes the equation exact,
    // resolved or not
    std::uint64_t coherent = 0, sampled = 0;
    const char* limits[] = {"w",      "w*2",     "w*3",   "w^2",  "w^2 + w",
                            "w^2*2",  "w^3",     "w^2 + w*2", "w^3 + w^2", "w^3*2"};
    for (const char* l : limits)
        for (std::uint64_t x = 0; x <= 4; ++x) {
            CnfOrdinal lim = parse_ordinal(l);
            auto a = fgh_eval(lim, Nat(x), 100000);
            auto b = fgh_eval(fundamental_sequence(lim, Nat(x)), Nat(x), 99999);
            ++sampled;
            if (a.index() == b.index() &&
                (!std::holds_alternative<Nat>(a) ||
                 std::get<Nat>(a) == std::get<Nat>(b)))
                ++coherent;
        }
    if (coherent != sampled) ok = false;

    // distinctness on the initial segment where 10^7 unfoldings resolve;
    // F_4 and above are unresolvable at any feasible budget by design
    std::uint64_t witnesses = 0, wanted = 0;
    for (std::uint64_t a = 0; a <= 3; ++a)
        for (std::uint64_t b = 0; b <= 3; ++b) {
            if (a == b) continue;
            ++wanted;
            auto r = hierarchy_distinct(cnf_nat(a), cnf_nat(b), 10, 10000000);
            if (std::holds_alternative<std::uint64_t>(r)) ++witnesses;
        }
    if (witnesses != wanted) ok = false;
    std::ostringstream det;
    det << "closed forms ok, " << coherent << "/" << sampled
        << " limit samples coherent, " << witnesses << "/" << wanted
        << " distinctness witnesses";
    verdict(7, "hierarchy values", ok, det.str());
}

// 8. Jump monotonicity and agreement with a hand-rolled simulation.
void criterion_jump() {
    std::mt19937 rng(7);
    std::uint64_t monotone = 0;
    for (int trial = 0; trial < 50; ++trial) {
        OracleApprox base;
        base.range = 40 + rng() % 40;
        for (std::uint64_t e = 0; e < base.range; ++e)
            if (rng() % 3 == 0) base.members.insert(e);
        std::uint64_t stage = 50 + rng() % 400;
        OracleApprox lo = jump_approx(base, stage, 120);
        OracleApprox hi = jump_approx(base, stage + 100, 120);
        if (std::includes(hi.members.begin(), hi.members.end(),
                          lo.members.begin(), lo.members.end()))
            ++monotone;
    }
    bool empty_ok = iterate_jump(0, 500, 100).members.empty();

    // hand-rolled two-level simulation
    OracleApprox two = iterate_jump(2, 500, 100);
    std::set<std::uint64_t> level1;
    for (std::uint64_t e = 0; e < 100; ++e) {
        auto r = run_oracle_value(decode_oracle_program(ProgramIndex{e}), {Nat(e)},
                                  500, [](const Nat&) { return false; });
        if (std::holds_alternative<Nat>(r)) level1.insert(e);
    }
    std::uint64_t agree2 = 0;
    for (std::uint64_t k = 0; k < 20; ++k) {
        std::uint64_t e = rng() % 100;
        auto r = run_oracle_value(
            decode_oracle_program(ProgramIndex{e}), {Nat(e)}, 500,
            [&](const Nat& v) { return v < 100 && level1.count(to_u64(v, "q")); });
        if ((two.members.count(e) > 0) == std::holds_alternative<Nat>(r)) ++agree2;
    }
    std::ostringstream det;
    det << monotone << "/50 stage-monotone, empty base "
        << (empty_ok ? "ok" : "bad") << ", " << agree2
        << "/20 two-level agreements";
    verdict(8, "jump monotonicity", monotone == 50 && empty_ok && agree2 == 20,
            det.str());
}

// 9. ETR against direct memoized recursion on random relations.
void criterion_etr() {
    std::mt19937 rng(11);
    Program step = sum_plus_one_program(9);
    std::uint64_t agree = 0, total = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::uint64_t n = 2 + rng() % 9;
        FiniteRelation rel;
        for (std::uint64_t i = 0; i < n; ++i) rel.domain.insert(i);
        for (std::uint64_t x = 1; x < n; ++x)
            for (std::uint64_t y = 0; y < x; ++y)
                if (rng() % 3 == 0) rel.edges.insert({y, x});
        ProgramIndex e = etr_define(rel, encode_program(step), 1000000);

        std::map<std::uint64_t, Nat> memo;
        std::function<Nat(std::uint64_t)> go = [&](std::uint64_t m) -> Nat {
            auto it = memo.find(m);
            if (it != memo.end()) return it->second;
            std::vector<Nat> in{Nat(m)};
            for (std::uint64_t y : rel.predecessors(m)) in.push_back(go(y));
            return memo[m] = std::get<Nat>(run_value(step, in, 1000000));
        };
        for (std::uint64_t m : rel.domain) {
            ++total;
            auto r = run_value(e, {Nat(m)}, 1000000);
            if (std::holds_alternative<Nat>(r) && std::get<Nat>(r) == go(m))
                ++agree;
        }
    }
    std::ostringstream det;
    det << agree << "/" << total << " values agree across 20 relations";
    verdict(9, "effective transfinite recursion", agree == total, det.str());
}

}  // namespace

int main() {
    criterion_normal_form();
    criterion_recursion_theorem();
    criterion_diagonal();
    criterion_tree();
    criterion_notation();
    criterion_wf();
    criterion_hierarchy();
    criterion_jump();
    criterion_etr();
    return failures == 0 ? 0 : 1;
}
