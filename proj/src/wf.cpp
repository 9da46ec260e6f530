#include "wb/wf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wb/errors.hpp"

namespace wb {

std::vector<std::uint64_t> FiniteRelation::predecessors(std::uint64_t x) const {
    std::vector<std::uint64_t> out;
    for (const auto& [y, z] : edges)
        if (z == x) out.push_back(y);
    return out;
}

namespace {

// Walks descent steps x -> y for edges (y, x); any cycle yields an
// infinite descending sequence.
struct CycleFinder {
    const FiniteRelation& rel;
    std::map<std::uint64_t, int> state;  // 0 unseen, 1 on stack, 2 done
    std::vector<std::uint64_t> stack;
    std::optional<std::vector<std::uint64_t>> cycle;

    void visit(std::uint64_t x) {
        state[x] = 1;
        stack.push_back(x);
        for (std::uint64_t y : rel.predecessors(x)) {
            if (cycle) return;
            int s = state.count(y) ? state[y] : 0;
            if (s == 1) {
                auto it = std::find(stack.begin(), stack.end(), y);
                std::vector<std::uint64_t> c(it, stack.end());
                c.push_back(y);
                cycle = c;
                return;
            }
            if (s == 0) visit(y);
        }
        stack.pop_back();
        state[x] = 2;
    }
};

}  // namespace

WfReport wf_check(const FiniteRelation& rel) {
    CycleFinder finder{rel};
    for (std::uint64_t x : rel.domain) {
        if (finder.state.count(x) && finder.state[x] == 2) continue;
        if (!finder.state.count(x)) finder.visit(x);
        if (finder.cycle) return Descent{*finder.cycle};
    }
    // acyclic: linear iff the reachability order is total
    std::map<std::uint64_t, std::set<std::uint64_t>> below;
    // nodes in reverse finishing order are topologically sorted; a simple
    // fixpoint suffices at these sizes
    bool changed = true;
    for (std::uint64_t x : rel.domain) below[x];
    while (changed) {
        changed = false;
        for (const auto& [y, x] : rel.edges) {
            std::set<std::uint64_t>& bx = below[x];
            std::size_t before = bx.size();
            bx.insert(y);
            bx.insert(below[y].begin(), below[y].end());
            if (bx.size() != before) changed = true;
        }
    }
    std::vector<std::uint64_t> dom(rel.domain.begin(), rel.domain.end());
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = i + 1; j < dom.size(); ++j) {
            bool lt = below[dom[j]].count(dom[i]) > 0;
            bool gt = below[dom[i]].count(dom[j]) > 0;
            if (!lt && !gt) return WellFounded{std::nullopt};
        }
    return WellFounded{cnf_nat(Nat(dom.size()))};
}

std::variant<WfReport, Unresolved> wf_check_program(const ProgramIndex& e,
                                                    std::uint64_t n_max,
                                                    std::uint64_t budget) {
    Program p = decode_program(e);
    FiniteRelation rel;
    for (std::uint64_t x = 0; x <= n_max; ++x) rel.domain.insert(x);
    for (std::uint64_t x = 0; x <= n_max; ++x)
        for (std::uint64_t y = 0; y <= n_max; ++y) {
            auto r = run_value(p, {Nat(x), Nat(y)}, budget);
            if (std::holds_alternative<OutOfBudget>(r))
                return Unresolved{budget, x, y};
            if (std::get<Nat>(r) == 1) rel.edges.insert({y, x});
        }
    return wf_check(rel);
}

bool verify_descent(const FiniteRelation& rel,
                    const std::vector<std::uint64_t>& cycle) {
    if (cycle.size() < 2 || cycle.front() != cycle.back()) return false;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
        if (!rel.edges.count({cycle[i + 1], cycle[i]})) return false;
    return true;
}

FiniteRelation parse_relation(const std::string& text) {
    FiniteRelation rel;
    std::istringstream in(text);
    std::string line;
    bool saw_domain = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "domain:") {
            saw_domain = true;
            std::uint64_t n;
            while (ls >> n) rel.domain.insert(n);
            continue;
        }
        std::uint64_t y, x;
        std::istringstream es(line);
        if (!(es >> y >> x)) throw ParseError("bad relation line: " + line);
        std::string extra;
        if (es >> extra) throw ParseError("bad relation line: " + line);
        rel.edges.insert({y, x});
    }
    if (!saw_domain) throw ParseError("relation file lacks a domain: header");
    for (const auto& [y, x] : rel.edges)
        if (!rel.domain.count(y) || !rel.domain.count(x))
            throw ParseError("edge outside the declared domain");
    return rel;
}

}  // namespace wb
