#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wb/ordinal.hpp"
#include "wb/urm.hpp"

namespace wb {

// Finite strict relation: (y, x) in edges means y precedes x.
struct FiniteRelation {
    std::set<std::uint64_t> domain;
    std::set<std::pair<std::uint64_t, std::uint64_t>> edges;

    // direct predecessors of x, ascending
    std::vector<std::uint64_t> predecessors(std::uint64_t x) const;
};

struct WellFounded {
    // order type when the transitive closure is a linear order on the
    // domain; nullopt when the induced order is not linear
    std::optional<CnfOrdinal> order_type;
};

// Verifiable failure: cycle[0] == cycle.back() and each consecutive pair
// (cycle[i+1], cycle[i]) is an edge, so the cycle descends forever.
struct Descent {
    std::vector<std::uint64_t> cycle;
};

using WfReport = std::variant<WellFounded, Descent>;

// Unresolved program-coded relation query.
struct Unresolved {
    std::uint64_t budget;
    std::uint64_t x, y;  // first pair whose edge query did not halt
};

WfReport wf_check(const FiniteRelation& rel);

// Relation coded by a program: edge (y, x) holds iff program e on input
// (x, y) halts with output 1 within budget. Domain is {0..n_max}.
std::variant<WfReport, Unresolved> wf_check_program(const ProgramIndex& e,
                                                    std::uint64_t n_max,
                                                    std::uint64_t budget);

// Replays a Descent witness against the relation.
bool verify_descent(const FiniteRelation& rel,
                    const std::vector<std::uint64_t>& cycle);

// Text format: `domain: 0 1 2` header, then one `y x` edge per line;
// blank lines and `#` comments ignored.
FiniteRelation parse_relation(const std::string& text);

}  // namespace wb
