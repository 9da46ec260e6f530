#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wb/dnr.hpp"

namespace wb {

// A co-r.e.-style tree given by a total, prefix-closed acceptance test on
// strings over {0..k-1}; the query budget is baked into the evaluator.
struct TreePredicate {
    std::function<bool(const KString&)> accepts;
    std::uint64_t k = 2;
    std::string tag;
};

// The DNR_2 tree at a budget: accepts s iff dnr_consistent(s, budget).
// Budget 0 grants no observations, so every string is accepted. Diagonal
// runs are cached per index, so repeated probes cost one run each.
TreePredicate dnr2_predicate(std::uint64_t budget);

struct LevelSet {
    std::uint64_t depth = 0;
    std::vector<KString> members;  // lexicographic
    std::string tag;
};

// All accepted strings of the given length, in lexicographic order.
// Raises DepthTooLarge when k^depth exceeds 2^24.
LevelSet level_set(const TreePredicate& v, std::uint64_t depth);

// Leftmost accepted string of the given length, if any.
std::optional<KString> leftmost_member(const TreePredicate& v,
                                       std::uint64_t depth);

// True when no accepted extension of s by `lookahead` symbols exists
// (in particular when s itself is rejected).
bool is_dead(const KString& s, const TreePredicate& v, std::uint64_t lookahead);

}  // namespace wb
