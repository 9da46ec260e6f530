#include "wb/tree.hpp"

#include <map>
#include <memory>

#include "wb/errors.hpp"

namespace wb {

TreePredicate dnr2_predicate(std::uint64_t budget) {
    auto cache = std::make_shared<std::map<std::uint64_t, std::optional<Nat>>>();
    auto accepts = [budget, cache](const KString& s) {
        if (budget == 0) return true;  // zero budget: nothing resolves
        for (std::uint64_t e = 0; e < s.values.size(); ++e) {
            auto it = cache->find(e);
            if (it == cache->end()) {
                auto r = run_value(ProgramIndex{e}, {Nat(e)}, budget);
                std::optional<Nat> v;
                if (std::holds_alternative<Nat>(r)) v = std::get<Nat>(r);
                it = cache->emplace(e, v).first;
            }
            if (it->second && *it->second < s.k && s.values[e] == *it->second)
                return false;
        }
        return true;
    };
    return {accepts, 2, "dnr2@" + std::to_string(budget)};
}

namespace {

void collect(const TreePredicate& v, std::uint64_t depth, KString& s,
             std::vector<KString>* out, bool* found) {
    if (!v.accepts(s)) return;
    if (s.values.size() == depth) {
        if (out) out->push_back(s);
        if (found) *found = true;
        return;
    }
    for (std::uint64_t c = 0; c < v.k && !(found && *found); ++c) {
        s.values.push_back(Nat(c));
        collect(v, depth, s, out, found);
        s.values.pop_back();
    }
}

void check_depth(const TreePredicate& v, std::uint64_t depth) {
    std::uint64_t count = 1;
    for (std::uint64_t i = 0; i < depth; ++i) {
        count *= v.k;
        if (count > (1u << 24)) throw DepthTooLarge();
    }
}

}  // namespace

LevelSet level_set(const TreePredicate& v, std::uint64_t depth) {
    check_depth(v, depth);
    LevelSet out;
    out.depth = depth;
    out.tag = v.tag;
    KString s{{}, v.k};
    collect(v, depth, s, &out.members, nullptr);
    return out;
}

std::optional<KString> leftmost_member(const TreePredicate& v,
                                       std::uint64_t depth) {
    check_depth(v, depth);
    KString s{{}, v.k};
    std::vector<KString> out;
    bool found = false;
    collect(v, depth, s, &out, &found);
    if (!found) return std::nullopt;
    return out.front();
}

bool is_dead(const KString& s, const TreePredicate& v, std::uint64_t lookahead) {
    KString probe = s;
    probe.k = v.k;
    bool found = false;
    collect(v, s.values.size() + lookahead, probe, nullptr, &found);
    return !found;
}

}  // namespace wb
