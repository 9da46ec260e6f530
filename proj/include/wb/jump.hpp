#pragma once

#include <cstdint>
#include <functional>
#include <set>

#include "wb/urm.hpp"

namespace wb {

// Stage/range-truncated approximation to an iterated halting-set oracle.
struct OracleApprox {
    std::uint64_t level = 0;   // number of jump applications
    std::uint64_t stage = 0;   // step budget used per membership probe
    std::set<std::uint64_t> members;
    std::uint64_t range = 0;   // indices swept: 0..range-1
};

// Membership test backed by an approximation; queries outside its range
// answer No.
std::function<bool(const Nat&)> approx_oracle(const OracleApprox& base);

// Runs an oracle machine: Query r replaces register r by the oracle's 0/1
// answer on its current value.
std::variant<Nat, OutOfBudget> run_oracle_value(
    const Program& p, const std::vector<Nat>& inputs, std::uint64_t budget,
    const std::function<bool(const Nat&)>& oracle);

// One jump step: e < range enters iff oracle machine e, run on input e
// against `base`, halts within `stage` steps.
OracleApprox jump_approx(const OracleApprox& base, std::uint64_t stage,
                         std::uint64_t range);

// n-fold jump starting from the empty oracle; n <= 4 (LevelTooLarge above).
OracleApprox iterate_jump(std::uint64_t n, std::uint64_t stage,
                          std::uint64_t range);

}  // namespace wb
