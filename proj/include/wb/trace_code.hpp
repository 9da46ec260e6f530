#pragma once

#include "wb/urm.hpp"

namespace wb {

struct TraceCode {
    Nat value;

    bool operator==(const TraceCode&) const = default;
};

// Numeric code of a configuration: pair(ip, code of the nonzero-register
// list), the list coded as pair(pair(index,value), rest)+1 in ascending
// register order.
Nat configuration_code(const Configuration& cfg);
Configuration configuration_from_code(const Nat& code);  // throws NotATrace

// t = 2^n * prod_{i<n} p_{i+1}^{c_i} with n the trace length and p_1=3,
// p_2=5, ... the odd primes. Encoding refuses codes above the size guard
// (2^20 bits); decoding rejects ill-shaped numbers. Halting is not part of
// the code: decode marks the trace halted, so the round trip is the
// identity exactly on halting traces (the only ones the workbench codes).
TraceCode encode_trace(const Trace& tr);
Trace decode_trace(const TraceCode& t);

// Kleene T: true iff t codes a valid halting trace of decode(e) on the
// given inputs. Total; malformed t yields false.
bool t_predicate(const ProgramIndex& e, const std::vector<Nat>& inputs, const TraceCode& t);

// Kleene U: output register of the final configuration. Throws NotATrace on
// malformed codes.
Nat u_extract(const TraceCode& t);

// Canonical (and, by determinism of the machine, unique) halting trace code
// for (e, inputs), if the run halts within budget and fits the size guard.
std::variant<TraceCode, OutOfBudget> min_trace_code(const ProgramIndex& e,
                                                    const std::vector<Nat>& inputs,
                                                    std::uint64_t budget);

// i-th odd prime, 1-based: odd_prime(1) = 3.
std::uint64_t odd_prime(std::uint64_t i);

inline constexpr std::uint64_t kTraceCodeBitGuard = 1u << 20;

}  // namespace wb
