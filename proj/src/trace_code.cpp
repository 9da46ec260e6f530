#include "wb/trace_code.hpp"

#include <cmath>

#include "wb/errors.hpp"

namespace wb {
namespace {

std::vector<std::uint64_t>& odd_prime_cache() {
    static std::vector<std::uint64_t> primes{3};
    return primes;
}

// p-adic valuation of v, removing the factor; O(log c) big divisions.
Nat valuation(Nat& v, const Nat& p) {
    std::vector<Nat> pows{p};
    while (bit_length(pows.back()) * 2 <= bit_length(v) + 1)
        pows.push_back(pows.back() * pows.back());
    Nat c = 0;
    for (std::size_t i = pows.size(); i-- > 0;) {
        for (;;) {
            Nat q, r;
            boost::multiprecision::divide_qr(v, pows[i], q, r);
            if (r != 0) break;
            v = q;
            c += Nat(1) << i;
        }
    }
    return c;
}

Nat register_list_code(const std::map<std::uint64_t, Nat>& regs) {
    // fold right over ascending order so the head pair holds the lowest index
    Nat code = 0;
    for (auto it = regs.rbegin(); it != regs.rend(); ++it) {
        code = cantor_pair(cantor_pair(Nat(it->first), it->second), code) + 1;
    }
    return code;
}

}  // namespace

std::uint64_t odd_prime(std::uint64_t i) {
    if (i == 0) throw std::invalid_argument("odd_prime: index is 1-based");
    auto& primes = odd_prime_cache();
    while (primes.size() < i) {
        std::uint64_t cand = primes.back() + 2;
        for (;; cand += 2) {
            bool composite = false;
            for (std::uint64_t d = 3; d * d <= cand; d += 2) {
                if (cand % d == 0) {
                    composite = true;
                    break;
                }
            }
            if (!composite) break;
        }
        primes.push_back(cand);
    }
    return primes[i - 1];
}

Nat configuration_code(const Configuration& cfg) {
    return cantor_pair(Nat(cfg.ip), register_list_code(cfg.registers));
}

Configuration configuration_from_code(const Nat& code) {
    Configuration cfg;
    Nat ip, rest;
    cantor_unpair(code, ip, rest);
    cfg.ip = to_u64(ip, "configuration ip");
    Nat prev_index = -1;
    while (rest != 0) {
        Nat head, tail, idx, val;
        cantor_unpair(rest - 1, head, tail);
        cantor_unpair(head, idx, val);
        if (idx <= prev_index) throw NotATrace("register list not in ascending order");
        if (val == 0) throw NotATrace("zero register stored explicitly");
        cfg.registers.emplace(to_u64(idx, "register index"), val);
        prev_index = idx;
        rest = tail;
    }
    return cfg;
}

TraceCode encode_trace(const Trace& tr) {
    if (tr.configs.empty()) throw NotATrace("empty trace");
    const std::uint64_t n = tr.configs.size();
    // pre-flight the size guard before building the product
    double bits = static_cast<double>(n);
    std::vector<Nat> codes;
    codes.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        codes.push_back(configuration_code(tr.configs[i]));
        if (codes.back() > kTraceCodeBitGuard) throw TraceTooLarge();
        double c = codes.back().convert_to<double>();
        bits += c * std::log2(static_cast<double>(odd_prime(i + 1)));
        if (bits > static_cast<double>(kTraceCodeBitGuard)) throw TraceTooLarge();
    }
    Nat t = Nat(1) << n;
    for (std::uint64_t i = 0; i < n; ++i) {
        t *= boost::multiprecision::pow(Nat(odd_prime(i + 1)),
                                        codes[i].convert_to<unsigned>());
    }
    if (bit_length(t) > kTraceCodeBitGuard) throw TraceTooLarge();
    return TraceCode{t};
}

Trace decode_trace(const TraceCode& t) {
    Nat v = t.value;
    if (v <= 1) throw NotATrace("no length header");
    std::uint64_t n = 0;
    while ((v & 1) == 0) {
        v >>= 1;
        ++n;
    }
    if (n == 0) throw NotATrace("trace length is zero");
    if (n > kTraceCodeBitGuard) throw NotATrace("length header over guard");
    Trace tr;
    tr.halted = true;
    for (std::uint64_t i = 0; i < n; ++i) {
        tr.configs.push_back(configuration_from_code(valuation(v, Nat(odd_prime(i + 1)))));
    }
    if (v != 1) throw NotATrace("leftover prime factors");
    return tr;
}

bool t_predicate(const ProgramIndex& e, const std::vector<Nat>& inputs, const TraceCode& t) {
    Trace tr;
    try {
        tr = decode_trace(t);
    } catch (const DomainError&) {
        return false;
    }
    Program p = decode_program(e);
    Configuration init = initial_configuration(p, inputs);
    if (tr.configs.front() != init) return false;
    const std::uint64_t len = p.instructions.size();
    for (std::size_t i = 0; i + 1 < tr.configs.size(); ++i) {
        if (tr.configs[i].ip >= len) return false;  // stepped past a terminal state
        if (step(p, tr.configs[i]) != tr.configs[i + 1]) return false;
    }
    return tr.configs.back().ip >= len;
}

Nat u_extract(const TraceCode& t) {
    Trace tr = decode_trace(t);
    const auto& regs = tr.configs.back().registers;
    auto it = regs.find(0);
    return it == regs.end() ? Nat(0) : it->second;
}

std::variant<TraceCode, OutOfBudget> min_trace_code(const ProgramIndex& e,
                                                    const std::vector<Nat>& inputs,
                                                    std::uint64_t budget) {
    EvalOutcome o = run_bounded(e, inputs, budget);
    if (auto* oob = std::get_if<OutOfBudget>(&o)) return *oob;
    return encode_trace(std::get<Halted>(o).trace);
}

}  // namespace wb
