#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>

namespace wb {

// Arbitrary-precision natural. Negative values never appear in valid data;
// helpers below throw if handed one.
using Nat = boost::multiprecision::mpz_int;

inline void require_nonneg(const Nat& n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative value");
}

// Cantor pairing, a bijection NxN -> N.
inline Nat cantor_pair(const Nat& x, const Nat& y) {
    Nat s = x + y;
    return s * (s + 1) / 2 + y;
}

inline void cantor_unpair(const Nat& z, Nat& x, Nat& y) {
    require_nonneg(z, "cantor_unpair");
    Nat d = 8 * z + 1;
    Nat s = (boost::multiprecision::sqrt(d) - 1) / 2;
    Nat t = s * (s + 1) / 2;
    y = z - t;
    x = s - y;
}

// Number of significant bits (0 for zero).
inline std::uint64_t bit_length(const Nat& n) {
    if (n == 0) return 0;
    return boost::multiprecision::msb(n) + 1;
}

inline std::uint64_t to_u64(const Nat& n, const char* what) {
    require_nonneg(n, what);
    if (n > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error(std::string(what) + ": value too large");
    return n.convert_to<std::uint64_t>();
}

}  // namespace wb
