// SPDX-License-Identifier: Apache-2.0

// Precomputed mutually unbiased basis phase tables for the prime-power
// dimensions d = 4 and d = 8 (the two- and three-qubit systems).
//
// For d = 2^m the d+1 bases are the computational basis plus d bases
// indexed over the Teichmüller set of the Galois ring GR(4, m); vector
// components are fourth roots of unity i^e / sqrt(d) with the exponents
// e in Z_4 tabulated below. GR(4, 2) uses x^2 + x + 1 and GR(4, 3) uses
// x^3 + 2x^2 + x + 3 as the defining polynomial.

#ifndef GENTLECERT_MUB_TABLES_HPP
#define GENTLECERT_MUB_TABLES_HPP

#include <cstdint>

namespace gentlecert::detail {

inline constexpr std::uint8_t kMubPhaseExpD4[64] = {
    0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 2, 0, 0, 2, 0, 2, 0, 2, 3, 3, 0, 2, 1, 1, 0, 0, 1, 3, 0, 0, 3, 1,
    0, 3, 3, 2, 0, 3, 1, 0, 0, 1, 1, 2, 0, 1, 3, 0, 0, 3, 2, 3, 0, 3, 0, 1, 0, 1, 0, 3, 0, 1, 2, 1,
};
inline constexpr std::uint8_t kMubPhaseExpD8[512] = {
    0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 2, 2, 0, 0, 0, 2, 0, 2, 2, 2, 0, 0, 2, 0, 2, 2, 2, 0,
    0, 2, 0, 2, 2, 2, 0, 0, 0, 0, 2, 2, 2, 0, 0, 2, 0, 2, 2, 2, 0, 0, 2, 0, 0, 2, 2, 0, 0, 2, 0, 2,
    0, 3, 2, 2, 1, 2, 1, 1, 0, 1, 2, 2, 3, 2, 3, 3, 0, 3, 2, 0, 1, 0, 3, 3, 0, 3, 0, 2, 3, 0, 3, 1,
    0, 1, 2, 0, 3, 0, 1, 1, 0, 3, 0, 0, 3, 2, 1, 3, 0, 1, 0, 0, 1, 2, 3, 1, 0, 1, 0, 2, 1, 0, 1, 3,
    0, 2, 2, 1, 2, 1, 1, 3, 0, 0, 2, 1, 0, 1, 3, 1, 0, 2, 2, 3, 2, 3, 3, 1, 0, 2, 0, 1, 0, 3, 3, 3,
    0, 0, 2, 3, 0, 3, 1, 3, 0, 2, 0, 3, 0, 1, 1, 1, 0, 0, 0, 3, 2, 1, 3, 3, 0, 0, 0, 1, 2, 3, 1, 1,
    0, 2, 1, 2, 1, 1, 3, 2, 0, 0, 1, 2, 3, 1, 1, 0, 0, 2, 1, 0, 1, 3, 1, 0, 0, 2, 3, 2, 3, 3, 1, 2,
    0, 0, 1, 0, 3, 3, 3, 2, 0, 2, 3, 0, 3, 1, 3, 0, 0, 0, 3, 0, 1, 1, 1, 2, 0, 0, 3, 2, 1, 3, 3, 0,
    0, 1, 2, 1, 1, 3, 2, 2, 0, 3, 2, 1, 3, 3, 0, 0, 0, 1, 2, 3, 1, 1, 0, 0, 0, 1, 0, 1, 3, 1, 0, 2,
    0, 3, 2, 3, 3, 1, 2, 2, 0, 1, 0, 3, 3, 3, 2, 0, 0, 3, 0, 3, 1, 3, 0, 2, 0, 3, 0, 1, 1, 1, 2, 0,
    0, 2, 1, 1, 3, 2, 2, 1, 0, 0, 1, 1, 1, 2, 0, 3, 0, 2, 1, 3, 3, 0, 0, 3, 0, 2, 3, 1, 1, 0, 0, 1,
    0, 0, 1, 3, 1, 0, 2, 1, 0, 2, 3, 3, 1, 2, 2, 3, 0, 0, 3, 3, 3, 2, 0, 1, 0, 0, 3, 1, 3, 0, 2, 3,
    0, 1, 1, 3, 2, 2, 1, 2, 0, 3, 1, 3, 0, 2, 3, 0, 0, 1, 1, 1, 2, 0, 3, 0, 0, 1, 3, 3, 0, 0, 3, 2,
    0, 3, 1, 1, 0, 0, 1, 2, 0, 1, 3, 1, 0, 2, 1, 0, 0, 3, 3, 1, 2, 2, 3, 2, 0, 3, 3, 3, 2, 0, 1, 0,
    0, 1, 3, 2, 2, 1, 2, 1, 0, 3, 3, 2, 0, 1, 0, 3, 0, 1, 3, 0, 2, 3, 0, 3, 0, 1, 1, 2, 0, 3, 0, 1,
    0, 3, 3, 0, 0, 3, 2, 1, 0, 1, 1, 0, 0, 1, 2, 3, 0, 3, 1, 0, 2, 1, 0, 1, 0, 3, 1, 2, 2, 3, 2, 3,
};

}  // namespace gentlecert::detail

#endif  // GENTLECERT_MUB_TABLES_HPP
