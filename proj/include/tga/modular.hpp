#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tga {

/// Prime-power factorization of n >= 1, as (p, p^e) pairs in increasing p.
std::vector<std::pair<std::int64_t, std::int64_t>> prime_power_factors(std::int64_t n);

/// Solves A z = b over Z/modulus. A is given by dense rows of length
/// `unknowns`.
///
/// Works one prime power at a time: rows are inserted into a Howell basis
/// over Z/p^e (pivots normalized to powers of p, and p^(e-v) multiples of
/// every pivot row re-inserted), which makes inconsistency visible as a pivot
/// in the right-hand-side column and lets back-substitution succeed whenever
/// a solution exists. Local solutions are glued with the Chinese remainder
/// theorem and the result is checked against every equation.
std::optional<std::vector<std::int64_t>> solve_mod(const std::vector<std::vector<std::int64_t>>& a,
                                                   const std::vector<std::int64_t>& b, std::size_t unknowns,
                                                   std::int64_t modulus);

/// Inverse of a modulo m; throws PreconditionError when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace tga
