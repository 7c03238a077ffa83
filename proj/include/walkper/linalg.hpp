#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "walkper/matrix.hpp"
#include "walkper/polynomial.hpp"

namespace walkper {

/// det(xI - m), exact.
///
/// Clears denominators, computes the characteristic polynomial of the integer
/// matrix modulo enough 26-bit primes to exceed a Hadamard-type coefficient
/// bound (Hessenberg reduction per prime), and lifts by CRT. The residue row
/// operations run on the dispatched SIMD kernels.
Polynomial char_poly(const RationalMatrix& m);

/// det(xI - m) by Berkowitz's division-free algorithm over the integers.
/// O(n^4) big-integer work; the reference route that char_poly is tested against.
Polynomial char_poly_berkowitz(const RationalMatrix& m);

/// Characteristic polynomial of an integer matrix reduced mod p, ascending
/// coefficients in [0, p). Requires p < 2^26 prime.
std::vector<std::uint32_t> char_poly_mod(const IntegerMatrix& m, std::uint32_t p);

/// Rank over the rationals, fraction-free Gaussian elimination.
std::size_t rank(const RationalMatrix& m);
/// dim of the rational null space of a square matrix.
std::size_t kernel_dimension(const RationalMatrix& m);

/// Primes below 2^26 in descending order, generated on demand.
std::uint32_t modular_prime(std::size_t index);

}  // namespace walkper
