#pragma once

// Data-parallel inner loops used by the modular characteristic-polynomial
// route and by the floating-point walk simulator.
//
// Every kernel has a portable scalar reference. On x86-64 an AVX2+FMA variant
// is compiled separately and selected at runtime from CPUID; set
// WALKPER_SIMD=scalar to force the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace walkper::kernels {

/// Prime modulus for double-precision residue arithmetic.
///
/// Residues are integers in [0, p) stored in doubles. p < 2^26 keeps every
/// product c * x + y below 2^53, so it is exact in binary64.
struct ModPrime {
    std::uint32_t p;
    double inv;  // 1.0 / p

    explicit ModPrime(std::uint32_t prime) : p(prime), inv(1.0 / double(prime)) {}
};

inline constexpr std::uint32_t kMaxModPrime = (1u << 26);

struct KernelTable {
    std::string_view name;
    /// y[i] <- (y[i] + c * x[i]) mod p, with c, x[i], y[i] in [0, p).
    void (*mod_axpy)(double* y, const double* x, double c, std::size_t n, const ModPrime& mod);
    /// y[i] <- y[i] + a * x[i]
    void (*axpy)(double* y, const double* x, double a, std::size_t n);
    double (*dot)(const double* x, const double* y, std::size_t n);
    /// sum_i (x[i] - y[i])^2
    double (*squared_distance)(const double* x, const double* y, std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr when the binary or the CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels();
/// Dispatch target chosen once per process.
const KernelTable& active_kernels();

}  // namespace walkper::kernels
