#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace walkper {

struct IdentityRow {
    std::string identity;
    std::int64_t n;
    bool passed;
    std::string detail;
};

struct IdentityBattery {
    std::int64_t nmax = 0;
    std::vector<IdentityRow> rows;

    bool all_passed() const;
    std::size_t failures() const;
};

inline constexpr double kIdentityTol = 1e-9;

/// Exact values against numeric sums over explicitly enumerated Galois orbits, n <= nmax:
///   moebius_orbit_sum      S(G_n zeta_n) = mu(n)
///   orbit_reduction        G_n zeta_n^m = G_{n/m} zeta_{n/m} for m | n, with orbit sums
///   zeta_square_orbit_sum  S(G_n zeta_n^2) = mu(n) or mu(n/2)
///   conjugate_square_sum   S^2(G_n zeta_n^m) = S^2(G_n zeta_n^-m)
///   cos_square_orbit_sum   S^2(G_n alpha_1) = (S(G_n zeta_n^2) + phi(n))/4, n = 2l, l odd >= 3
///   cyclotomic_product     prod_{d | n} Phi_d = x^n - 1
///   two_cos_min_poly       deg psi_n = phi(n)/2 and psi_n(2cos(2 pi/n)) = 0
/// force_failure flips the sign of the exact Moebius value at n = 1.
/// Throws std::invalid_argument if nmax < 3.
IdentityBattery run_identity_battery(std::int64_t nmax, bool force_failure = false);

}  // namespace walkper
