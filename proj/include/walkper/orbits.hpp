#pragma once

// Sums over Galois orbits in cyclotomic fields.
//
// An orbit is the *set* of distinct conjugates. zeta_n^m is conjugate to
// zeta_{n/g} with g = gcd(n, m), so its orbit has phi(n/g) elements and sums
// to mu(n/g). Values are carried as exact labels; nothing here rounds.

#include <compare>
#include <optional>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "walkper/polynomial.hpp"
#include "walkper/rational.hpp"

namespace walkper {

struct OrbitDescriptor {
    std::int64_t n;
    std::int64_t m;
    std::int64_t reduced_modulus;  // n / gcd(n, m)
    std::int64_t size;             // phi(reduced_modulus)
};

OrbitDescriptor describe_orbit(std::int64_t n, std::int64_t m);

/// cos(2 pi index / modulus), reduced: gcd(index, modulus) = 1 (or (1, 0)),
/// 0 <= index <= modulus / 2.
struct CosLabel {
    std::int64_t modulus;
    std::int64_t index;

    /// Normalizes cos(2 pi j / n).
    static CosLabel of(std::int64_t n, std::int64_t j);
    double value() const;
    /// Exact value when rational (modulus 1, 2, 3, 4 or 6).
    std::optional<Rational> rational_value() const;
    std::string to_string() const;

    friend auto operator<=>(const CosLabel&, const CosLabel&) = default;
};

/// zeta_modulus^index, reduced: gcd(index, modulus) = 1, 0 <= index < modulus.
struct ZetaLabel {
    std::int64_t modulus;
    std::int64_t index;

    static ZetaLabel of(std::int64_t n, std::int64_t j);
    std::string to_string() const;

    friend auto operator<=>(const ZetaLabel&, const ZetaLabel&) = default;
};

using SpectralValue = std::variant<Rational, CosLabel, ZetaLabel>;

/// S(G_n zeta_n^m) = mu(n / gcd(n, m)).
std::int64_t orbit_sum_zeta(std::int64_t n, std::int64_t m);
/// S(G_n zeta_n^2): mu(n) for odd n, mu(n/2) for even n.
std::int64_t orbit_sum_zeta_squared(std::int64_t n);
/// Distinct conjugates of cos(2 pi j / n), ascending by index.
std::vector<CosLabel> orbit_cos_elements(std::int64_t n, std::int64_t j);
/// Distinct conjugates of zeta_n^j, ascending by index.
std::vector<ZetaLabel> orbit_zeta_elements(std::int64_t n, std::int64_t j);
/// S^2(G_n alpha_1^(n)) = (S(G_n zeta_n^2) + phi(n)) / 4 for n = 2l, l odd >= 3.
Rational orbit_sum_sq_cos(std::int64_t n);

/// Minimal polynomial over Q of a labelled value.
Polynomial minimal_polynomial(const CosLabel& c);
Polynomial minimal_polynomial(const ZetaLabel& z);

/// S^k of a multiset, exact. Labelled values must come in complete orbits with
/// equal multiplicity per orbit (otherwise the sum is irrational and
/// std::invalid_argument is thrown). The empty multiset sums to 0.
Rational power_sum(std::span<const SpectralValue> values, unsigned k);

}  // namespace walkper
