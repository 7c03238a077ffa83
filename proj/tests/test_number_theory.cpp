#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "walkper/arith.hpp"
#include "walkper/orbits.hpp"

using namespace walkper;

namespace {

// Distinct values zeta_n^{m u}, u a unit mod n, identified by exponent mod n.
std::set<std::int64_t> orbit_exponents(std::int64_t n, std::int64_t m) {
    std::set<std::int64_t> out;
    for (std::int64_t u = 1; u <= n; ++u)
        if (std::gcd(u, n) == 1) out.insert(((m % n + n) % n) * u % n);
    return out;
}

std::complex<double> zeta_sum(std::int64_t n, const std::set<std::int64_t>& exps, int power = 1) {
    std::complex<double> s = 0;
    for (std::int64_t e : exps) s += std::polar(1.0, 2.0 * std::numbers::pi * double(power * e) / double(n));
    return s;
}

}  // namespace

TEST_CASE("euler_phi, moebius and divisors") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(10) == 4);
    CHECK(euler_phi(18) == euler_phi(9));
    CHECK(euler_phi(9) == 6);
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(30).size() == 8);
    CHECK_THROWS_AS(euler_phi(0), ArithmeticError);
    CHECK_THROWS_AS(moebius(-3), ArithmeticError);
    CHECK_THROWS_AS(divisors(0), ArithmeticError);
    for (std::int64_t n = 1; n <= 2000; ++n) {
        CHECK(euler_phi(n) == oracle::phi(n));
        CHECK(moebius(n) == oracle::mu(n));
        std::int64_t phi_sum = 0;
        for (std::int64_t d : divisors(n)) phi_sum += euler_phi(d);
        CHECK(phi_sum == n);
        if (n % 2) CHECK(euler_phi(2 * n) == euler_phi(n));
        if (n >= 2) CHECK(smallest_prime_factor(n) == oracle::smallest_prime(n));
    }
}

TEST_CASE("sieved tables agree with factorization") {
    const ArithmeticTables t(5000);
    for (std::int64_t n = 1; n <= 5000; ++n) {
        CHECK(t.phi(n) == euler_phi(n));
        CHECK(t.mu(n) == moebius(n));
        if (n >= 2) CHECK(t.spf(n) == smallest_prime_factor(n));
    }
    CHECK_THROWS_AS(t.phi(5001), ArithmeticError);
    CHECK(ArithmeticTables::shared().phi(999983) == 999982);
}

TEST_CASE("orbit sums of roots of unity") {
    CHECK(orbit_sum_zeta(7, 0) == 1);
    CHECK(orbit_sum_zeta(5, 1) == -1);
    CHECK(orbit_sum_zeta(10, 2) == -1);
    CHECK(orbit_sum_zeta_squared(15) == 1);
    CHECK(orbit_sum_zeta_squared(10) == -1);
    CHECK(orbit_sum_zeta_squared(2) == 1);
    CHECK_THROWS_AS(orbit_sum_zeta(0, 1), ArithmeticError);
    for (std::int64_t n = 1; n <= 200; ++n) {
        const auto direct = zeta_sum(n, orbit_exponents(n, 1));
        CHECK(orbit_sum_zeta(n, 1) == oracle::mu(n));
        CHECK(std::abs(direct.real() - double(orbit_sum_zeta(n, 1))) < 1e-9);
        CHECK(std::abs(direct.imag()) < 1e-9);
        for (std::int64_t m : divisors(n)) {
            CHECK(orbit_sum_zeta(n, m) == orbit_sum_zeta(n / m, 1));
            const auto d = describe_orbit(n, m);
            CHECK(d.reduced_modulus == n / m);
            CHECK(d.size == std::int64_t(orbit_exponents(n, m).size()));
        }
        for (std::int64_t m = 0; m < n; ++m) {
            const auto plus = orbit_exponents(n, m), minus = orbit_exponents(n, -m);
            CHECK(std::abs(zeta_sum(n, plus) - zeta_sum(n, minus)) < 1e-9);
            CHECK(std::abs(zeta_sum(n, plus, 2) - zeta_sum(n, minus, 2)) < 1e-9);
            CHECK(std::abs(zeta_sum(n, plus).real() - double(orbit_sum_zeta(n, m))) < 1e-9);
        }
        const auto sq = zeta_sum(n, orbit_exponents(n, 2));
        CHECK(std::abs(sq.real() - double(orbit_sum_zeta_squared(n))) < 1e-9);
    }
}

TEST_CASE("cosine orbits") {
    CHECK(orbit_cos_elements(6, 1) == std::vector<CosLabel>{{6, 1}});
    CHECK(orbit_cos_elements(5, 1) == std::vector<CosLabel>{{5, 1}, {5, 2}});
    CHECK(orbit_cos_elements(10, 5) == std::vector<CosLabel>{{2, 1}});
    CHECK(CosLabel{2, 1}.rational_value() == Rational(-1));
    for (std::int64_t m = 3; m <= 200; ++m)
        CHECK(std::int64_t(orbit_cos_elements(m, 1).size()) == oracle::phi(m) / 2);
    // Distinct divisors give disjoint orbits.
    for (std::int64_t n = 1; n <= 200; ++n) {
        std::set<CosLabel> cos_seen;
        std::set<ZetaLabel> zeta_seen;
        std::size_t cos_total = 0, zeta_total = 0;
        for (std::int64_t d : divisors(n)) {
            const auto cos_orbit = orbit_cos_elements(n, d);
            const auto zeta_orbit = orbit_zeta_elements(n, d);
            cos_seen.insert(cos_orbit.begin(), cos_orbit.end());
            zeta_seen.insert(zeta_orbit.begin(), zeta_orbit.end());
            cos_total += cos_orbit.size();
            zeta_total += zeta_orbit.size();
        }
        CHECK(cos_seen.size() == cos_total);
        CHECK(zeta_seen.size() == zeta_total);
        CHECK(std::int64_t(zeta_total) == n);
    }
}

TEST_CASE("sum of squared cosines over an orbit, n = 2l") {
    CHECK(orbit_sum_sq_cos(10) == make_rational(3, 4));
    CHECK(orbit_sum_sq_cos(6) == make_rational(1, 4));
    CHECK(orbit_sum_sq_cos(14) == make_rational(5, 4));
    CHECK_THROWS_AS(orbit_sum_sq_cos(8), ArithmeticError);
    CHECK_THROWS_AS(orbit_sum_sq_cos(2), ArithmeticError);
    for (std::int64_t l = 3; l <= 99; l += 2) {
        double numeric = 0;
        for (const auto& c : orbit_cos_elements(2 * l, 1)) numeric += c.value() * c.value();
        CHECK(std::abs(numeric - orbit_sum_sq_cos(2 * l).get_d()) < 1e-9);
    }
}

TEST_CASE("power sums") {
    const std::vector<SpectralValue> spec6{Rational(1), make_rational(1, 2), make_rational(-1, 2), Rational(-1)};
    CHECK(power_sum(spec6, 2) == make_rational(5, 2));
    CHECK(power_sum(std::span<const SpectralValue>{}, 1) == 0);
    std::vector<SpectralValue> z6;
    for (const auto& z : orbit_zeta_elements(6, 1)) z6.emplace_back(z);
    CHECK(power_sum(z6, 1) == 1);
    // Orbit of cos(2 pi/7) twice, plus 1.
    std::vector<SpectralValue> c7{Rational(1)};
    for (int rep = 0; rep < 2; ++rep)
        for (const auto& c : orbit_cos_elements(7, 1)) c7.emplace_back(c);
    for (unsigned k = 1; k <= 4; ++k) {
        double numeric = 1;
        for (int rep = 0; rep < 2; ++rep)
            for (const auto& c : orbit_cos_elements(7, 1)) numeric += std::pow(c.value(), k);
        CHECK(std::abs(power_sum(c7, k).get_d() - numeric) < 1e-9);
    }
    const std::vector<SpectralValue> partial{CosLabel{5, 1}};
    CHECK_THROWS_AS(power_sum(partial, 1), std::invalid_argument);
    CHECK(minimal_polynomial(CosLabel{5, 1}).evaluate(std::cos(2 * std::numbers::pi / 5)) ==
          doctest::Approx(0.0).epsilon(1e-12));
}
