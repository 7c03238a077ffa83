#include "walkper/orbits.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "walkper/arith.hpp"
#include "walkper/cyclotomic.hpp"

namespace walkper {
namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

/// Groups labels by modulus and checks every orbit is complete with a single
/// multiplicity. Returns (representative, multiplicity) per orbit.
template <class Label>
std::vector<std::pair<Label, std::int64_t>> orbit_multiplicities(const std::vector<Label>& labels) {
    std::map<Label, std::int64_t> counts;
    for (const Label& l : labels) ++counts[l];
    std::map<std::int64_t, std::vector<std::pair<Label, std::int64_t>>> by_modulus;
    for (const auto& [label, count] : counts) by_modulus[label.modulus].emplace_back(label, count);

    std::vector<std::pair<Label, std::int64_t>> out;
    for (const auto& [modulus, members] : by_modulus) {
        std::vector<Label> orbit;
        if constexpr (std::is_same_v<Label, CosLabel>) orbit = orbit_cos_elements(modulus, 1);
        else orbit = orbit_zeta_elements(modulus, 1);
        const std::int64_t mult = members.front().second;
        bool complete = members.size() == orbit.size();
        for (const auto& [label, count] : members) complete = complete && count == mult;
        if (!complete)
            throw std::invalid_argument("power_sum: labels at modulus " + std::to_string(modulus) +
                                        " do not form complete Galois orbits");
        out.emplace_back(members.front().first, mult);
    }
    return out;
}

}  // namespace

OrbitDescriptor describe_orbit(std::int64_t n, std::int64_t m) {
    if (n < 1) throw ArithmeticError("orbit modulus must be >= 1");
    const std::int64_t reduced = n / gcd(n, m);
    return {n, m, reduced, euler_phi(reduced)};
}

CosLabel CosLabel::of(std::int64_t n, std::int64_t j) {
    if (n < 1) throw ArithmeticError("cos label modulus must be >= 1");
    j = mod_floor(j, n);
    const std::int64_t g = gcd(n, j);
    std::int64_t m = n / g;
    std::int64_t idx = j / g;
    if (m == 1) idx = 0;
    if (2 * idx > m) idx = m - idx;
    return {m, idx};
}

double CosLabel::value() const { return std::cos(2.0 * std::numbers::pi * double(index) / double(modulus)); }

std::optional<Rational> CosLabel::rational_value() const {
    switch (modulus) {
        case 1: return Rational(1);
        case 2: return Rational(-1);
        case 3: return make_rational(-1, 2);
        case 4: return Rational(0);
        case 6: return make_rational(1, 2);
        default: return std::nullopt;
    }
}

std::string CosLabel::to_string() const {
    return "cos(2pi*" + std::to_string(index) + "/" + std::to_string(modulus) + ")";
}

ZetaLabel ZetaLabel::of(std::int64_t n, std::int64_t j) {
    if (n < 1) throw ArithmeticError("zeta label modulus must be >= 1");
    j = mod_floor(j, n);
    const std::int64_t g = gcd(n, j);
    const std::int64_t m = n / g;
    return {m, m == 1 ? 0 : j / g};
}

std::string ZetaLabel::to_string() const {
    return "zeta_" + std::to_string(modulus) + "^" + std::to_string(index);
}

std::int64_t orbit_sum_zeta(std::int64_t n, std::int64_t m) {
    return moebius(describe_orbit(n, m).reduced_modulus);
}

std::int64_t orbit_sum_zeta_squared(std::int64_t n) {
    if (n < 1) throw ArithmeticError("orbit_sum_zeta_squared: n must be >= 1");
    return n % 2 ? moebius(n) : moebius(n / 2);
}

std::vector<CosLabel> orbit_cos_elements(std::int64_t n, std::int64_t j) {
    const CosLabel base = CosLabel::of(n, j);
    const std::int64_t m = base.modulus;
    if (m <= 2) return {base};
    std::vector<CosLabel> out;
    for (std::int64_t u = 1; 2 * u < m; ++u)
        if (gcd(u, m) == 1) out.push_back({m, u});
    return out;
}

std::vector<ZetaLabel> orbit_zeta_elements(std::int64_t n, std::int64_t j) {
    const ZetaLabel base = ZetaLabel::of(n, j);
    const std::int64_t m = base.modulus;
    if (m == 1) return {base};
    std::vector<ZetaLabel> out;
    for (std::int64_t u = 1; u < m; ++u)
        if (gcd(u, m) == 1) out.push_back({m, u});
    return out;
}

Rational orbit_sum_sq_cos(std::int64_t n) {
    if (n < 6 || n % 2 != 0 || (n / 2) % 2 == 0)
        throw ArithmeticError("orbit_sum_sq_cos: n must be 2l with l odd >= 3, got " + std::to_string(n));
    Rational r(orbit_sum_zeta_squared(n) + euler_phi(n), 4);
    r.canonicalize();
    return r;
}

Polynomial minimal_polynomial(const CosLabel& c) {
    // psi_m(2x), made monic.
    return min_poly_two_cos(c.modulus, 1).scale_variable(2).monic();
}

Polynomial minimal_polynomial(const ZetaLabel& z) { return cyclotomic_poly(z.modulus); }

Rational power_sum(std::span<const SpectralValue> values, unsigned k) {
    if (k == 0) throw std::invalid_argument("power_sum: exponent must be positive");
    Rational total = 0;
    std::vector<CosLabel> cos_labels;
    std::vector<ZetaLabel> zeta_labels;
    for (const auto& v : values) {
        if (const auto* r = std::get_if<Rational>(&v)) {
            Rational p = 1;
            for (unsigned i = 0; i < k; ++i) p *= *r;
            total += p;
        } else if (const auto* c = std::get_if<CosLabel>(&v)) {
            cos_labels.push_back(*c);
        } else {
            zeta_labels.push_back(std::get<ZetaLabel>(v));
        }
    }
    for (const auto& [label, mult] : orbit_multiplicities(cos_labels))
        total += root_power_sum(minimal_polynomial(label), k) * mult;
    for (const auto& [label, mult] : orbit_multiplicities(zeta_labels))
        total += root_power_sum(minimal_polynomial(label), k) * mult;
    return total;
}

}  // namespace walkper
