#include "walkper/identities.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "walkper/arith.hpp"
#include "walkper/cyclotomic.hpp"
#include "walkper/orbits.hpp"

namespace walkper {
namespace {

using cplx = std::complex<double>;

cplx root_of_unity(std::int64_t n, std::int64_t e) {
    const double angle = 2.0 * std::numbers::pi * double(e % n) / double(n);
    return {std::cos(angle), std::sin(angle)};
}

/// Exponents e mod n of the distinct elements sigma_u(zeta_n^m), u in (Z/n)^x.
std::set<std::int64_t> galois_orbit(std::int64_t n, std::int64_t m) {
    std::set<std::int64_t> out;
    for (std::int64_t u = 1; u <= n; ++u)
        if (gcd(u, n) == 1) out.insert((((m % n) + n) % n) * u % n);
    return out;
}

std::string fmt(double exact, double numeric) {
    std::ostringstream s;
    s.precision(12);
    s << "exact " << exact << ", numeric " << numeric;
    return s.str();
}

bool close(double a, double b) { return std::abs(a - b) < kIdentityTol; }

}  // namespace

bool IdentityBattery::all_passed() const { return failures() == 0; }

std::size_t IdentityBattery::failures() const {
    return std::size_t(std::count_if(rows.begin(), rows.end(), [](const IdentityRow& r) { return !r.passed; }));
}

IdentityBattery run_identity_battery(std::int64_t nmax, bool force_failure) {
    if (nmax < 3) throw std::invalid_argument("identity battery needs nmax >= 3");
    IdentityBattery b;
    b.nmax = nmax;
    auto add = [&](std::string name, std::int64_t n, bool ok, std::string detail) {
        b.rows.push_back({std::move(name), n, ok, std::move(detail)});
    };

    for (std::int64_t n = 1; n <= nmax; ++n) {
        // S(G_n zeta_n) = mu(n)
        {
            cplx sum = 0;
            for (std::int64_t e : galois_orbit(n, 1)) sum += root_of_unity(n, e);
            double exact = double(orbit_sum_zeta(n, 1));
            if (force_failure && n == 1) exact = -exact;
            const bool ok = double(moebius(n)) == double(orbit_sum_zeta(n, 1)) && close(exact, sum.real()) &&
                            std::abs(sum.imag()) < kIdentityTol;
            add("moebius_orbit_sum", n, ok, fmt(exact, sum.real()));
        }
        // G_n zeta_n^m = G_{n/m} zeta_{n/m} for every divisor m
        {
            bool ok = true;
            std::string detail = "all divisors";
            for (std::int64_t m : divisors(n)) {
                const std::int64_t r = n / m;
                std::set<std::int64_t> scaled;
                for (std::int64_t e : galois_orbit(r, 1)) scaled.insert(e * m);
                cplx sum = 0;
                for (std::int64_t e : galois_orbit(n, m)) sum += root_of_unity(n, e);
                const double exact = double(orbit_sum_zeta(n, m));
                if (galois_orbit(n, m) != scaled || !close(exact, sum.real()) ||
                    describe_orbit(n, m).size != std::int64_t(scaled.size())) {
                    ok = false;
                    detail = "m = " + std::to_string(m) + ": " + fmt(exact, sum.real());
                    break;
                }
            }
            add("orbit_reduction", n, ok, detail);
        }
        // S(G_n zeta_n^2)
        {
            cplx sum = 0;
            for (std::int64_t e : galois_orbit(n, 2)) sum += root_of_unity(n, e);
            const double exact = double(orbit_sum_zeta_squared(n));
            add("zeta_square_orbit_sum", n, close(exact, sum.real()), fmt(exact, sum.real()));
        }
        // S^2 over the orbit of zeta^m equals S^2 over the orbit of zeta^-m
        {
            bool ok = true;
            std::string detail = "all m";
            for (std::int64_t m = 0; m < n && ok; ++m) {
                cplx plus = 0, minus = 0;
                for (std::int64_t e : galois_orbit(n, m)) plus += root_of_unity(n, 2 * e);
                for (std::int64_t e : galois_orbit(n, -m)) minus += root_of_unity(n, 2 * e);
                if (std::abs(plus - minus) >= kIdentityTol) {
                    ok = false;
                    detail = "m = " + std::to_string(m) + ": " + fmt(plus.real(), minus.real());
                }
            }
            add("conjugate_square_sum", n, ok, detail);
        }
        // S^2(G_n alpha_1) for n = 2l
        if (n % 2 == 0 && (n / 2) % 2 == 1 && n / 2 >= 3) {
            std::set<std::int64_t> cos_orbit;
            for (std::int64_t e : galois_orbit(n, 1)) cos_orbit.insert(std::min(e, n - e));
            double sum = 0;
            for (std::int64_t e : cos_orbit) sum += std::pow(std::cos(2.0 * std::numbers::pi * double(e) / double(n)), 2);
            const double exact = orbit_sum_sq_cos(n).get_d();
            add("cos_square_orbit_sum", n, close(exact, sum), fmt(exact, sum));
        }
        // prod_{d | n} Phi_d = x^n - 1
        {
            Polynomial prod{1};
            for (std::int64_t d : divisors(n)) prod *= cyclotomic_poly(d);
            const Polynomial target = Polynomial::monomial(1, int(n)) - Polynomial{1};
            add("cyclotomic_product", n, prod == target, prod == target ? "exact" : prod.to_string());
        }
        // psi_n
        {
            const Polynomial& psi = min_poly_two_cos(n, 1);
            const int expected = n <= 2 ? 1 : int(euler_phi(n) / 2);
            const double x = 2.0 * std::cos(2.0 * std::numbers::pi / double(n));
            double scale = 0;
            for (int i = 0; i <= psi.degree(); ++i) scale += std::abs(psi.coeff(i).get_d()) * std::pow(std::max(1.0, std::abs(x)), i);
            const double value = psi.evaluate(x);
            const bool ok = psi.degree() == expected && psi.is_integral() && std::abs(value) < kIdentityTol * scale;
            add("two_cos_min_poly", n, ok,
                "degree " + std::to_string(psi.degree()) + ", residual " + std::to_string(value));
        }
    }
    return b;
}

}  // namespace walkper
