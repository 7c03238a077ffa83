#include "walkper/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "walkper/arith.hpp"

namespace walkper {
namespace {

using IntPoly = std::vector<Integer>;  // ascending

IntPoly to_int_poly(const Polynomial& p) {
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(c.get_num());
    return out;
}

Polynomial from_int_poly(const IntPoly& p) {
    std::vector<Rational> c(p.begin(), p.end());
    return Polynomial(std::move(c));
}

/// Exact division by a monic divisor; returns false (and leaves a untouched)
/// if the remainder is nonzero.
bool divide_monic(IntPoly& a, const IntPoly& monic) {
    const std::size_t db = monic.size() - 1;
    if (a.size() < monic.size()) return false;
    IntPoly rem = a;
    IntPoly quo(a.size() - db);
    for (std::size_t i = quo.size(); i-- > 0;) {
        const Integer q = rem[i + db];
        if (sgn(q) == 0) continue;
        quo[i] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * monic[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (sgn(rem[i]) != 0) return false;
    while (!quo.empty() && sgn(quo.back()) == 0) quo.pop_back();
    a = std::move(quo);
    return true;
}

constexpr std::uint64_t kScreenPrime = (std::uint64_t(1) << 61) - 1;

std::vector<std::uint64_t> reduce(const IntPoly& p) {
    static_assert(sizeof(unsigned long) >= 8);
    std::vector<std::uint64_t> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = mpz_fdiv_ui(p[i].get_mpz_t(), kScreenPrime);
    return out;
}

/// Remainder of a mod monic divisor, over Z/qZ, is zero.
bool divides_mod_screen(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& monic) {
    const std::size_t db = monic.size() - 1;
    if (a.size() < monic.size()) return false;
    for (std::size_t i = a.size() - monic.size() + 1; i-- > 0;) {
        const std::uint64_t q = a[i + db];
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) {
            auto prod = static_cast<std::uint64_t>((unsigned __int128)q * monic[j] % kScreenPrime);
            a[i + j] = (a[i + j] + kScreenPrime - prod) % kScreenPrime;
        }
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) return false;
    return true;
}

struct Candidate {
    std::int64_t index;
    const Polynomial* poly;
};

CyclotomicFactorization factor_over(const Polynomial& p, const std::vector<Candidate>& candidates) {
    if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    // Work on an integer multiple; monic divisors keep quotients integral.
    Integer den_lcm = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    IntPoly work;
    for (const auto& c : p.coefficients()) work.push_back(c.get_num() * (den_lcm / c.get_den()));

    CyclotomicFactorization out;
    auto screened = reduce(work);
    for (const Candidate& cand : candidates) {
        if (int(work.size()) - 1 < cand.poly->degree()) continue;
        IntPoly divisor = to_int_poly(*cand.poly);
        // A miss modulo the screening prime rules out exact divisibility.
        if (!divides_mod_screen(screened, reduce(divisor))) continue;
        unsigned mult = 0;
        while (int(work.size()) - 1 >= cand.poly->degree() && divide_monic(work, divisor)) ++mult;
        if (mult) {
            out.factors.push_back({cand.index, mult});
            screened = reduce(work);
        }
    }
    Rational inv_scale(Integer(1), den_lcm);
    inv_scale.canonicalize();
    out.remainder = from_int_poly(work) * inv_scale;
    return out;
}

}  // namespace

const Polynomial& cyclotomic_poly(std::int64_t d) {
    if (d < 1) throw ArithmeticError("cyclotomic_poly: index must be >= 1");
    static std::recursive_mutex mutex;
    static std::map<std::int64_t, std::unique_ptr<Polynomial>> memo;
    std::lock_guard lock(mutex);
    if (auto it = memo.find(d); it != memo.end()) return *it->second;

    // x^d - 1 divided by Phi_e for every proper divisor e of d.
    IntPoly p(std::size_t(d) + 1, 0);
    p[0] = -1;
    p[std::size_t(d)] = 1;
    for (std::int64_t e : divisors(d)) {
        if (e == d) continue;
        if (!divide_monic(p, to_int_poly(cyclotomic_poly(e))))
            throw std::logic_error("cyclotomic division failed for d=" + std::to_string(d));
    }
    auto [it, inserted] = memo.emplace(d, std::make_unique<Polynomial>(from_int_poly(p)));
    return *it->second;
}

Polynomial CyclotomicFactorization::recombine() const {
    Polynomial p = remainder;
    for (const auto& f : factors)
        p *= pow(basis == FactorBasis::TwoCos ? min_poly_two_cos(f.index, 1) : cyclotomic_poly(f.index), f.multiplicity);
    return p;
}

CyclotomicFactorization factor_into_cyclotomics(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    const std::int64_t deg = p.degree();
    std::vector<Candidate> candidates;
    // phi(d) >= sqrt(d / 2), so phi(d) <= deg forces d <= 2 deg^2.
    for (std::int64_t d = 1; deg > 0 && d <= 2 * deg * deg + 2; ++d)
        if (euler_phi(d) <= deg) candidates.push_back({d, &cyclotomic_poly(d)});
    return factor_over(p, candidates);
}

const Polynomial& min_poly_two_cos(std::int64_t n, std::int64_t j) {
    if (n < 1) throw ArithmeticError("min_poly_two_cos: modulus must be >= 1");
    const std::int64_t m = n / gcd(n, j);
    static std::mutex mutex;
    static std::map<std::int64_t, std::unique_ptr<Polynomial>> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(m); it != memo.end()) return *it->second;
    }

    Polynomial psi;
    if (m == 1) {
        psi = Polynomial{-2, 1};
    } else if (m == 2) {
        psi = Polynomial{2, 1};
    } else {
        // Phi_m is palindromic of degree 2h; peel off (x + 1/x)^k from the top.
        const IntPoly phi = to_int_poly(cyclotomic_poly(m));
        const std::size_t h = (phi.size() - 1) / 2;
        IntPoly laurent = phi;  // index i <-> x^(i - h)
        IntPoly b(h + 1);
        for (std::size_t k = h + 1; k-- > 0;) {
            const Integer c = laurent[h + k];
            b[k] = c;
            if (sgn(c) == 0) continue;
            Integer binom = 1;
            for (std::size_t i = 0; i <= k; ++i) {
                laurent[h + k - 2 * i] -= c * binom;  // C(k, i) x^(k - 2i)
                binom = binom * Integer(long(k - i)) / Integer(long(i + 1));
            }
        }
        for (const auto& r : laurent)
            if (sgn(r) != 0) throw std::logic_error("Phi_m is not palindromic in x + 1/x");
        psi = from_int_poly(b);
    }

    std::lock_guard lock(mutex);
    auto [it, inserted] = memo.emplace(m, std::make_unique<Polynomial>(std::move(psi)));
    return *it->second;
}

CyclotomicFactorization factor_into_two_cos(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    const std::int64_t deg = p.degree();
    std::vector<Candidate> candidates;
    for (std::int64_t m = 1; deg > 0 && m <= 8 * deg * deg + 2; ++m)
        if (m <= 2 || euler_phi(m) <= 2 * deg) candidates.push_back({m, &min_poly_two_cos(m, 1)});
    CyclotomicFactorization f = factor_over(p, candidates);
    f.basis = FactorBasis::TwoCos;
    return f;
}

}  // namespace walkper
