#include "walkper/linalg.hpp"

#include <cmath>
#include <mutex>
#include <utility>

#include "walkper/kernels.hpp"

namespace walkper {
namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return result;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// log2 of 2^n * prod_i max(1, ||row_i||_2); bounds |coefficients| of det(xI - m).
double coefficient_bound_bits(const IntegerMatrix& m) {
    double bits = double(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        double norm2 = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) {
            double v = m(i, j).get_d();
            norm2 += v * v;
        }
        if (norm2 > 1.0) bits += 0.5 * std::log2(norm2);
    }
    return bits;
}

void require_square(const RationalMatrix& m, const char* op) {
    if (!m.is_square()) throw DimensionError(std::string(op) + " requires a square matrix");
}

/// Coefficients of det(xI - a) for integer a -> coefficients for a / scale.
Polynomial unscale(const std::vector<Integer>& ascending, const Integer& scale) {
    const std::size_t n = ascending.size() - 1;
    std::vector<Rational> coeffs(n + 1);
    Integer power = 1;  // scale^(n - i)
    for (std::size_t k = 0; k <= n; ++k) {
        std::size_t i = n - k;
        coeffs[i] = Rational(ascending[i], power);
        coeffs[i].canonicalize();
        power *= scale;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace

std::uint32_t modular_prime(std::size_t index) {
    static std::mutex mutex;
    static std::vector<std::uint32_t> primes;
    std::lock_guard lock(mutex);
    std::uint32_t candidate = primes.empty() ? kernels::kMaxModPrime - 1 : primes.back() - 2;
    if (candidate % 2 == 0) --candidate;
    while (primes.size() <= index) {
        while (!is_prime(candidate)) candidate -= 2;
        primes.push_back(candidate);
        candidate -= 2;
    }
    return primes[index];
}

std::vector<std::uint32_t> char_poly_mod(const IntegerMatrix& m, std::uint32_t prime) {
    const std::size_t n = m.rows;
    const std::uint64_t p = prime;
    const kernels::ModPrime mod(prime);
    const auto& kern = kernels::active_kernels();

    std::vector<double> h(n * n);
    Integer r;
    for (std::size_t i = 0; i < n * n; ++i) {
        mpz_fdiv_r_ui(r.get_mpz_t(), m.data[i].get_mpz_t(), prime);
        h[i] = double(r.get_ui());
    }
    auto at = [&](std::size_t i, std::size_t j) -> double& { return h[i * n + j]; };

    // Reduce to upper Hessenberg form by similarity transforms.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && at(pivot, j) == 0.0) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(at(pivot, k), at(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(at(k, pivot), at(k, j + 1));
        }
        const std::uint64_t inv = inverse_mod(std::uint64_t(at(j + 1, j)), p);
        for (std::size_t i = j + 2; i < n; ++i) {
            if (at(i, j) == 0.0) continue;
            const std::uint64_t u = mul_mod(std::uint64_t(at(i, j)), inv, p);
            kern.mod_axpy(&at(i, 0), &at(j + 1, 0), double(p - u), n, mod);
            for (std::size_t k = 0; k < n; ++k)
                at(k, j + 1) = double((std::uint64_t(at(k, j + 1)) + u * std::uint64_t(at(k, i))) % p);
        }
    }

    // Characteristic polynomial of a Hessenberg matrix by the standard recurrence.
    std::vector<std::vector<std::uint64_t>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::uint64_t> next(k + 1, 0);
        const auto& prev = polys[k - 1];
        const std::uint64_t diag = std::uint64_t(at(k - 1, k - 1));
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i + 1] = (next[i + 1] + prev[i]) % p;
            next[i] = (next[i] + (p - diag) * prev[i]) % p;
        }
        std::uint64_t t = 1;
        for (std::size_t i = 1; i < k; ++i) {
            t = mul_mod(t, std::uint64_t(at(k - i, k - i - 1)), p);
            if (t == 0) break;
            const std::uint64_t c = mul_mod(t, std::uint64_t(at(k - i - 1, k - 1)), p);
            if (c == 0) continue;
            const auto& lower = polys[k - i - 1];
            for (std::size_t d = 0; d < lower.size(); ++d) next[d] = (next[d] + (p - c) * lower[d]) % p;
        }
        polys[k] = std::move(next);
    }
    return {polys[n].begin(), polys[n].end()};
}

Polynomial char_poly(const RationalMatrix& m) {
    require_square(m, "char_poly");
    Integer scale;
    const IntegerMatrix a = scale_to_integer(m, scale);
    const std::size_t n = a.rows;

    const double needed_bits = coefficient_bound_bits(a) + 2.0;
    std::vector<Integer> lifted(n + 1, 0);
    Integer modulus = 1;
    double bits = 0.0;
    Integer tmp, inv;
    for (std::size_t idx = 0; bits <= needed_bits; ++idx) {
        const std::uint32_t p = modular_prime(idx);
        auto residues = char_poly_mod(a, p);
        // Garner step: x <- x + modulus * ((r - x) * modulus^-1 mod p)
        const unsigned long mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
        const std::uint64_t minv = inverse_mod(mod_p, p);
        for (std::size_t i = 0; i <= n; ++i) {
            const unsigned long x_p = mpz_fdiv_ui(lifted[i].get_mpz_t(), p);
            const std::uint64_t delta = (residues[i] + p - x_p) % p;
            const std::uint64_t k = mul_mod(delta, minv, p);
            tmp = modulus;
            tmp *= static_cast<unsigned long>(k);
            lifted[i] += tmp;
        }
        modulus *= static_cast<unsigned long>(p);
        bits += std::log2(double(p));
    }
    const Integer half = modulus / 2;
    for (auto& c : lifted)
        if (c > half) c -= modulus;
    return unscale(lifted, scale);
}

Polynomial char_poly_berkowitz(const RationalMatrix& m) {
    require_square(m, "char_poly_berkowitz");
    Integer scale;
    const IntegerMatrix a = scale_to_integer(m, scale);
    const std::size_t n = a.rows;

    std::vector<Integer> poly{1, -a(0, 0)};  // descending
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Integer> t(r + 2);
        t[0] = 1;
        t[1] = -a(r, r);
        std::vector<Integer> v(r), w(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
        for (std::size_t k = 2; k <= r + 1; ++k) {
            Integer s = 0;
            for (std::size_t i = 0; i < r; ++i) s += a(r, i) * v[i];
            t[k] = -s;
            if (k == r + 1) break;
            for (std::size_t i = 0; i < r; ++i) {
                w[i] = 0;
                for (std::size_t j = 0; j < r; ++j) w[i] += a(i, j) * v[j];
            }
            std::swap(v, w);
        }
        std::vector<Integer> next(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * poly[j];
        poly = std::move(next);
    }
    std::vector<Integer> ascending(poly.rbegin(), poly.rend());
    return unscale(ascending, scale);
}

std::size_t rank(const RationalMatrix& m) {
    Integer scale;
    IntegerMatrix a = scale_to_integer(m, scale);
    const std::size_t rows = a.rows, cols = a.cols;
    std::size_t r = 0;
    Integer prev = 1, t;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && sgn(a(pivot, c)) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

std::size_t kernel_dimension(const RationalMatrix& m) {
    require_square(m, "kernel_dimension");
    return m.cols() - rank(m);
}

}  // namespace walkper
