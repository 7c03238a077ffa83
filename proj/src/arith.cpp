#include "walkper/arith.hpp"

#include <algorithm>
#include <string>

namespace walkper {
namespace {

void require_positive(std::int64_t n, const char* fn) {
    if (n < 1) throw ArithmeticError(std::string(fn) + ": argument must be >= 1, got " + std::to_string(n));
}

}  // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    require_positive(n, "factorize");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    require_positive(n, "euler_phi");
    const auto& tables = ArithmeticTables::shared();
    if (n <= tables.bound()) return tables.phi(n);
    std::int64_t result = n;
    for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

int moebius(std::int64_t n) {
    require_positive(n, "moebius");
    const auto& tables = ArithmeticTables::shared();
    if (n <= tables.bound()) return tables.mu(n);
    auto f = factorize(n);
    if (std::any_of(f.begin(), f.end(), [](auto pe) { return pe.second > 1; })) return 0;
    return f.size() % 2 ? -1 : 1;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    require_positive(n, "divisors");
    std::vector<std::int64_t> low, high;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::int64_t smallest_prime_factor(std::int64_t n) {
    if (n < 2) throw ArithmeticError("smallest_prime_factor: argument must be >= 2");
    return factorize(n).front().first;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

ArithmeticTables::ArithmeticTables(std::int64_t bound)
    : bound_(bound), phi_(std::size_t(bound) + 1), mu_(std::size_t(bound) + 1), spf_(std::size_t(bound) + 1, 0) {
    require_positive(bound, "ArithmeticTables");
    std::vector<std::int32_t> primes;
    phi_[1] = 1;
    mu_[1] = 1;
    // Linear sieve.
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = std::int32_t(i);
            phi_[i] = std::int32_t(i - 1);
            mu_[i] = -1;
            primes.push_back(std::int32_t(i));
        }
        for (std::int32_t p : primes) {
            std::int64_t ip = i * p;
            if (p > spf_[i] || ip > bound) break;
            spf_[ip] = p;
            if (i % p == 0) {
                phi_[ip] = phi_[i] * p;
                mu_[ip] = 0;
            } else {
                phi_[ip] = phi_[i] * (p - 1);
                mu_[ip] = std::int8_t(-mu_[i]);
            }
        }
    }
}

const ArithmeticTables& ArithmeticTables::shared() {
    static const ArithmeticTables tables(kDefaultBound);
    return tables;
}

std::int64_t ArithmeticTables::phi(std::int64_t n) const {
    if (n < 1 || n > bound_) throw ArithmeticError("phi: argument outside table");
    return phi_[std::size_t(n)];
}

int ArithmeticTables::mu(std::int64_t n) const {
    if (n < 1 || n > bound_) throw ArithmeticError("mu: argument outside table");
    return mu_[std::size_t(n)];
}

std::int64_t ArithmeticTables::spf(std::int64_t n) const {
    if (n < 2 || n > bound_) throw ArithmeticError("spf: argument outside table");
    return spf_[std::size_t(n)];
}

}  // namespace walkper
