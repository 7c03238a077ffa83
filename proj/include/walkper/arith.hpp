#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace walkper {

/// Domain violation of an arithmetic function (n < 1 and similar).
class ArithmeticError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Prime factorization as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);
int moebius(std::int64_t n);
/// Ascending positive divisors.
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t smallest_prime_factor(std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Sieved phi, mu and smallest prime factors for 1..bound.
///
/// Immutable after construction; shared() builds one process-wide instance
/// on first use (thread-safe static initialization).
class ArithmeticTables {
public:
    static constexpr std::int64_t kDefaultBound = 1'000'000;

    explicit ArithmeticTables(std::int64_t bound);
    static const ArithmeticTables& shared();

    std::int64_t bound() const noexcept { return bound_; }
    std::int64_t phi(std::int64_t n) const;
    int mu(std::int64_t n) const;
    std::int64_t spf(std::int64_t n) const;

private:
    std::int64_t bound_;
    std::vector<std::int32_t> phi_;
    std::vector<std::int8_t> mu_;
    std::vector<std::int32_t> spf_;
};

}  // namespace walkper
