#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "walkper/polynomial.hpp"

namespace walkper {

/// Phi_d, the d-th cyclotomic polynomial (d >= 1). Memoized; concurrent
/// callers observe identical results.
const Polynomial& cyclotomic_poly(std::int64_t d);

struct CyclotomicFactor {
    std::int64_t index;  // d, or the modulus m for psi_m
    unsigned multiplicity;

    friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

/// Polynomials the factors are indexed over: Phi_d, or psi_m for 2cos(2 pi/m).
enum class FactorBasis { Cyclotomic, TwoCos };

/// p = prod f_index^multiplicity * remainder, f from the basis.
struct CyclotomicFactorization {
    std::vector<CyclotomicFactor> factors;  // ascending index
    Polynomial remainder;
    FactorBasis basis = FactorBasis::Cyclotomic;

    /// True iff the remainder is a nonzero constant.
    bool fully_cyclotomic() const { return remainder.degree() == 0; }
    Polynomial recombine() const;
};

/// Trial-divides p by every Phi_d with phi(d) <= deg p, each to maximal
/// multiplicity. Throws std::domain_error on the zero polynomial.
CyclotomicFactorization factor_into_cyclotomics(const Polynomial& p);

/// Minimal polynomial of 2cos(2 pi j / n) over the rationals, monic integral.
///
/// With m = n / gcd(n, j): x - 2 for m = 1, x + 2 for m = 2, otherwise psi_m
/// of degree phi(m)/2, where Phi_m(x) = x^{phi(m)/2} psi_m(x + 1/x).
const Polynomial& min_poly_two_cos(std::int64_t n, std::int64_t j);

/// Same factorization shape as factor_into_cyclotomics, but over the
/// polynomials psi_m (index = m) for every m with deg psi_m <= deg p.
/// Used to identify eigenvalues of the form 2cos(2 pi j/m).
CyclotomicFactorization factor_into_two_cos(const Polynomial& p);

}  // namespace walkper
