#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "walkper/rational.hpp"

namespace walkper {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
///
/// The representation is normalized: no trailing zero coefficients, so the
/// zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<long> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int degree);
    /// x - root
    static Polynomial linear(const Rational& root);

    int degree() const noexcept { return int(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^i; zero outside the stored range.
    Rational coeff(int i) const;
    const Rational& leading() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Rational evaluate(const Rational& x) const;
    double evaluate(double x) const;

    Polynomial derivative() const;
    Polynomial monic() const;
    /// p(c * x).
    Polynomial scale_variable(const Rational& c) const;
    /// True iff every coefficient is an integer.
    bool is_integral() const;

    /// "x^3 - 3*x - 2"; "0" for the zero polynomial.
    std::string to_string(char var = 'x') const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b. Throws std::domain_error if b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial pow(const Polynomial& p, unsigned e);

/// Largest e with divisor^e | p, dividing it out of p. divisor must have degree >= 1.
unsigned divide_out(Polynomial& p, const Polynomial& divisor);

/// Power sum of the roots, sum_i r_i^k, from Newton's identities. Exact.
Rational root_power_sum(const Polynomial& p, unsigned k);

}  // namespace walkper
