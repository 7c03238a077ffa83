#include "walkper/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace walkper {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(std::size_t(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial(std::vector<Rational>{-root, 1}); }

void Polynomial::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[std::size_t(i)];
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.normalize();
    return r;
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * long(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Rational inv = 1 / leading();
    return *this * inv;
}

Polynomial Polynomial::scale_variable(const Rational& c) const {
    Polynomial r = *this;
    Rational power = 1;
    for (auto& x : r.coeffs_) {
        x *= power;
        power *= c;
    }
    r.normalize();
    return r;
}

bool Polynomial::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::string Polynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[std::size_t(i)];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        bool unit = mag == 1;
        if (!unit || i == 0) {
            out += mag.get_str();
            if (i > 0) out += "*";
        }
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.coefficients();
    const auto& d = b.coefficients();
    const int db = b.degree();
    std::vector<Rational> quo(std::size_t(a.degree() - db) + 1);
    Rational inv_lead = 1 / b.leading();
    for (int i = a.degree() - db; i >= 0; --i) {
        Rational q = rem[std::size_t(i + db)] * inv_lead;
        if (sgn(q) == 0) continue;
        quo[std::size_t(i)] = q;
        for (int j = 0; j <= db; ++j) rem[std::size_t(i + j)] -= q * d[std::size_t(j)];
    }
    rem.resize(std::size_t(db));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result = Polynomial::constant(1);
    Polynomial base = p;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

unsigned divide_out(Polynomial& p, const Polynomial& divisor) {
    if (divisor.degree() < 1) throw std::domain_error("divide_out: divisor must be non-constant");
    unsigned e = 0;
    while (!p.is_zero() && p.degree() >= divisor.degree()) {
        auto [q, r] = divmod(p, divisor);
        if (!r.is_zero()) break;
        p = std::move(q);
        ++e;
    }
    return e;
}

Rational root_power_sum(const Polynomial& p, unsigned k) {
    if (p.degree() < 1) return 0;
    if (k == 0) return p.degree();
    // Monic x^n + c_{n-1} x^{n-1} + ... ; e_i = (-1)^i c_{n-i}.
    Polynomial m = p.monic();
    const int n = m.degree();
    auto e = [&](int i) -> Rational {
        if (i > n) return 0;
        Rational c = m.coeff(n - i);
        return (i % 2) ? Rational(-c) : c;
    };
    std::vector<Rational> power(k + 1);
    power[0] = n;
    for (unsigned j = 1; j <= k; ++j) {
        Rational s = 0;
        for (unsigned i = 1; i < j; ++i) {
            Rational term = e(int(i)) * power[j - i];
            if (i % 2) s += term;
            else s -= term;
        }
        Rational last = e(int(j)) * long(j);
        if (j % 2) s += last;
        else s -= last;
        power[j] = s;
    }
    return power[k];
}

}  // namespace walkper
