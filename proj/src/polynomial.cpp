#include "raysplit/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace raysplit {

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(int power, Rational coeff) {
    Polynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

Rational Polynomial::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(power)];
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial p(*this);
    for (auto& x : p.coeffs_) x *= c;
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = Polynomial::constant(1);
    Polynomial base(*this);
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e != 0) base *= base;
    }
    return result;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int p = degree(); p >= 0; --p) {
        const Rational& c = coeffs_[static_cast<std::size_t>(p)];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || p == 0) os << mag.str();
        if (p > 0) {
            os << var;
            if (p > 1) os << "^" << p;
        }
    }
    return os.str();
}

}  // namespace raysplit
