#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "raysplit/bignum.hpp"

namespace raysplit {

/**
 * Dense univariate polynomial with exact rational coefficients.
 *
 * Coefficients are stored in ascending powers of the variable (here always the
 * reflection coefficient r). The zero polynomial is the empty coefficient
 * vector; otherwise the leading coefficient is nonzero.
 */
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(Rational c);
    /// coeff * r^power
    static Polynomial monomial(int power, Rational coeff = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of r^power; zero beyond the stored degree.
    Rational coeff(int power) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    /// Exact evaluation.
    Rational eval(const Rational& x) const;
    /// Horner evaluation after converting coefficients to double.
    double eval(double x) const;

    bool operator==(const Polynomial&) const = default;

    /// Human-readable form, e.g. "4r^2 - 1".
    std::string str(const std::string& var = "r") const;

private:
    std::vector<Rational> coeffs_;
    void normalize();
};

}  // namespace raysplit
