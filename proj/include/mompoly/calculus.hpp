#ifndef MOMPOLY_CALCULUS_HPP
#define MOMPOLY_CALCULUS_HPP

#include "mompoly/families.hpp"
#include "mompoly/polynomial.hpp"

#include <functional>
#include <span>

namespace mompoly {

// Polynomial in x^mu: sum of c_nu x^(mu*nu), defined on x >= 0. With mu = 1
// it coincides with the StandardPolynomial it wraps.
struct FractionalPolynomial {
    Rational mu = 1;
    StandardPolynomial coeffs;
};

double evaluate(const FractionalPolynomial& p, double x);

// View a generalized polynomial built over GammaPower(mu) as a function of
// x through the substitution t = x^mu.
FractionalPolynomial fractionalize(const MomentPolynomial& y, const Rational& mu);

// Caputo action on a single power x^s with s = mu*nu (nu a nonnegative
// integer) or s >= mu: returns the coefficient and exponent of the image
// power. Constants (and integer powers below ceil(mu)) map to zero. The
// coefficient Gamma(1+mu*nu)/Gamma(1+mu*(nu-1)) is exactly the moment ratio
// of GammaPower(mu) at nu, which is the realization identity.
std::pair<double, Rational> caputo_power(const Rational& s, const Rational& mu);

// Termwise Caputo derivative of order mu.
FractionalPolynomial caputo_apply(const FractionalPolynomial& p);

// Jackson derivative on coefficients: c_nu -> [nu]_q c_nu shifted down one
// degree. Exact for exact q.
StandardPolynomial jackson_derivative(const StandardPolynomial& p, const Scalar& q);

// Difference quotient (f(qx) - f(x)) / ((q-1)x); x = 0 is a domain error.
double jackson_numeric(const std::function<double(double)>& f, double q, double x);

// Max absolute value over the grid of
//   sigma(x^mu) (cD)^2 y + tau(x^mu) cD y + lambda y,
// the family's moment equation realized as a fractional differential
// equation under GammaPower(mu).
double fractional_residual(const FamilySpec& spec, const Rational& mu,
                           const FractionalPolynomial& y, std::span<const double> xs);

// Residuals of the realized q-difference equation along two independent
// routes: the symbolic Jackson derivative (max absolute coefficient of the
// residual polynomial; exactly zero for rational q) and the pointwise
// difference quotient on the grid.
struct QResidual {
    double symbolic = 0.0;
    double numeric = 0.0;
    double max() const { return symbolic > numeric ? symbolic : numeric; }
};

QResidual q_residual(const FamilySpec& spec, const Rational& q, const StandardPolynomial& y,
                     std::span<const double> xs);

} // namespace mompoly

#endif
