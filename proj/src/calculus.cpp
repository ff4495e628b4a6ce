#include "mompoly/calculus.hpp"

#include "mompoly/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace mompoly {

namespace {

Rational ceil_rational(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    Integer q = num / den; // truncates toward zero
    if (num > 0 && q * den != num) ++q;
    return Rational(q);
}

bool is_nonneg_integer(const Rational& r) {
    return r >= 0 && boost::multiprecision::denominator(r) == 1;
}

} // namespace

double evaluate(const FractionalPolynomial& p, double x) {
    return evaluate_fractional(p.coeffs, p.mu, x);
}

FractionalPolynomial fractionalize(const MomentPolynomial& y, const Rational& mu) {
    if (mu <= 0) throw std::domain_error("fractionalize: mu must be positive");
    return {mu, to_standard(y)};
}

std::pair<double, Rational> caputo_power(const Rational& s, const Rational& mu) {
    if (mu <= 0) throw std::domain_error("caputo_power: mu must be positive");
    if (s < 0) throw std::domain_error("caputo_power: exponent must be nonnegative");
    // Integer powers below the derivative order are annihilated; everything
    // else follows the monomial rule Gamma(s+1)/Gamma(s-mu+1) x^(s-mu).
    if (is_nonneg_integer(s) && s <= ceil_rational(mu) - 1) return {0.0, Rational(0)};
    if (s < mu)
        throw std::domain_error("caputo_power: fractional exponent below the derivative order");
    double coeff = gamma_fn(1.0 + s.convert_to<double>()) /
                   gamma_fn(1.0 + (s - mu).convert_to<double>());
    return {coeff, s - mu};
}

FractionalPolynomial caputo_apply(const FractionalPolynomial& p) {
    if (p.coeffs.degree() < 1) return {p.mu, StandardPolynomial{}};
    std::vector<Scalar> c(p.coeffs.degree(), Scalar(0));
    for (int nu = 1; nu <= p.coeffs.degree(); ++nu) {
        auto [coeff, exponent] = caputo_power(p.mu * nu, p.mu);
        (void)exponent; // = mu*(nu-1) by construction
        c[nu - 1] = Scalar(coeff) * p.coeffs.coeff(nu);
    }
    return {p.mu, StandardPolynomial(std::move(c))};
}

StandardPolynomial jackson_derivative(const StandardPolynomial& p, const Scalar& q) {
    if (p.degree() < 1) return {};
    std::vector<Scalar> c(p.degree(), Scalar(0));
    for (int nu = 1; nu <= p.degree(); ++nu) c[nu - 1] = q_number(q, nu) * p.coeff(nu);
    return StandardPolynomial(std::move(c));
}

double jackson_numeric(const std::function<double(double)>& f, double q, double x) {
    if (x == 0.0) throw std::domain_error("jackson_numeric: x = 0 (use the symbolic form)");
    if (q == 1.0) throw std::domain_error("jackson_numeric: q = 1");
    return (f(q * x) - f(x)) / ((q - 1.0) * x);
}

double fractional_residual(const FamilySpec& spec, const Rational& mu,
                           const FractionalPolynomial& y, std::span<const double> xs) {
    MomentSequence seq = MomentSequence::gamma_power(mu);
    MomentEquation eq = build_equation(spec, seq);
    double lambda = eq.lambda().as_double();
    FractionalPolynomial d1 = caputo_apply(y);
    FractionalPolynomial d2 = caputo_apply(d1);
    double mu_d = mu.convert_to<double>();
    double worst = 0.0;
    for (double x : xs) {
        if (x < 0.0) throw std::domain_error("fractional_residual: grid must be nonnegative");
        double t = std::pow(x, mu_d);
        double r = evaluate(eq.sigma(), t) * evaluate(d2, x) +
                   evaluate(eq.tau(), t) * evaluate(d1, x) + lambda * evaluate(y, x);
        worst = std::max(worst, std::fabs(r));
    }
    return worst;
}

QResidual q_residual(const FamilySpec& spec, const Rational& q, const StandardPolynomial& y,
                     std::span<const double> xs) {
    MomentSequence seq = MomentSequence::q_factorial(q);
    MomentEquation eq = build_equation(spec, seq);
    Scalar qs{q};

    StandardPolynomial d1 = jackson_derivative(y, qs);
    StandardPolynomial d2 = jackson_derivative(d1, qs);
    StandardPolynomial symbolic = eq.sigma() * d2 + eq.tau() * d1 + eq.lambda() * y;

    QResidual out;
    out.symbolic = max_abs_coeff(symbolic);

    double q_d = q.convert_to<double>();
    double lambda = eq.lambda().as_double();
    auto f = [&y](double t) { return evaluate(y, t); };
    auto df = [&](double t) { return jackson_numeric(f, q_d, t); };
    for (double x : xs) {
        if (x == 0.0) continue; // difference quotient undefined at the origin
        double r = evaluate(eq.sigma(), x) * jackson_numeric(df, q_d, x) +
                   evaluate(eq.tau(), x) * df(x) + lambda * evaluate(y, x);
        out.numeric = std::max(out.numeric, std::fabs(r));
    }
    return out;
}

} // namespace mompoly
