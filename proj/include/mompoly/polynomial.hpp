#ifndef MOMPOLY_POLYNOMIAL_HPP
#define MOMPOLY_POLYNOMIAL_HPP

#include "mompoly/moment_sequence.hpp"
#include "mompoly/scalar.hpp"

#include <vector>

namespace mompoly {

// Polynomial in the monomial basis, coefficients c_0..c_n with trailing
// zeros trimmed. The zero polynomial has degree -1.
class StandardPolynomial {
public:
    StandardPolynomial() = default;
    explicit StandardPolynomial(std::vector<Scalar> c);

    static StandardPolynomial monomial(int p, Scalar c = Scalar(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(int p) const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    friend StandardPolynomial operator+(const StandardPolynomial&, const StandardPolynomial&);
    friend StandardPolynomial operator-(const StandardPolynomial&, const StandardPolynomial&);
    friend StandardPolynomial operator*(const StandardPolynomial&, const StandardPolynomial&);
    friend StandardPolynomial operator*(const Scalar&, const StandardPolynomial&);

private:
    std::vector<Scalar> c_;
};

// Horner evaluation; exact when the polynomial and x are both exact.
Scalar evaluate(const StandardPolynomial& p, const Scalar& x);
double evaluate(const StandardPolynomial& p, double x);

// Sum of c_nu * x^(mu*nu) for x >= 0: substitute t = x^mu and evaluate.
double evaluate_fractional(const StandardPolynomial& p, const Rational& mu, double x);

// Classical d/dx.
StandardPolynomial derivative(const StandardPolynomial& p);

// Coefficients of p in powers of (x - c); recenter(recenter(p, c), -c)
// restores p (exactly, in Exact mode).
StandardPolynomial recenter(const StandardPolynomial& p, const Scalar& c);

// p(s*x).
StandardPolynomial compose_scaled(const StandardPolynomial& p, const Scalar& s);

double max_abs_coeff(const StandardPolynomial& p);

// Polynomial held as coefficients a_p relative to the moment basis
// x^p/m(p); the recursions that build the generalized families are stated
// on these. Standard-basis coefficients are c_p = a_p/m(p).
class MomentPolynomial {
public:
    MomentPolynomial(MomentSequence seq, std::vector<Scalar> a);

    static MomentPolynomial zero(MomentSequence seq) { return {std::move(seq), {}}; }

    const MomentSequence& sequence() const { return seq_; }
    int degree() const { return static_cast<int>(a_.size()) - 1; }
    bool is_zero() const { return a_.empty(); }
    Scalar coeff(int p) const;
    const std::vector<Scalar>& coeffs() const { return a_; }

private:
    MomentSequence seq_;
    std::vector<Scalar> a_;
};

// The moment derivative: a_p -> a_{p+1} in the moment basis, equivalently
// x^p -> (m(p)/m(p-1)) x^{p-1} on monomials and constants -> 0.
MomentPolynomial moment_derivative(const MomentPolynomial& y);

StandardPolynomial to_standard(const MomentPolynomial& y);
MomentPolynomial to_moment(const StandardPolynomial& p, const MomentSequence& seq);

MomentPolynomial add(const MomentPolynomial& a, const MomentPolynomial& b);
MomentPolynomial scale(const Scalar& s, const MomentPolynomial& y);

// sigma * d_m^2 y + tau * d_m y + lambda * y = 0, with deg(sigma) <= 2 and
// deg(tau) <= 1. A first-order equation is encoded with sigma = 0.
class MomentEquation {
public:
    MomentEquation(StandardPolynomial sigma, StandardPolynomial tau, Scalar lambda,
                   MomentSequence seq);

    const StandardPolynomial& sigma() const { return sigma_; }
    const StandardPolynomial& tau() const { return tau_; }
    const Scalar& lambda() const { return lambda_; }
    const MomentSequence& sequence() const { return seq_; }

private:
    StandardPolynomial sigma_;
    StandardPolynomial tau_;
    Scalar lambda_;
    MomentSequence seq_;
};

// sigma * d_m^2 y + tau * d_m y + lambda * y, as a moment polynomial over
// y's sequence. The zero polynomial iff y solves the equation. The
// sequences of eq and y must be identical.
MomentPolynomial apply_equation(const MomentEquation& eq, const MomentPolynomial& y);

} // namespace mompoly

#endif
