#ifndef MOMPOLY_FAMILIES_HPP
#define MOMPOLY_FAMILIES_HPP

#include "mompoly/polynomial.hpp"

#include <string>
#include <utility>

namespace mompoly {

enum class Family { Laguerre, Hermite, Jacobi, Bessel };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Parameters selecting one generalized polynomial: the family, its degree,
// the family parameters alpha/beta (> -1 where applicable) and the free
// constants of the underlying recursion. For Hermite, a0 seeds even degrees
// and a1 odd degrees; for Jacobi, (a0, a1) must lie on the one-dimensional
// line of terminating solutions (see build_jacobi).
struct FamilySpec {
    Family family = Family::Laguerre;
    int n = 1;
    Scalar alpha = Scalar(0);
    Scalar beta = Scalar(0);
    Scalar a0 = Scalar(1);
    Scalar a1 = Scalar(0);
};

// The eigenvalue making the family's moment equation admit a degree-n
// polynomial solution:
//   Laguerre  m(n)/m(n-1)                          (n >= 1)
//   Hermite   2 m(n)/m(n-1)                        (n >= 1)
//   Jacobi    m(n)/m(n-1) [m(n-1)/m(n-2)+alpha+beta+2]   (n >= 2)
//   Bessel    m(n)/m(n-1) [m(n-1)/m(n-2)+2]        (n >= 2)
Scalar eigenvalue(const FamilySpec& spec, const MomentSequence& seq);

// The (sigma, tau, lambda) triple of the family's moment equation. Bessel
// carries its eigenvalue with a minus sign (the equation reads
// ... - lambda_n y = 0); for n = 1 the Bessel equation is first order and
// is encoded with sigma = 0, tau = x + 1, lambda = -m(1).
MomentEquation build_equation(const FamilySpec& spec, const MomentSequence& seq);

// Generalized Laguerre: x d_m^2 y + (alpha+1-x) d_m y + lambda y = 0,
// built by the forward recursion
//   a_{p+1} = a_p (m(p)/m(p-1) - lambda) / (m(p)/m(p-1) + alpha + 1).
MomentPolynomial build_laguerre(const MomentSequence& seq, int n, const Scalar& alpha,
                                const Scalar& a0);

// Generalized Hermite: d_m^2 y - 2x d_m y + lambda y = 0. The recursion
// couples p and p+2, so the polynomial has the parity of n; free_constant
// seeds a0 for even n and a1 for odd n.
MomentPolynomial build_hermite(const MomentSequence& seq, int n, const Scalar& free_constant);

// The terminating condition a_{n+1} = 0 of the Jacobi recursion as a linear
// form kappa0*a0 + kappa1*a1 on the free constants.
std::pair<Scalar, Scalar> jacobi_termination(const MomentSequence& seq, int n,
                                             const Scalar& alpha, const Scalar& beta);

// Generalized Jacobi: (1-x^2) d_m^2 y + [beta-alpha-(alpha+beta+2)x] d_m y
// + lambda y = 0, n >= 2. The two-dimensional recursion space admits a
// one-dimensional line of degree-n solutions; the explicit overload demands
// (a0, a1) on that line, the other picks a canonical point on it.
MomentPolynomial build_jacobi(const MomentSequence& seq, int n, const Scalar& alpha,
                              const Scalar& beta, const Scalar& a0, const Scalar& a1);
MomentPolynomial build_jacobi(const MomentSequence& seq, int n, const Scalar& alpha,
                              const Scalar& beta);

// Generalized Bessel: a0(1+x) for n = 1; for n >= 2 the solution of
// x^2 d_m^2 y + 2(x+1) d_m y - lambda y = 0 via
//   a_{p+1} = a_p (lambda - m(p)/m(p-1) [m(p-1)/m(p-2)+2]) / 2.
MomentPolynomial build_bessel(const MomentSequence& seq, int n, const Scalar& a0);

// Dispatch on spec.family; validates the free constants against the
// family's parity rules. Jacobi resolves its free constants automatically
// here; call the explicit build_jacobi overload to request a particular
// (a0, a1).
MomentPolynomial build(const FamilySpec& spec, const MomentSequence& seq);

// Closed product forms of the recursion coefficients, kept as an
// independent route for cross-checking the builders (they are asserted
// against the recursion output in exact mode).
Scalar laguerre_closed_coefficient(const MomentSequence& seq, int n, const Scalar& alpha,
                                   const Scalar& a0, int p);
Scalar hermite_closed_coefficient(const MomentSequence& seq, int n, const Scalar& free_constant,
                                  int p);
Scalar bessel_closed_coefficient(const MomentSequence& seq, int n, const Scalar& a0, int p);

} // namespace mompoly

#endif
