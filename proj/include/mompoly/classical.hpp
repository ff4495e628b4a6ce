#ifndef MOMPOLY_CLASSICAL_HPP
#define MOMPOLY_CLASSICAL_HPP

#include "mompoly/families.hpp"
#include "mompoly/polynomial.hpp"

#include <vector>

namespace mompoly {

// Argument transforms under which the classical families are
// hypergeometric: t = x (Laguerre), t = (1-x)/2 (Jacobi), t = x^2
// (Hermite even/odd split), t = -x/2 (Bessel).
enum class ArgTransform { Identity, OneMinusXOverTwo, XSquared, MinusXOverTwo };

// A terminating pFq: one upper parameter must be a nonpositive integer -n;
// no lower parameter may be a nonpositive integer >= -(n-1), or the series
// hits a pole before it terminates.
struct HypergeometricSpec {
    std::vector<Scalar> upper;
    std::vector<Scalar> lower;
    ArgTransform transform = ArgTransform::Identity;
};

// Coefficient list of the terminating series in the transformed argument t:
// sum_{k=0..n} [prod (upper)_k / prod (lower)_k] t^k / k!.
StandardPolynomial hyp_polynomial(const HypergeometricSpec& spec);

// Value of the series at x (the transform is applied to x first). Exact for
// exact parameters and x.
Scalar hyp_terminating(const HypergeometricSpec& spec, const Scalar& x);

// Substitute the transformed argument so the result is a polynomial in x.
StandardPolynomial apply_transform(const StandardPolynomial& in_t, ArgTransform transform);

// 1F1(-n; alpha+1; x): constant term 1, proportional to the generalized
// Laguerre polynomial.
StandardPolynomial classical_laguerre(int n, const Scalar& alpha);

// Physicists' Hermite polynomial via H_{n+1} = 2x H_n - 2n H_{n-1}.
StandardPolynomial classical_hermite(int n);

// 2F1(-n, n+1+alpha+beta; 1+alpha; (1-x)/2) expanded in powers of x;
// normalized to value 1 at x = 1.
StandardPolynomial classical_jacobi(int n, const Scalar& alpha, const Scalar& beta);

// Bessel polynomial y_n = 2F0(-n, n+1; -x/2), constant term 1.
StandardPolynomial classical_bessel(int n);

// sigma y'' + tau y' + lambda y with the family's classical coefficients
// and ordinary derivatives; the zero polynomial exactly on the oracles.
StandardPolynomial classical_residual(Family family, int n, const Scalar& alpha,
                                      const Scalar& beta, const StandardPolynomial& p);

} // namespace mompoly

#endif
