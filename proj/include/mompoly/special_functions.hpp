#ifndef MOMPOLY_SPECIAL_FUNCTIONS_HPP
#define MOMPOLY_SPECIAL_FUNCTIONS_HPP

#include "mompoly/scalar.hpp"

namespace mompoly {

// Gamma function on (0, inf) via the Lanczos approximation (N=13,
// g=6.0246...). Relative error below 1e-13 on [0.1, 50]; integer arguments
// up to 21 are computed by direct factorial product. x <= 0 is a domain
// error: nothing here needs the reflection formula.
double gamma_fn(double x);

// log(Gamma(x)) for x > 0, same Lanczos kernel.
double log_gamma(double x);

// B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), a, b > 0. Switches to log space
// once a + b is large enough for the direct quotient to overflow.
double beta_fn(double a, double b);

// q-number [j]_q = 1 + q + ... + q^{j-1} = (1 - q^j)/(1 - q). Exact for an
// exact q. [0]_q = 0. q = 1 is a domain error (use the factorial sequence).
Scalar q_number(const Scalar& q, int j);

// Pochhammer symbol (x)_k = x(x+1)...(x+k-1), with (x)_0 = 1.
Scalar pochhammer(const Scalar& x, int k);

} // namespace mompoly

#endif
