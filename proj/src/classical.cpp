#include "mompoly/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace mompoly {

namespace {

bool nonpositive_integer(const Scalar& v, long long* n_out) {
    if (v.is_exact()) {
        const Rational& r = v.rational();
        if (boost::multiprecision::denominator(r) != 1 || r > 0) return false;
        *n_out = boost::multiprecision::numerator(r).convert_to<long long>();
        return true;
    }
    double d = v.as_double();
    if (d > 0.0 || d != std::floor(d)) return false;
    *n_out = static_cast<long long>(d);
    return true;
}

int termination_index(const HypergeometricSpec& spec) {
    long long best = -1;
    for (const Scalar& u : spec.upper) {
        long long m = 0;
        if (nonpositive_integer(u, &m) && (best < 0 || -m < best)) best = -m;
    }
    if (best < 0)
        throw std::invalid_argument("hyp_polynomial: no nonpositive-integer upper parameter");
    return static_cast<int>(best);
}

} // namespace

StandardPolynomial hyp_polynomial(const HypergeometricSpec& spec) {
    int n = termination_index(spec);
    for (const Scalar& l : spec.lower) {
        long long m = 0;
        if (nonpositive_integer(l, &m) && -m <= n - 1)
            throw std::invalid_argument("hyp_polynomial: lower parameter hits a pole before "
                                        "the series terminates");
    }
    std::vector<Scalar> c(n + 1, Scalar(0));
    Scalar term(Rational(1));
    for (const Scalar& u : spec.upper)
        if (!u.is_exact()) term = Scalar(1.0);
    for (const Scalar& l : spec.lower)
        if (!l.is_exact()) term = Scalar(1.0);
    c[0] = term;
    for (int k = 0; k < n; ++k) {
        for (const Scalar& u : spec.upper) term *= u + Scalar(k);
        for (const Scalar& l : spec.lower) term /= l + Scalar(k);
        term /= Scalar(k + 1);
        c[k + 1] = term;
    }
    return StandardPolynomial(std::move(c));
}

Scalar hyp_terminating(const HypergeometricSpec& spec, const Scalar& x) {
    Scalar t;
    switch (spec.transform) {
        case ArgTransform::Identity: t = x; break;
        case ArgTransform::OneMinusXOverTwo: t = (Scalar(1) - x) / Scalar(2); break;
        case ArgTransform::XSquared: t = x * x; break;
        case ArgTransform::MinusXOverTwo: t = -(x / Scalar(2)); break;
    }
    return evaluate(hyp_polynomial(spec), t);
}

StandardPolynomial apply_transform(const StandardPolynomial& in_t, ArgTransform transform) {
    switch (transform) {
        case ArgTransform::Identity:
            return in_t;
        case ArgTransform::OneMinusXOverTwo: {
            // t = -(x-1)/2: scale by -1/2 in u = x-1, then rebase u-powers
            // onto x-powers.
            StandardPolynomial in_u = compose_scaled(in_t, Scalar::exact(-1, 2));
            return recenter(in_u, Scalar(-1));
        }
        case ArgTransform::XSquared: {
            std::vector<Scalar> c(2 * in_t.coeffs().size(), Scalar(0));
            for (int k = 0; k <= in_t.degree(); ++k) c[2 * k] = in_t.coeff(k);
            return StandardPolynomial(std::move(c));
        }
        case ArgTransform::MinusXOverTwo:
            return compose_scaled(in_t, Scalar::exact(-1, 2));
    }
    throw std::logic_error("apply_transform: unreachable");
}

StandardPolynomial classical_laguerre(int n, const Scalar& alpha) {
    if (n < 0) throw std::domain_error("classical_laguerre: n must be >= 0");
    if (!(alpha > Scalar(-1))) throw std::domain_error("classical_laguerre: alpha must exceed -1");
    HypergeometricSpec spec{{Scalar(-n)}, {alpha + Scalar(1)}, ArgTransform::Identity};
    return hyp_polynomial(spec);
}

StandardPolynomial classical_hermite(int n) {
    if (n < 0) throw std::domain_error("classical_hermite: n must be >= 0");
    StandardPolynomial prev({Scalar(1)});
    if (n == 0) return prev;
    StandardPolynomial cur({Scalar(0), Scalar(2)});
    StandardPolynomial two_x = cur;
    for (int k = 1; k < n; ++k) {
        StandardPolynomial next = two_x * cur - Scalar(2 * k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

StandardPolynomial classical_jacobi(int n, const Scalar& alpha, const Scalar& beta) {
    if (n < 0) throw std::domain_error("classical_jacobi: n must be >= 0");
    if (!(alpha > Scalar(-1)) || !(beta > Scalar(-1)))
        throw std::domain_error("classical_jacobi: alpha and beta must exceed -1");
    HypergeometricSpec spec{{Scalar(-n), Scalar(n + 1) + alpha + beta},
                            {Scalar(1) + alpha},
                            ArgTransform::OneMinusXOverTwo};
    return apply_transform(hyp_polynomial(spec), spec.transform);
}

StandardPolynomial classical_bessel(int n) {
    if (n < 0) throw std::domain_error("classical_bessel: n must be >= 0");
    HypergeometricSpec spec{{Scalar(-n), Scalar(n + 1)}, {}, ArgTransform::MinusXOverTwo};
    return apply_transform(hyp_polynomial(spec), spec.transform);
}

StandardPolynomial classical_residual(Family family, int n, const Scalar& alpha,
                                      const Scalar& beta, const StandardPolynomial& p) {
    StandardPolynomial sigma, tau;
    Scalar lambda;
    switch (family) {
        case Family::Laguerre:
            sigma = StandardPolynomial({Scalar(0), Scalar(1)});
            tau = StandardPolynomial({alpha + Scalar(1), Scalar(-1)});
            lambda = Scalar(n);
            break;
        case Family::Hermite:
            sigma = StandardPolynomial({Scalar(1)});
            tau = StandardPolynomial({Scalar(0), Scalar(-2)});
            lambda = Scalar(2 * n);
            break;
        case Family::Jacobi:
            sigma = StandardPolynomial({Scalar(1), Scalar(0), Scalar(-1)});
            tau = StandardPolynomial({beta - alpha, -(alpha + beta + Scalar(2))});
            lambda = Scalar(n) * (Scalar(n + 1) + alpha + beta);
            break;
        case Family::Bessel:
            sigma = StandardPolynomial({Scalar(0), Scalar(0), Scalar(1)});
            tau = StandardPolynomial({Scalar(2), Scalar(2)});
            lambda = Scalar(-n * (n + 1));
            break;
    }
    StandardPolynomial d1 = derivative(p);
    return sigma * derivative(d1) + tau * d1 + lambda * p;
}

} // namespace mompoly
