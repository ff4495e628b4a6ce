#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mompoly/classical.hpp"
#include "mompoly/special_functions.hpp"
#include "support.hpp"

#include <random>

using namespace mompoly;

namespace {

bool same_coeffs(const StandardPolynomial& a, const StandardPolynomial& b) {
    if (a.degree() != b.degree()) return false;
    for (int i = 0; i <= a.degree(); ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

StandardPolynomial coeffs(std::vector<Scalar> c) { return StandardPolynomial(std::move(c)); }

} // namespace

TEST_CASE("terminating hypergeometric series") {
    // 1F1(-1; 1; x) = 1 - x
    HypergeometricSpec f11{{Scalar(-1)}, {Scalar(1)}, ArgTransform::Identity};
    CHECK(same_coeffs(hyp_polynomial(f11), coeffs({Scalar(1), Scalar(-1)})));

    // 2F1(-2, 3; 1; z) = 1 - 6z + 6z^2
    HypergeometricSpec f21{{Scalar(-2), Scalar(3)}, {Scalar(1)}, ArgTransform::Identity};
    CHECK(same_coeffs(hyp_polynomial(f21), coeffs({Scalar(1), Scalar(-6), Scalar(6)})));

    // 2F0(-1, 2; -x/2) = 1 + x
    HypergeometricSpec f20{{Scalar(-1), Scalar(2)}, {}, ArgTransform::MinusXOverTwo};
    CHECK(same_coeffs(apply_transform(hyp_polynomial(f20), f20.transform),
                      coeffs({Scalar(1), Scalar(1)})));

    // series has exactly n+1 terms and the term ratio is the Pochhammer one
    HypergeometricSpec spec{{Scalar(-5), Scalar::exact(7, 2)}, {Scalar::exact(4, 3)},
                            ArgTransform::Identity};
    StandardPolynomial series = hyp_polynomial(spec);
    CHECK(series.degree() == 5);
    for (int k = 0; k <= 5; ++k) {
        Scalar direct = pochhammer(Scalar(-5), k) * pochhammer(Scalar::exact(7, 2), k) /
                        (pochhammer(Scalar::exact(4, 3), k) * pochhammer(Scalar(1), k));
        CHECK(series.coeff(k) == direct);
    }

    // lower-parameter pole inside the summation range
    HypergeometricSpec pole{{Scalar(-4)}, {Scalar(-2)}, ArgTransform::Identity};
    CHECK_THROWS_AS(hyp_polynomial(pole), std::invalid_argument);
    // no terminating upper parameter
    HypergeometricSpec no_term{{Scalar::exact(1, 2)}, {Scalar(1)}, ArgTransform::Identity};
    CHECK_THROWS_AS(hyp_polynomial(no_term), std::invalid_argument);
}

TEST_CASE("hyp_terminating evaluates through the transform") {
    HypergeometricSpec jacobi{{Scalar(-2), Scalar(3)}, {Scalar(1)},
                              ArgTransform::OneMinusXOverTwo};
    // at x = 1 the transformed argument vanishes, so the value is 1
    CHECK(hyp_terminating(jacobi, Scalar(1)).rational() == 1);
    // agreement with the expanded polynomial at a rational point
    StandardPolynomial expanded = apply_transform(hyp_polynomial(jacobi), jacobi.transform);
    Scalar x = Scalar::exact(1, 4);
    CHECK(hyp_terminating(jacobi, x) == evaluate(expanded, x));
}

TEST_CASE("classical laguerre") {
    CHECK(same_coeffs(classical_laguerre(0, Scalar(0)), coeffs({Scalar(1)})));
    CHECK(same_coeffs(classical_laguerre(1, Scalar(0)), coeffs({Scalar(1), Scalar(-1)})));
    CHECK(same_coeffs(classical_laguerre(2, Scalar(0)),
                      coeffs({Scalar(1), Scalar(-2), Scalar::exact(1, 2)})));
    CHECK_THROWS_AS(classical_laguerre(2, Scalar(-1)), std::domain_error);
}

TEST_CASE("classical hermite") {
    CHECK(same_coeffs(classical_hermite(1), coeffs({Scalar(0), Scalar(2)})));
    CHECK(same_coeffs(classical_hermite(2), coeffs({Scalar(-2), Scalar(0), Scalar(4)})));
    CHECK(same_coeffs(classical_hermite(3), coeffs({Scalar(0), Scalar(-12), Scalar(0), Scalar(8)})));
}

TEST_CASE("classical jacobi") {
    CHECK(same_coeffs(classical_jacobi(0, Scalar(0), Scalar(0)), coeffs({Scalar(1)})));
    // Legendre P2 = (3x^2 - 1)/2
    CHECK(same_coeffs(classical_jacobi(2, Scalar(0), Scalar(0)),
                      coeffs({Scalar::exact(-1, 2), Scalar(0), Scalar::exact(3, 2)})));
    // normalized to value 1 at x = 1
    for (int n : {1, 2, 5, 8})
        CHECK(evaluate(classical_jacobi(n, Scalar::exact(1, 2), Scalar::exact(3, 4)),
                       Scalar(1)).rational() == 1);
}

TEST_CASE("classical bessel") {
    CHECK(same_coeffs(classical_bessel(1), coeffs({Scalar(1), Scalar(1)})));
    CHECK(same_coeffs(classical_bessel(2), coeffs({Scalar(1), Scalar(3), Scalar(3)})));
    CHECK(same_coeffs(classical_bessel(3), coeffs({Scalar(1), Scalar(6), Scalar(15), Scalar(15)})));
}

TEST_CASE("classical residuals vanish identically on the oracles") {
    std::mt19937 rng(31);
    for (int n = 0; n <= 12; ++n) {
        Scalar alpha{testsupport::random_parameter(rng)};
        Scalar beta{testsupport::random_parameter(rng)};
        CHECK(classical_residual(Family::Laguerre, n, alpha, Scalar(0),
                                 classical_laguerre(n, alpha)).is_zero());
        CHECK(classical_residual(Family::Hermite, n, Scalar(0), Scalar(0),
                                 classical_hermite(n)).is_zero());
        CHECK(classical_residual(Family::Jacobi, n, alpha, beta,
                                 classical_jacobi(n, alpha, beta)).is_zero());
        CHECK(classical_residual(Family::Bessel, n, Scalar(0), Scalar(0),
                                 classical_bessel(n)).is_zero());
    }
    CHECK(classical_residual(Family::Laguerre, 3, Scalar(0), Scalar(0),
                             StandardPolynomial()).is_zero());
    // a non-solution leaves a nonzero residual
    CHECK(!classical_residual(Family::Hermite, 2, Scalar(0), Scalar(0),
                              coeffs({Scalar(1), Scalar(1)})).is_zero());
}
