#ifndef MOMPOLY_TESTS_SUPPORT_HPP
#define MOMPOLY_TESTS_SUPPORT_HPP

#include "mompoly/moment_sequence.hpp"
#include "mompoly/polynomial.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace testsupport {

inline bool rel_close(double a, double b, double tol) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) <= tol * scale;
}

// Rational in (-1, 3] with a small denominator, the admissible alpha/beta
// range of the Jacobi and Laguerre families.
inline mompoly::Rational random_parameter(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-11, 36); // numerator/12 in (-1, 3]
    int v = num(rng);
    return mompoly::Rational(v, 12);
}

inline mompoly::MomentSequence random_custom_sequence(std::mt19937& rng, int length) {
    std::uniform_int_distribution<int> num(1, 40);
    std::uniform_int_distribution<int> den(1, 8);
    std::vector<mompoly::Scalar> table;
    table.emplace_back(1);
    for (int i = 1; i < length; ++i)
        table.emplace_back(mompoly::Rational(num(rng), den(rng)));
    return mompoly::MomentSequence::custom(std::move(table));
}

inline std::vector<mompoly::Scalar> random_exact_coeffs(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<mompoly::Scalar> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(mompoly::Rational(num(rng), den(rng)));
    return c;
}

inline double max_abs_coeff_of(const mompoly::MomentPolynomial& y) {
    return mompoly::max_abs_coeff(mompoly::to_standard(y));
}

} // namespace testsupport

#endif
