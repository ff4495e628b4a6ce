#include "mompoly/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace mompoly {

namespace {

// Lanczos coefficients for N=13 G=6.024680040776729583740234375, the
// standard double-precision set (max theoretical error ~1.2e-17). The
// denominators are the Stirling numbers of the rising factorial
// (z+1)...(z+11).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr double kLanczosNum[13] = {
    23531376880.410759688572007674451636754734,
    42919803642.649098768957899047001988850926,
    35711959237.355668049440185451547166705960,
    17921034426.037209699919755754458931112671,
    6039542586.3520280050642916443072979210699,
    1439720407.3117216736632230727949123939715,
    248874557.86205415651146038641322942321632,
    31426415.585400194380614231628318205362874,
    2876370.6289353724412254090516208496135991,
    186056.26539522349504029498971604569928220,
    8071.6720023658162106380029022722506138218,
    210.82427775157934587250973392071336271166,
    2.5066282746310002701649081771338373386264,
};

constexpr double kLanczosDen[13] = {
    0, 39916800, 120543840, 150917976, 105258076, 45995730,
    13339535, 2637558, 357423, 32670, 1925, 66, 1,
};

double lanczos_sum(double z) {
    double num = 0.0;
    double den = 0.0;
    if (z <= 1.0) {
        for (int i = 12; i >= 0; --i) {
            num = num * z + kLanczosNum[i];
            den = den * z + kLanczosDen[i];
        }
    } else {
        // Evaluate in 1/z to keep the recurrence stable for large arguments.
        double rz = 1.0 / z;
        for (int i = 0; i <= 12; ++i) {
            num = num * rz + kLanczosNum[i];
            den = den * rz + kLanczosDen[i];
        }
    }
    return num / den;
}

bool is_small_integer(double x, int max, int* n) {
    double r = std::round(x);
    if (r == x && r >= 1.0 && r <= max) {
        *n = static_cast<int>(r);
        return true;
    }
    return false;
}

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
    int n = 0;
    if (is_small_integer(x, 21, &n)) {
        double f = 1.0;
        for (int k = 2; k < n; ++k) f *= k;
        return f;
    }
    double zgh = x + kLanczosG - 0.5;
    return lanczos_sum(x) * std::pow(zgh, x - 0.5) * std::exp(-zgh);
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
    double zgh = x + kLanczosG - 0.5;
    return std::log(lanczos_sum(x)) + (x - 0.5) * std::log(zgh) - zgh;
}

double beta_fn(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta_fn: arguments must be positive");
    if (a + b > 100.0) return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
    return gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b);
}

Scalar q_number(const Scalar& q, int j) {
    if (q == Scalar(1)) throw std::domain_error("q_number: q = 1 (use the factorial sequence)");
    if (j < 0) throw std::domain_error("q_number: negative index");
    Scalar sum(0);
    Scalar power = q.is_exact() ? Scalar(Rational(1)) : Scalar(1.0);
    for (int i = 0; i < j; ++i) {
        sum += power;
        power *= q;
    }
    return sum;
}

Scalar pochhammer(const Scalar& x, int k) {
    if (k < 0) throw std::domain_error("pochhammer: negative index");
    Scalar product = x.is_exact() ? Scalar(Rational(1)) : Scalar(1.0);
    for (int i = 0; i < k; ++i) product *= x + Scalar(i);
    return product;
}

} // namespace mompoly
