#include "mompoly/confluence.hpp"

#include "mompoly/classical.hpp"
#include "mompoly/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mompoly {

std::vector<double> GridSpec::points() const {
    if (count < 2) throw std::invalid_argument("GridSpec: need at least two points");
    if (!(hi > lo)) throw std::invalid_argument("GridSpec: empty interval");
    std::vector<double> xs(count);
    double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) xs[i] = lo + i * step;
    return xs;
}

GridSpec default_grid(Family family, MomentSequence::Kind kind) {
    bool fractional = kind == MomentSequence::Kind::GammaPower;
    switch (family) {
        case Family::Laguerre: return {0.0, 10.0, 201};
        case Family::Hermite: return fractional ? GridSpec{0.0, 3.0, 201}
                                                : GridSpec{-3.0, 3.0, 201};
        case Family::Jacobi: return fractional ? GridSpec{0.0, 1.0, 201}
                                               : GridSpec{-1.0, 1.0, 201};
        case Family::Bessel: return fractional ? GridSpec{0.0, 1.0, 201}
                                               : GridSpec{-2.0, 1.0, 201};
    }
    throw std::logic_error("default_grid: unreachable");
}

namespace {

StandardPolynomial classical_of(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Laguerre: return classical_laguerre(spec.n, spec.alpha);
        case Family::Hermite: return classical_hermite(spec.n);
        case Family::Jacobi: return classical_jacobi(spec.n, spec.alpha, spec.beta);
        case Family::Bessel: return classical_bessel(spec.n);
    }
    throw std::logic_error("classical_of: unreachable");
}

std::string normalization_tag(Family family, int n) {
    switch (family) {
        case Family::Laguerre:
        case Family::Bessel: return "constant-term-1";
        case Family::Hermite: return n % 2 == 0 ? "match-value-at-0" : "match-slope-at-0";
        case Family::Jacobi: return "match-first-nonzero-classical-coefficient";
    }
    return "";
}

MomentPolynomial build_for_figure(const FamilySpec& spec, const MomentSequence& seq) {
    switch (spec.family) {
        case Family::Laguerre: return build_laguerre(seq, spec.n, spec.alpha, Scalar(1));
        case Family::Hermite: return build_hermite(seq, spec.n, Scalar(1));
        case Family::Jacobi: return build_jacobi(seq, spec.n, spec.alpha, spec.beta);
        case Family::Bessel: return build_bessel(seq, spec.n, Scalar(1));
    }
    throw std::logic_error("build_for_figure: unreachable");
}

} // namespace

Scalar figure_scale(Family family, int n, const StandardPolynomial& generalized,
                    const StandardPolynomial& classical) {
    int anchor = 0;
    switch (family) {
        case Family::Laguerre:
        case Family::Bessel:
            anchor = 0; // both conventions use constant term 1
            break;
        case Family::Hermite:
            anchor = n % 2 == 0 ? 0 : 1;
            break;
        case Family::Jacobi:
            // The terminating solution is one-dimensional, so value and
            // slope cannot be pinned independently; anchor on the lowest
            // coefficient the classical polynomial has nonzero (the slope
            // also converges as the sequence approaches factorial).
            anchor = 0;
            while (anchor <= classical.degree() && classical.coeff(anchor).is_zero()) ++anchor;
            break;
    }
    Scalar target = classical.coeff(anchor);
    Scalar current = generalized.coeff(anchor);
    if (current.is_zero())
        throw std::domain_error("figure_scale: generalized polynomial vanishes at the anchor "
                                "coefficient");
    return target / current;
}

SweepResult sweep(const FamilySpec& spec, MomentSequence::Kind kind,
                  std::vector<Rational> params, const GridSpec& grid) {
    bool fractional;
    switch (kind) {
        case MomentSequence::Kind::GammaPower: fractional = true; break;
        case MomentSequence::Kind::QFactorial: fractional = false; break;
        default:
            throw std::invalid_argument("sweep: sequence kind must be GammaPower or QFactorial");
    }
    if (params.empty()) throw std::invalid_argument("sweep: empty parameter list");
    if (fractional && grid.lo < 0.0)
        throw std::invalid_argument("sweep: fractional polynomials need a nonnegative grid");

    std::sort(params.begin(), params.end());

    SweepResult result;
    result.family = spec.family;
    result.n = spec.n;
    result.kind = kind;
    result.normalization = normalization_tag(spec.family, spec.n);
    result.grid = grid;

    StandardPolynomial classical = classical_of(spec);
    std::vector<double> xs = grid.points();
    std::vector<double> classical_values(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) classical_values[i] = evaluate(classical, xs[i]);

    for (const Rational& param : params) {
        MomentSequence seq = fractional ? MomentSequence::gamma_power(param)
                                        : MomentSequence::q_factorial(param);
        StandardPolynomial gen = to_standard(build_for_figure(spec, seq));
        gen = figure_scale(spec.family, spec.n, gen, classical) * gen;

        SweepRow row;
        row.param = param;
        row.points.reserve(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double y = fractional ? evaluate_fractional(gen, param, xs[i])
                                  : evaluate(gen, xs[i]);
            row.sup_distance = std::max(row.sup_distance, std::fabs(y - classical_values[i]));
            row.points.push_back({xs[i], y, classical_values[i]});
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

double q_laguerre_bound(int n, const Rational& q) {
    if (n < 1) throw std::domain_error("q_laguerre_bound: n must be >= 1");
    if (q <= 0 || q == 1) throw std::domain_error("q_laguerre_bound: q must be positive, != 1");

    // q-numbers [0]..[n] and factorials as exact rationals.
    Scalar qs{q};
    std::vector<Scalar> qn(n + 1);
    for (int j = 0; j <= n; ++j) qn[j] = q_number(qs, j);
    std::vector<Rational> fact(n + 1);
    fact[0] = 1;
    for (int j = 1; j <= n; ++j) fact[j] = fact[j - 1] * j;

    // Monic coefficient of z^(n-k) of y_{L,m_q} at alpha = 0 as the closed
    // product prod_{j=n-k}^{n-1} [j+1]_q([j]_q + 1)/([j]_q - [n]_q), and of
    // the classical Laguerre polynomial as (-1)^k n!^2/(k! ((n-k)!)^2).
    std::vector<double> a(n + 1), b(n + 1);
    for (int k = 1; k <= n; ++k) {
        Scalar prod{Rational(1)};
        for (int j = n - k; j <= n - 1; ++j)
            prod *= qn[j + 1] * (qn[j] + Scalar(1)) / (qn[j] - qn[n]);
        a[k] = prod.as_double();
        Rational cl = fact[n] * fact[n] / (fact[k] * fact[n - k] * fact[n - k]);
        if (k % 2 != 0) cl = -cl;
        b[k] = cl.convert_to<double>();
    }

    double gamma = 0.0;
    for (int k = 1; k <= n; ++k) {
        gamma = std::max(gamma, std::pow(std::fabs(a[k]), 1.0 / k));
        gamma = std::max(gamma, std::pow(std::fabs(b[k]), 1.0 / k));
    }
    gamma *= 2.0;

    double sum = 0.0;
    for (int k = 1; k <= n; ++k) sum += std::fabs(a[k] - b[k]) * std::pow(gamma, n - k);
    return std::pow(2.0, 2.0 - 1.0 / n) * std::pow(sum, 1.0 / n);
}

} // namespace mompoly
