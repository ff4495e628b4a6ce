#include "mompoly/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace mompoly {

namespace {
void trim(std::vector<Scalar>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}
} // namespace

StandardPolynomial::StandardPolynomial(std::vector<Scalar> c) : c_(std::move(c)) {
    trim(c_);
}

StandardPolynomial StandardPolynomial::monomial(int p, Scalar c) {
    if (p < 0) throw std::domain_error("StandardPolynomial::monomial: negative power");
    std::vector<Scalar> v(p + 1, Scalar(0));
    v[p] = std::move(c);
    return StandardPolynomial(std::move(v));
}

Scalar StandardPolynomial::coeff(int p) const {
    if (p < 0 || p >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[p];
}

StandardPolynomial operator+(const StandardPolynomial& a, const StandardPolynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return StandardPolynomial(std::move(c));
}

StandardPolynomial operator-(const StandardPolynomial& a, const StandardPolynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return StandardPolynomial(std::move(c));
}

StandardPolynomial operator*(const StandardPolynomial& a, const StandardPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return StandardPolynomial(std::move(c));
}

StandardPolynomial operator*(const Scalar& s, const StandardPolynomial& p) {
    std::vector<Scalar> c = p.c_;
    for (Scalar& v : c) v *= s;
    return StandardPolynomial(std::move(c));
}

Scalar evaluate(const StandardPolynomial& p, const Scalar& x) {
    Scalar acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
    return acc;
}

double evaluate(const StandardPolynomial& p, double x) {
    double acc = 0.0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i).as_double();
    return acc;
}

double evaluate_fractional(const StandardPolynomial& p, const Rational& mu, double x) {
    if (mu <= 0) throw std::domain_error("evaluate_fractional: mu must be positive");
    if (x < 0.0) throw std::domain_error("evaluate_fractional: x must be nonnegative");
    double t = std::pow(x, mu.convert_to<double>());
    double acc = 0.0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + p.coeff(i).as_double();
    return acc;
}

StandardPolynomial derivative(const StandardPolynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<Scalar> c(p.degree(), Scalar(0));
    for (int i = 1; i <= p.degree(); ++i) c[i - 1] = Scalar(i) * p.coeff(i);
    return StandardPolynomial(std::move(c));
}

StandardPolynomial recenter(const StandardPolynomial& p, const Scalar& c) {
    if (p.is_zero()) return {};
    // Taylor shift by repeated synthetic division.
    std::vector<Scalar> b = p.coeffs();
    int n = p.degree();
    for (int j = 0; j <= n; ++j)
        for (int i = n - 1; i >= j; --i) b[i] += c * b[i + 1];
    return StandardPolynomial(std::move(b));
}

StandardPolynomial compose_scaled(const StandardPolynomial& p, const Scalar& s) {
    std::vector<Scalar> c = p.coeffs();
    Scalar power = s.is_exact() ? Scalar(Rational(1)) : Scalar(1.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] *= power;
        power *= s;
    }
    return StandardPolynomial(std::move(c));
}

double max_abs_coeff(const StandardPolynomial& p) {
    double m = 0.0;
    for (const Scalar& v : p.coeffs()) m = std::max(m, std::fabs(v.as_double()));
    return m;
}

MomentPolynomial::MomentPolynomial(MomentSequence seq, std::vector<Scalar> a)
    : seq_(std::move(seq)), a_(std::move(a)) {
    trim(a_);
    if (!a_.empty()) seq_.moment(degree()); // range check against finite tables
}

Scalar MomentPolynomial::coeff(int p) const {
    if (p < 0 || p >= static_cast<int>(a_.size())) return Scalar(0);
    return a_[p];
}

MomentPolynomial moment_derivative(const MomentPolynomial& y) {
    if (y.degree() < 1) return MomentPolynomial::zero(y.sequence());
    std::vector<Scalar> a(y.coeffs().begin() + 1, y.coeffs().end());
    return {y.sequence(), std::move(a)};
}

StandardPolynomial to_standard(const MomentPolynomial& y) {
    std::vector<Scalar> c(y.coeffs().size(), Scalar(0));
    for (int p = 0; p <= y.degree(); ++p) c[p] = y.coeff(p) / y.sequence().moment(p);
    return StandardPolynomial(std::move(c));
}

MomentPolynomial to_moment(const StandardPolynomial& p, const MomentSequence& seq) {
    std::vector<Scalar> a(p.coeffs().size(), Scalar(0));
    for (int i = 0; i <= p.degree(); ++i) a[i] = p.coeff(i) * seq.moment(i);
    return {seq, std::move(a)};
}

MomentPolynomial add(const MomentPolynomial& a, const MomentPolynomial& b) {
    if (a.sequence() != b.sequence())
        throw std::invalid_argument("add: moment sequences differ");
    std::vector<Scalar> c(std::max(a.coeffs().size(), b.coeffs().size()), Scalar(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return {a.sequence(), std::move(c)};
}

MomentPolynomial scale(const Scalar& s, const MomentPolynomial& y) {
    std::vector<Scalar> a = y.coeffs();
    for (Scalar& v : a) v *= s;
    return {y.sequence(), std::move(a)};
}

MomentEquation::MomentEquation(StandardPolynomial sigma, StandardPolynomial tau, Scalar lambda,
                               MomentSequence seq)
    : sigma_(std::move(sigma)), tau_(std::move(tau)), lambda_(std::move(lambda)),
      seq_(std::move(seq)) {
    if (sigma_.degree() > 2) throw std::invalid_argument("MomentEquation: deg(sigma) > 2");
    if (tau_.degree() > 1) throw std::invalid_argument("MomentEquation: deg(tau) > 1");
}

MomentPolynomial apply_equation(const MomentEquation& eq, const MomentPolynomial& y) {
    if (eq.sequence() != y.sequence())
        throw std::invalid_argument("apply_equation: sequence of equation and polynomial differ");
    MomentPolynomial d1 = moment_derivative(y);
    MomentPolynomial d2 = moment_derivative(d1);
    // Multiplication by sigma and tau happens in the standard basis; the
    // moment basis is not closed under products.
    StandardPolynomial r = eq.sigma() * to_standard(d2) + eq.tau() * to_standard(d1) +
                           eq.lambda() * to_standard(y);
    return to_moment(r, y.sequence());
}

} // namespace mompoly
