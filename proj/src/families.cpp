#include "mompoly/families.hpp"

#include <cmath>
#include <stdexcept>

namespace mompoly {

namespace {

const Scalar kOne(1);
const Scalar kTwo(2);

void require_alpha(const Scalar& alpha, const char* who) {
    if (!(alpha > Scalar(-1))) throw std::domain_error(std::string(who) + ": alpha must exceed -1");
}

void require_beta(const Scalar& beta, const char* who) {
    if (!(beta > Scalar(-1))) throw std::domain_error(std::string(who) + ": beta must exceed -1");
}

double coeff_scale(const std::vector<Scalar>& a, int n) {
    double s = 0.0;
    for (int p = 0; p <= n && p < static_cast<int>(a.size()); ++p)
        s = std::max(s, std::fabs(a[p].as_double()));
    return s;
}

// The recursions are run through index n+2; the eigenvalue choice must have
// annihilated everything past n. Verify that and drop the tail.
void truncate_tail(std::vector<Scalar>& a, int n, const char* who) {
    double tol = 1e-10 * std::max(coeff_scale(a, n), 1e-300);
    for (std::size_t i = n + 1; i < a.size(); ++i) {
        bool vanished = a[i].is_exact() ? a[i].is_zero()
                                        : std::fabs(a[i].as_double()) <= tol;
        if (!vanished)
            throw std::logic_error(std::string(who) + ": recursion did not terminate at degree n");
    }
    a.resize(n + 1);
    if (a[n].is_zero())
        throw std::domain_error(std::string(who) + ": recursion degenerated below degree n");
}

bool all_exact(const std::vector<Scalar>& a) {
    for (const Scalar& v : a)
        if (!v.is_exact()) return false;
    return true;
}

using ClosedForm = Scalar (*)(const MomentSequence&, int, const Scalar&, int);

// In exact arithmetic the closed product displays must reproduce the
// recursion output identically; a mismatch means a transcription bug.
void cross_check_closed(const std::vector<Scalar>& a, const MomentSequence& seq, int n,
                        const Scalar& c, ClosedForm closed, const char* who) {
    if (!all_exact(a)) return;
    for (int p = 0; p <= n; ++p)
        if (a[p] != closed(seq, n, c, p))
            throw std::logic_error(std::string(who) + ": closed form disagrees with recursion");
}

std::vector<Scalar> jacobi_recursion(const MomentSequence& seq, int n, const Scalar& alpha,
                                     const Scalar& beta, const Scalar& a0, const Scalar& a1) {
    Scalar s = alpha + beta + kTwo;
    Scalar d = beta - alpha;
    Scalar lambda = seq.ratio(n) * (seq.ratio(n - 1) + s);
    std::vector<Scalar> a(n + 3, Scalar(0));
    a[0] = a0;
    a[1] = a1;
    a[2] = -d * a1 - lambda * a0;
    a[3] = (d * d + s * seq.moment(1) - lambda) * a1 + lambda * d * a0;
    for (int p = 2; p <= n; ++p)
        a[p + 2] = (seq.ratio(p) * (seq.ratio(p - 1) + s) - lambda) * a[p] - d * a[p + 1];
    return a;
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Laguerre: return "laguerre";
        case Family::Hermite: return "hermite";
        case Family::Jacobi: return "jacobi";
        case Family::Bessel: return "bessel";
    }
    throw std::logic_error("family_name: unreachable");
}

Family family_from_name(const std::string& name) {
    if (name == "laguerre") return Family::Laguerre;
    if (name == "hermite") return Family::Hermite;
    if (name == "jacobi") return Family::Jacobi;
    if (name == "bessel") return Family::Bessel;
    throw std::invalid_argument("unknown family: " + name);
}

Scalar eigenvalue(const FamilySpec& spec, const MomentSequence& seq) {
    switch (spec.family) {
        case Family::Laguerre:
            if (spec.n < 1) throw std::domain_error("eigenvalue: Laguerre requires n >= 1");
            return seq.ratio(spec.n);
        case Family::Hermite:
            if (spec.n < 1) throw std::domain_error("eigenvalue: Hermite requires n >= 1");
            return kTwo * seq.ratio(spec.n);
        case Family::Jacobi:
            if (spec.n < 2) throw std::domain_error("eigenvalue: Jacobi requires n >= 2");
            return seq.ratio(spec.n) * (seq.ratio(spec.n - 1) + spec.alpha + spec.beta + kTwo);
        case Family::Bessel:
            if (spec.n < 2)
                throw std::domain_error("eigenvalue: the Bessel eigenvalue requires n >= 2");
            return seq.ratio(spec.n) * (seq.ratio(spec.n - 1) + kTwo);
    }
    throw std::logic_error("eigenvalue: unreachable");
}

MomentEquation build_equation(const FamilySpec& spec, const MomentSequence& seq) {
    switch (spec.family) {
        case Family::Laguerre: {
            require_alpha(spec.alpha, "build_equation");
            StandardPolynomial sigma({Scalar(0), kOne});
            StandardPolynomial tau({spec.alpha + kOne, Scalar(-1)});
            return {sigma, tau, eigenvalue(spec, seq), seq};
        }
        case Family::Hermite: {
            StandardPolynomial sigma({kOne});
            StandardPolynomial tau({Scalar(0), Scalar(-2)});
            return {sigma, tau, eigenvalue(spec, seq), seq};
        }
        case Family::Jacobi: {
            require_alpha(spec.alpha, "build_equation");
            require_beta(spec.beta, "build_equation");
            StandardPolynomial sigma({kOne, Scalar(0), Scalar(-1)});
            StandardPolynomial tau({spec.beta - spec.alpha, -(spec.alpha + spec.beta + kTwo)});
            return {sigma, tau, eigenvalue(spec, seq), seq};
        }
        case Family::Bessel: {
            if (spec.n == 1) {
                // First-order case: (x+1) d_m y - m(1) y = 0.
                StandardPolynomial tau({kOne, kOne});
                return {StandardPolynomial{}, tau, -seq.moment(1), seq};
            }
            StandardPolynomial sigma({Scalar(0), Scalar(0), kOne});
            StandardPolynomial tau({kTwo, kTwo});
            return {sigma, tau, -eigenvalue(spec, seq), seq};
        }
    }
    throw std::logic_error("build_equation: unreachable");
}

MomentPolynomial build_laguerre(const MomentSequence& seq, int n, const Scalar& alpha,
                                const Scalar& a0) {
    require_alpha(alpha, "build_laguerre");
    if (n < 1) throw std::domain_error("build_laguerre: n must be >= 1");
    if (a0.is_zero()) throw std::invalid_argument("build_laguerre: a0 must be nonzero");
    Scalar lambda = seq.ratio(n);
    std::vector<Scalar> a(n + 3, Scalar(0));
    a[0] = a0;
    a[1] = -(lambda / (alpha + kOne)) * a0;
    for (int p = 1; p <= n + 1; ++p)
        a[p + 1] = a[p] * (seq.ratio(p) - lambda) / (seq.ratio(p) + alpha + kOne);
    truncate_tail(a, n, "build_laguerre");
    if (all_exact(a))
        for (int p = 0; p <= n; ++p)
            if (a[p] != laguerre_closed_coefficient(seq, n, alpha, a0, p))
                throw std::logic_error("build_laguerre: closed form disagrees with recursion");
    return {seq, std::move(a)};
}

MomentPolynomial build_hermite(const MomentSequence& seq, int n, const Scalar& free_constant) {
    if (n < 1) throw std::domain_error("build_hermite: n must be >= 1");
    if (free_constant.is_zero())
        throw std::invalid_argument("build_hermite: free constant must be nonzero");
    Scalar lambda = kTwo * seq.ratio(n);
    std::vector<Scalar> a(n + 3, Scalar(0));
    a[n % 2 == 0 ? 0 : 1] = free_constant;
    a[2] = -lambda * a[0];
    for (int p = 1; p <= n; ++p) a[p + 2] = (kTwo * seq.ratio(p) - lambda) * a[p];
    truncate_tail(a, n, "build_hermite");
    cross_check_closed(a, seq, n, free_constant, &hermite_closed_coefficient, "build_hermite");
    return {seq, std::move(a)};
}

std::pair<Scalar, Scalar> jacobi_termination(const MomentSequence& seq, int n,
                                             const Scalar& alpha, const Scalar& beta) {
    require_alpha(alpha, "jacobi_termination");
    require_beta(beta, "jacobi_termination");
    if (n < 2) throw std::domain_error("jacobi_termination: n must be >= 2");
    Scalar kappa0 = jacobi_recursion(seq, n, alpha, beta, kOne, Scalar(0))[n + 1];
    Scalar kappa1 = jacobi_recursion(seq, n, alpha, beta, Scalar(0), kOne)[n + 1];
    return {kappa0, kappa1};
}

MomentPolynomial build_jacobi(const MomentSequence& seq, int n, const Scalar& alpha,
                              const Scalar& beta, const Scalar& a0, const Scalar& a1) {
    auto [kappa0, kappa1] = jacobi_termination(seq, n, alpha, beta);
    if (a0.is_zero() && a1.is_zero())
        throw std::invalid_argument("build_jacobi: (a0, a1) must not both vanish");
    Scalar residual = kappa0 * a0 + kappa1 * a1;
    bool ok;
    if (residual.is_exact()) {
        ok = residual.is_zero();
    } else {
        double scale = std::fabs((kappa0 * a0).as_double()) +
                       std::fabs((kappa1 * a1).as_double());
        ok = std::fabs(residual.as_double()) <= 1e-9 * std::max(scale, 1e-300);
    }
    if (!ok)
        throw std::invalid_argument(
            "build_jacobi: (a0, a1) is not a terminating combination for this sequence");
    std::vector<Scalar> a = jacobi_recursion(seq, n, alpha, beta, a0, a1);
    truncate_tail(a, n, "build_jacobi");
    return {seq, std::move(a)};
}

MomentPolynomial build_jacobi(const MomentSequence& seq, int n, const Scalar& alpha,
                              const Scalar& beta) {
    auto [kappa0, kappa1] = jacobi_termination(seq, n, alpha, beta);
    Scalar a0, a1;
    if (!kappa1.is_zero()) {
        a0 = kOne;
        a1 = -(kappa0 / kappa1);
    } else if (!kappa0.is_zero()) {
        a0 = Scalar(0);
        a1 = kOne;
    } else {
        // Degenerate: both basis runs already terminate.
        a0 = kOne;
        a1 = Scalar(0);
    }
    std::vector<Scalar> a = jacobi_recursion(seq, n, alpha, beta, a0, a1);
    truncate_tail(a, n, "build_jacobi");
    return {seq, std::move(a)};
}

MomentPolynomial build_bessel(const MomentSequence& seq, int n, const Scalar& a0) {
    if (n < 1) throw std::domain_error("build_bessel: n must be >= 1");
    if (a0.is_zero()) throw std::invalid_argument("build_bessel: a0 must be nonzero");
    if (n == 1) return {seq, {a0, seq.moment(1) * a0}};
    Scalar lambda = seq.ratio(n) * (seq.ratio(n - 1) + kTwo);
    std::vector<Scalar> a(n + 3, Scalar(0));
    a[0] = a0;
    a[1] = (lambda / kTwo) * a0;
    a[2] = a[1] * (lambda - kTwo * seq.moment(1)) / kTwo;
    for (int p = 2; p <= n + 1; ++p)
        a[p + 1] = a[p] * (lambda - seq.ratio(p) * (seq.ratio(p - 1) + kTwo)) / kTwo;
    truncate_tail(a, n, "build_bessel");
    cross_check_closed(a, seq, n, a0, &bessel_closed_coefficient, "build_bessel");
    return {seq, std::move(a)};
}

MomentPolynomial build(const FamilySpec& spec, const MomentSequence& seq) {
    switch (spec.family) {
        case Family::Laguerre:
            if (!spec.a1.is_zero())
                throw std::invalid_argument("build: Laguerre has no a1 free constant");
            return build_laguerre(seq, spec.n, spec.alpha, spec.a0);
        case Family::Bessel:
            if (!spec.a1.is_zero())
                throw std::invalid_argument("build: Bessel has no a1 free constant");
            return build_bessel(seq, spec.n, spec.a0);
        case Family::Hermite: {
            bool even = spec.n % 2 == 0;
            const Scalar& seed = even ? spec.a0 : spec.a1;
            const Scalar& other = even ? spec.a1 : spec.a0;
            if (!other.is_zero())
                throw std::invalid_argument(
                    "build: Hermite free constant does not match the parity of n");
            return build_hermite(seq, spec.n, seed);
        }
        case Family::Jacobi:
            return build_jacobi(seq, spec.n, spec.alpha, spec.beta);
    }
    throw std::logic_error("build: unreachable");
}

Scalar laguerre_closed_coefficient(const MomentSequence& seq, int n, const Scalar& alpha,
                                   const Scalar& a0, int p) {
    if (p < 0 || p > n) return Scalar(0);
    if (p == 0) return a0;
    Scalar lambda = seq.ratio(n);
    if (p == 1) return -(lambda / (alpha + kOne)) * a0;
    Scalar product = -(seq.moment(p) * lambda / (seq.moment(1) * (alpha + kOne))) * a0;
    for (int j = 1; j <= p - 1; ++j)
        product *= (seq.ratio(j) - lambda) / (seq.ratio(j + 1) * (seq.ratio(j) + alpha + kOne));
    return product;
}

Scalar hermite_closed_coefficient(const MomentSequence& seq, int n, const Scalar& free_constant,
                                  int p) {
    if (p < 0 || p > n || p % 2 != n % 2) return Scalar(0);
    Scalar lambda = kTwo * seq.ratio(n);
    if (n % 2 == 0) {
        if (p == 0) return free_constant;
        if (p == 2) return -lambda * free_constant;
        int k = p / 2;
        Scalar product = -(seq.moment(2 * k) * lambda / seq.moment(2)) * free_constant;
        for (int j = 1; j <= k - 1; ++j)
            product *= seq.moment(2 * j) * (kTwo * seq.ratio(2 * j) - lambda) /
                       seq.moment(2 * j + 2);
        return product;
    }
    if (p == 1) return free_constant;
    int k = (p - 1) / 2;
    Scalar product = (seq.moment(2 * k + 1) / seq.moment(1)) * free_constant;
    for (int j = 0; j <= k - 1; ++j)
        product *= seq.moment(2 * j + 1) * (kTwo * seq.ratio(2 * j + 1) - lambda) /
                   seq.moment(2 * j + 3);
    return product;
}

Scalar bessel_closed_coefficient(const MomentSequence& seq, int n, const Scalar& a0, int p) {
    if (p < 0 || p > n) return Scalar(0);
    if (p == 0) return a0;
    if (n == 1) return seq.moment(1) * a0;
    Scalar lambda = seq.ratio(n) * (seq.ratio(n - 1) + kTwo);
    if (p == 1) return (lambda / kTwo) * a0;
    // Standard-basis product display of Prop-4 type, mapped back to the
    // moment basis by the factor m(p).
    Scalar c2 = lambda * (lambda - kTwo * seq.moment(1)) / (Scalar(4) * seq.moment(2));
    if (p == 2) return seq.moment(2) * c2 * a0;
    Scalar product = c2;
    for (int j = 2; j <= p - 1; ++j)
        product *= (lambda - seq.ratio(j) * (seq.ratio(j - 1) + kTwo)) * seq.moment(j) /
                   (kTwo * seq.moment(j + 1));
    return seq.moment(p) * product * a0;
}

} // namespace mompoly
