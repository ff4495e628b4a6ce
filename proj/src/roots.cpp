#include "mompoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mompoly {

namespace {

using Complex = std::complex<double>;

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Kuhn augmenting-path matching restricted to pairs within the threshold.
bool perfect_matching_under(const std::vector<std::vector<double>>& dist, double threshold) {
    std::size_t n = dist.size();
    std::vector<int> match(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> visited(n, 0);
        std::function<bool(std::size_t)> augment = [&](std::size_t u) {
            for (std::size_t v = 0; v < n; ++v) {
                if (visited[v] || dist[u][v] > threshold) continue;
                visited[v] = 1;
                if (match[v] < 0 || augment(static_cast<std::size_t>(match[v]))) {
                    match[v] = static_cast<int>(u);
                    return true;
                }
            }
            return false;
        };
        if (!augment(i)) return false;
    }
    return true;
}

} // namespace

RootSet find_roots(const StandardPolynomial& p) {
    int n = p.degree();
    if (n <= 0) return {};

    std::vector<Complex> c(n + 1);
    double lead = p.coeff(n).as_double();
    for (int i = 0; i <= n; ++i) c[i] = p.coeff(i).as_double() / lead;

    // Initial guesses on a circle around the root centroid, radius from the
    // Cauchy bound; the fixed angular offset breaks symmetric stalls.
    Complex center = -c[n - 1] / static_cast<double>(n);
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
    radius = 1.0 + radius;
    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i) {
        double angle = 2.0 * M_PI * i / n + 0.376;
        z[i] = center + radius * Complex(std::cos(angle), std::sin(angle));
    }

    std::vector<Complex> dc(n);
    for (int i = 1; i <= n; ++i) dc[i - 1] = static_cast<double>(i) * c[i];

    const int max_iterations = 200;
    const double step_tol = 1e-14;
    bool converged = false;
    int used = 0;
    for (int it = 0; it < max_iterations && !converged; ++it) {
        used = it + 1;
        double worst_step = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex pv = horner(c, z[i]);
            Complex dv = horner(dc, z[i]);
            Complex newton = (dv == Complex(0.0)) ? Complex(step_tol) : pv / dv;
            Complex repulsion = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                if (diff == Complex(0.0)) diff = Complex(step_tol);
                repulsion += 1.0 / diff;
            }
            Complex w = newton / (1.0 - newton * repulsion);
            z[i] -= w;
            worst_step = std::max(worst_step, std::abs(w) / (1.0 + std::abs(z[i])));
        }
        converged = worst_step <= step_tol;
    }
    if (!converged)
        throw std::runtime_error("find_roots: no convergence after " + std::to_string(used) +
                                 " iterations (degree " + std::to_string(n) + ")");

    // Residual check against the unit-scaled polynomial.
    double norm = 0.0;
    for (const Complex& v : c) norm = std::max(norm, std::abs(v));
    for (const Complex& root : z) {
        double residual = std::abs(horner(c, root)) / norm;
        if (residual > 1e-8)
            throw std::runtime_error("find_roots: residual check failed after " +
                                     std::to_string(used) + " iterations");
    }

    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return {std::move(z)};
}

double root_match(const RootSet& f, const RootSet& g) {
    if (f.size() != g.size())
        throw std::invalid_argument("root_match: root sets differ in cardinality");
    std::size_t n = f.size();
    if (n == 0) return 0.0;

    std::vector<std::vector<double>> dist(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dist[i][j] = std::abs(f.roots[i] - g.roots[j]);

    if (n <= 8) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        double best = std::numeric_limits<double>::infinity();
        do {
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, dist[i][perm[i]]);
            best = std::min(best, worst);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    // Bottleneck assignment: binary search the answer over the n^2 pairwise
    // distances, feasibility via bipartite matching.
    std::vector<double> candidates;
    candidates.reserve(n * n);
    for (const auto& row : dist) candidates.insert(candidates.end(), row.begin(), row.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (perfect_matching_under(dist, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

BoundReport root_bound(const StandardPolynomial& f, const StandardPolynomial& g) {
    int n = f.degree();
    if (n != g.degree()) throw std::invalid_argument("root_bound: degrees differ");
    if (n < 1) throw std::invalid_argument("root_bound: degree must be >= 1");

    // The theorem is stated for monic polynomials; a_k multiplies z^(n-k).
    double lead_f = f.coeff(n).as_double();
    double lead_g = g.coeff(n).as_double();
    std::vector<double> a(n + 1), b(n + 1);
    for (int k = 1; k <= n; ++k) {
        a[k] = f.coeff(n - k).as_double() / lead_f;
        b[k] = g.coeff(n - k).as_double() / lead_g;
    }

    BoundReport report;
    report.gamma = 0.0;
    for (int k = 1; k <= n; ++k) {
        report.gamma = std::max(report.gamma, std::pow(std::fabs(a[k]), 1.0 / k));
        report.gamma = std::max(report.gamma, std::pow(std::fabs(b[k]), 1.0 / k));
    }
    report.gamma *= 2.0;

    double sum = 0.0;
    report.coeff_diffs.reserve(n);
    for (int k = 1; k <= n; ++k) {
        double diff = std::fabs(a[k] - b[k]);
        report.coeff_diffs.push_back(diff);
        sum += diff * std::pow(report.gamma, n - k);
    }
    report.bound = std::pow(2.0, 2.0 - 1.0 / n) * std::pow(sum, 1.0 / n);

    report.roots_f = find_roots(f);
    report.roots_g = find_roots(g);
    report.matched = root_match(report.roots_f, report.roots_g);
    if (report.matched > report.bound)
        throw std::logic_error("root_bound: matched distance exceeds the theoretical bound");
    return report;
}

} // namespace mompoly
