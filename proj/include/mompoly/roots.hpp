#ifndef MOMPOLY_ROOTS_HPP
#define MOMPOLY_ROOTS_HPP

#include "mompoly/polynomial.hpp"

#include <complex>
#include <vector>

namespace mompoly {

// All complex roots of a polynomial, multiplicity-counted (count ==
// degree). Produced by find_roots, which checks |p(root)| against
// 1e-8 * ||p||_inf on the unit-scaled polynomial.
struct RootSet {
    std::vector<std::complex<double>> roots;
    std::size_t size() const { return roots.size(); }
};

// Aberth-Ehrlich simultaneous iteration with deterministic initial
// placement on a circle; at most 200 iterations. Degree 0 (or the zero
// polynomial) yields an empty set; non-convergence throws with iteration
// diagnostics.
RootSet find_roots(const StandardPolynomial& p);

// Bottleneck distance between two equally sized root sets: the minimum over
// pairings of the maximum pairwise modulus distance. Exhaustive over
// permutations for n <= 8, threshold binary search + bipartite matching
// beyond.
double root_match(const RootSet& f, const RootSet& g);

// The coefficient-perturbation root bound: for monic f, g of equal degree
// n, some pairing of roots satisfies
//   max_i |alpha_i - beta_i| <= 2^(2-1/n) (sum_k |a_k - b_k| gamma^(n-k))^(1/n),
//   gamma = 2 max_k max(|a_k|^(1/k), |b_k|^(1/k)),
// with a_k the coefficient of z^(n-k). Inputs are made monic here; the
// matched distance is recomputed from both root sets and asserted against
// the bound.
struct BoundReport {
    double matched = 0.0;
    double bound = 0.0;
    double gamma = 0.0;
    std::vector<double> coeff_diffs; // |a_k - b_k|, k = 1..n
    RootSet roots_f;
    RootSet roots_g;
};

BoundReport root_bound(const StandardPolynomial& f, const StandardPolynomial& g);

} // namespace mompoly

#endif
