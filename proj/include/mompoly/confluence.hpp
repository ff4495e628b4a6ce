#ifndef MOMPOLY_CONFLUENCE_HPP
#define MOMPOLY_CONFLUENCE_HPP

#include "mompoly/calculus.hpp"
#include "mompoly/families.hpp"
#include "mompoly/polynomial.hpp"
#include "mompoly/roots.hpp"

#include <string>
#include <vector>

namespace mompoly {

struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    int count = 201;

    std::vector<double> points() const;
};

// Grid intervals matching the figure configurations; the fractional case is
// clipped to x >= 0 since the polynomials live in powers x^(mu*nu).
GridSpec default_grid(Family family, MomentSequence::Kind kind);

struct SweepPoint {
    double x = 0.0;
    double y_generalized = 0.0;
    double y_classical = 0.0;
};

struct SweepRow {
    Rational param;                 // mu or q
    double sup_distance = 0.0;      // max |generalized - classical| on the grid
    std::vector<SweepPoint> points; // one per grid point
};

struct SweepResult {
    Family family = Family::Laguerre;
    int n = 0;
    MomentSequence::Kind kind = MomentSequence::Kind::GammaPower;
    std::string normalization;
    GridSpec grid;
    std::vector<SweepRow> rows; // sorted by parameter
};

// The scale factor that pins a generalized polynomial to its classical
// counterpart for display: constant term 1 for Laguerre and Bessel, value
// at 0 for even Hermite, slope coefficient for odd Hermite, and for Jacobi
// the first standard coefficient the classical polynomial has nonzero.
Scalar figure_scale(Family family, int n, const StandardPolynomial& generalized,
                    const StandardPolynomial& classical);

// Builds the generalized polynomial for every parameter value (mu for
// GammaPower, q for QFactorial), scales it per figure_scale, and records
// its distance to the classical polynomial on the grid.
SweepResult sweep(const FamilySpec& spec, MomentSequence::Kind kind,
                  std::vector<Rational> params, const GridSpec& grid);

// The explicit coefficient-product form of the root-distance bound for the
// q-Laguerre family at alpha = 0: both the generalized and classical monic
// coefficients are written as closed products and fed through the theorem
// formula. Independent of the recursion route in root_bound, and must agree
// with it.
double q_laguerre_bound(int n, const Rational& q);

} // namespace mompoly

#endif
