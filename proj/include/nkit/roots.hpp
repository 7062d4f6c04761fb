#ifndef NKIT_ROOTS_HPP
#define NKIT_ROOTS_HPP

/* Certified complex root isolation.  For a squarefree integer polynomial f
 * of degree n this produces n pairwise-disjoint rectangles, each certified
 * to contain exactly one root of f (disk bound n*|f(z)/f'(z)| at an
 * approximate root, evaluated in interval arithmetic, plus a pigeonhole
 * disjointness argument).  Midpoints come from Aberth-Ehrlich iteration
 * with Newton-polygon initial radii. */

#include <vector>

#include "nkit/int_polynomial.hpp"

namespace nkit {

// Boxes sorted lexicographically by (real midpoint, imaginary midpoint) at
// the certification precision.  max_radius is an absolute half-width bound.
std::vector<CInt> isolate_roots(const IntPolynomial& f_squarefree,
                                double max_radius);

// Shrink one certified box (must contain exactly one simple root of f).
CInt refine_root_box(const IntPolynomial& f, const CInt& box, double max_radius);

// true if the interval evaluation of f on the box excludes zero
bool box_excludes_root(const IntPolynomial& f, const CInt& box);

} // namespace nkit

#endif
