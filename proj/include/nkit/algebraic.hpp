#ifndef NKIT_ALGEBRAIC_HPP
#define NKIT_ALGEBRAIC_HPP

/* Exact algebraic numbers: a content-normalized irreducible minimal
 * polynomial plus a certified complex rectangle isolating exactly one of
 * its roots.  Arithmetic goes through resultants; every constructor
 * re-certifies the isolating region.  Values are immutable. */

#include <functional>
#include <vector>

#include "nkit/factor.hpp"
#include "nkit/int_polynomial.hpp"
#include "nkit/roots.hpp"

namespace nkit {

class AlgebraicNumber {
  public:
    // zero
    AlgebraicNumber();

    static AlgebraicNumber from_rational(const mpq_class& q);
    static AlgebraicNumber from_int(long v) { return from_rational(mpq_class(v)); }
    // internal: trusted pair (minpoly irreducible + region certified)
    static AlgebraicNumber from_parts(IntPolynomial minpoly, CInt region);

    const IntPolynomial& minpoly() const { return minpoly_; }
    const CInt& region() const { return region_; }
    long degree() const { return minpoly_.degree(); }

    bool is_rational() const { return degree() == 1; }
    bool is_zero() const;
    mpq_class as_rational() const; // requires degree 1

    // certified enclosure with half-width <= max_radius
    CInt enclosure(double max_radius) const;
    // certified enclosures of all conjugates (roots of minpoly), pairwise
    // disjoint, sorted by (re, im) midpoints, each half-width <= max_radius
    std::vector<CInt> conjugates(double max_radius) const;

    bool same_number(const AlgebraicNumber& o) const;

  private:
    IntPolynomial minpoly_;
    CInt region_;
};

// selector-th root (sorted by certified (re, im) midpoints) of p
AlgebraicNumber root_of(const IntPolynomial& p, size_t selector);
// number of distinct complex roots of p
size_t distinct_root_count(const IntPolynomial& p);

AlgebraicNumber alg_add(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_inv(const AlgebraicNumber& a);
AlgebraicNumber alg_neg(const AlgebraicNumber& a);
AlgebraicNumber alg_conj(const AlgebraicNumber& a);
AlgebraicNumber alg_scale(const AlgebraicNumber& a, const mpq_class& s);

// positive real d-th root of a positive rational
AlgebraicNumber nth_root(const mpq_class& q, unsigned long d);

/* Build an algebraic number from an irreducible polynomial and a refinable
 * enclosure of the intended root; `enclose(r)` must return a certified
 * enclosure of the target with half-width roughly r. */
AlgebraicNumber match_root(const IntPolynomial& irreducible,
                           const std::function<CInt(double)>& enclose);

/* Pick the irreducible factor of `vanishing` that vanishes at the number
 * enclosed by `enclose`, then match the root. */
AlgebraicNumber algebraic_from_vanishing(const IntPolynomial& vanishing,
                                         const std::function<CInt(double)>& enclose);

} // namespace nkit

#endif
