#ifndef NKIT_HEIGHTS_HPP
#define NKIT_HEIGHTS_HPP

/* Absolute height functions.  The Weil height of an algebraic number is
 * computed as (1/deg) log M(minpoly) from certified conjugate enclosures;
 * finite places never appear explicitly.  Heights of projective tuples
 * split into an archimedean part over the embeddings of a common field
 * presentation and a finite part read off the content of the norm form of
 * the coordinate linear form (Gauss's lemma). */

#include <vector>

#include "nkit/algebraic.hpp"
#include "nkit/mpoly.hpp"
#include "nkit/number_field.hpp"
#include "nkit/rint.hpp"

namespace nkit {

enum class HeightKind { Weil, House, L2, Weighted };

class ProjectiveTuple {
  public:
    explicit ProjectiveTuple(std::vector<AlgebraicNumber> coords);
    static ProjectiveTuple from_rationals(const std::vector<mpq_class>& coords);
    static ProjectiveTuple from_ints(const std::vector<long>& coords);

    size_t ambient_dim() const { return coords_.size() - 1; } // n
    size_t size() const { return coords_.size(); }
    const std::vector<AlgebraicNumber>& coords() const { return coords_; }
    const AlgebraicNumber& operator[](size_t i) const { return coords_[i]; }

    bool all_rational() const;
    std::vector<mpq_class> rationals() const;
    // exact projective equality via vanishing of all 2x2 minors
    bool projectively_equal(const ProjectiveTuple& o) const;

  private:
    std::vector<AlgebraicNumber> coords_;
};

// integer tuple divided by its gcd, sign fixed by first nonzero > 0
std::vector<mpz_class> normalize_int_tuple(std::vector<mpz_class> v);
std::vector<mpz_class> clear_denominators(const std::vector<mpq_class>& v);

CertifiedValue weil_height(const AlgebraicNumber& a);
CertifiedValue house(const AlgebraicNumber& a);
CertifiedValue weighted_height(const AlgebraicNumber& a, double gamma);

CertifiedValue projective_height(const ProjectiveTuple& P);
CertifiedValue l2_height(const ProjectiveTuple& P);

CertifiedValue poly_height(const IntPolynomial& f, HeightKind kind);
CertifiedValue poly_height(const std::vector<AlgebraicNumber>& coeffs, HeightKind kind);
CertifiedValue poly_height(const MPoly& f, HeightKind kind);
// sum of partial degrees (the d in the product-height inequality)
long sum_partial_degrees(const MPoly& f);

// Mahler measure M(f) (not its log)
CertifiedValue mahler_measure(const IntPolynomial& f);
// log M(f)
CertifiedValue log_mahler_measure(const IntPolynomial& f);
// two-variable log Mahler measure by roots-of-unity trapezoid quadrature
// with Richardson refinement; radius is empirical (non_rigorous flag set)
CertifiedValue mahler_measure_2var(const MPoly& f);

// (3*sqrt(3)/(4*pi)) * L(2, chi_3) with an analytic tail bound
CertifiedValue dirichlet_L2_chi3();

} // namespace nkit

#endif
