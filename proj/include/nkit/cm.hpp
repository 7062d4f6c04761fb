#ifndef NKIT_CM_HPP
#define NKIT_CM_HPP

/* Hilbert class polynomials from reduced binary quadratic forms, with
 * j evaluated through the q-expansions of E4 and the eta product carrying
 * rigorous tail bounds (|q| <= exp(-pi sqrt 3) over reduced forms).
 * Integer coefficients are accepted only when the certified enclosure
 * contains a unique integer within width 2^-16. */

#include <vector>

#include "nkit/algebraic.hpp"
#include "nkit/rint.hpp"

namespace nkit {

struct ReducedForm {
    long a = 1, b = 0, c = 1;
};

bool is_fundamental_discriminant(long disc);

// the complete set of primitive reduced forms of a fundamental disc < 0
std::vector<ReducedForm> reduced_forms(long disc);

// certified j(tau) for tau = (-b + sqrt(disc))/(2a)
CInt j_value(const ReducedForm& form, long disc, mpfr_prec_t prec);

// H_disc(x), monic integral of degree h(disc)
IntPolynomial class_polynomial(long disc, mpfr_prec_t working_precision = 0);

struct CMProfileRow {
    long disc = 0;
    size_t class_number = 0;
    CertifiedValue height;     // Weil height of the CM j-invariant
    CertifiedValue house_log;  // log max(1, house): log of the house once it exceeds 1
    double ratio_h = 0;        // height / sqrt|disc|
    double ratio_house = 0;    // house_log / sqrt|disc|
};

std::vector<CMProfileRow> cm_profile(const std::vector<long>& discs, unsigned threads = 1);

struct WeightedProbeSummary {
    double gamma = 0;
    std::vector<long> discs;     // sorted by |disc|
    std::vector<double> values;  // h_gamma = class_number^gamma * height
    double max_value = 0;
    double min_value = 0;
    double trend_slope = 0; // least squares vs sqrt|disc|; descriptive only
};

WeightedProbeSummary weighted_exponent_probe(const std::vector<CMProfileRow>& rows,
                                             double gamma);

// fundamental discriminants -d with dmin <= |d| <= dmax, descending (-3 first)
std::vector<long> fundamental_discriminants(long abs_min, long abs_max);

} // namespace nkit

#endif
