#ifndef NKIT_NUMBER_FIELD_HPP
#define NKIT_NUMBER_FIELD_HPP

/* Common number field presentations.  A list of algebraic numbers is
 * rewritten inside one field Q(theta): theta is found by the classical
 * primitive-element search theta' = theta + c*x (small integer c, retried
 * on degree collapse), and each input is recovered as a polynomial in
 * theta via gcd(A(y), M(theta' - c*y)) over the new field. */

#include <vector>

#include "nkit/algebraic.hpp"
#include "nkit/int_polynomial.hpp"
#include "nkit/mpoly.hpp"

namespace nkit {

/* dense polynomials over Q, used both as field elements (mod M) and as
 * gcd workspace */
using QPoly = std::vector<mpq_class>;

void qp_trim(QPoly& a);
QPoly qp_from_int(const IntPolynomial& f);
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_mul_scalar(const QPoly& a, const mpq_class& s);
QPoly qp_rem(const QPoly& a, const QPoly& m);
CInt qp_eval(const QPoly& a, const CInt& x);

struct FieldPresentation {
    IntPolynomial min_poly;   // irreducible minimal polynomial of theta
    AlgebraicNumber theta;    // the distinguished root
    std::vector<QPoly> reps;  // inputs as polynomials in theta (reduced mod M)

    long degree() const { return min_poly.degree(); }
    // certified boxes of all conjugates of theta, sorted
    std::vector<CInt> embeddings(double max_radius) const;
    // sigma_j(x_i) for embedding box e: reps[i] evaluated on e
    CInt embed(size_t i, const CInt& theta_box) const;
};

FieldPresentation present_in_common_field(const std::vector<AlgebraicNumber>& xs);

/* Norm form of the linear form sum_i x_i u_i over the presentation's field:
 * N(u) = prod_sigma sum_i sigma(x_i) u_i, an integer multiple of a primitive
 * integer form.  Returns the primitive form and the rational content. */
struct NormForm {
    MPoly primitive;   // integer coefficients, deterministic sign
    mpq_class content; // N = content * primitive
};
NormForm linear_norm_form(const FieldPresentation& pres);

} // namespace nkit

#endif
