#ifndef NKIT_CHOW_HPP
#define NKIT_CHOW_HPP

/* Chow forms of zero-cycles in P^n and of effective plane divisors, and
 * the Philippon heights h_Ph / h~_Ph computed from them.
 *
 * Point orbits: the Chow form is the norm of the coordinate linear form
 * over the point's field of definition (coordinates normalized so the
 * first nonzero one is 1).  Plane curves: two hyperplanes in P^2 meet in
 * the cross-product point, so the Chow form is f(u x v).
 *
 * Archimedean contributions use the closed form
 *   int_{S^{n+1}} log|<u,x>| dsigma = log||x||_2 - c(n)
 * for products of linear forms, and symmetrized low-discrepancy quadrature
 * on S^3 x S^3 for plane curves (empirical radius, flagged non-rigorous). */

#include <optional>
#include <vector>

#include "nkit/heights.hpp"
#include "nkit/mpoly.hpp"
#include "nkit/number_field.hpp"

namespace nkit {

struct MultiHomogeneousForm {
    size_t n = 0;                   // ambient P^n: n+1 dual variables per block
    size_t blocks = 1;              // r+1
    std::vector<unsigned> degrees;  // per-block homogeneous degree
    MPoly form;                     // primitive integer, graded-lex sign rule

    size_t nvars() const { return (n + 1) * blocks; }
};

struct GaloisPointOrbit {
    size_t n = 0;
    std::vector<AlgebraicNumber> ratios; // normalized: first nonzero coord is 1
    FieldPresentation pres;              // ratios in a common field
    size_t orbit_size = 1;               // = degree of the point
    NormForm norm;                       // Chow form (primitive) + content

    static GaloisPointOrbit from_tuple(const ProjectiveTuple& P);
};

struct PlaneCurveComponent {
    MPoly f;        // irreducible homogeneous ternary form, primitive integer
    unsigned delta; // degree
};

// validated irreducible homogeneous ternary form
PlaneCurveComponent make_plane_curve(const MPoly& f);

struct CycleComponent {
    unsigned multiplicity = 1;
    std::optional<GaloisPointOrbit> point;
    std::optional<PlaneCurveComponent> curve;
};

struct ProjectiveCycle {
    size_t n = 0;
    int dim = 0; // 0 for point cycles, 1 for plane divisors
    std::vector<CycleComponent> components;

    static ProjectiveCycle of_points(size_t n, std::vector<std::pair<unsigned, ProjectiveTuple>> pts);
    static ProjectiveCycle of_curves(std::vector<std::pair<unsigned, MPoly>> curves);
};

// D(V) = sum n_i (dim V_i + 1) deg V_i
long big_d(const ProjectiveCycle& V);

// c(n) = sum_{i=1}^n 1/(2i), exact
mpq_class c_n(unsigned n);

MultiHomogeneousForm chow_form_point_orbit(const GaloisPointOrbit& orbit);
MultiHomogeneousForm chow_form_plane_curve(const PlaneCurveComponent& curve);
MultiHomogeneousForm cycle_chow_form(const ProjectiveCycle& V);

struct PhilipponHeightReport {
    CertifiedValue h_ph;
    CertifiedValue h_ph_tilde;
    CertifiedValue finite_place_sum;   // 0 once the form is descended/primitive
    CertifiedValue archimedean_integral;
    long D = 0;
    mpq_class correction_cn;           // c(n); correction = D * c(n)
    std::string method;                // closed_form_linear | qmc
    bool qmc_non_rigorous = false;
    // paper-additive convention (not divided by D); kept for report metadata
    std::string normalization = "additive_times_D";
};

PhilipponHeightReport philippon_height(const ProjectiveCycle& V);
CertifiedValue philippon_tilde_height(const ProjectiveCycle& V);

/* Exact archimedean Chow integral of a line a x0 + b x1 + c x2 in P^2:
 * log ||(a,b,c)||_2 - 1 (used to validate the QMC path on delta = 1). */
RInt line_arch_closed_form(const PlaneCurveComponent& line);

/* Quadrature: mean of log|F| over (S^3)^2 with Halton nodes and
 * `rotations` independently rotated replicas; radius = 3 x half-range. */
CertifiedValue qmc_sphere_pair_log_integral(const MPoly& form6, uint64_t seed,
                                            size_t nodes_per_rotation = 1u << 17,
                                            unsigned rotations = 8);

/* Elimination helpers (also used by the dynamics morphism check). */
mpz_class sylvester_resultant_binary(const IntPolynomial& f0_coeffs_low_first,
                                     const IntPolynomial& f1_coeffs_low_first,
                                     unsigned degree);
// Macaulay resultant of three ternary forms (degrees from the forms);
// exact, using the classical numerator/denominator determinant pair
mpz_class macaulay_resultant_ternary(const MPoly& f0, const MPoly& f1, const MPoly& f2);

} // namespace nkit

#endif
