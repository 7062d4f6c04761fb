#ifndef NKIT_DYNAMICS_HPP
#define NKIT_DYNAMICS_HPP

/* Canonical heights for selfmaps of P^n via Call-Silverman telescoping.
 * The height-gap constant R is certified on both sides for n <= 2: the
 * upper part from coefficient L1 norms, the lower part from adjugate
 * columns of the Sylvester (n = 1) or Macaulay (n = 2) matrix, which give
 * explicit form combinations det * x_i^t = sum g_j F_j. */

#include <optional>

#include "nkit/chow.hpp"
#include "nkit/heights.hpp"
#include "nkit/mpoly.hpp"

namespace nkit {

struct ProjectiveSelfMap {
    size_t n = 1;               // map of P^n
    unsigned D = 2;             // algebraic degree >= 2
    std::vector<MPoly> forms;   // n+1 integer forms, jointly coprime coefficients
    bool morphism_certified = false; // false only when constructed unchecked
    mpz_class elimination_resultant; // nonzero witness (n <= 2)
};

ProjectiveSelfMap make_selfmap(std::vector<MPoly> forms, bool allow_unchecked = false);

CertifiedValue map_height(const ProjectiveSelfMap& f);

struct GapBound {
    CertifiedValue R;        // |h(f P) - D h(P)| <= R for all P
    CertifiedValue upper;    // h(f P) - D h(P) <= upper
    CertifiedValue lower;    // D h(P) - h(f P) <= lower
    bool lower_heuristic = false; // empirical fallback flag
};

GapBound height_gap_bound(const ProjectiveSelfMap& f);

struct CanonicalHeightResult {
    CertifiedValue value;
    unsigned iterations_used = 0;
    CertifiedValue gap_bound_R;
    CertifiedValue tail_bound;
    bool exact_zero = false; // preperiodic orbit detected
};

CanonicalHeightResult canonical_height(const ProjectiveSelfMap& f, const ProjectiveTuple& P,
                                       double tolerance);

struct DynConstants {
    mpz_class c1;
    bool c2_exact = false;
    mpz_class c2;   // valid when c2_exact
    RInt log_c2;    // always valid
};

DynConstants dyn_constants(unsigned n, unsigned D);

CertifiedValue call_silverman_gap(const CertifiedValue& R, double alpha);

enum class PreperiodicStatus { Preperiodic, NotPreperiodic, Inconclusive };

struct PreperiodicResult {
    PreperiodicStatus status = PreperiodicStatus::Inconclusive;
    unsigned preperiod = 0; // tail length (Preperiodic only)
    unsigned period = 0;    // cycle length (Preperiodic only)
    double hhat_lower = 0;  // certified positive lower bound (NotPreperiodic)
};

PreperiodicResult preperiodic_test(const ProjectiveSelfMap& f, const ProjectiveTuple& P,
                                   unsigned budget);

// degree-4 map on P^1 induced by duplication on y^2 = x^3 + a x + b
ProjectiveSelfMap lattes_duplication(const mpq_class& a, const mpq_class& b);

// apply the map to a coprime integer tuple, reducing the image to coprime
std::vector<mpz_class> apply_map_int(const ProjectiveSelfMap& f,
                                     const std::vector<mpz_class>& v);

} // namespace nkit

#endif
