#ifndef NKIT_NORTHCOTT_HPP
#define NKIT_NORTHCOTT_HPP

/* Northcott-number bounds, the prime-power tower construction, and the
 * bounded enumeration streams used by the finiteness experiments. */

#include <map>
#include <vector>

#include "nkit/algebraic.hpp"
#include "nkit/heights.hpp"

namespace nkit {

enum class BoundMode { Simple, Optimal, PerJConservative };

struct NorthcottBoundReport {
    std::map<unsigned, CertifiedValue> per_j; // j = 1..d where applicable
    CertifiedValue aggregate;
    std::string aggregation_rule; // min_over_j | max_over_j | theorem_simple
    std::string direction;        // lower | upper
    std::string metric;           // weil | house
};

// lower bound on N({x : deg <= d over F}) given N(F) = C (Weil metric)
NorthcottBoundReport nc_lower_bound(const mpq_class& C, unsigned d, BoundMode mode);
// house metric variant
NorthcottBoundReport nc_house_lower_bound(const mpq_class& C, unsigned d, BoundMode mode);
// upper bound on N(K) given a degree-d extension with N(F) = C
NorthcottBoundReport nc_upper_bound(const mpq_class& C, unsigned d, BoundMode mode);

double relative_floor(double t, double c);

struct TowerStep {
    mpz_class p;
    unsigned long d = 1;
    bool proven_prime = true; // deterministic below 2^64, else 64-round MR
};

struct TowerSpec {
    mpq_class t;
    std::vector<TowerStep> steps; // eps_i = 2^-i for step i (1-based)
};

TowerSpec build_tower(const mpq_class& t, unsigned count);
// recheck |p_i^(1/d_i) - exp(2t)| <= 2^-i for every step
bool verify_tower(const TowerSpec& spec);

/* Height cutoffs: either log(q) for an exact rational q (boundary cases
 * decidable exactly) or a plain binary double. */
struct HeightCutoff {
    bool is_log_rational = false;
    mpq_class q;  // cutoff = log(q), q >= 1
    double value = 0;

    static HeightCutoff log_rational(const mpq_class& q);
    static HeightCutoff plain(double v);
    RInt as_interval(mpfr_prec_t prec = 0) const;
    double approx() const;
};

// exact decision of M(f) <= bound for the Mahler measure of an integer
// polynomial against a rational bound (ties resolved algebraically)
bool mahler_at_most(const IntPolynomial& f, const mpq_class& bound);

/* All algebraic numbers of degree <= d and Weil height <= B, each exactly
 * once; complete by the minimal-polynomial coefficient bound.  Desk-scale
 * caps d <= 6, B <= 5. */
std::vector<AlgebraicNumber> enumerate_bounded(unsigned d, const HeightCutoff& B);

/* Sound (not complete) sample of the tower field at truncation k: rational
 * multiples r * p_i^(a/d_i), i <= k, with certified height <= B.
 * Representation depth is 1 (a single radical times a rational). */
std::vector<AlgebraicNumber> tower_field_elements(const TowerSpec& spec, unsigned k,
                                                  unsigned degree_cap,
                                                  const HeightCutoff& B);

bool is_prime_checked(const mpz_class& n, bool* proven);

} // namespace nkit

#endif
