#ifndef NKIT_THRESHOLDS_HPP
#define NKIT_THRESHOLDS_HPP

/* Explicit Northcott thresholds for the projective, abelian, dynamical and
 * abstract comparisons, with the geometrically-irreducible improvements.
 * The dynamical constant C2 is astronomically large for moderate (n, D);
 * thresholds are carried as certified intervals (MPFR exponents absorb the
 * size) alongside the exact pieces. */

#include <optional>
#include <string>
#include <vector>

#include "nkit/dynamics.hpp"
#include "nkit/rint.hpp"

namespace nkit {

struct ThresholdReport {
    std::string theorem; // main | proj | abvar | dyn
    std::vector<std::pair<std::string, std::string>> inputs;
    CertifiedValue threshold;
    std::optional<CertifiedValue> irreducible_variant;
    std::optional<double> relative_shift;
    std::optional<DynConstants> dyn; // exact C1/C2 data for theorem dyn
    // decimal rendering of log10(threshold) for astronomically large values
    std::string log10_threshold;
};

ThresholdReport threshold_proj(unsigned n, unsigned d, const mpq_class& C,
                               std::optional<double> relative_c = std::nullopt);

ThresholdReport threshold_abvar(unsigned g, unsigned d, const mpq_class& C,
                                const mpq_class& h2_theta_zero, unsigned ambient_n);

ThresholdReport threshold_dyn(unsigned n, unsigned D, unsigned d, const mpq_class& C,
                              const mpq_class& h_f);

ThresholdReport threshold_main(unsigned d, const mpq_class& C, const mpq_class& R);

} // namespace nkit

#endif
