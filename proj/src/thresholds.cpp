#include "nkit/thresholds.hpp"

#include <sstream>

#include "nkit/chow.hpp"
#include "nkit/errors.hpp"

namespace nkit {

namespace {

std::string q_str(const mpq_class& q) {
    return q.get_str();
}

std::string log10_render(const RInt& v) {
    if (!v.strictly_positive()) return "-inf";
    RInt l10 = v.log() / RInt::exact(10, v.precision()).log();
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << l10.mid_d();
    return os.str();
}

} // namespace

ThresholdReport threshold_proj(unsigned n, unsigned d, const mpq_class& C,
                               std::optional<double> relative_c) {
    if (n < 1 || d < 1) throw DomainError("threshold_proj: n, d >= 1 required");
    if (C <= 0) throw DomainError("threshold_proj: C > 0 required");
    mpfr_prec_t prec = default_precision();
    RInt l2 = RInt::log2(prec);
    // d (C + (7/2) n log 2 + c(n) + log 2)
    RInt base = RInt::exact(C, prec) +
                l2 * RInt::exact(mpq_class(7 * (long)n, 2), prec) +
                RInt::exact(c_n(n), prec) + l2;
    if (relative_c) base = base + RInt::from_double(*relative_c, prec);
    RInt thr = base.mul_si((long)d);
    ThresholdReport rep;
    rep.theorem = "proj";
    rep.inputs = {{"n", std::to_string(n)},
                  {"d", std::to_string(d)},
                  {"C", q_str(C)}};
    if (relative_c) {
        rep.inputs.emplace_back("relative_c", std::to_string(*relative_c));
        rep.relative_shift = *relative_c * (double)d;
    }
    rep.threshold = CertifiedValue(thr);
    rep.irreducible_variant = CertifiedValue(thr - l2.mul_si((long)d));
    rep.log10_threshold = log10_render(thr);
    return rep;
}

ThresholdReport threshold_abvar(unsigned g, unsigned d, const mpq_class& C,
                                const mpq_class& h2_theta_zero, unsigned ambient_n) {
    if (g < 1 || d < 1 || ambient_n < 1)
        throw DomainError("threshold_abvar: g, d, n >= 1 required");
    if (C <= 0) throw DomainError("threshold_abvar: C > 0 required");
    if (h2_theta_zero < 0) throw DomainError("threshold_abvar: h2 >= 0 required");
    mpfr_prec_t prec = default_precision();
    RInt l2 = RInt::log2(prec);
    // (d/16)(C + 4^(g+1) h2 + 3g log 2 + c(n) + log 2)
    mpz_class four_g;
    mpz_ui_pow_ui(four_g.get_mpz_t(), 4, g + 1);
    RInt base = RInt::exact(C, prec) + RInt::exact(mpq_class(four_g) * h2_theta_zero, prec) +
                l2.mul_si(3L * (long)g) + RInt::exact(c_n(ambient_n), prec) + l2;
    RInt thr = base.mul_si((long)d).div_ui(16);
    ThresholdReport rep;
    rep.theorem = "abvar";
    rep.inputs = {{"g", std::to_string(g)},
                  {"d", std::to_string(d)},
                  {"C", q_str(C)},
                  {"h2_theta_zero", q_str(h2_theta_zero)},
                  {"ambient_n", std::to_string(ambient_n)}};
    rep.threshold = CertifiedValue(thr);
    // improvement d log2 / 16
    rep.irreducible_variant = CertifiedValue(thr - l2.mul_si((long)d).div_ui(16));
    rep.log10_threshold = log10_render(thr);
    return rep;
}

ThresholdReport threshold_dyn(unsigned n, unsigned D, unsigned d, const mpq_class& C,
                              const mpq_class& h_f) {
    if (n < 1 || D < 2 || d < 1) throw DomainError("threshold_dyn: need n>=1, D>=2, d>=1");
    if (C <= 0) throw DomainError("threshold_dyn: C > 0 required");
    if (h_f < 0) throw DomainError("threshold_dyn: h_f >= 0 required");
    mpfr_prec_t prec = default_precision();
    DynConstants dc = dyn_constants(n, D);
    RInt c2 = dc.c2_exact ? RInt::exact(dc.c2, prec) : dc.log_c2.exp();
    RInt base = RInt::exact(C, prec) + RInt::exact(mpq_class(dc.c1) * h_f, prec) + c2 +
                RInt::exact(c_n(n), prec);
    RInt thr = base.mul_si((long)d);
    ThresholdReport rep;
    rep.theorem = "dyn";
    rep.inputs = {{"n", std::to_string(n)},
                  {"D", std::to_string(D)},
                  {"d", std::to_string(d)},
                  {"C", q_str(C)},
                  {"h_f", q_str(h_f)}};
    rep.threshold = CertifiedValue(thr);
    rep.dyn = dc;
    // no irreducible variant: the dynamical bound cannot be improved
    rep.log10_threshold = log10_render(thr);
    return rep;
}

ThresholdReport threshold_main(unsigned d, const mpq_class& C, const mpq_class& R) {
    if (d < 1) throw DomainError("threshold_main: d >= 1 required");
    if (C <= 0) throw DomainError("threshold_main: C > 0 required");
    if (R < 0) throw DomainError("threshold_main: R >= 0 required");
    mpfr_prec_t prec = default_precision();
    RInt thr = RInt::exact(mpq_class((C + R) * d), prec);
    ThresholdReport rep;
    rep.theorem = "main";
    rep.inputs = {{"d", std::to_string(d)}, {"C", q_str(C)}, {"R", q_str(R)}};
    rep.threshold = CertifiedValue(thr);
    rep.irreducible_variant = CertifiedValue(thr - RInt::log2(prec).mul_si((long)d));
    rep.log10_threshold = log10_render(thr);
    return rep;
}

} // namespace nkit
