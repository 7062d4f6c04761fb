#ifndef NKIT_RINT_HPP
#define NKIT_RINT_HPP

/* Certified real and complex interval arithmetic on top of MPFR.
 *
 * RInt is a closed interval [lo, hi] whose endpoints are MPFR floats at a
 * fixed working precision; every operation rounds lo down and hi up, so the
 * exact result of an expression is always contained in the computed
 * interval.  CInt is a rectangle (re, im).  CertifiedValue is the
 * midpoint/radius view used in public reports.
 */

#include <mpfr.h>
#include <gmpxx.h>
#include <string>
#include <utility>

#include "nkit/errors.hpp"

namespace nkit {

// Default working precision in bits; overridable via the
// NKIT_PRECISION_BITS environment variable and the CLI flag.
mpfr_prec_t default_precision();
void set_default_precision(mpfr_prec_t bits);

class RInt {
  public:
    RInt() : RInt(default_precision()) {}
    explicit RInt(mpfr_prec_t prec);
    RInt(const RInt& o);
    RInt(RInt&& o) noexcept;
    RInt& operator=(const RInt& o);
    RInt& operator=(RInt&& o) noexcept;
    ~RInt();

    static RInt exact(long v, mpfr_prec_t prec = 0);
    static RInt exact(const mpz_class& v, mpfr_prec_t prec = 0);
    static RInt exact(const mpq_class& v, mpfr_prec_t prec = 0);
    static RInt from_double(double v, mpfr_prec_t prec = 0);
    static RInt from_endpoints(const mpq_class& lo, const mpq_class& hi,
                               mpfr_prec_t prec = 0);
    static RInt pi(mpfr_prec_t prec = 0);
    static RInt log2(mpfr_prec_t prec = 0);
    // point interval holding the exact mpfr value v
    static RInt point_fr(const mpfr_t v, mpfr_prec_t prec = 0);
    // interval [-|r|, |r|] from an mpfr radius bound
    static RInt symmetric_fr(const mpfr_t r, mpfr_prec_t prec = 0);

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const { return 0.5 * (lo_d() + hi_d()); }

    bool is_point() const { return mpfr_equal_p(lo_, hi_); }
    bool contains_zero() const;
    bool contains(const mpq_class& v) const;
    bool contains(const RInt& other) const; // superset test
    bool strictly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool strictly_negative() const { return mpfr_sgn(hi_) < 0; }
    // true when every point of *this is <= / < every point of o
    bool le(const RInt& o) const { return mpfr_lessequal_p(hi_, o.lo_) != 0; }
    bool lt(const RInt& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }
    bool disjoint(const RInt& o) const { return lt(o) || o.lt(*this); }

    RInt operator+(const RInt& o) const;
    RInt operator-(const RInt& o) const;
    RInt operator-() const;
    RInt operator*(const RInt& o) const;
    RInt operator/(const RInt& o) const; // requires o not containing 0
    RInt& operator+=(const RInt& o) { *this = *this + o; return *this; }
    RInt& operator-=(const RInt& o) { *this = *this - o; return *this; }
    RInt& operator*=(const RInt& o) { *this = *this * o; return *this; }

    RInt add_exact_small(long v) const;
    RInt mul_si(long v) const;
    RInt div_ui(unsigned long v) const;
    RInt mul_2exp(long e) const; // exact scaling by 2^e

    RInt abs() const;
    RInt sqrt() const;   // requires hi >= 0; clamps lo at 0
    RInt log() const;    // requires lo > 0
    RInt exp() const;
    RInt pow_ui(unsigned long k) const;
    RInt root_ui(unsigned long k) const; // k-th root, requires lo >= 0
    RInt atan() const;
    RInt cos() const;
    RInt sin() const;

    static RInt max(const RInt& a, const RInt& b);
    static RInt min(const RInt& a, const RInt& b);
    static RInt hull(const RInt& a, const RInt& b);

    // same interval carried at a (usually higher) working precision
    RInt to_prec(mpfr_prec_t prec) const;

    // Width hi - lo, rounded up, as an upper-bound double (inf if huge).
    double width_d() const;

    std::string to_string(size_t digits = 20) const;

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
    void init(mpfr_prec_t prec);
};

/* Rectangle enclosure of a complex number. */
class CInt {
  public:
    RInt re, im;

    CInt() = default;
    CInt(RInt r, RInt i) : re(std::move(r)), im(std::move(i)) {}
    static CInt exact(const mpq_class& r, const mpq_class& i,
                      mpfr_prec_t prec = 0);

    CInt operator+(const CInt& o) const { return {re + o.re, im + o.im}; }
    CInt operator-(const CInt& o) const { return {re - o.re, im - o.im}; }
    CInt operator*(const CInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CInt conj() const { return {re, -im}; }
    CInt operator/(const CInt& o) const {
        RInt d = o.abs2();
        CInt num = *this * o.conj();
        return {num.re / d, num.im / d};
    }

    RInt abs2() const { return re * re + im * im; }
    RInt abs() const { return abs2().sqrt(); }

    bool contains_zero() const {
        return re.contains_zero() && im.contains_zero();
    }
    bool disjoint(const CInt& o) const {
        return re.disjoint(o.re) || im.disjoint(o.im);
    }
    double width_d() const {
        double a = re.width_d(), b = im.width_d();
        return a > b ? a : b;
    }
};

/* midpoint +- radius view; the exact quantity lies in [mid-rad, mid+rad]. */
class CertifiedValue {
  public:
    CertifiedValue() : CertifiedValue(RInt::exact(0)) {}
    explicit CertifiedValue(const RInt& enclosure);

    const RInt& interval() const { return iv_; }
    double mid() const { return iv_.mid_d(); }
    double rad() const;
    std::string mid_string(size_t digits = 25) const;
    std::string rad_string() const;

    // non_rigorous marks empirically-derived radii (QMC, Richardson).
    bool non_rigorous = false;

  private:
    RInt iv_;
};

} // namespace nkit

#endif
