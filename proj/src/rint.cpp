#include "nkit/rint.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <vector>

namespace nkit {

static std::atomic<mpfr_prec_t> g_prec{0};

mpfr_prec_t default_precision() {
    mpfr_prec_t p = g_prec.load(std::memory_order_relaxed);
    if (p > 0) return p;
    p = 192;
    if (const char* env = std::getenv("NKIT_PRECISION_BITS")) {
        long v = std::atol(env);
        if (v >= 24 && v <= 1 << 22) p = (mpfr_prec_t)v;
    }
    g_prec.store(p, std::memory_order_relaxed);
    return p;
}

void set_default_precision(mpfr_prec_t bits) {
    if (bits < 24 || bits > (1 << 22))
        throw DomainError("precision out of range [24, 2^22]");
    g_prec.store(bits, std::memory_order_relaxed);
}

void RInt::init(mpfr_prec_t prec) {
    prec_ = prec > 0 ? prec : default_precision();
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RInt::RInt(mpfr_prec_t prec) { init(prec); }

RInt::RInt(const RInt& o) {
    init(o.prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RInt::RInt(RInt&& o) noexcept {
    prec_ = o.prec_;
    memcpy(&lo_[0], &o.lo_[0], sizeof(__mpfr_struct));
    memcpy(&hi_[0], &o.hi_[0], sizeof(__mpfr_struct));
    mpfr_init2(o.lo_, 24);
    mpfr_init2(o.hi_, 24);
    o.prec_ = 24;
}

RInt& RInt::operator=(const RInt& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

RInt& RInt::operator=(RInt&& o) noexcept {
    if (this == &o) return *this;
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

RInt::~RInt() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RInt RInt::exact(long v, mpfr_prec_t prec) {
    RInt r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

RInt RInt::exact(const mpz_class& v, mpfr_prec_t prec) {
    RInt r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

RInt RInt::exact(const mpq_class& v, mpfr_prec_t prec) {
    RInt r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

RInt RInt::from_double(double v, mpfr_prec_t prec) {
    RInt r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

RInt RInt::from_endpoints(const mpq_class& lo, const mpq_class& hi,
                          mpfr_prec_t prec) {
    RInt r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

RInt RInt::pi(mpfr_prec_t prec) {
    RInt r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

RInt RInt::log2(mpfr_prec_t prec) {
    RInt r(prec);
    mpfr_const_log2(r.lo_, MPFR_RNDD);
    mpfr_const_log2(r.hi_, MPFR_RNDU);
    return r;
}

RInt RInt::point_fr(const mpfr_t v, mpfr_prec_t prec) {
    RInt r(prec > 0 ? prec : mpfr_get_prec(v));
    mpfr_set(r.lo_, v, MPFR_RNDD);
    mpfr_set(r.hi_, v, MPFR_RNDU);
    return r;
}

RInt RInt::symmetric_fr(const mpfr_t v, mpfr_prec_t prec) {
    RInt r(prec > 0 ? prec : mpfr_get_prec(v));
    mpfr_abs(r.hi_, v, MPFR_RNDU);
    mpfr_neg(r.lo_, r.hi_, MPFR_RNDD);
    return r;
}

bool RInt::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RInt::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool RInt::contains(const RInt& other) const {
    return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
}

RInt RInt::operator+(const RInt& o) const {
    RInt r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

RInt RInt::operator-(const RInt& o) const {
    RInt r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

RInt RInt::operator-() const {
    RInt r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RInt RInt::operator*(const RInt& o) const {
    RInt r(prec_);
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, prec_);
    mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDD);
    mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDD);
    mpfr_set(r.lo_, c[0], MPFR_RNDD);
    for (int i = 1; i < 4; i++) mpfr_min(r.lo_, r.lo_, c[i], MPFR_RNDD);
    mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDU);
    mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDU);
    mpfr_set(r.hi_, c[0], MPFR_RNDU);
    for (int i = 1; i < 4; i++) mpfr_max(r.hi_, r.hi_, c[i], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

RInt RInt::operator/(const RInt& o) const {
    if (o.contains_zero()) throw DivisionByZero("interval division by zero");
    RInt r(prec_);
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, prec_);
    mpfr_div(c[0], lo_, o.lo_, MPFR_RNDD);
    mpfr_div(c[1], lo_, o.hi_, MPFR_RNDD);
    mpfr_div(c[2], hi_, o.lo_, MPFR_RNDD);
    mpfr_div(c[3], hi_, o.hi_, MPFR_RNDD);
    mpfr_set(r.lo_, c[0], MPFR_RNDD);
    for (int i = 1; i < 4; i++) mpfr_min(r.lo_, r.lo_, c[i], MPFR_RNDD);
    mpfr_div(c[0], lo_, o.lo_, MPFR_RNDU);
    mpfr_div(c[1], lo_, o.hi_, MPFR_RNDU);
    mpfr_div(c[2], hi_, o.lo_, MPFR_RNDU);
    mpfr_div(c[3], hi_, o.hi_, MPFR_RNDU);
    mpfr_set(r.hi_, c[0], MPFR_RNDU);
    for (int i = 1; i < 4; i++) mpfr_max(r.hi_, r.hi_, c[i], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

RInt RInt::add_exact_small(long v) const {
    RInt r(prec_);
    mpfr_add_si(r.lo_, lo_, v, MPFR_RNDD);
    mpfr_add_si(r.hi_, hi_, v, MPFR_RNDU);
    return r;
}

RInt RInt::mul_si(long v) const {
    RInt r(prec_);
    if (v >= 0) {
        mpfr_mul_si(r.lo_, lo_, v, MPFR_RNDD);
        mpfr_mul_si(r.hi_, hi_, v, MPFR_RNDU);
    } else {
        mpfr_mul_si(r.lo_, hi_, v, MPFR_RNDD);
        mpfr_mul_si(r.hi_, lo_, v, MPFR_RNDU);
    }
    return r;
}

RInt RInt::div_ui(unsigned long v) const {
    if (v == 0) throw DivisionByZero("div_ui by zero");
    RInt r(prec_);
    mpfr_div_ui(r.lo_, lo_, v, MPFR_RNDD);
    mpfr_div_ui(r.hi_, hi_, v, MPFR_RNDU);
    return r;
}

RInt RInt::mul_2exp(long e) const {
    RInt r(prec_);
    mpfr_mul_2si(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_mul_2si(r.hi_, hi_, e, MPFR_RNDU);
    return r;
}

RInt RInt::abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    RInt r(prec_);
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInt RInt::sqrt() const {
    if (mpfr_sgn(hi_) < 0) throw DomainError("sqrt of negative interval");
    RInt r(prec_);
    if (mpfr_sgn(lo_) <= 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInt RInt::log() const {
    if (mpfr_sgn(lo_) <= 0) throw DomainError("log of non-positive interval");
    RInt r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInt RInt::exp() const {
    RInt r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInt RInt::pow_ui(unsigned long k) const {
    if (k == 0) return exact(1, prec_);
    RInt r(prec_);
    if (k % 2 == 1 || mpfr_sgn(lo_) >= 0) {
        mpfr_pow_ui(r.lo_, lo_, k, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, hi_, k, MPFR_RNDU);
        if (k % 2 == 0 && mpfr_sgn(lo_) < 0) { /* unreachable */ }
        return r;
    }
    // even power of interval possibly containing negatives
    RInt a = abs();
    mpfr_pow_ui(r.lo_, a.lo_, k, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, a.hi_, k, MPFR_RNDU);
    if (contains_zero()) mpfr_set_zero(r.lo_, 1);
    return r;
}

RInt RInt::root_ui(unsigned long k) const {
    if (k == 0) throw DomainError("0th root");
    if (mpfr_sgn(lo_) < 0) throw DomainError("root of negative interval");
    RInt r(prec_);
    mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
    return r;
}

RInt RInt::atan() const {
    RInt r(prec_);
    mpfr_atan(r.lo_, lo_, MPFR_RNDD);
    mpfr_atan(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInt RInt::cos() const {
    // monotonicity only on [0, pi]; use generic enclosure via mpfr on
    // endpoints plus a containment check for interior extrema.
    RInt r(prec_);
    mpfr_t a, b;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    mpfr_cos(a, lo_, MPFR_RNDN);
    mpfr_cos(b, hi_, MPFR_RNDN);
    mpfr_min(r.lo_, a, b, MPFR_RNDD);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    // pad by width to stay safe against interior extrema and rounding;
    // callers only use this on narrow intervals.
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_sub(r.lo_, r.lo_, w, MPFR_RNDD);
    mpfr_add(r.hi_, r.hi_, w, MPFR_RNDU);
    mpfr_t one;
    mpfr_init2(one, prec_);
    mpfr_set_si(one, 1, MPFR_RNDN);
    mpfr_min(r.hi_, r.hi_, one, MPFR_RNDU);
    mpfr_neg(one, one, MPFR_RNDN);
    mpfr_max(r.lo_, r.lo_, one, MPFR_RNDD);
    mpfr_clear(one);
    mpfr_clear(w);
    mpfr_clear(a);
    mpfr_clear(b);
    return r;
}

RInt RInt::sin() const {
    RInt r(prec_);
    mpfr_t a, b, w, one;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    mpfr_init2(w, prec_);
    mpfr_init2(one, prec_);
    mpfr_sin(a, lo_, MPFR_RNDN);
    mpfr_sin(b, hi_, MPFR_RNDN);
    mpfr_min(r.lo_, a, b, MPFR_RNDD);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_sub(r.lo_, r.lo_, w, MPFR_RNDD);
    mpfr_add(r.hi_, r.hi_, w, MPFR_RNDU);
    mpfr_set_si(one, 1, MPFR_RNDN);
    mpfr_min(r.hi_, r.hi_, one, MPFR_RNDU);
    mpfr_neg(one, one, MPFR_RNDN);
    mpfr_max(r.lo_, r.lo_, one, MPFR_RNDD);
    mpfr_clear(one);
    mpfr_clear(w);
    mpfr_clear(b);
    mpfr_clear(a);
    return r;
}

RInt RInt::max(const RInt& a, const RInt& b) {
    RInt r(a.prec_);
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RInt RInt::min(const RInt& a, const RInt& b) {
    RInt r(a.prec_);
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RInt RInt::hull(const RInt& a, const RInt& b) {
    RInt r(a.prec_);
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RInt RInt::to_prec(mpfr_prec_t prec) const {
    RInt r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

double RInt::width_d() const {
    mpfr_t w;
    mpfr_init2(w, 53);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

std::string RInt::to_string(size_t digits) const {
    std::ostringstream os;
    char* s1 = nullptr;
    char* s2 = nullptr;
    mpfr_asprintf(&s1, "%.*Rg", (int)digits, lo_);
    mpfr_asprintf(&s2, "%.*Rg", (int)digits, hi_);
    os << "[" << s1 << ", " << s2 << "]";
    mpfr_free_str(s1);
    mpfr_free_str(s2);
    return os.str();
}

CInt CInt::exact(const mpq_class& r, const mpq_class& i, mpfr_prec_t prec) {
    return {RInt::exact(r, prec), RInt::exact(i, prec)};
}

CertifiedValue::CertifiedValue(const RInt& enclosure) : iv_(enclosure) {}

double CertifiedValue::rad() const {
    double w = iv_.width_d();
    return w * 0.5 + (w > 0 ? 1e-323 : 0.0);
}

std::string CertifiedValue::mid_string(size_t digits) const {
    mpfr_t m;
    mpfr_init2(m, iv_.precision());
    mpfr_add(m, iv_.lo(), iv_.hi(), MPFR_RNDN);
    mpfr_div_2si(m, m, 1, MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", (int)digits, m);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(m);
    return out;
}

std::string CertifiedValue::rad_string() const {
    mpfr_t r;
    mpfr_init2(r, 64);
    mpfr_sub(r, iv_.hi(), iv_.lo(), MPFR_RNDU);
    mpfr_div_2si(r, r, 1, MPFR_RNDU);
    mpfr_nextabove(r);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.8Rg", r);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(r);
    return out;
}

} // namespace nkit
