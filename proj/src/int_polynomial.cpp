#include "nkit/int_polynomial.hpp"

#include <numeric>
#include <sstream>

#include "nkit/errors.hpp"

namespace nkit {

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
    IntPolynomial p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, size_t k) {
    IntPolynomial p;
    if (c != 0) {
        p.c_.assign(k + 1, 0);
        p.c_[k] = c;
    }
    return p;
}

const mpz_class& IntPolynomial::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); i++) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); i++) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); i++) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); i++) r[i] -= o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v = -v;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); j++) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::mul_scalar(const mpz_class& s) const {
    if (s == 0) return IntPolynomial();
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v *= s;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::mul_xk(size_t k) const {
    if (is_zero()) return IntPolynomial();
    std::vector<mpz_class> r(c_.size() + k, 0);
    for (size_t i = 0; i < c_.size(); i++) r[i + k] = c_[i];
    return IntPolynomial(std::move(r));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return IntPolynomial();
    mpz_class g = content();
    if (c_.back() < 0) g = -g;
    std::vector<mpz_class> r(c_.size());
    for (size_t i = 0; i < c_.size(); i++)
        mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(r));
}

bool IntPolynomial::is_content_normalized() const {
    return !is_zero() && content() == 1 && c_.back() > 0;
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return IntPolynomial();
    std::vector<mpz_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); i++) r[i - 1] = c_[i] * (long)i;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<mpz_class> r(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::inflate(size_t k) const {
    if (k == 0) throw DomainError("inflate by 0");
    if (is_zero() || k == 1) return *this;
    std::vector<mpz_class> r((c_.size() - 1) * k + 1, 0);
    for (size_t i = 0; i < c_.size(); i++) r[i * k] = c_[i];
    return IntPolynomial(std::move(r));
}

size_t IntPolynomial::support_gcd() const {
    size_t g = 0;
    for (size_t i = 1; i < c_.size(); i++)
        if (c_[i] != 0) g = std::gcd(g, i);
    return g == 0 ? 1 : g;
}

IntPolynomial IntPolynomial::deflate(size_t g) const {
    if (g <= 1) return *this;
    std::vector<mpz_class> r((c_.size() - 1) / g + 1, 0);
    for (size_t i = 0; i < c_.size(); i += g) r[i / g] = c_[i];
    return IntPolynomial(std::move(r));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RInt IntPolynomial::eval(const RInt& x) const {
    RInt acc = RInt::exact(0, x.precision());
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + RInt::exact(c_[i], x.precision());
    return acc;
}

CInt IntPolynomial::eval(const CInt& x) const {
    mpfr_prec_t prec = x.re.precision();
    CInt acc{RInt::exact(0, prec), RInt::exact(0, prec)};
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x;
        acc.re = acc.re + RInt::exact(c_[i], prec);
    }
    return acc;
}

mpz_class IntPolynomial::eval_homogeneous(const mpz_class& a, const mpz_class& b) const {
    if (is_zero()) return 0;
    size_t n = c_.size();
    mpz_class acc = 0, bp = 1;
    std::vector<mpz_class> bpow(n);
    for (size_t i = 0; i < n; i++) {
        bpow[n - 1 - i] = bp;
        bp *= b;
    }
    mpz_class ap = 1;
    for (size_t i = 0; i < n; i++) {
        if (c_[i] != 0) acc += c_[i] * ap * bpow[i];
        ap *= a;
    }
    return acc;
}

bool IntPolynomial::divides(const IntPolynomial& d, IntPolynomial* quotient) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) {
        if (quotient) *quotient = IntPolynomial();
        return true;
    }
    if (degree() < d.degree()) return false;
    std::vector<mpz_class> r(c_);
    size_t dn = d.c_.size();
    std::vector<mpz_class> q(c_.size() - dn + 1, 0);
    const mpz_class& lc = d.c_.back();
    for (size_t i = c_.size(); i-- > dn - 1;) {
        if (r[i] == 0) continue;
        mpz_class qi, rem;
        mpz_tdiv_qr(qi.get_mpz_t(), rem.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
        if (rem != 0) return false;
        size_t shift = i - (dn - 1);
        q[shift] = qi;
        for (size_t j = 0; j < dn; j++) r[shift + j] -= qi * d.c_[j];
    }
    for (const auto& v : r)
        if (v != 0) return false;
    if (quotient) *quotient = IntPolynomial(std::move(q));
    return true;
}

IntPolynomial IntPolynomial::divexact(const IntPolynomial& d) const {
    IntPolynomial q;
    if (!divides(d, &q)) throw DomainError("divexact: not divisible");
    return q;
}

mpz_class IntPolynomial::height_coeff() const {
    mpz_class m = 0;
    for (const auto& v : c_) {
        mpz_class a = ::abs(v);
        if (a > m) m = a;
    }
    return m;
}

mpz_class IntPolynomial::length_coeff() const {
    mpz_class m = 0;
    for (const auto& v : c_) m += ::abs(v);
    return m;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        mpz_class a = ::abs(c_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

/* Pseudo-remainder with the exact scaling lc(d)^(deg a - deg d + 1). */
static IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& d) {
    IntPolynomial r = a;
    const mpz_class& lc = d.leading();
    long e = a.degree() - d.degree() + 1;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        IntPolynomial t = IntPolynomial::monomial(r.leading(), r.degree() - d.degree());
        r = r.mul_scalar(lc) - t * d;
        e--;
    }
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lc.get_mpz_t(), (unsigned long)e);
        r = r.mul_scalar(f);
    }
    return r;
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPolynomial f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPolynomial r = pseudo_rem(f, g);
        if (!r.is_zero()) r = r.primitive_part();
        f = g;
        g = r;
    }
    return f.primitive_part();
}

static void checked_div(IntPolynomial& p, const mpz_class& s) {
    std::vector<mpz_class> c(p.coeffs());
    for (auto& v : c) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
        if (rem != 0) throw DomainError("subresultant: inexact division");
        v = q;
    }
    p = IntPolynomial(std::move(c));
}

/* Subresultant PRS resultant, Cohen Alg. 3.3.7. */
mpz_class resultant(const IntPolynomial& A0, const IntPolynomial& B0) {
    if (A0.is_zero() || B0.is_zero()) return 0;
    if (A0.degree() == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), A0.leading().get_mpz_t(), (unsigned long)B0.degree());
        return r;
    }
    if (B0.degree() == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), B0.leading().get_mpz_t(), (unsigned long)A0.degree());
        return r;
    }
    IntPolynomial A = A0, B = B0;
    mpz_class t = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() % 2) == 1 && (B.degree() % 2) == 1) t = -1;
        std::swap(A, B);
    }
    mpz_class a_cont = A.content(), b_cont = B.content();
    {
        mpz_class pa, pb;
        mpz_pow_ui(pa.get_mpz_t(), a_cont.get_mpz_t(), (unsigned long)B.degree());
        mpz_pow_ui(pb.get_mpz_t(), b_cont.get_mpz_t(), (unsigned long)A.degree());
        t *= pa * pb;
        checked_div(A, a_cont);
        checked_div(B, b_cont);
    }
    mpz_class g = 1, h = 1;
    while (true) {
        long delta = A.degree() - B.degree();
        if ((A.degree() % 2) == 1 && (B.degree() % 2) == 1) t = -t;
        IntPolynomial R = pseudo_rem(A, B);
        A = B;
        if (R.is_zero()) return 0; // positive-degree common factor
        mpz_class hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), (unsigned long)delta);
        mpz_class gh = g * hp;
        checked_div(R, gh);
        B = R;
        g = A.leading();
        if (delta >= 1) {
            mpz_class gn;
            mpz_pow_ui(gn.get_mpz_t(), g.get_mpz_t(), (unsigned long)delta);
            if (delta == 1) {
                h = gn;
            } else {
                mpz_class hd;
                mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), (unsigned long)(delta - 1));
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), gn.get_mpz_t(), hd.get_mpz_t());
                if (rem != 0) throw DomainError("subresultant: inexact h update");
                h = q;
            }
        }
        if (B.degree() == 0) {
            // res = t * lc(B)^deg(A) / h^(deg(A)-1)
            mpz_class num;
            mpz_pow_ui(num.get_mpz_t(), B.leading().get_mpz_t(), (unsigned long)A.degree());
            if (A.degree() >= 1) {
                mpz_class den;
                mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), (unsigned long)(A.degree() - 1));
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (rem != 0) throw DomainError("subresultant: inexact final division");
                num = q;
            }
            return t * num;
        }
    }
}

mpz_class poly_discriminant(const IntPolynomial& f) {
    if (f.degree() < 1) throw DomainError("discriminant needs degree >= 1");
    mpz_class r = resultant(f, f.derivative());
    mpz_class d, rem;
    mpz_tdiv_qr(d.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if (rem != 0) throw DomainError("discriminant: inexact division by lc");
    long n = f.degree();
    if (((n * (n - 1) / 2) % 2) == 1) d = -d;
    return d;
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
    if (f.degree() <= 1) return f.primitive_part();
    IntPolynomial g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) return f.primitive_part();
    return f.primitive_part().divexact(g).primitive_part();
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f0) {
    // Yun's algorithm on the primitive part; parts[i] has multiplicity i+1.
    std::vector<IntPolynomial> out;
    IntPolynomial f = f0.primitive_part();
    if (f.degree() < 1) return out;
    IntPolynomial fp = f.derivative();
    IntPolynomial a = poly_gcd(f, fp);
    if (a.degree() == 0) {
        out.push_back(f);
        return out;
    }
    IntPolynomial b = f.divexact(a).primitive_part();
    IntPolynomial d = fp.divexact(a) - b.derivative();
    while (b.degree() > 0) {
        IntPolynomial g = poly_gcd(b, d);
        out.push_back(g);
        b = b.divexact(g).primitive_part();
        d = d.divexact(g) - b.derivative();
    }
    return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace nkit
