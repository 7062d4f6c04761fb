#include "nkit/mpoly.hpp"

#include <sstream>

#include "nkit/errors.hpp"

namespace nkit {

MPoly MPoly::constant(size_t nvars, const mpq_class& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_[std::vector<unsigned>(nvars, 0)] = c;
    return p;
}

MPoly MPoly::variable(size_t nvars, size_t i) {
    MPoly p(nvars);
    std::vector<unsigned> e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
}

void MPoly::add_term(const std::vector<unsigned>& exp, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_[exp] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(nvars_);
    std::vector<unsigned> e(nvars_);
    for (auto& [ea, ca] : terms_) {
        for (auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < nvars_; i++) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::mul_scalar(const mpq_class& s) const {
    if (s == 0) return MPoly(nvars_);
    MPoly r(nvars_);
    for (auto& [e, c] : terms_) r.terms_[e] = c * s;
    return r;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly r = constant(nvars_, 1);
    MPoly b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

long MPoly::total_degree() const {
    long d = -1;
    for (auto& [e, c] : terms_) {
        long t = 0;
        for (unsigned v : e) t += v;
        if (t > d) d = t;
    }
    return d;
}

bool MPoly::homogeneous_in_block(size_t lo, size_t hi, unsigned* degree_out) const {
    bool first = true;
    unsigned deg = 0;
    for (auto& [e, c] : terms_) {
        unsigned t = 0;
        for (size_t i = lo; i < hi; i++) t += e[i];
        if (first) {
            deg = t;
            first = false;
        } else if (t != deg) {
            return false;
        }
    }
    if (degree_out) *degree_out = deg;
    return true;
}

mpq_class MPoly::content_signed() const {
    if (terms_.empty()) return 0;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (terms_.begin()->second < 0) content = -content;
    return content;
}

MPoly MPoly::primitive_integer() const {
    if (terms_.empty()) return *this;
    mpq_class c = content_signed();
    MPoly r(nvars_);
    for (auto& [e, v] : terms_) {
        mpq_class q = v / c;
        q.canonicalize();
        r.terms_[e] = q;
    }
    return r;
}

bool MPoly::has_integer_coeffs() const {
    for (auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

mpz_class MPoly::max_abs_coeff() const {
    mpz_class m = 0;
    for (auto& [e, c] : terms_) {
        if (c.get_den() != 1) throw DomainError("max_abs_coeff: not integral");
        mpz_class a = ::abs(c.get_num());
        if (a > m) m = a;
    }
    return m;
}

CInt MPoly::eval(const std::vector<CInt>& point) const {
    if (point.size() != nvars_) throw DomainError("MPoly eval: arity mismatch");
    mpfr_prec_t prec = nvars_ ? point[0].re.precision() : default_precision();
    CInt acc{RInt::exact(0, prec), RInt::exact(0, prec)};
    for (auto& [e, c] : terms_) {
        CInt t{RInt::exact(c, prec), RInt::exact(0, prec)};
        for (size_t i = 0; i < nvars_; i++)
            for (unsigned k = 0; k < e[i]; k++) t = t * point[i];
        acc = acc + t;
    }
    return acc;
}

std::complex<double> MPoly::eval_d(const std::vector<std::complex<double>>& point) const {
    std::complex<double> acc = 0;
    for (auto& [e, c] : terms_) {
        std::complex<double> t = c.get_d();
        for (size_t i = 0; i < nvars_; i++)
            for (unsigned k = 0; k < e[i]; k++) t *= point[i];
        acc += t;
    }
    return acc;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (images.size() != nvars_) throw DomainError("substitute: arity mismatch");
    size_t target = images.empty() ? 0 : images[0].nvars();
    MPoly acc(target);
    for (auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(target, c);
        for (size_t i = 0; i < nvars_; i++)
            if (e[i] > 0) t = t * images[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpq_class a = ::abs(c);
        bool unit = (a == 1);
        bool any_var = false;
        for (unsigned v : e) any_var |= v > 0;
        if (!unit || !any_var) os << a.get_str();
        bool emitted = !unit || !any_var;
        for (size_t i = 0; i < nvars_; i++) {
            if (e[i] == 0) continue;
            if (emitted) os << "*";
            if (i < names.size()) os << names[i];
            else os << "v" << i;
            if (e[i] > 1) os << "^" << e[i];
            emitted = true;
        }
        first = false;
    }
    return os.str();
}

MPoly pencil_determinant(const std::vector<std::vector<std::vector<mpq_class>>>& mats) {
    // mats[i][r][c]: coefficient of u_i in entry (r, c)
    size_t nv = mats.size();
    if (nv == 0) throw DomainError("pencil_determinant: no variables");
    size_t m = mats[0].size();
    if (m > 16) throw ResourceError("pencil_determinant: dimension cap 16 exceeded");
    // entry (r,c) as linear MPoly
    auto entry = [&](size_t r, size_t c) {
        MPoly p(nv);
        std::vector<unsigned> e(nv, 0);
        for (size_t i = 0; i < nv; i++) {
            if (mats[i][r][c] == 0) continue;
            e[i] = 1;
            p.add_term(e, mats[i][r][c]);
            e[i] = 0;
        }
        return p;
    };
    // column-by-column expansion over used-row subsets
    std::vector<MPoly> cur(1u << m, MPoly(nv));
    std::vector<char> sign_of; // parity handled via popcount position
    cur[0] = MPoly::constant(nv, 1);
    std::vector<MPoly> next;
    for (size_t col = 0; col < m; col++) {
        next.assign(1u << m, MPoly(nv));
        for (size_t S = 0; S < (1u << m); S++) {
            if (cur[S].is_zero()) continue;
            if ((size_t)__builtin_popcount((unsigned)S) != col) continue;
            size_t used_below = 0;
            for (size_t r = 0; r < m; r++) {
                if (S & (1u << r)) {
                    used_below++;
                    continue;
                }
                MPoly e = entry(r, col);
                if (e.is_zero()) continue;
                MPoly contrib = cur[S] * e;
                // sign: parity of r's index among the unused rows
                if ((r - used_below) % 2 == 1) contrib = contrib.mul_scalar(-1);
                size_t S2 = S | (1u << r);
                next[S2] = next[S2] + contrib;
            }
        }
        cur = std::move(next);
    }
    return cur[(1u << m) - 1];
}

} // namespace nkit
