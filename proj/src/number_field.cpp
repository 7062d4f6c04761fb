#include "nkit/number_field.hpp"

#include <algorithm>

#include "nkit/errors.hpp"

namespace nkit {

void qp_trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qp_from_int(const IntPolynomial& f) {
    QPoly r(f.size());
    for (size_t i = 0; i < f.size(); i++) r[i] = mpq_class(f[i]);
    return r;
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
    qp_trim(r);
    return r;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    qp_trim(r);
    return r;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    }
    qp_trim(r);
    return r;
}

QPoly qp_mul_scalar(const QPoly& a, const mpq_class& s) {
    if (s == 0) return {};
    QPoly r(a);
    for (auto& v : r) v *= s;
    return r;
}

QPoly qp_rem(const QPoly& a0, const QPoly& m) {
    if (m.empty()) throw DivisionByZero("qp_rem by zero");
    QPoly a = a0;
    qp_trim(a);
    while (a.size() >= m.size()) {
        mpq_class c = a.back() / m.back();
        size_t shift = a.size() - m.size();
        for (size_t j = 0; j < m.size(); j++) a[shift + j] -= c * m[j];
        a.pop_back();
        qp_trim(a);
    }
    return a;
}

CInt qp_eval(const QPoly& a, const CInt& x) {
    mpfr_prec_t prec = x.re.precision();
    CInt acc{RInt::exact(0, prec), RInt::exact(0, prec)};
    for (size_t i = a.size(); i-- > 0;) {
        acc = acc * x;
        acc.re = acc.re + RInt::exact(a[i], prec);
    }
    return acc;
}

namespace {

/* field arithmetic in K = Q[t]/(M) */
struct FieldCtx {
    QPoly M;
    QPoly reduce(const QPoly& a) const { return qp_rem(a, M); }
    QPoly mul(const QPoly& a, const QPoly& b) const { return reduce(qp_mul(a, b)); }

    QPoly inv(const QPoly& a0) const {
        // extended Euclid in Q[t]
        QPoly r0 = M, r1 = reduce(a0);
        if (r1.empty()) throw DivisionByZero("field inverse of zero");
        QPoly t0 = {}, t1 = {mpq_class(1)};
        while (!r1.empty()) {
            // q = r0 / r1
            QPoly q;
            QPoly rr = r0;
            qp_trim(rr);
            if (rr.size() >= r1.size()) q.assign(rr.size() - r1.size() + 1, mpq_class(0));
            while (rr.size() >= r1.size() && !rr.empty()) {
                mpq_class c = rr.back() / r1.back();
                size_t shift = rr.size() - r1.size();
                q[shift] = c;
                for (size_t j = 0; j < r1.size(); j++) rr[shift + j] -= c * r1[j];
                rr.pop_back();
                qp_trim(rr);
            }
            qp_trim(q);
            QPoly t2 = qp_sub(t0, qp_mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(rr);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 = gcd, must be a nonzero constant
        if (r0.size() != 1) throw DomainError("field inverse: non-invertible element");
        return reduce(qp_mul_scalar(t0, 1 / r0[0]));
    }
};

/* polynomials over K: coefficient vectors of QPoly (low first) */
using KPoly = std::vector<QPoly>;

void kp_trim(const FieldCtx& K, KPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

/* gcd over K[y] of a (integer coefficients) and b; monic gcd */
KPoly kp_gcd(const FieldCtx& K, KPoly a, KPoly b) {
    kp_trim(K, a);
    kp_trim(K, b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        // make b monic
        QPoly lead_inv = K.inv(b.back());
        for (auto& c : b) c = K.mul(c, lead_inv);
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            QPoly c = a.back();
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); j++)
                a[shift + j] = K.reduce(qp_sub(a[shift + j], qp_mul(c, b[j])));
            a.pop_back();
            kp_trim(K, a);
        }
        std::swap(a, b);
    }
    kp_trim(K, a);
    if (!a.empty()) {
        QPoly lead_inv = K.inv(a.back());
        for (auto& c : a) c = K.mul(c, lead_inv);
    }
    return a;
}

/* M(theta' - c*y) as a polynomial in y over K (theta' = class of t) */
KPoly shifted_minpoly(const FieldCtx& K, const IntPolynomial& M_old, long c) {
    // Horner in (t - c*y): each multiplication by (t - c*y) over K[y]
    KPoly acc;
    acc.push_back(QPoly{mpq_class(M_old.leading())});
    QPoly tpoly = {mpq_class(0), mpq_class(1)}; // t
    for (long i = M_old.degree() - 1; i >= 0; i--) {
        KPoly next(acc.size() + 1);
        for (size_t j = 0; j < acc.size(); j++) {
            // * t  (contributes at same y-degree)
            next[j] = qp_add(next[j].empty() ? QPoly{} : next[j], K.mul(acc[j], tpoly));
            // * (-c y)
            next[j + 1] = qp_add(next[j + 1].empty() ? QPoly{} : next[j + 1],
                                 qp_mul_scalar(acc[j], mpq_class(-c)));
        }
        next[0] = qp_add(next[0], QPoly{mpq_class(M_old[(size_t)i])});
        acc = std::move(next);
        for (auto& q : acc) q = K.reduce(q);
        kp_trim(K, acc);
    }
    return acc;
}

} // namespace

std::vector<CInt> FieldPresentation::embeddings(double max_radius) const {
    if (min_poly.degree() == 1) {
        mpq_class v(-min_poly[0], min_poly[1]);
        v.canonicalize();
        return {CInt{RInt::exact(v), RInt::exact(0)}};
    }
    return isolate_roots(min_poly, max_radius);
}

CInt FieldPresentation::embed(size_t i, const CInt& theta_box) const {
    return qp_eval(reps[i], theta_box);
}

FieldPresentation present_in_common_field(const std::vector<AlgebraicNumber>& xs) {
    FieldPresentation out;
    out.min_poly = IntPolynomial{0, 1}; // theta = 0, field Q
    out.theta = AlgebraicNumber();
    for (size_t xi = 0; xi < xs.size(); xi++) {
        const AlgebraicNumber& x = xs[xi];
        if (x.is_rational()) {
            mpq_class v = x.as_rational();
            out.reps.push_back(v == 0 ? QPoly{} : QPoly{v});
            continue;
        }
        // exact duplicate of an earlier coordinate: reuse its representation
        {
            bool reused = false;
            for (size_t j = 0; j < xi && !reused; j++) {
                if (xs[j].degree() == x.degree() && xs[j].same_number(x)) {
                    out.reps.push_back(out.reps[j]);
                    reused = true;
                }
            }
            if (reused) continue;
        }
        if (out.min_poly.degree() == 1) {
            // first non-rational coordinate becomes theta
            out.min_poly = x.minpoly();
            out.theta = x;
            out.reps.push_back(QPoly{mpq_class(0), mpq_class(1)});
            continue;
        }
        // adjoin via theta' = theta + c*x
        bool done = false;
        for (long ctry = 1; ctry <= 24 && !done; ctry++) {
            long c = (ctry % 2 == 1) ? (ctry + 1) / 2 : -(ctry / 2);
            AlgebraicNumber cx = alg_scale(x, mpq_class(c));
            AlgebraicNumber cand = alg_add(out.theta, cx);
            if (cand.degree() % out.min_poly.degree() != 0 ||
                cand.degree() % x.degree() != 0)
                continue; // degree collapsed: theta' cannot be primitive
            IntPolynomial M_new = cand.minpoly();
            AlgebraicNumber theta_new = cand;
            FieldCtx K{qp_from_int(M_new)};
            // normalize M to monic over Q
            {
                mpq_class lc = K.M.back();
                for (auto& v : K.M) v /= lc;
            }
            // g(y) = gcd(A(y), M_old(theta' - c y)) over K
            KPoly Ay;
            for (size_t i = 0; i < x.minpoly().size(); i++)
                Ay.push_back(x.minpoly()[i] == 0 ? QPoly{}
                                                 : QPoly{mpq_class(x.minpoly()[i])});
            KPoly My = shifted_minpoly(K, out.min_poly, c);
            KPoly g;
            try {
                g = kp_gcd(K, Ay, My);
            } catch (const DomainError&) {
                continue; // zero divisor: M_new not irreducible over this route
            }
            if (g.size() != 2) continue; // need a linear gcd: y - x_rep
            // x = -g[0] (g monic)
            QPoly x_rep = qp_mul_scalar(g[0], mpq_class(-1));
            // theta_old = theta' - c*x
            QPoly theta_old_rep =
                qp_sub(QPoly{mpq_class(0), mpq_class(1)}, qp_mul_scalar(x_rep, mpq_class(c)));
            // re-express earlier reps: r(theta_old) -> r(theta_old_rep) mod M_new
            std::vector<QPoly> new_reps;
            new_reps.reserve(out.reps.size() + 1);
            for (const auto& r : out.reps) {
                QPoly acc;
                for (size_t i = r.size(); i-- > 0;) {
                    acc = K.mul(acc, theta_old_rep);
                    if (r[i] != 0) acc = qp_add(acc, QPoly{r[i]});
                }
                new_reps.push_back(acc);
            }
            new_reps.push_back(K.reduce(x_rep));
            // exact verification: minpoly(x) composed with x_rep vanishes mod M
            {
                QPoly acc;
                const IntPolynomial& A = x.minpoly();
                for (size_t i = A.size(); i-- > 0;) {
                    acc = K.mul(acc, new_reps.back());
                    if (A[i] != 0) acc = qp_add(acc, QPoly{mpq_class(A[i])});
                }
                if (!acc.empty())
                    continue; // wrong root pairing; retry with another c
            }
            // numeric verification that the rep matches THIS root of x
            {
                double r = 1.0 / (1 << 18);
                CInt tb = theta_new.enclosure(r);
                CInt xe = x.enclosure(r);
                CInt via = qp_eval(new_reps.back(), tb);
                if (via.disjoint(xe)) continue; // matched a conjugate; retry
            }
            out.min_poly = M_new;
            out.theta = theta_new;
            out.reps = std::move(new_reps);
            done = true;
        }
        if (!done)
            throw ResourceError("present_in_common_field: no primitive element found");
    }
    return out;
}

NormForm linear_norm_form(const FieldPresentation& pres) {
    size_t nv = pres.reps.size();
    if (nv == 0) throw DomainError("linear_norm_form: empty tuple");
    size_t m = (size_t)pres.degree();
    // multiplication matrices C_i of reps[i] in basis 1, t, ..., t^(m-1)
    FieldCtx K{qp_from_int(pres.min_poly)};
    {
        mpq_class lc = K.M.back();
        for (auto& v : K.M) v /= lc;
    }
    std::vector<std::vector<std::vector<mpq_class>>> mats(
        nv, std::vector<std::vector<mpq_class>>(m, std::vector<mpq_class>(m, mpq_class(0))));
    for (size_t i = 0; i < nv; i++) {
        QPoly col = pres.reps[i]; // x_i * t^0
        for (size_t j = 0; j < m; j++) {
            for (size_t r = 0; r < col.size(); r++) mats[i][r][j] = col[r];
            if (j + 1 < m) col = K.mul(col, QPoly{mpq_class(0), mpq_class(1)});
        }
    }
    MPoly norm = pencil_determinant(mats);
    NormForm out;
    if (norm.is_zero()) throw DomainError("linear_norm_form: zero norm");
    out.content = norm.content_signed();
    out.primitive = norm.primitive_integer();
    return out;
}

} // namespace nkit
