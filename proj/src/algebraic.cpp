#include "nkit/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "nkit/errors.hpp"

namespace nkit {

namespace {

bool mid_less(const CInt& a, const CInt& b) {
    mpfr_t ma, mb;
    mpfr_init2(ma, std::max(a.re.precision(), b.re.precision()));
    mpfr_init2(mb, mpfr_get_prec(ma));
    mpfr_add(ma, a.re.lo(), a.re.hi(), MPFR_RNDN);
    mpfr_add(mb, b.re.lo(), b.re.hi(), MPFR_RNDN);
    int c = mpfr_cmp(ma, mb);
    if (c == 0) {
        mpfr_add(ma, a.im.lo(), a.im.hi(), MPFR_RNDN);
        mpfr_add(mb, b.im.lo(), b.im.hi(), MPFR_RNDN);
        c = mpfr_cmp(ma, mb);
    }
    mpfr_clear(ma);
    mpfr_clear(mb);
    return c < 0;
}

// rational root as polynomial q*x - p for p/q in lowest terms
IntPolynomial rational_minpoly(const mpq_class& v) {
    mpq_class q = v;
    q.canonicalize();
    std::vector<mpz_class> c{-q.get_num(), q.get_den()};
    return IntPolynomial(std::move(c)).primitive_part();
}

} // namespace

AlgebraicNumber::AlgebraicNumber() {
    minpoly_ = IntPolynomial{0, 1};
    region_ = CInt{RInt::exact(0), RInt::exact(0)};
}

AlgebraicNumber AlgebraicNumber::from_rational(const mpq_class& v) {
    AlgebraicNumber a;
    a.minpoly_ = rational_minpoly(v);
    mpq_class vv = v;
    vv.canonicalize();
    a.region_ = CInt{RInt::exact(vv), RInt::exact(0)};
    return a;
}

AlgebraicNumber AlgebraicNumber::from_parts(IntPolynomial minpoly, CInt region) {
    AlgebraicNumber a;
    a.minpoly_ = std::move(minpoly);
    a.region_ = std::move(region);
    return a;
}

bool AlgebraicNumber::is_zero() const {
    return minpoly_.degree() == 1 && minpoly_[0] == 0;
}

mpq_class AlgebraicNumber::as_rational() const {
    if (degree() != 1) throw DomainError("not a rational number");
    mpq_class v(-minpoly_[0], minpoly_[1]);
    v.canonicalize();
    return v;
}

CInt AlgebraicNumber::enclosure(double max_radius) const {
    if (is_rational()) {
        mpq_class v = as_rational();
        return CInt{RInt::exact(v), RInt::exact(0)};
    }
    if (region_.width_d() * 0.5 <= max_radius) return region_;
    return refine_root_box(minpoly_, region_, max_radius);
}

std::vector<CInt> AlgebraicNumber::conjugates(double max_radius) const {
    if (max_radius <= 0) throw DomainError("conjugates: precision must be > 0");
    if (is_rational()) {
        mpq_class v = as_rational();
        return {CInt{RInt::exact(v), RInt::exact(0)}};
    }
    return isolate_roots(minpoly_, max_radius);
}

bool AlgebraicNumber::same_number(const AlgebraicNumber& o) const {
    if (!(minpoly_ == o.minpoly_)) return false;
    if (is_rational()) return true;
    // identify each region against the canonical isolated root list
    double r = 1.0 / 1024;
    for (int round = 0; round < 24; round++) {
        auto boxes = isolate_roots(minpoly_, r);
        CInt mine = enclosure(r / 4), theirs = o.enclosure(r / 4);
        long i_mine = -1, i_theirs = -1;
        bool amb = false;
        for (size_t j = 0; j < boxes.size(); j++) {
            if (!mine.disjoint(boxes[j])) {
                if (i_mine >= 0) amb = true;
                i_mine = (long)j;
            }
            if (!theirs.disjoint(boxes[j])) {
                if (i_theirs >= 0) amb = true;
                i_theirs = (long)j;
            }
        }
        if (!amb && i_mine >= 0 && i_theirs >= 0) return i_mine == i_theirs;
        r /= 64;
    }
    throw ResourceError("same_number: could not separate roots");
}

size_t distinct_root_count(const IntPolynomial& p) {
    if (p.degree() < 1) return 0;
    return (size_t)squarefree_part(p).degree();
}

AlgebraicNumber root_of(const IntPolynomial& p, size_t selector) {
    if (p.is_zero() || p.degree() < 1)
        throw DomainError("root_of: polynomial must have degree >= 1");
    Factorization fac = factor(p);
    // collect (factor, box) for all distinct roots
    struct Entry {
        const IntPolynomial* g;
        CInt box;
    };
    std::vector<Entry> entries;
    double r = 1.0 / (1 << 20);
    for (auto& [g, mult] : fac.factors) {
        if (g.degree() == 1) {
            mpq_class v(-g[0], g[1]);
            v.canonicalize();
            entries.push_back({&g, CInt{RInt::exact(v), RInt::exact(0)}});
        } else {
            for (auto& b : isolate_roots(g, r)) entries.push_back({&g, b});
        }
    }
    if (selector >= entries.size())
        throw IndexError("root_of: selector out of range");
    // boxes from different factors may overlap: refine until pairwise disjoint
    for (int round = 0; round < 30; round++) {
        bool ok = true;
        for (size_t i = 0; i < entries.size() && ok; i++)
            for (size_t j = i + 1; j < entries.size(); j++)
                if (!entries[i].box.disjoint(entries[j].box)) {
                    ok = false;
                    break;
                }
        if (ok) break;
        r /= 1024;
        for (auto& e : entries)
            if (e.g->degree() > 1) e.box = refine_root_box(*e.g, e.box, r);
        if (round == 29)
            throw ResourceError("root_of: could not separate roots of factors");
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return mid_less(a.box, b.box); });
    return AlgebraicNumber::from_parts(*entries[selector].g, entries[selector].box);
}

AlgebraicNumber match_root(const IntPolynomial& irreducible,
                           const std::function<CInt(double)>& enclose) {
    if (irreducible.degree() == 1) {
        mpq_class v(-irreducible[0], irreducible[1]);
        v.canonicalize();
        return AlgebraicNumber::from_rational(v);
    }
    double r = 1.0 / (1 << 16);
    for (int round = 0; round < 24; round++) {
        auto boxes = isolate_roots(irreducible, r);
        CInt e = enclose(r / 2);
        long hit = -1;
        bool amb = false;
        for (size_t j = 0; j < boxes.size(); j++) {
            if (!e.disjoint(boxes[j])) {
                if (hit >= 0) amb = true;
                hit = (long)j;
            }
        }
        if (hit >= 0 && !amb)
            return AlgebraicNumber::from_parts(irreducible, boxes[(size_t)hit]);
        r /= 256;
    }
    throw ResourceError("match_root: could not identify the root");
}

AlgebraicNumber algebraic_from_vanishing(const IntPolynomial& vanishing,
                                         const std::function<CInt(double)>& enclose) {
    IntPolynomial sf = squarefree_part(vanishing);
    auto factors = factor_squarefree_primitive(sf);
    if (factors.size() == 1) return match_root(factors[0], enclose);
    double r = 1.0 / (1 << 12);
    for (int round = 0; round < 24; round++) {
        CInt e = enclose(r);
        std::vector<const IntPolynomial*> cands;
        for (auto& g : factors) {
            CInt v = g.eval(e);
            if (v.contains_zero()) cands.push_back(&g);
        }
        if (cands.size() == 1) return match_root(*cands[0], enclose);
        if (cands.empty())
            throw DomainError("algebraic_from_vanishing: no factor vanishes");
        r /= 4096;
    }
    throw ResourceError("algebraic_from_vanishing: factors not separated");
}

namespace {

/* Res_y(A(y), G(x, y)) by integer evaluation at x-points + exact Lagrange
 * interpolation.  G_at(x0) must return the univariate polynomial G(x0, y)
 * whose y-degree is constant in x0.  Result degree <= dmax. */
IntPolynomial resultant_interpolated(const IntPolynomial& A,
                                     const std::function<IntPolynomial(const mpz_class&)>& G_at,
                                     long dmax) {
    long npts = dmax + 1;
    std::vector<mpq_class> xs, ys;
    xs.reserve((size_t)npts);
    ys.reserve((size_t)npts);
    for (long k = 0; k < npts; k++) {
        // points 0, 1, -1, 2, -2, ...
        long x0 = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
        mpz_class xz(x0);
        IntPolynomial Gy = G_at(xz);
        mpz_class r = resultant(A, Gy);
        xs.emplace_back(xz);
        ys.emplace_back(r);
    }
    // Newton divided differences
    std::vector<mpq_class> coef = ys;
    for (long j = 1; j < npts; j++)
        for (long i = npts - 1; i >= j; i--)
            coef[(size_t)i] = (coef[(size_t)i] - coef[(size_t)i - 1]) /
                              (xs[(size_t)i] - xs[(size_t)i - j]);
    // expand Newton form
    std::vector<mpq_class> poly{coef[(size_t)npts - 1]};
    for (long i = npts - 2; i >= 0; i--) {
        // poly = poly*(x - xs[i]) + coef[i]
        std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
        for (size_t t = 0; t < poly.size(); t++) {
            next[t + 1] += poly[t];
            next[t] -= poly[t] * xs[(size_t)i];
        }
        next[0] += coef[(size_t)i];
        poly = std::move(next);
    }
    // integral by construction
    std::vector<mpz_class> zc(poly.size());
    for (size_t i = 0; i < poly.size(); i++) {
        mpq_class v = poly[i];
        v.canonicalize();
        if (v.get_den() != 1)
            throw DomainError("resultant interpolation produced a non-integer");
        zc[i] = v.get_num();
    }
    return IntPolynomial(std::move(zc));
}

} // namespace

AlgebraicNumber alg_add(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() && b.is_rational())
        return AlgebraicNumber::from_rational(a.as_rational() + b.as_rational());
    if (a.is_rational() || b.is_rational()) {
        // shift by a rational: substitute x -> x - q, exact
        const AlgebraicNumber& alg = a.is_rational() ? b : a;
        mpq_class q = (a.is_rational() ? a : b).as_rational();
        // minpoly of alg + q: den^deg * A((x*den - num)/den)
        const IntPolynomial& A = alg.minpoly();
        long d = A.degree();
        mpz_class num = q.get_num(), den = q.get_den();
        // B(x) = A(x - q) * den^d, expanded via Horner in (den*x - num)
        std::vector<mpz_class> acc{A[(size_t)d]};
        for (long i = d - 1; i >= 0; i--) {
            // acc = acc*(den*x - num) + A_i * den^(d-i)
            std::vector<mpz_class> next(acc.size() + 1, 0);
            for (size_t t = 0; t < acc.size(); t++) {
                next[t + 1] += acc[t] * den;
                next[t] -= acc[t] * num;
            }
            mpz_class dp;
            mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), (unsigned long)(d - i));
            next[0] += A[(size_t)i] * dp;
            acc = std::move(next);
        }
        IntPolynomial B = IntPolynomial(std::move(acc)).primitive_part();
        auto enclose = [&](double r) {
            CInt e = alg.enclosure(r / 2);
            return CInt{e.re + RInt::exact(q), e.im};
        };
        return match_root(B, enclose);
    }
    const IntPolynomial& A = a.minpoly();
    const IntPolynomial& B = b.minpoly();
    long dmax = A.degree() * B.degree();
    auto G_at = [&](const mpz_class& x0) {
        // B(x0 - y) as polynomial in y
        long n = B.degree();
        std::vector<mpz_class> acc;
        // Horner: result = sum B_i (x0 - y)^i
        acc.assign(1, B[(size_t)n]);
        for (long i = n - 1; i >= 0; i--) {
            std::vector<mpz_class> next(acc.size() + 1, 0);
            for (size_t t = 0; t < acc.size(); t++) {
                next[t] += acc[t] * x0;
                next[t + 1] -= acc[t];
            }
            next[0] += B[(size_t)i];
            acc = std::move(next);
        }
        return IntPolynomial(std::move(acc));
    };
    IntPolynomial R = resultant_interpolated(A, G_at, dmax);
    auto enclose = [&](double r) {
        CInt ea = a.enclosure(r / 2), eb = b.enclosure(r / 2);
        return ea + eb;
    };
    return algebraic_from_vanishing(R, enclose);
}

AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_zero() || b.is_zero()) return AlgebraicNumber();
    if (a.is_rational() && b.is_rational())
        return AlgebraicNumber::from_rational(a.as_rational() * b.as_rational());
    if (a.is_rational() || b.is_rational())
        return alg_scale(a.is_rational() ? b : a, (a.is_rational() ? a : b).as_rational());
    const IntPolynomial& A = a.minpoly();
    const IntPolynomial& B = b.minpoly();
    long n = B.degree();
    long dmax = A.degree() * B.degree();
    auto G_at = [&](const mpz_class& x0) {
        // y^n * B(x0/y) = sum B_i x0^i y^(n-i)
        std::vector<mpz_class> c((size_t)n + 1, 0);
        mpz_class xp = 1;
        for (long i = 0; i <= n; i++) {
            c[(size_t)(n - i)] = B[(size_t)i] * xp;
            xp *= x0;
        }
        return IntPolynomial(std::move(c));
    };
    IntPolynomial R = resultant_interpolated(A, G_at, dmax);
    auto enclose = [&](double r) {
        // scale radius by rough magnitudes so the product enclosure shrinks
        CInt ea = a.enclosure(1.0 / 16), eb = b.enclosure(1.0 / 16);
        double ma = ea.abs().hi_d() + 1, mb = eb.abs().hi_d() + 1;
        double ra = r / (2 * mb), rb = r / (2 * ma);
        ea = a.enclosure(std::min(ra, 0.25));
        eb = b.enclosure(std::min(rb, 0.25));
        return ea * eb;
    };
    return algebraic_from_vanishing(R, enclose);
}

AlgebraicNumber alg_scale(const AlgebraicNumber& a, const mpq_class& s0) {
    mpq_class s = s0;
    s.canonicalize();
    if (s == 0 || a.is_zero()) return AlgebraicNumber();
    if (a.is_rational()) return AlgebraicNumber::from_rational(a.as_rational() * s);
    // minpoly of s*x: A(x/s) cleared: sum A_i num^i den^(d-i) ... with s=num/den
    const IntPolynomial& A = a.minpoly();
    long d = A.degree();
    mpz_class num = s.get_num(), den = s.get_den();
    std::vector<mpz_class> c((size_t)d + 1);
    // coefficient of x^i: A_i * den^i * num^(d-i)
    for (long i = 0; i <= d; i++) {
        mpz_class dp, np;
        mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), (unsigned long)i);
        mpz_pow_ui(np.get_mpz_t(), num.get_mpz_t(), (unsigned long)(d - i));
        c[(size_t)i] = A[(size_t)i] * dp * np;
    }
    IntPolynomial B = IntPolynomial(std::move(c)).primitive_part();
    auto enclose = [&](double r) {
        double sa = std::fabs(s.get_d()) + 1;
        CInt e = a.enclosure(r / sa);
        RInt sr = RInt::exact(s);
        return CInt{e.re * sr, e.im * sr};
    };
    return match_root(B, enclose);
}

AlgebraicNumber alg_neg(const AlgebraicNumber& a) {
    return alg_scale(a, mpq_class(-1));
}

AlgebraicNumber alg_inv(const AlgebraicNumber& a) {
    if (a.is_zero()) throw DivisionByZero("alg_inv of zero");
    if (a.is_rational())
        return AlgebraicNumber::from_rational(mpq_class(1) / a.as_rational());
    IntPolynomial B = a.minpoly().reversed().primitive_part();
    auto enclose = [&](double r) {
        // 1/z on a box not containing zero
        CInt e = a.enclosure(1.0 / 16);
        double m = 1.0 / std::max(1e-30, e.abs().lo_d());
        e = a.enclosure(std::min(0.25, r / (2 * m * m)));
        RInt d = e.abs2();
        return CInt{e.re / d, -(e.im / d)};
    };
    return match_root(B, enclose);
}

AlgebraicNumber alg_conj(const AlgebraicNumber& a) {
    if (a.is_rational()) return a;
    const CInt& r = a.region();
    return AlgebraicNumber::from_parts(a.minpoly(), CInt{r.re, -r.im});
}

AlgebraicNumber nth_root(const mpq_class& q0, unsigned long d) {
    mpq_class q = q0;
    q.canonicalize();
    if (q <= 0) throw DomainError("nth_root: argument must be positive");
    if (d == 0) throw DomainError("nth_root: d must be >= 1");
    if (d == 1) return AlgebraicNumber::from_rational(q);
    std::vector<mpz_class> c((size_t)d + 1, 0);
    c[0] = -q.get_num();
    c[(size_t)d] = q.get_den();
    IntPolynomial P(std::move(c));
    auto enclose = [&](double r) {
        mpfr_prec_t prec = 96;
        RInt v = RInt::exact(q, prec);
        RInt root = v.root_ui(d);
        while (root.width_d() * 0.5 > r && prec < (1 << 22)) {
            prec *= 2;
            v = RInt::exact(q, prec);
            root = v.root_ui(d);
        }
        return CInt{root, RInt::exact(0, prec)};
    };
    return algebraic_from_vanishing(P, enclose);
}

} // namespace nkit
