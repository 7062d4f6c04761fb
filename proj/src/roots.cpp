#include "nkit/roots.hpp"

#include <algorithm>
#include <cmath>

#include "nkit/errors.hpp"

namespace nkit {

namespace {

/* plain complex floating point at a given precision (round-to-nearest) */
struct CF {
    mpfr_t re, im;
    explicit CF(mpfr_prec_t p) {
        mpfr_init2(re, p);
        mpfr_init2(im, p);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    CF(const CF& o) {
        mpfr_init2(re, mpfr_get_prec(o.re));
        mpfr_init2(im, mpfr_get_prec(o.im));
        mpfr_set(re, o.re, MPFR_RNDN);
        mpfr_set(im, o.im, MPFR_RNDN);
    }
    CF& operator=(const CF& o) {
        if (this != &o) {
            mpfr_set_prec(re, mpfr_get_prec(o.re));
            mpfr_set_prec(im, mpfr_get_prec(o.im));
            mpfr_set(re, o.re, MPFR_RNDN);
            mpfr_set(im, o.im, MPFR_RNDN);
        }
        return *this;
    }
    ~CF() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
};

struct CtxCF {
    mpfr_prec_t prec;
    mpfr_t t1, t2, t3, t4;
    explicit CtxCF(mpfr_prec_t p) : prec(p) {
        mpfr_init2(t1, p);
        mpfr_init2(t2, p);
        mpfr_init2(t3, p);
        mpfr_init2(t4, p);
    }
    ~CtxCF() {
        mpfr_clear(t1);
        mpfr_clear(t2);
        mpfr_clear(t3);
        mpfr_clear(t4);
    }
    void mul(CF& r, const CF& a, const CF& b) {
        mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
        mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
        mpfr_mul(t3, a.re, b.im, MPFR_RNDN);
        mpfr_mul(t4, a.im, b.re, MPFR_RNDN);
        mpfr_sub(r.re, t1, t2, MPFR_RNDN);
        mpfr_add(r.im, t3, t4, MPFR_RNDN);
    }
    void add(CF& r, const CF& a, const CF& b) {
        mpfr_add(r.re, a.re, b.re, MPFR_RNDN);
        mpfr_add(r.im, a.im, b.im, MPFR_RNDN);
    }
    void sub(CF& r, const CF& a, const CF& b) {
        mpfr_sub(r.re, a.re, b.re, MPFR_RNDN);
        mpfr_sub(r.im, a.im, b.im, MPFR_RNDN);
    }
    void div(CF& r, const CF& a, const CF& b) {
        // r = a * conj(b) / |b|^2
        mpfr_mul(t1, b.re, b.re, MPFR_RNDN);
        mpfr_mul(t2, b.im, b.im, MPFR_RNDN);
        mpfr_add(t1, t1, t2, MPFR_RNDN); // |b|^2
        mpfr_mul(t2, a.re, b.re, MPFR_RNDN);
        mpfr_mul(t3, a.im, b.im, MPFR_RNDN);
        mpfr_add(t2, t2, t3, MPFR_RNDN);
        mpfr_mul(t3, a.im, b.re, MPFR_RNDN);
        mpfr_mul(t4, a.re, b.im, MPFR_RNDN);
        mpfr_sub(t3, t3, t4, MPFR_RNDN);
        mpfr_div(r.re, t2, t1, MPFR_RNDN);
        mpfr_div(r.im, t3, t1, MPFR_RNDN);
    }
    double abs_d(const CF& a) {
        mpfr_hypot(t1, a.re, a.im, MPFR_RNDN);
        return mpfr_get_d(t1, MPFR_RNDN);
    }
};

/* Evaluate f and f' at z (round-to-nearest), Horner. */
void eval_with_derivative(const IntPolynomial& f, const CF& z, CtxCF& ctx,
                          CF& fv, CF& dv) {
    mpfr_prec_t p = ctx.prec;
    CF acc(p), dacc(p), coeff(p);
    const auto& c = f.coeffs();
    for (size_t i = c.size(); i-- > 0;) {
        // dacc = dacc*z + acc; acc = acc*z + c[i]
        CF t(p);
        ctx.mul(t, dacc, z);
        ctx.add(dacc, t, acc);
        ctx.mul(t, acc, z);
        mpfr_set_z(coeff.re, c[i].get_mpz_t(), MPFR_RNDN);
        mpfr_set_zero(coeff.im, 1);
        ctx.add(acc, t, coeff);
    }
    fv = acc;
    dv = dacc;
}

/* Newton-polygon initial guesses (Bini's strategy): build the upper convex
 * hull of (i, log|a_i|); each hull edge contributes edge-length guesses on a
 * circle of the corresponding radius. */
std::vector<CF> initial_guesses(const IntPolynomial& f, mpfr_prec_t prec) {
    const auto& c = f.coeffs();
    long n = f.degree();
    std::vector<std::pair<long, double>> pts;
    for (long i = 0; i <= n; i++) {
        if (c[(size_t)i] == 0) continue;
        long exp;
        double m = mpz_get_d_2exp(&exp, c[(size_t)i].get_mpz_t());
        pts.emplace_back(i, std::log(std::fabs(m)) + (double)exp * std::log(2.0));
    }
    // upper convex hull, left to right
    std::vector<std::pair<long, double>> hull;
    for (auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep b if it is above segment a->pt
            double cross = (b.first - a.first) * (pt.second - a.second) -
                           (pt.first - a.first) * (b.second - a.second);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::vector<CF> out;
    out.reserve((size_t)n);
    mpfr_t ang, rad, tw;
    mpfr_init2(ang, prec);
    mpfr_init2(rad, prec);
    mpfr_init2(tw, prec);
    size_t circle_idx = 0;
    for (size_t e = 0; e + 1 < hull.size(); e++) {
        long k1 = hull[e].first, k2 = hull[e + 1].first;
        double v1 = hull[e].second, v2 = hull[e + 1].second;
        long count = k2 - k1;
        double logr = (v1 - v2) / (double)count;
        logr = std::min(std::max(logr, -1e6), 1e6);
        for (long j = 0; j < count; j++) {
            CF z(prec);
            double theta = 2.0 * M_PI * ((double)j + 0.5) / (double)count +
                           0.574 * (double)circle_idx + 0.211;
            mpfr_set_d(rad, logr, MPFR_RNDN);
            mpfr_exp(rad, rad, MPFR_RNDN);
            mpfr_set_d(ang, theta, MPFR_RNDN);
            mpfr_sin_cos(tw, z.re, ang, MPFR_RNDN);
            mpfr_mul(z.re, z.re, rad, MPFR_RNDN);
            mpfr_mul(z.im, tw, rad, MPFR_RNDN);
            out.push_back(z);
        }
        circle_idx++;
    }
    mpfr_clear(ang);
    mpfr_clear(rad);
    mpfr_clear(tw);
    // trailing-zero roots (x | f) should not occur for callers (they peel
    // x first); pad just in case
    while ((long)out.size() < n) out.push_back(CF(prec));
    return out;
}

void aberth_sweeps(const IntPolynomial& f, std::vector<CF>& z, mpfr_prec_t prec,
                   int sweeps) {
    CtxCF ctx(prec);
    size_t n = z.size();
    for (int it = 0; it < sweeps; it++) {
        double worst = 0;
        for (size_t i = 0; i < n; i++) {
            CF fv(prec), dv(prec);
            eval_with_derivative(f, z[i], ctx, fv, dv);
            double afv = ctx.abs_d(fv);
            if (afv == 0) continue;
            // Newton correction N = f/f'
            CF N(prec);
            if (mpfr_zero_p(dv.re) && mpfr_zero_p(dv.im)) {
                // nudge
                mpfr_add_d(z[i].re, z[i].re, 1e-3, MPFR_RNDN);
                continue;
            }
            ctx.div(N, fv, dv);
            // S = sum 1/(z_i - z_j)
            CF S(prec), diff(prec), inv(prec), one(prec);
            mpfr_set_si(one.re, 1, MPFR_RNDN);
            for (size_t j = 0; j < n; j++) {
                if (j == i) continue;
                ctx.sub(diff, z[i], z[j]);
                if (mpfr_zero_p(diff.re) && mpfr_zero_p(diff.im)) {
                    mpfr_add_d(z[j].re, z[j].re, 1e-4 * (double)(j + 1), MPFR_RNDN);
                    ctx.sub(diff, z[i], z[j]);
                }
                ctx.div(inv, one, diff);
                ctx.add(S, S, inv);
            }
            // w = N / (1 - N*S)
            CF NS(prec), den(prec), w(prec);
            ctx.mul(NS, N, S);
            mpfr_si_sub(den.re, 1, NS.re, MPFR_RNDN);
            mpfr_neg(den.im, NS.im, MPFR_RNDN);
            if (mpfr_zero_p(den.re) && mpfr_zero_p(den.im)) {
                w = N;
            } else {
                ctx.div(w, N, den);
            }
            ctx.sub(z[i], z[i], w);
            double aw = ctx.abs_d(w);
            double az = ctx.abs_d(z[i]) + 1e-300;
            worst = std::max(worst, aw / az);
        }
        if (worst < std::ldexp(1.0, -(int)std::min<mpfr_prec_t>(prec - 8, 4096)))
            break;
    }
}

struct DiskCert {
    bool ok = false;
    CInt box; // bounding box of the certified disk
};

/* Disk bound: every z has a root of f within n*|f(z)/f'(z)| provided
 * f'(z) != 0; evaluated with outward rounding. */
DiskCert certify_disk(const IntPolynomial& f, const CF& z, mpfr_prec_t prec,
                      bool try_real_snap) {
    DiskCert out;
    long n = f.degree();
    RInt re_pt = RInt::point_fr(z.re, prec);
    RInt im_pt = RInt::point_fr(z.im, prec);

    bool snapped = false;
    if (try_real_snap && !mpfr_zero_p(z.im)) {
        // if |im| is on the order of the Newton residual, try the real axis
        CtxCF ctx(prec);
        CF fv(prec), dv(prec);
        eval_with_derivative(f, z, ctx, fv, dv);
        double afv = ctx.abs_d(fv), adv = ctx.abs_d(dv);
        double aim = std::fabs(mpfr_get_d(z.im, MPFR_RNDN));
        if (adv > 0 && aim <= 4 * (double)n * afv / adv) {
            im_pt = RInt::exact(0, prec);
            snapped = true;
        }
    }
    if (mpfr_zero_p(z.im)) snapped = true;

    CInt zbox{re_pt, im_pt};
    CInt F = f.eval(zbox);
    CInt D = f.derivative().eval(zbox);
    RInt absD = D.abs();
    if (!absD.strictly_positive()) return out;
    RInt r = (F.abs() / absD).mul_si(n);
    RInt rad = RInt::symmetric_fr(r.hi(), prec); // [-r, r]
    CInt box{re_pt + rad, im_pt + rad};
    if (snapped) box.im = rad; // symmetric about the real axis
    out.ok = true;
    out.box = box;
    return out;
}

bool mid_less(const CInt& a, const CInt& b) {
    mpfr_t ma, mb;
    mpfr_init2(ma, a.re.precision());
    mpfr_init2(mb, b.re.precision());
    mpfr_add(ma, a.re.lo(), a.re.hi(), MPFR_RNDN);
    mpfr_add(mb, b.re.lo(), b.re.hi(), MPFR_RNDN);
    int c = mpfr_cmp(ma, mb);
    if (c != 0) {
        mpfr_clear(ma);
        mpfr_clear(mb);
        return c < 0;
    }
    mpfr_add(ma, a.im.lo(), a.im.hi(), MPFR_RNDN);
    mpfr_add(mb, b.im.lo(), b.im.hi(), MPFR_RNDN);
    c = mpfr_cmp(ma, mb);
    mpfr_clear(ma);
    mpfr_clear(mb);
    return c < 0;
}

std::vector<CF> guesses_via_deflation(const IntPolynomial& f, size_t g,
                                      mpfr_prec_t prec, double max_radius);

std::vector<CInt> isolate_impl(const IntPolynomial& f, double max_radius,
                               std::vector<CF> z, mpfr_prec_t prec) {
    long n = f.degree();
    bool real_coeffs = true;
    for (int attempt = 0; attempt < 24; attempt++) {
        aberth_sweeps(f, z, prec, 36 + (int)n / 2);
        std::vector<CInt> boxes;
        boxes.reserve((size_t)n);
        bool all_ok = true;
        for (long i = 0; i < n && all_ok; i++) {
            DiskCert c = certify_disk(f, z[(size_t)i], prec, real_coeffs);
            if (!c.ok || c.box.width_d() * 0.5 > max_radius) {
                all_ok = false;
                break;
            }
            boxes.push_back(c.box);
        }
        if (all_ok) {
            // pairwise disjoint boxes -> exactly one root each (pigeonhole)
            for (size_t i = 0; i < boxes.size() && all_ok; i++)
                for (size_t j = i + 1; j < boxes.size(); j++)
                    if (!boxes[i].disjoint(boxes[j])) {
                        all_ok = false;
                        break;
                    }
        }
        if (all_ok) {
            std::sort(boxes.begin(), boxes.end(), mid_less);
            return boxes;
        }
        // escalate precision; resume from current approximations
        mpfr_prec_t next = prec * 2;
        std::vector<CF> z2;
        z2.reserve(z.size());
        for (auto& v : z) {
            CF w(next);
            mpfr_set(w.re, v.re, MPFR_RNDN);
            mpfr_set(w.im, v.im, MPFR_RNDN);
            z2.push_back(w);
        }
        z = std::move(z2);
        prec = next;
    }
    throw ResourceError("root isolation did not certify within precision budget");
}

std::vector<CF> guesses_via_deflation(const IntPolynomial& f, size_t g,
                                      mpfr_prec_t prec, double max_radius) {
    IntPolynomial q = f.deflate(g);
    std::vector<CInt> qroots = isolate_roots(q, std::max(max_radius, 1e-12));
    std::vector<CF> out;
    CtxCF ctx(prec);
    mpfr_t mod, ang, tw, tc;
    mpfr_init2(mod, prec);
    mpfr_init2(ang, prec);
    mpfr_init2(tw, prec);
    mpfr_init2(tc, prec);
    for (auto& box : qroots) {
        // midpoint in polar form
        mpfr_t mre, mim;
        mpfr_init2(mre, prec);
        mpfr_init2(mim, prec);
        mpfr_add(mre, box.re.lo(), box.re.hi(), MPFR_RNDN);
        mpfr_div_2si(mre, mre, 1, MPFR_RNDN);
        mpfr_add(mim, box.im.lo(), box.im.hi(), MPFR_RNDN);
        mpfr_div_2si(mim, mim, 1, MPFR_RNDN);
        mpfr_hypot(mod, mre, mim, MPFR_RNDN);
        mpfr_atan2(ang, mim, mre, MPFR_RNDN);
        mpfr_rootn_ui(mod, mod, (unsigned long)g, MPFR_RNDN);
        for (size_t j = 0; j < g; j++) {
            CF w(prec);
            mpfr_const_pi(tc, MPFR_RNDN);
            mpfr_mul_ui(tc, tc, 2 * (unsigned long)j, MPFR_RNDN);
            mpfr_add(tc, tc, ang, MPFR_RNDN);
            mpfr_div_ui(tc, tc, (unsigned long)g, MPFR_RNDN);
            mpfr_sin_cos(tw, w.re, tc, MPFR_RNDN);
            mpfr_mul(w.re, w.re, mod, MPFR_RNDN);
            mpfr_mul(w.im, tw, mod, MPFR_RNDN);
            out.push_back(w);
        }
        mpfr_clear(mre);
        mpfr_clear(mim);
    }
    mpfr_clear(mod);
    mpfr_clear(ang);
    mpfr_clear(tw);
    mpfr_clear(tc);
    return out;
}

} // namespace

std::vector<CInt> isolate_roots(const IntPolynomial& f, double max_radius) {
    if (f.degree() < 1) throw DomainError("isolate_roots: degree < 1");
    if (max_radius <= 0 || max_radius < 1e-300)
        throw DomainError("isolate_roots: bad radius target");
    if (f[0] == 0) {
        // peel x: callers factor first, but stay safe
        std::vector<mpz_class> c(f.coeffs().begin() + 1, f.coeffs().end());
        IntPolynomial rest(std::move(c));
        std::vector<CInt> out;
        mpfr_prec_t p = 96;
        out.push_back(CInt{RInt::exact(0, p), RInt::exact(0, p)});
        if (rest.degree() >= 1) {
            auto more = isolate_roots(rest, max_radius);
            out.insert(out.end(), more.begin(), more.end());
        }
        std::sort(out.begin(), out.end(), mid_less);
        return out;
    }
    long coeff_bits = (long)mpz_sizeinbase(f.height_coeff().get_mpz_t(), 2);
    mpfr_prec_t prec = std::max<mpfr_prec_t>(96, coeff_bits + 64);
    size_t g = f.support_gcd();
    std::vector<CF> z;
    if (g >= 2 && f.degree() >= (long)(2 * g)) {
        z = guesses_via_deflation(f, g, prec, max_radius);
    } else {
        z = initial_guesses(f, prec);
    }
    return isolate_impl(f, max_radius, std::move(z), prec);
}

CInt refine_root_box(const IntPolynomial& f, const CInt& box, double max_radius) {
    // Newton from the midpoint, escalating precision until the certified
    // disk fits inside the original box (which holds exactly one root, so
    // the refined box inherits the exactly-one invariant).
    mpfr_prec_t prec = std::max<mpfr_prec_t>(box.re.precision(), 96);
    CF z(prec);
    mpfr_add(z.re, box.re.lo(), box.re.hi(), MPFR_RNDN);
    mpfr_div_2si(z.re, z.re, 1, MPFR_RNDN);
    mpfr_add(z.im, box.im.lo(), box.im.hi(), MPFR_RNDN);
    mpfr_div_2si(z.im, z.im, 1, MPFR_RNDN);
    for (int attempt = 0; attempt < 30; attempt++) {
        CtxCF ctx(prec);
        for (int it = 0; it < 96; it++) {
            CF fv(prec), dv(prec);
            eval_with_derivative(f, z, ctx, fv, dv);
            if (ctx.abs_d(dv) == 0) break;
            CF w(prec);
            ctx.div(w, fv, dv);
            ctx.sub(z, z, w);
            double aw = ctx.abs_d(w);
            if (aw < std::ldexp(1.0, -(int)std::min<mpfr_prec_t>(prec - 6, 4000)) *
                         (ctx.abs_d(z) + 1))
                break;
        }
        DiskCert c = certify_disk(f, z, prec, box.im.contains_zero());
        if (c.ok && c.box.width_d() * 0.5 <= max_radius &&
            box.re.contains(c.box.re) && box.im.contains(c.box.im))
            return c.box;
        prec *= 2;
        CF z2(prec);
        mpfr_set(z2.re, z.re, MPFR_RNDN);
        mpfr_set(z2.im, z.im, MPFR_RNDN);
        z = z2;
        // restart from the box midpoint if the iteration drifted outside
        if (c.ok && (box.re.disjoint(c.box.re) || box.im.disjoint(c.box.im))) {
            mpfr_add(z.re, box.re.lo(), box.re.hi(), MPFR_RNDN);
            mpfr_div_2si(z.re, z.re, 1, MPFR_RNDN);
            mpfr_add(z.im, box.im.lo(), box.im.hi(), MPFR_RNDN);
            mpfr_div_2si(z.im, z.im, 1, MPFR_RNDN);
        }
    }
    throw ResourceError("refine_root_box: precision budget exceeded");
}

bool box_excludes_root(const IntPolynomial& f, const CInt& box) {
    CInt v = f.eval(box);
    return !v.contains_zero();
}

} // namespace nkit
