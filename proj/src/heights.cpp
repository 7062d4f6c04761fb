#include "nkit/heights.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "nkit/errors.hpp"

namespace nkit {

namespace {

double height_target_radius() {
    long p = (long)default_precision();
    int bits = (int)std::min<long>(p / 2 + 8, 900);
    return std::ldexp(1.0, -bits);
}

RInt log_plus(const RInt& absval0) {
    // log max(1, x) for x >= 0, carried at full working precision
    mpfr_prec_t p = std::max<mpfr_prec_t>(absval0.precision(), default_precision() + 16);
    RInt absval = absval0.to_prec(p);
    RInt one = RInt::exact(1, p);
    return RInt::max(absval, one).log();
}

CInt lift_box(const CInt& b) {
    mpfr_prec_t p = std::max<mpfr_prec_t>(b.re.precision(), default_precision() + 16);
    return CInt{b.re.to_prec(p), b.im.to_prec(p)};
}

/* log M(g) for primitive squarefree g (support-deflated first; the measure
 * is invariant under x -> x^k). */
RInt log_mahler_primitive_squarefree(const IntPolynomial& g0, double target) {
    IntPolynomial g = g0.deflate(g0.support_gcd());
    RInt acc = RInt::exact(mpz_class(::abs(g.leading()))).log();
    if (g.degree() == 0) return acc;
    // peel x (measure 1)
    if (g[0] == 0) {
        std::vector<mpz_class> c(g.coeffs().begin() + 1, g.coeffs().end());
        g = IntPolynomial(std::move(c));
        if (g.degree() == 0) return acc;
    }
    double r = target / (4.0 * (double)g.degree() + 4.0);
    for (int round = 0; round < 20; round++) {
        RInt s = acc;
        auto boxes = isolate_roots(g, r);
        for (auto& b : boxes) s = s + log_plus(lift_box(b).abs());
        if (s.width_d() <= target || r <= 1e-290) return s;
        r /= 256;
    }
    throw ResourceError("log_mahler: target radius unreachable");
}

} // namespace

ProjectiveTuple::ProjectiveTuple(std::vector<AlgebraicNumber> coords)
    : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("projective tuple must be nonempty");
    bool nonzero = false;
    for (auto& c : coords_) nonzero |= !c.is_zero();
    if (!nonzero) throw DomainError("projective tuple must have a nonzero coordinate");
}

ProjectiveTuple ProjectiveTuple::from_rationals(const std::vector<mpq_class>& coords) {
    std::vector<AlgebraicNumber> c;
    c.reserve(coords.size());
    for (auto& q : coords) c.push_back(AlgebraicNumber::from_rational(q));
    return ProjectiveTuple(std::move(c));
}

ProjectiveTuple ProjectiveTuple::from_ints(const std::vector<long>& coords) {
    std::vector<AlgebraicNumber> c;
    c.reserve(coords.size());
    for (long q : coords) c.push_back(AlgebraicNumber::from_int(q));
    return ProjectiveTuple(std::move(c));
}

bool ProjectiveTuple::all_rational() const {
    for (auto& c : coords_)
        if (!c.is_rational()) return false;
    return true;
}

std::vector<mpq_class> ProjectiveTuple::rationals() const {
    std::vector<mpq_class> out;
    out.reserve(coords_.size());
    for (auto& c : coords_) out.push_back(c.as_rational());
    return out;
}

bool ProjectiveTuple::projectively_equal(const ProjectiveTuple& o) const {
    if (size() != o.size()) return false;
    // all 2x2 minors x_i y_j - x_j y_i must vanish
    for (size_t i = 0; i < size(); i++) {
        for (size_t j = i + 1; j < size(); j++) {
            AlgebraicNumber m = alg_add(alg_mul(coords_[i], o.coords_[j]),
                                        alg_neg(alg_mul(coords_[j], o.coords_[i])));
            if (!m.is_zero()) return false;
        }
    }
    return true;
}

std::vector<mpz_class> normalize_int_tuple(std::vector<mpz_class> v) {
    mpz_class g = 0;
    for (auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw DomainError("normalize_int_tuple: zero tuple");
    for (auto& x : v)
        if (x != 0) {
            if (x < 0) g = -g;
            break;
        }
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

std::vector<mpz_class> clear_denominators(const std::vector<mpq_class>& v) {
    mpz_class l = 1;
    for (auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(v.size());
    for (auto& q : v) out.push_back(q.get_num() * (l / q.get_den()));
    return normalize_int_tuple(std::move(out));
}

CertifiedValue weil_height(const AlgebraicNumber& a) {
    if (a.is_rational()) {
        mpq_class q = a.as_rational();
        mpz_class m = std::max(::abs(q.get_num()), ::abs(q.get_den()));
        if (m <= 1) return CertifiedValue(RInt::exact(0));
        return CertifiedValue(RInt::exact(m).log());
    }
    double target = height_target_radius();
    RInt lm = log_mahler_primitive_squarefree(a.minpoly(), target * a.degree());
    return CertifiedValue(lm.div_ui((unsigned long)a.degree()));
}

CertifiedValue house(const AlgebraicNumber& a) {
    if (a.is_rational()) {
        mpq_class q = ::abs(a.as_rational());
        return CertifiedValue(RInt::exact(q));
    }
    double target = height_target_radius();
    double r = target / 4;
    for (int round = 0; round < 20; round++) {
        auto boxes = a.conjugates(r);
        RInt m = RInt::exact(0);
        for (auto& b : boxes) m = RInt::max(m, lift_box(b).abs());
        if (m.width_d() <= target || r <= 1e-290) return CertifiedValue(m);
        r /= 256;
    }
    throw ResourceError("house: target radius unreachable");
}

CertifiedValue weighted_height(const AlgebraicNumber& a, double gamma) {
    RInt h = weil_height(a).interval();
    if (gamma == 0.0 || a.degree() == 1) return CertifiedValue(h);
    RInt d = RInt::exact((long)a.degree());
    RInt factor = (RInt::from_double(gamma) * d.log()).exp();
    return CertifiedValue(factor * h);
}

namespace {

/* finite part of the height of a tuple over its common field: the content
 * of the norm form of the coordinate linear form carries every Gauss norm */
RInt tuple_height_core(const ProjectiveTuple& P, bool l2) {
    if (P.all_rational()) {
        auto v = clear_denominators(P.rationals());
        mpfr_prec_t prec = default_precision();
        if (!l2) {
            mpz_class m = 0;
            for (auto& x : v) m = std::max(m, mpz_class(::abs(x)));
            return RInt::exact(m, prec).log();
        }
        mpz_class s = 0;
        for (auto& x : v) s += x * x;
        return RInt::exact(s, prec).log().div_ui(2);
    }
    FieldPresentation pres = present_in_common_field(P.coords());
    unsigned long m = (unsigned long)pres.degree();
    NormForm nf = linear_norm_form(pres);
    mpq_class cont = ::abs(nf.content);
    RInt finite = -RInt::exact(cont).log().div_ui(m);
    double target = height_target_radius();
    double r = 1.0 / (1 << 16);
    for (int round = 0; round < 18; round++) {
        auto emb = pres.embeddings(r);
        RInt arch = RInt::exact(0);
        for (auto& e0 : emb) {
            CInt e = lift_box(e0);
            RInt acc = RInt::exact(0);
            if (!l2) {
                for (size_t i = 0; i < P.size(); i++)
                    acc = RInt::max(acc, pres.embed(i, e).abs2());
                acc = acc.log().div_ui(2);
            } else {
                for (size_t i = 0; i < P.size(); i++)
                    acc = acc + pres.embed(i, e).abs2();
                acc = acc.log().div_ui(2);
            }
            arch = arch + acc;
        }
        RInt h = arch.div_ui(m) + finite;
        if (h.width_d() <= target || r <= 1e-280) return h;
        r = r / 1024;
    }
    throw ResourceError("projective height: target radius unreachable");
}

} // namespace

CertifiedValue projective_height(const ProjectiveTuple& P) {
    return CertifiedValue(tuple_height_core(P, false));
}

CertifiedValue l2_height(const ProjectiveTuple& P) {
    return CertifiedValue(tuple_height_core(P, true));
}

CertifiedValue poly_height(const IntPolynomial& f, HeightKind kind) {
    if (f.is_zero()) throw DomainError("poly_height of zero polynomial");
    std::vector<mpq_class> coeffs;
    for (auto& c : f.coeffs()) coeffs.emplace_back(c);
    ProjectiveTuple t = ProjectiveTuple::from_rationals(coeffs);
    if (kind == HeightKind::Weil) return projective_height(t);
    if (kind == HeightKind::L2) return l2_height(t);
    throw DomainError("poly_height: kind must be weil or l2");
}

CertifiedValue poly_height(const std::vector<AlgebraicNumber>& coeffs, HeightKind kind) {
    ProjectiveTuple t{std::vector<AlgebraicNumber>(coeffs)};
    if (kind == HeightKind::Weil) return projective_height(t);
    if (kind == HeightKind::L2) return l2_height(t);
    throw DomainError("poly_height: kind must be weil or l2");
}

CertifiedValue poly_height(const MPoly& f, HeightKind kind) {
    if (f.is_zero()) throw DomainError("poly_height of zero polynomial");
    std::vector<mpq_class> coeffs;
    for (auto& [e, c] : f.terms()) coeffs.push_back(c);
    ProjectiveTuple t = ProjectiveTuple::from_rationals(coeffs);
    if (kind == HeightKind::Weil) return projective_height(t);
    if (kind == HeightKind::L2) return l2_height(t);
    throw DomainError("poly_height: kind must be weil or l2");
}

long sum_partial_degrees(const MPoly& f) {
    long total = 0;
    for (size_t v = 0; v < f.nvars(); v++) {
        unsigned m = 0;
        for (auto& [e, c] : f.terms()) m = std::max(m, e[v]);
        total += (long)m;
    }
    return total;
}

CertifiedValue mahler_measure(const IntPolynomial& f) {
    return CertifiedValue(log_mahler_measure(f).interval().exp());
}

CertifiedValue log_mahler_measure(const IntPolynomial& f) {
    if (f.is_zero()) throw DomainError("mahler_measure of zero polynomial");
    double target = height_target_radius();
    mpz_class cont = f.content();
    RInt acc = RInt::exact(cont).log();
    auto layers = squarefree_decomposition(f);
    for (size_t i = 0; i < layers.size(); i++) {
        if (layers[i].degree() < 0) continue;
        RInt lm = log_mahler_primitive_squarefree(layers[i], target / layers.size());
        acc = acc + lm.mul_si((long)(i + 1));
    }
    return CertifiedValue(acc);
}

namespace {

/* One trapezoid level: S(N) = (1/N^2) sum_{a,b} log |f(w^a, w^b)| with
 * w = exp(2 pi i / N); the inner sum over b collapses through the roots of
 * f(w^a, y):  sum_b log|f(x0, w^b)| = N log|lc_y(x0)| + sum_j log|mu_j^N - 1|. */
bool trapezoid_level(const MPoly& f, long N, double& out) {
    using cplx = std::complex<double>;
    long degy = 0;
    for (auto& [e, c] : f.terms()) degy = std::max(degy, (long)e[1]);
    double total = 0;
    for (long a = 0; a < N; a++) {
        double ang = 2.0 * M_PI * (double)a / (double)N;
        cplx x0(std::cos(ang), std::sin(ang));
        // coefficients of f(x0, y)
        std::vector<cplx> cy((size_t)degy + 1, cplx(0));
        for (auto& [e, c] : f.terms()) {
            cplx t = c.get_d();
            for (unsigned k = 0; k < e[0]; k++) t *= x0;
            cy[e[1]] += t;
        }
        while (cy.size() > 1 && std::abs(cy.back()) < 1e-14) cy.pop_back();
        long dy = (long)cy.size() - 1;
        if (dy < 0) return false;
        double inner = (double)N * std::log(std::abs(cy.back()));
        if (dy > 0) {
            // roots of f(x0, y) by Durand-Kerner in double
            std::vector<cplx> roots((size_t)dy);
            for (long j = 0; j < dy; j++)
                roots[(size_t)j] = std::polar(1.3, 2.0 * M_PI * (j + 0.27) / dy + 0.4);
            for (int it = 0; it < 120; it++) {
                double move = 0;
                for (long j = 0; j < dy; j++) {
                    cplx p = cy.back();
                    for (long k = dy - 1; k >= 0; k--) p = p * roots[(size_t)j] + cy[(size_t)k];
                    cplx den = cy.back();
                    for (long k = 0; k < dy; k++)
                        if (k != j) den *= roots[(size_t)j] - roots[(size_t)k];
                    if (std::abs(den) == 0) continue;
                    cplx delta = p / den;
                    roots[(size_t)j] -= delta;
                    move = std::max(move, std::abs(delta));
                }
                if (move < 1e-14) break;
            }
            for (auto& mu : roots) {
                // log |mu^N - 1| in log-polar form to avoid overflow
                double lr = (double)N * std::log(std::abs(mu));
                double contrib;
                if (lr > 45.0) {
                    contrib = lr; // |1 - mu^-N| = 1 + O(e^-45)
                } else if (lr < -45.0) {
                    contrib = 0.0; // |mu^N - 1| = 1 + O(e^-45)
                } else {
                    double th = std::fmod((double)N * std::arg(mu), 2.0 * M_PI);
                    cplx muN = std::polar(std::exp(lr), th);
                    double v = std::abs(muN - 1.0);
                    if (v < 1e-12) return false; // node hit a torus zero
                    contrib = std::log(v);
                }
                inner += contrib;
            }
        }
        total += inner;
    }
    out = total / ((double)N * (double)N);
    return true;
}

} // namespace

CertifiedValue mahler_measure_2var(const MPoly& f) {
    if (f.is_zero()) throw DomainError("mahler_measure_2var of zero polynomial");
    if (f.nvars() != 2) throw DomainError("mahler_measure_2var needs two variables");
    long N1 = 8193;
    double s1 = 0, s2 = 0, s3 = 0;
    for (int shift = 0; shift < 32; shift += 2) {
        long n1 = N1 + shift;
        while (n1 % 3 == 0 || n1 % 2 == 0) n1++;
        long n2 = 2 * n1 + 1, n3 = 4 * n1 + 1;
        while (n2 % 3 == 0) n2 += 2;
        while (n3 % 3 == 0) n3 += 2;
        if (trapezoid_level(f, n1, s1) && trapezoid_level(f, n2, s2) &&
            trapezoid_level(f, n3, s3)) {
            double rich = (4.0 * s3 - s2) / 3.0;
            double rad = 3.0 * (std::fabs(s3 - s2) + std::fabs(rich - s3)) + 1e-12;
            RInt enc = RInt::from_double(rich) +
                       RInt::from_endpoints(mpq_class(-1), mpq_class(1)) * RInt::from_double(rad);
            CertifiedValue out(enc);
            out.non_rigorous = true;
            return out;
        }
    }
    throw ResourceError("mahler_measure_2var: quadrature nodes kept hitting zeros");
}

CertifiedValue dirichlet_L2_chi3() {
    mpfr_prec_t prec = std::max<mpfr_prec_t>(default_precision(), 128);
    // L(2, chi_3) = sum chi(k)/k^2, chi(1 mod 3)=1, chi(2 mod 3)=-1
    RInt sum = RInt::exact(0, prec);
    const long M = 6000;
    for (long mblock = 0; mblock < M; mblock++) {
        long k1 = 3 * mblock + 1, k2 = 3 * mblock + 2;
        RInt t1 = RInt::exact(1, prec) / RInt::exact(k1 * k1, prec);
        RInt t2 = RInt::exact(1, prec) / RInt::exact(k2 * k2, prec);
        sum = sum + (t1 - t2);
    }
    // 0 < tail < 1/(9(M-1)^2)
    RInt tail = RInt::from_endpoints(mpq_class(0), mpq_class(1, 9 * (M - 1) * (M - 1)), prec);
    RInt L = sum + tail;
    RInt three = RInt::exact(3, prec);
    RInt factor = three * three.sqrt() / (RInt::pi(prec) * RInt::exact(4, prec));
    return CertifiedValue(factor * L);
}

} // namespace nkit
