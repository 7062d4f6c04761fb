#include "nkit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "nkit/errors.hpp"

namespace nkit {

namespace {

/* rational Gaussian elimination solving M^T w = det(M) e_k for integer w;
 * returns det and the requested adjugate columns */
struct AdjugateSolve {
    mpz_class det;
    std::vector<std::vector<mpz_class>> columns;
};

AdjugateSolve solve_adjugate_columns(const std::vector<std::vector<mpz_class>>& M,
                                     const std::vector<size_t>& wanted) {
    size_t n = M.size();
    // LU with partial pivoting over mpq on M^T
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) a[i][j] = mpq_class(M[j][i]);
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; i++) perm[i] = i;
    mpq_class det = 1;
    std::vector<std::vector<mpq_class>> rhs(wanted.size(), std::vector<mpq_class>(n, 0));
    for (size_t c = 0; c < wanted.size(); c++) rhs[c][wanted[c]] = 1;
    for (size_t k = 0; k < n; k++) {
        size_t piv = k;
        while (piv < n && a[piv][k] == 0) piv++;
        if (piv == n) {
            AdjugateSolve out;
            out.det = 0;
            return out;
        }
        if (piv != k) {
            std::swap(a[piv], a[k]);
            for (auto& r : rhs) std::swap(r[piv], r[k]);
            det = -det;
        }
        det *= a[k][k];
        for (size_t i = k + 1; i < n; i++) {
            if (a[i][k] == 0) continue;
            mpq_class fac = a[i][k] / a[k][k];
            for (size_t j = k; j < n; j++) a[i][j] -= fac * a[k][j];
            for (auto& r : rhs) r[i] -= fac * r[k];
        }
    }
    AdjugateSolve out;
    det.canonicalize();
    if (det.get_den() != 1) throw DomainError("adjugate solve: non-integer determinant");
    out.det = det.get_num();
    for (size_t c = 0; c < wanted.size(); c++) {
        std::vector<mpq_class> x(n, 0);
        for (size_t i = n; i-- > 0;) {
            mpq_class s = rhs[c][i];
            for (size_t j = i + 1; j < n; j++) s -= a[i][j] * x[j];
            x[i] = s / a[i][i];
        }
        std::vector<mpz_class> w(n);
        for (size_t i = 0; i < n; i++) {
            mpq_class v = x[i] * det;
            v.canonicalize();
            if (v.get_den() != 1)
                throw DomainError("adjugate solve: non-integer adjugate entry");
            w[i] = v.get_num();
        }
        out.columns.push_back(std::move(w));
    }
    return out;
}

bool form_homogeneous(const MPoly& f, unsigned* deg) {
    return f.homogeneous_in_block(0, f.nvars(), deg);
}

mpz_class l1_norm(const MPoly& f) {
    mpz_class s = 0;
    for (auto& [e, c] : f.terms()) s += ::abs(c.get_num());
    return s;
}

/* Sylvester matrix of two binary degree-D forms, columns by descending
 * x-degree among monomials x^a y^(2D-1-a). */
std::vector<std::vector<mpz_class>> sylvester_matrix(const MPoly& F0, const MPoly& F1,
                                                     unsigned D) {
    auto coeff = [&](const MPoly& f, unsigned xdeg) {
        std::vector<unsigned> e{xdeg, D - xdeg};
        auto it = f.terms().find(e);
        return it == f.terms().end() ? mpz_class(0) : mpz_class(it->second.get_num());
    };
    size_t N = 2 * D;
    std::vector<std::vector<mpz_class>> M(N, std::vector<mpz_class>(N, 0));
    // row r < D: coefficients of x^(D-1-r) y^r * F0 : monomial x^(2D-1-c)
    for (size_t r = 0; r < D; r++)
        for (unsigned i = 0; i <= D; i++) M[r][r + (D - i)] = coeff(F0, i);
    for (size_t r = 0; r < D; r++)
        for (unsigned i = 0; i <= D; i++) M[D + r][r + (D - i)] = coeff(F1, i);
    return M;
}

/* Macaulay matrix data for three ternary degree-D forms */
struct MacaulayData {
    std::vector<std::vector<mpz_class>> M;
    std::vector<std::vector<unsigned>> mons; // row/column monomials, degree t
    unsigned t;
};

MacaulayData macaulay_matrix(const std::vector<MPoly>& fs, unsigned D) {
    unsigned t = 3 * D - 2;
    MacaulayData out;
    out.t = t;
    for (unsigned a = 0; a <= t; a++)
        for (unsigned b = 0; a + b <= t; b++) out.mons.push_back({a, b, t - a - b});
    std::map<std::vector<unsigned>, size_t> index;
    for (size_t i = 0; i < out.mons.size(); i++) index[out.mons[i]] = i;
    size_t N = out.mons.size();
    out.M.assign(N, std::vector<mpz_class>(N, 0));
    for (size_t r = 0; r < N; r++) {
        const auto& mu = out.mons[r];
        int which;
        std::vector<unsigned> quot = mu;
        if (mu[0] >= D) {
            which = 0;
            quot[0] -= D;
        } else if (mu[1] >= D) {
            which = 1;
            quot[1] -= D;
        } else {
            which = 2;
            quot[2] -= D;
        }
        for (auto& [e, c] : fs[(size_t)which].terms()) {
            std::vector<unsigned> col = {quot[0] + e[0], quot[1] + e[1], quot[2] + e[2]};
            out.M[r][index[col]] += c.get_num();
        }
    }
    return out;
}

} // namespace

ProjectiveSelfMap make_selfmap(std::vector<MPoly> forms, bool allow_unchecked) {
    if (forms.size() < 2) throw DomainError("selfmap needs at least two forms");
    size_t n = forms.size() - 1;
    unsigned D = 0;
    for (size_t i = 0; i < forms.size(); i++) {
        if (forms[i].nvars() != forms.size())
            throw DomainError("selfmap: each form must use n+1 variables");
        unsigned d = 0;
        if (forms[i].is_zero() || !form_homogeneous(forms[i], &d))
            throw DomainError("selfmap: forms must be nonzero homogeneous");
        if (i == 0) D = d;
        else if (d != D) throw DomainError("selfmap: forms must have equal degrees");
    }
    if (D < 2) throw DomainError("selfmap: degree must be >= 2");
    // clear denominators jointly and remove the joint content
    mpz_class lcm = 1;
    for (auto& f : forms)
        for (auto& [e, c] : f.terms())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class gcd = 0;
    for (auto& f : forms)
        for (auto& [e, c] : f.terms()) {
            mpz_class z = c.get_num() * (lcm / c.get_den());
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), z.get_mpz_t());
        }
    mpq_class scale(lcm, gcd);
    scale.canonicalize();
    for (auto& f : forms) {
        f = f.mul_scalar(scale);
        if (!f.has_integer_coeffs())
            throw DomainError("selfmap: coefficient normalization failed");
    }
    ProjectiveSelfMap out;
    out.n = n;
    out.D = D;
    out.forms = std::move(forms);
    if (n == 1) {
        AdjugateSolve sol =
            solve_adjugate_columns(sylvester_matrix(out.forms[0], out.forms[1], D), {});
        out.elimination_resultant = sol.det;
        if (out.elimination_resultant == 0)
            throw NotAMorphism("selfmap: resultant vanishes (common zero)");
        out.morphism_certified = true;
    } else if (n == 2) {
        out.elimination_resultant =
            macaulay_resultant_ternary(out.forms[0], out.forms[1], out.forms[2]);
        if (out.elimination_resultant == 0)
            throw NotAMorphism("selfmap: Macaulay resultant vanishes (common zero)");
        out.morphism_certified = true;
    } else {
        if (!allow_unchecked)
            throw DomainError("selfmap: n >= 3 requires the explicit unchecked flag");
        out.morphism_certified = false;
    }
    return out;
}

CertifiedValue map_height(const ProjectiveSelfMap& f) {
    std::vector<mpq_class> coeffs;
    for (auto& g : f.forms)
        for (auto& [e, c] : g.terms()) coeffs.push_back(c);
    return projective_height(ProjectiveTuple::from_rationals(coeffs));
}

GapBound height_gap_bound(const ProjectiveSelfMap& f) {
    GapBound out;
    mpfr_prec_t prec = default_precision();
    // upper: h(fP) <= D h(P) + log max_i L1(F_i)
    mpz_class maxl1 = 0;
    for (auto& g : f.forms) maxl1 = std::max(maxl1, l1_norm(g));
    RInt up = RInt::exact(maxl1, prec).log();
    // lower: D h(P) - h(fP) <= log max_k sum_r |w_r| over the adjugate
    // identities det * x_k^t = sum_j g_j F_j
    RInt low(prec);
    bool heuristic = false;
    if (f.n == 1) {
        auto M = sylvester_matrix(f.forms[0], f.forms[1], f.D);
        AdjugateSolve sol = solve_adjugate_columns(M, {0, M.size() - 1});
        mpz_class worst = 0;
        for (auto& col : sol.columns) {
            mpz_class s = 0;
            for (auto& v : col) s += ::abs(v);
            worst = std::max(worst, s);
        }
        if (sol.det == 0) throw NotAMorphism("height_gap_bound: resultant vanished");
        // det * x^(2D-1) = sum_j g_j F_j gives D h(P) - h(fP) <= log sum |w_r|
        low = RInt::exact(worst, prec).log();
    } else if (f.n == 2) {
        try {
            MacaulayData md = macaulay_matrix(f.forms, f.D);
            std::vector<size_t> wanted;
            for (size_t i = 0; i < md.mons.size(); i++) {
                const auto& m = md.mons[i];
                if (m[0] == md.t || m[1] == md.t || m[2] == md.t) wanted.push_back(i);
            }
            AdjugateSolve sol = solve_adjugate_columns(md.M, wanted);
            if (sol.det == 0) throw DomainError("degenerate Macaulay matrix");
            mpz_class worst = 0;
            for (auto& col : sol.columns) {
                mpz_class s = 0;
                for (auto& v : col) s += ::abs(v);
                worst = std::max(worst, s);
            }
            low = RInt::exact(worst, prec).log();
        } catch (const DomainError&) {
            heuristic = true;
        }
    } else {
        heuristic = true;
    }
    if (heuristic) {
        // declared-heuristic empirical lower bound: sampled gap, padded
        double worst = 0;
        uint64_t st = 0x9e3779b97f4a7c15ull;
        auto rnd = [&]() {
            st ^= st << 13;
            st ^= st >> 7;
            st ^= st << 17;
            return (long)(st % 1000) - 500;
        };
        for (int trial = 0; trial < 200; trial++) {
            std::vector<mpz_class> v(f.n + 1);
            bool zero = true;
            for (auto& x : v) {
                x = rnd();
                zero &= x == 0;
            }
            if (zero) v[0] = 1;
            v = normalize_int_tuple(v);
            auto w = apply_map_int(f, v);
            double h = 0, hf = 0;
            for (auto& x : v) h = std::max(h, std::log(std::fabs(x.get_d()) + 0.0));
            for (auto& x : w) hf = std::max(hf, std::log(std::fabs(x.get_d()) + 0.0));
            worst = std::max(worst, f.D * h - hf);
        }
        low = RInt::from_double(std::max(worst, 0.0) * 2 + 1);
    }
    RInt R = RInt::max(RInt::max(up, low), RInt::exact(0, prec));
    out.upper = CertifiedValue(up);
    out.lower = CertifiedValue(low);
    out.lower_heuristic = heuristic;
    out.R = CertifiedValue(R);
    return out;
}

std::vector<mpz_class> apply_map_int(const ProjectiveSelfMap& f,
                                     const std::vector<mpz_class>& v) {
    if (v.size() != f.n + 1) throw DomainError("apply_map_int: arity mismatch");
    std::vector<mpz_class> out(f.n + 1, 0);
    for (size_t i = 0; i <= f.n; i++) {
        mpz_class acc = 0;
        for (auto& [e, c] : f.forms[i].terms()) {
            mpz_class t = c.get_num();
            for (size_t vix = 0; vix <= f.n; vix++) {
                if (e[vix] == 0) continue;
                mpz_class p;
                mpz_pow_ui(p.get_mpz_t(), v[vix].get_mpz_t(), e[vix]);
                t *= p;
            }
            acc += t;
        }
        out[i] = acc;
    }
    bool allzero = true;
    for (auto& x : out) allzero &= x == 0;
    if (allzero) throw NotAMorphism("apply_map_int: image vanished (not a morphism?)");
    return normalize_int_tuple(std::move(out));
}

namespace {

RInt log_sup_int(const std::vector<mpz_class>& v, mpfr_prec_t prec) {
    mpz_class m = 0;
    for (auto& x : v) m = std::max(m, mpz_class(::abs(x)));
    return RInt::exact(m, prec).log();
}

AlgebraicNumber eval_mpoly_algebraic(const MPoly& f, const std::vector<AlgebraicNumber>& x) {
    AlgebraicNumber acc; // 0
    for (auto& [e, c] : f.terms()) {
        AlgebraicNumber term = AlgebraicNumber::from_rational(c);
        for (size_t v = 0; v < x.size(); v++)
            for (unsigned k = 0; k < e[v]; k++) term = alg_mul(term, x[v]);
        acc = alg_add(acc, term);
    }
    return acc;
}

} // namespace

CanonicalHeightResult canonical_height(const ProjectiveSelfMap& f, const ProjectiveTuple& P,
                                       double tolerance) {
    if (P.size() != f.n + 1) throw DomainError("canonical_height: dimension mismatch");
    if (tolerance <= 0) throw DomainError("canonical_height: tolerance must be > 0");
    mpfr_prec_t prec = default_precision();
    GapBound gap = height_gap_bound(f);
    CanonicalHeightResult res;
    res.gap_bound_R = gap.R;
    double Rhi = gap.R.interval().hi_d();

    auto finish = [&](const RInt& base, unsigned k) {
        // hhat in [h_k/D^k - tail, h_k/D^k + tail]
        double tail = Rhi / ((double)(f.D - 1) * std::pow((double)f.D, (double)k));
        RInt enc = base + RInt::from_double(tail) *
                              RInt::from_endpoints(mpq_class(-1), mpq_class(1));
        enc = RInt::max(enc, RInt::exact(0, prec)); // hhat >= 0 always
        res.value = CertifiedValue(enc);
        res.iterations_used = k;
        res.tail_bound = CertifiedValue(RInt::from_double(tail));
        return res;
    };

    if (P.all_rational()) {
        std::vector<mpz_class> v = clear_denominators(P.rationals());
        std::map<std::vector<mpz_class>, unsigned> seen;
        unsigned k = 0;
        mpz_class Dk = 1;
        while (true) {
            auto it = seen.find(v);
            if (it != seen.end()) {
                // orbit cycles: hhat = 0 exactly
                res.value = CertifiedValue(RInt::exact(0, prec));
                res.iterations_used = k;
                res.tail_bound = CertifiedValue(RInt::exact(0, prec));
                res.exact_zero = true;
                return res;
            }
            double tail = Rhi / ((double)(f.D - 1) * Dk.get_d());
            if (tail <= tolerance) {
                RInt hk = log_sup_int(v, prec);
                return finish(hk / RInt::exact(Dk, prec), k);
            }
            if (k >= 64)
                throw ResourceError("canonical_height: iteration cap 64 reached");
            size_t bits = 0;
            for (auto& x : v) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
            if (bits > (1u << 26))
                throw ResourceError("canonical_height: coordinate size cap exceeded");
            seen.emplace(v, k);
            v = apply_map_int(f, v);
            k++;
            Dk *= f.D;
        }
    }
    // algebraic coordinates: symbolic iteration to depth <= 3
    std::vector<AlgebraicNumber> cur(P.coords());
    unsigned k = 0;
    double Dk = 1;
    while (true) {
        double tail = Rhi / ((double)(f.D - 1) * Dk);
        if (tail <= tolerance) {
            RInt hk = projective_height(ProjectiveTuple{cur}).interval();
            return finish(hk / RInt::from_double(Dk), k);
        }
        if (k >= 3)
            throw ResourceError(
                "canonical_height: tolerance unreachable at symbolic depth 3 "
                "(rational coordinates required for deep iteration)");
        std::vector<AlgebraicNumber> next;
        for (size_t i = 0; i <= f.n; i++) next.push_back(eval_mpoly_algebraic(f.forms[i], cur));
        cur = std::move(next);
        k++;
        Dk *= f.D;
    }
}

DynConstants dyn_constants(unsigned n, unsigned D) {
    if (n < 1) throw DomainError("dyn_constants: n >= 1 required");
    if (D < 2) throw DomainError("dyn_constants: D >= 2 required");
    mpfr_prec_t prec = default_precision();
    DynConstants out;
    // C1 = 5 n D^(n+1)
    mpz_class dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), D, n + 1);
    out.c1 = 5 * mpz_class(n) * dp;
    // C2 = 3^n n^(n+1) (2D)^(n 2^(n+4) D^n)
    mpz_class expo = mpz_class(n) << (n + 4);
    mpz_class Dn;
    mpz_ui_pow_ui(Dn.get_mpz_t(), D, n);
    expo *= Dn;
    RInt l2d = RInt::exact(mpz_class(2 * (long)D), prec).log();
    RInt l3 = RInt::exact(3, prec).log();
    RInt ln = RInt::exact(mpz_class(n), prec).log();
    out.log_c2 = l3.mul_si((long)n) + ln.mul_si((long)n + 1) + l2d * RInt::exact(expo, prec);
    if (expo * (long)(mpz_sizeinbase(mpz_class(2 * (long)D).get_mpz_t(), 2)) <
        mpz_class(1) << 22) {
        mpz_class base(2 * (long)D), pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), expo.get_ui());
        mpz_class n1;
        mpz_ui_pow_ui(n1.get_mpz_t(), n, n + 1);
        mpz_class three;
        mpz_ui_pow_ui(three.get_mpz_t(), 3, n);
        out.c2 = three * n1 * pw;
        out.c2_exact = true;
    }
    return out;
}

CertifiedValue call_silverman_gap(const CertifiedValue& R, double alpha) {
    if (alpha <= 1) throw DomainError("call_silverman_gap: alpha must exceed 1");
    RInt denom = RInt::from_double(alpha) - RInt::exact(1);
    return CertifiedValue(R.interval() / denom);
}

PreperiodicResult preperiodic_test(const ProjectiveSelfMap& f, const ProjectiveTuple& P,
                                   unsigned budget) {
    if (!P.all_rational())
        throw DomainError("preperiodic_test: rational coordinates required");
    PreperiodicResult out;
    std::vector<mpz_class> v = clear_denominators(P.rationals());
    std::map<std::vector<mpz_class>, unsigned> seen;
    for (unsigned k = 0; k <= budget; k++) {
        auto it = seen.find(v);
        if (it != seen.end()) {
            out.status = PreperiodicStatus::Preperiodic;
            out.preperiod = it->second;
            out.period = k - it->second;
            return out;
        }
        seen.emplace(v, k);
        size_t bits = 0;
        for (auto& x : v) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
        if (bits > (1u << 24)) break; // height clearly exploding
        v = apply_map_int(f, v);
    }
    // no revisit: try to certify hhat > 0
    try {
        auto ch = canonical_height(f, P, 1e-6);
        if (ch.value.interval().strictly_positive()) {
            out.status = PreperiodicStatus::NotPreperiodic;
            out.hhat_lower = ch.value.interval().lo_d();
            return out;
        }
    } catch (const ResourceError&) {
        // fall through to inconclusive
    }
    out.status = PreperiodicStatus::Inconclusive;
    return out;
}

ProjectiveSelfMap lattes_duplication(const mpq_class& a, const mpq_class& b) {
    mpq_class disc = 4 * a * a * a + 27 * b * b;
    if (disc == 0) throw DomainError("lattes_duplication: singular curve");
    // F0 = (x^2 - a z^2)^2 - 8 b x z^3, F1 = 4 z (x^3 + a x z^2 + b z^3)
    MPoly x = MPoly::variable(2, 0), z = MPoly::variable(2, 1);
    MPoly x2 = x * x, z2 = z * z;
    MPoly inner = x2 - z2.mul_scalar(a);
    MPoly F0 = inner * inner - (x * z * z2).mul_scalar(b * 8);
    MPoly F1 = (z * (x * x2 + (x * z2).mul_scalar(a) + (z * z2).mul_scalar(b))).mul_scalar(4);
    return make_selfmap({F0, F1});
}

} // namespace nkit
