#include "nkit/northcott.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nkit/errors.hpp"

namespace nkit {

namespace {

RInt clamp0(const RInt& v) {
    return RInt::max(v, RInt::exact(0, v.precision()));
}

RInt log_binom(unsigned d, unsigned j, mpfr_prec_t prec) {
    return RInt::exact(binomial(d, j), prec).log();
}

} // namespace

NorthcottBoundReport nc_lower_bound(const mpq_class& C, unsigned d, BoundMode mode) {
    if (d == 0) throw DomainError("nc_lower_bound: d must be >= 1");
    if (C < 0) throw DomainError("nc_lower_bound: C must be >= 0");
    mpfr_prec_t prec = default_precision();
    NorthcottBoundReport rep;
    rep.direction = "lower";
    rep.metric = "weil";
    RInt Ci = RInt::exact(C, prec);
    if (mode == BoundMode::Simple) {
        // (C - d log 2) / (d 2^d), clamped at 0
        mpz_class d2d = mpz_class(d) << d;
        RInt v = (Ci - RInt::log2(prec).mul_si((long)d)) / RInt::exact(d2d, prec);
        rep.aggregate = CertifiedValue(clamp0(v));
        rep.aggregation_rule = "theorem_simple";
        return rep;
    }
    if (mode != BoundMode::Optimal)
        throw DomainError("nc_lower_bound: mode must be simple or optimal");
    RInt best;
    bool first = true;
    for (unsigned j = 1; j <= d; j++) {
        RInt den = RInt::exact(mpz_class(binomial(d, j) * j), prec);
        RInt v = (Ci - log_binom(d, j, prec)) / den;
        rep.per_j.emplace(j, CertifiedValue(v));
        best = first ? v : RInt::min(best, v);
        first = false;
    }
    rep.aggregate = CertifiedValue(clamp0(best));
    rep.aggregation_rule = "min_over_j";
    return rep;
}

NorthcottBoundReport nc_house_lower_bound(const mpq_class& C, unsigned d, BoundMode mode) {
    if (d == 0) throw DomainError("nc_house_lower_bound: d must be >= 1");
    if (C < 0) throw DomainError("nc_house_lower_bound: C must be >= 0");
    mpfr_prec_t prec = default_precision();
    NorthcottBoundReport rep;
    rep.direction = "lower";
    rep.metric = "house";
    RInt Ci = RInt::exact(C, prec);
    if (mode == BoundMode::Simple) {
        // C^(1/d) / 2^d
        RInt v = Ci.root_ui(d).mul_2exp(-(long)d);
        rep.aggregate = CertifiedValue(v);
        rep.aggregation_rule = "theorem_simple";
        return rep;
    }
    if (mode != BoundMode::Optimal)
        throw DomainError("nc_house_lower_bound: mode must be simple or optimal");
    RInt best;
    bool first = true;
    for (unsigned j = 1; j <= d; j++) {
        RInt v = Ci.root_ui(j) / RInt::exact(binomial(d, j), prec);
        rep.per_j.emplace(j, CertifiedValue(v));
        best = first ? v : RInt::min(best, v);
        first = false;
    }
    rep.aggregate = CertifiedValue(best);
    rep.aggregation_rule = "min_over_j";
    return rep;
}

NorthcottBoundReport nc_upper_bound(const mpq_class& C, unsigned d, BoundMode mode) {
    if (d == 0) throw DomainError("nc_upper_bound: d must be >= 1");
    if (C < 0) throw DomainError("nc_upper_bound: C must be >= 0");
    mpfr_prec_t prec = default_precision();
    NorthcottBoundReport rep;
    rep.direction = "upper";
    rep.metric = "weil";
    RInt Ci = RInt::exact(C, prec);
    if (mode == BoundMode::Simple) {
        mpz_class d2d = mpz_class(d) << d;
        RInt v = Ci * RInt::exact(d2d, prec) + RInt::log2(prec).mul_si((long)d);
        rep.aggregate = CertifiedValue(v);
        rep.aggregation_rule = "theorem_simple";
        return rep;
    }
    if (mode != BoundMode::PerJConservative)
        throw DomainError("nc_upper_bound: mode must be simple or per_j_conservative");
    // per-j values binom(d,j)*j*C + log binom(d,j); the sound aggregate is
    // the max over j (pigeonhole over which coefficient slot varies)
    RInt best;
    bool first = true;
    for (unsigned j = 1; j <= d; j++) {
        RInt v = Ci * RInt::exact(mpz_class(binomial(d, j) * j), prec) + log_binom(d, j, prec);
        rep.per_j.emplace(j, CertifiedValue(v));
        best = first ? v : RInt::max(best, v);
        first = false;
    }
    rep.aggregate = CertifiedValue(best);
    rep.aggregation_rule = "max_over_j";
    return rep;
}

double relative_floor(double t, double c) {
    if (t < 0 || c < 0) throw DomainError("relative_floor: t, c must be >= 0");
    return std::max(t - c, 0.0);
}

bool is_prime_checked(const mpz_class& n, bool* proven) {
    if (n < 2) {
        if (proven) *proven = true;
        return false;
    }
    if (mpz_cmp_ui(n.get_mpz_t(), 1) > 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // deterministic Miller-Rabin base set for n < 2^64
        static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        if (proven) *proven = true;
        for (unsigned long b : bases) {
            if (mpz_cmp_ui(n.get_mpz_t(), b) == 0) return true;
            if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
        }
        mpz_class d = n - 1;
        unsigned long s = 0;
        while (mpz_even_p(d.get_mpz_t())) {
            d >>= 1;
            s++;
        }
        for (unsigned long b : bases) {
            mpz_class x, base(b);
            mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            if (x == 1 || x == n - 1) continue;
            bool composite = true;
            for (unsigned long r = 1; r < s; r++) {
                x = (x * x) % n;
                if (x == n - 1) {
                    composite = false;
                    break;
                }
            }
            if (composite) return false;
        }
        return true;
    }
    if (proven) *proven = false; // probabilistic beyond 64 bits, flagged
    return mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
}

TowerSpec build_tower(const mpq_class& t, unsigned count) {
    if (t <= 0) throw DomainError("build_tower: t must be > 0");
    if (count == 0) throw DomainError("build_tower: count must be >= 1");
    TowerSpec spec;
    spec.t = t;
    mpfr_prec_t prec = std::max<mpfr_prec_t>(default_precision(), 192);
    RInt target = (RInt::exact(t, prec) * RInt::exact(2, prec)).exp(); // e^(2t)
    mpz_class prev_p = 0;
    unsigned long d = 0;
    for (unsigned i = 1; i <= count; i++) {
        RInt eps = RInt::exact(1, prec).mul_2exp(-(long)i);
        RInt lo = target - eps, hi = target + eps;
        if (!lo.strictly_positive())
            throw DomainError("build_tower: interval reaches below zero; t too small");
        bool found = false;
        for (unsigned long dc = d + 1; dc <= d + 64 && !found; dc++) {
            RInt plo = lo.pow_ui(dc), phi = hi.pow_ui(dc);
            if (phi.hi_d() > std::ldexp(1.0, 512))
                throw ResourceError("build_tower: integer size cap 2^512 exceeded after " +
                                    std::to_string(spec.steps.size()) + " steps");
            // candidate integers certifiably inside (plo, phi):
            // floor(plo.hi)+1 .. ceil(phi.lo)-1
            mpz_class n_start;
            mpfr_get_z(n_start.get_mpz_t(), plo.hi(), MPFR_RNDD);
            n_start += 1;
            mpz_class n_end;
            mpfr_get_z(n_end.get_mpz_t(), phi.lo(), MPFR_RNDU);
            n_end -= 1;
            for (mpz_class n = std::max(n_start, mpz_class(prev_p + 1)); n <= n_end; n++) {
                bool proven = true;
                if (!is_prime_checked(n, &proven)) continue;
                // recheck the invariant |p^(1/d) - e^2t| <= eps exactly
                RInt root = RInt::exact(n, prec).root_ui(dc);
                if (!(root - target).abs().le(eps)) continue;
                spec.steps.push_back(TowerStep{n, dc, proven});
                prev_p = n;
                d = dc;
                found = true;
                break;
            }
        }
        if (!found)
            throw ResourceError("build_tower: no admissible prime found at step " +
                                std::to_string(i));
    }
    return spec;
}

bool verify_tower(const TowerSpec& spec) {
    mpfr_prec_t prec = std::max<mpfr_prec_t>(default_precision(), 192);
    RInt target = (RInt::exact(spec.t, prec) * RInt::exact(2, prec)).exp();
    mpz_class prev = 0;
    for (size_t i = 0; i < spec.steps.size(); i++) {
        const auto& s = spec.steps[i];
        if (s.p <= prev) return false;
        bool proven;
        if (!is_prime_checked(s.p, &proven)) return false;
        RInt eps = RInt::exact(1, prec).mul_2exp(-(long)(i + 1));
        RInt root = RInt::exact(s.p, prec).root_ui(s.d);
        if (!(root - target).abs().le(eps)) return false;
        prev = s.p;
    }
    return true;
}

HeightCutoff HeightCutoff::log_rational(const mpq_class& q) {
    if (q < 1) throw DomainError("HeightCutoff: q must be >= 1");
    HeightCutoff c;
    c.is_log_rational = true;
    c.q = q;
    c.q.canonicalize();
    c.value = std::log(q.get_d());
    return c;
}

HeightCutoff HeightCutoff::plain(double v) {
    if (v < 0) throw DomainError("HeightCutoff: cutoff must be >= 0");
    if (v == 0) return log_rational(1);
    HeightCutoff c;
    c.value = v;
    return c;
}

RInt HeightCutoff::as_interval(mpfr_prec_t prec) const {
    if (is_log_rational) {
        if (q == 1) return RInt::exact(0, prec);
        return RInt::exact(q, prec).log();
    }
    return RInt::from_double(value, prec);
}

double HeightCutoff::approx() const { return is_log_rational ? std::log(q.get_d()) : value; }

namespace {

/* the unique root of squarefree g inside a certified box */
AlgebraicNumber root_in_box(const IntPolynomial& g, const CInt& box) {
    CInt b = box;
    auto enclose = [&](double r) {
        if (b.width_d() * 0.5 > r) b = refine_root_box(g, b, r);
        return b;
    };
    return algebraic_from_vanishing(g, enclose);
}

/* exact |z| == 1 decision for a conjugate pair of boxes: the product
 * z * conj(z) is an exact algebraic computation */
bool root_on_unit_circle(const IntPolynomial& f, const CInt& bz, const CInt& bc) {
    AlgebraicNumber z = root_in_box(f, bz);
    AlgebraicNumber zc = root_in_box(f, bc);
    AlgebraicNumber prod = alg_mul(z, zc);
    return prod.is_rational() && prod.as_rational() == 1;
}

} // namespace

bool mahler_at_most(const IntPolynomial& f0, const mpq_class& bound) {
    if (f0.is_zero()) throw DomainError("mahler_at_most: zero polynomial");
    // quick interval decision
    for (double r : {1e-8, 1e-20, 1e-40}) {
        (void)r;
        RInt m = log_mahler_measure(f0).interval().exp();
        RInt b = RInt::exact(bound, m.precision());
        if (m.le(b)) return true;
        if (b.lt(m)) return false;
        break; // straddles: go exact
    }
    // exact tie-break: M = |content| * |lc'| * prod over off-circle roots;
    // on-circle roots are detected via z * conj(z) == 1
    IntPolynomial f = f0.primitive_part();
    mpz_class cont = f0.content();
    auto layers = squarefree_decomposition(f);
    // exact Mahler measure as an algebraic number: product over factors
    AlgebraicNumber M = AlgebraicNumber::from_rational(mpq_class(::abs(cont)));
    for (size_t li = 0; li < layers.size(); li++) {
        const IntPolynomial& g = layers[li];
        if (g.degree() < 0) continue;
        unsigned mult = (unsigned)(li + 1);
        AlgebraicNumber lm = AlgebraicNumber::from_rational(mpq_class(::abs(g.leading())));
        // conjugate boxes at modest radius; pair and classify
        double r = 1e-10;
        auto boxes = isolate_roots(g, r);
        std::vector<int> state(boxes.size(), 0); // 1 outside, -1 inside/on
        for (size_t i = 0; i < boxes.size(); i++) {
            RInt a2 = boxes[i].abs2();
            RInt one = RInt::exact(1, a2.precision());
            if (one.lt(a2)) state[i] = 1;
            else if (a2.le(one)) state[i] = -1;
            else {
                // straddling 1: find the conjugate box and decide exactly
                size_t jc = i;
                for (size_t j = 0; j < boxes.size(); j++) {
                    if (j == i) continue;
                    if (!boxes[j].re.disjoint(boxes[i].re) &&
                        !boxes[j].im.disjoint(CInt{boxes[i].re, -boxes[i].im}.im)) {
                        jc = j;
                        break;
                    }
                }
                if (jc == i && boxes[i].im.contains_zero()) {
                    // real root straddling +-1: it cannot equal +-1 (g would
                    // have a rational root; factor-out makes that a separate
                    // linear layer), so refine until decided
                    double rr = r;
                    CInt bx = boxes[i];
                    for (int round = 0; round < 60; round++) {
                        rr /= 1024;
                        bx = refine_root_box(g, bx, rr);
                        RInt aa = bx.abs2();
                        if (one.lt(aa)) { state[i] = 1; break; }
                        if (aa.le(one)) { state[i] = -1; break; }
                    }
                    if (state[i] == 0)
                        throw ResourceError("mahler_at_most: undecided real root");
                } else if (root_on_unit_circle(g, boxes[i], boxes[jc])) {
                    state[i] = -1; // contributes max(1,1) = 1
                } else {
                    // off circle but close: refine until decided
                    double rr = r;
                    CInt bx = boxes[i];
                    for (int round = 0; round < 60 && state[i] == 0; round++) {
                        rr /= 1024;
                        bx = refine_root_box(g, bx, rr);
                        RInt aa = bx.abs2();
                        if (one.lt(aa)) state[i] = 1;
                        else if (aa.le(one)) state[i] = -1;
                    }
                    if (state[i] == 0)
                        throw ResourceError("mahler_at_most: undecided root");
                }
            }
        }
        // exact product of outside roots (closed under conjugation)
        for (size_t i = 0; i < boxes.size(); i++) {
            if (state[i] != 1) continue;
            AlgebraicNumber zi = root_in_box(g, boxes[i]);
            lm = alg_mul(lm, zi);
        }
        // |lm| accumulated per layer with multiplicity
        for (unsigned c = 0; c < mult; c++) M = alg_mul(M, lm);
    }
    // M is real (product closed under conjugation); compare |M| with bound
    if (M.is_rational()) {
        mpq_class v = ::abs(M.as_rational());
        return v <= bound;
    }
    // irrational exact measure: never equals the rational bound; refine
    for (double r = 1e-10; r > 1e-200; r /= 1024) {
        CInt e = M.enclosure(r);
        RInt av = e.abs();
        RInt b = RInt::exact(bound, av.precision());
        if (av.le(b)) return true;
        if (b.lt(av)) return false;
    }
    throw ResourceError("mahler_at_most: comparison did not settle");
}

std::vector<AlgebraicNumber> enumerate_bounded(unsigned d, const HeightCutoff& B) {
    if (d == 0 || d > 6) throw DomainError("enumerate_bounded: need 1 <= d <= 6");
    if (B.approx() > 5.0) throw DomainError("enumerate_bounded: cutoff cap 5 exceeded");
    std::vector<AlgebraicNumber> out;
    for (unsigned k = 1; k <= d; k++) {
        // coefficient bound: |a_j| <= binom(k, floor(k/2)) * e^(kB)
        RInt ekb = B.as_interval().mul_si((long)k).exp();
        mpz_class margin;
        mpfr_get_z(margin.get_mpz_t(), ekb.hi(), MPFR_RNDU);
        mpz_class cap = binomial(k, k / 2) * margin;
        if (cap > 2000000)
            throw ResourceError("enumerate_bounded: candidate space too large");
        long capl = (long)cap.get_si();
        // iterate coefficient vectors a_0..a_k, a_k >= 1
        std::vector<long> a(k + 1, -capl);
        a[k] = 1;
        while (true) {
            // build polynomial
            std::vector<mpz_class> c(k + 1);
            for (size_t i = 0; i <= k; i++) c[i] = a[i];
            IntPolynomial f(std::move(c));
            bool take = f.degree() == (long)k && f.is_content_normalized();
            if (take && k >= 2 && f[0] == 0) take = false; // x | f, reducible
            if (take) take = is_irreducible(f);
            if (take) {
                bool ok = B.is_log_rational
                              ? mahler_at_most(f, [&] {
                                    mpz_class num;
                                    mpz_pow_ui(num.get_mpz_t(), B.q.get_num().get_mpz_t(), k);
                                    mpz_class den;
                                    mpz_pow_ui(den.get_mpz_t(), B.q.get_den().get_mpz_t(), k);
                                    return mpq_class(num, den);
                                }())
                              : log_mahler_measure(f).interval().le(
                                    B.as_interval().mul_si((long)k));
                if (ok)
                    for (size_t ri = 0; ri < k; ri++) out.push_back(root_of(f, ri));
            }
            // increment (a_k stays >= 1)
            size_t pos = 0;
            while (pos <= k) {
                a[pos]++;
                if (a[pos] <= capl) break;
                a[pos] = (pos + 1 == k + 1) ? 1 : -capl;
                pos++;
            }
            if (pos > k) break;
        }
    }
    return out;
}

std::vector<AlgebraicNumber> tower_field_elements(const TowerSpec& spec, unsigned k,
                                                  unsigned degree_cap,
                                                  const HeightCutoff& B) {
    if (k > spec.steps.size())
        throw DomainError("tower_field_elements: truncation beyond tower length");
    unsigned long deg_product = 1;
    for (unsigned i = 0; i < k; i++) {
        deg_product *= spec.steps[i].d;
        if (deg_product > degree_cap || degree_cap > 64)
            throw DomainError("tower_field_elements: degree cap exceeded");
    }
    std::vector<AlgebraicNumber> out;
    // rationals of height <= B (k = 0 base field)
    for (auto& x : enumerate_bounded(1, B)) out.push_back(x);
    if (k == 0) return out;
    // depth-1 radicals: r * p_i^(a/d_i)
    long rcap = (long)std::ceil(std::exp(B.approx())) + 1;
    RInt Bi = B.as_interval();
    for (unsigned i = 0; i < k; i++) {
        const auto& st = spec.steps[i];
        if (st.d == 1) continue; // field contribution is rational
        for (unsigned long a = 1; a < st.d; a++) {
            mpz_class pa;
            mpz_pow_ui(pa.get_mpz_t(), st.p.get_mpz_t(), a);
            AlgebraicNumber rad = nth_root(mpq_class(pa), st.d);
            if (rad.is_rational()) continue;
            for (long num = -rcap; num <= rcap; num++) {
                if (num == 0) continue;
                for (long den = 1; den <= rcap; den++) {
                    if (std::gcd(std::abs(num), den) != 1) continue;
                    AlgebraicNumber x = alg_scale(rad, mpq_class(num, den));
                    if ((unsigned long)x.degree() > degree_cap) continue;
                    RInt h = weil_height(x).interval();
                    if (!h.le(Bi)) continue; // skip on straddle: sound sample
                    bool dup = false;
                    for (auto& y : out)
                        if (y.degree() == x.degree() && y.minpoly() == x.minpoly() &&
                            y.same_number(x)) {
                            dup = true;
                            break;
                        }
                    if (!dup) out.push_back(x);
                }
            }
        }
    }
    return out;
}

} // namespace nkit
