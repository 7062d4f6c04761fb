#include "nkit/cm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "nkit/errors.hpp"

namespace nkit {

bool is_fundamental_discriminant(long disc) {
    if (disc >= 0) return false;
    long m = -disc;
    auto squarefree = [](long n) {
        for (long p = 2; p * p <= n; p++) {
            if (n % (p * p) == 0) return false;
            while (n % p == 0) n /= p;
        }
        return true;
    };
    long r = ((disc % 4) + 4) % 4;
    if (r == 1) return squarefree(m);
    if (r == 0) {
        long q = disc / 4;
        long qr = ((q % 4) + 4) % 4;
        if (qr != 2 && qr != 3) return false;
        return squarefree(-q);
    }
    return false;
}

std::vector<ReducedForm> reduced_forms(long disc) {
    if (!is_fundamental_discriminant(disc))
        throw DomainError("reduced_forms: not a fundamental discriminant < 0");
    std::vector<ReducedForm> out;
    long m = -disc;
    for (long a = 1; 3 * a * a <= m; a++) {
        for (long b = -a; b <= a; b++) {
            long num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue; // boundary sign rule
            if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end(), [](const ReducedForm& x, const ReducedForm& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    return out;
}

namespace {

CInt cint_mul_r(const CInt& z, const RInt& s) { return {z.re * s, z.im * s}; }

/* widen a complex enclosure by a relative error bound eps (tail factors) */
CInt widen_rel(const CInt& z, const RInt& eps) {
    RInt mag = z.abs() * eps;
    RInt pad = RInt::hull(-mag, mag);
    return {z.re + pad, z.im + pad};
}

} // namespace

CInt j_value(const ReducedForm& form, long disc, mpfr_prec_t prec) {
    // q = exp(2 pi i tau), tau = (-b + i sqrt|disc|) / (2a)
    RInt pi = RInt::pi(prec);
    RInt sq = RInt::exact(mpz_class(-disc), prec).sqrt();
    RInt modulus = (-(pi * sq) / RInt::exact((long)form.a, prec)).exp();
    RInt theta = -(pi * RInt::exact((long)form.b, prec)) / RInt::exact((long)form.a, prec);
    CInt q{modulus * theta.cos(), modulus * theta.sin()};
    // truncation length: |q|^N below 2^-(prec+32)
    double lq = modulus.hi_d() > 0 ? std::log2(modulus.hi_d()) : -1e9;
    long N = (long)std::ceil((double)(prec + 48) / std::max(1e-9, -lq)) + 4;
    if (N < 8) N = 8;
    // powers of q
    std::vector<CInt> qp((size_t)N + 1, CInt{RInt::exact(1, prec), RInt::exact(0, prec)});
    for (long i = 1; i <= N; i++) qp[(size_t)i] = qp[(size_t)i - 1] * q;
    // E4 = 1 + 240 sum sigma3(n) q^n, tail <= 252 (N+1)^3 |q|^(N+1)
    std::vector<mpz_class> sigma3((size_t)N + 1, 0);
    for (long d = 1; d <= N; d++) {
        mpz_class d3 = mpz_class(d) * d * d;
        for (long n = d; n <= N; n += d) sigma3[(size_t)n] += d3;
    }
    CInt e4{RInt::exact(1, prec), RInt::exact(0, prec)};
    for (long n = 1; n <= N; n++) {
        CInt term = cint_mul_r(qp[(size_t)n], RInt::exact(mpz_class(sigma3[(size_t)n] * 240), prec));
        e4 = e4 + term;
    }
    {
        RInt tail = RInt::exact(mpz_class(mpz_class(252) * (N + 1) * (N + 1) * (N + 1)), prec) *
                    modulus.pow_ui((unsigned long)(N + 1));
        RInt pad = RInt::hull(-tail, tail);
        e4 = CInt{e4.re + pad, e4.im + pad};
    }
    // eta product P = prod (1 - q^n); |log tail| <= |q|^(N+1)/(1-|q|)^2
    CInt P{RInt::exact(1, prec), RInt::exact(0, prec)};
    for (long n = 1; n <= N; n++) {
        CInt f{RInt::exact(1, prec) - qp[(size_t)n].re, -qp[(size_t)n].im};
        P = P * f;
    }
    {
        RInt one = RInt::exact(1, prec);
        RInt tail_log = modulus.pow_ui((unsigned long)(N + 1)) /
                        ((one - modulus) * (one - modulus));
        // |G - 1| <= exp(t) - 1
        RInt g = tail_log.exp() - one;
        P = widen_rel(P, g);
    }
    // j = E4^3 / (q * P^24)
    CInt p2 = P * P;
    CInt p4 = p2 * p2;
    CInt p8 = p4 * p4;
    CInt p24 = p8 * p8 * p8;
    CInt delta = q * p24;
    CInt e43 = e4 * e4 * e4;
    if (delta.contains_zero())
        throw ResourceError("j_value: discriminant enclosure hit zero; raise precision");
    return e43 / delta;
}

IntPolynomial class_polynomial(long disc, mpfr_prec_t working_precision) {
    auto forms = reduced_forms(disc);
    size_t h = forms.size();
    // initial precision from the coefficient-size estimate
    double bits_estimate = 0;
    for (auto& f : forms) bits_estimate += M_PI * std::sqrt((double)-disc) / (double)f.a;
    bits_estimate = bits_estimate / std::log(2.0) + 16.0 * (double)h + 96.0;
    mpfr_prec_t prec = working_precision > 0 ? working_precision
                                             : (mpfr_prec_t)std::min(bits_estimate, 1e5);
    for (; prec <= 100000; prec *= 2) {
        std::vector<CInt> js;
        js.reserve(h);
        for (auto& f : forms) js.push_back(j_value(f, disc, prec));
        // expand prod (x - j_i) with interval coefficients
        std::vector<CInt> coeff{CInt{RInt::exact(1, prec), RInt::exact(0, prec)}};
        for (auto& j : js) {
            std::vector<CInt> next(coeff.size() + 1,
                                   CInt{RInt::exact(0, prec), RInt::exact(0, prec)});
            for (size_t i = 0; i < coeff.size(); i++) {
                next[i + 1] = next[i + 1] + coeff[i];
                next[i] = next[i] - coeff[i] * j;
            }
            coeff = std::move(next);
        }
        // accept when every coefficient encloses a unique integer tightly
        std::vector<mpz_class> ic(coeff.size());
        bool ok = true;
        for (size_t i = 0; i + 1 < coeff.size() && ok; i++) {
            const CInt& ci = coeff[i];
            if (!ci.im.contains_zero()) ok = false;
            if (ci.re.width_d() > std::ldexp(1.0, -16)) ok = false;
            if (!ok) break;
            mpz_class lo, hi;
            mpfr_get_z(lo.get_mpz_t(), ci.re.lo(), MPFR_RNDU);
            mpfr_get_z(hi.get_mpz_t(), ci.re.hi(), MPFR_RNDD);
            if (lo != hi) ok = false;
            ic[i] = lo;
        }
        if (ok) {
            ic.back() = 1;
            return IntPolynomial(std::move(ic));
        }
    }
    throw ResourceError("class_polynomial: precision cap 1e5 bits exceeded");
}

std::vector<CMProfileRow> cm_profile(const std::vector<long>& discs, unsigned threads) {
    std::vector<CMProfileRow> rows(discs.size());
    std::vector<std::exception_ptr> errs(discs.size());
    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; i++) {
            try {
                long disc = discs[i];
                auto forms = reduced_forms(disc);
                mpfr_prec_t prec = 160;
                CMProfileRow row;
                row.disc = disc;
                row.class_number = forms.size();
                RInt hsum(prec), hmax(prec);
                for (int attempt = 0;; attempt++) {
                    hsum = RInt::exact(0, prec);
                    hmax = RInt::exact(0, prec);
                    for (auto& f : forms) {
                        CInt j = j_value(f, disc, prec);
                        RInt a2 = j.abs2();
                        RInt lp = RInt::max(a2, RInt::exact(1, prec)).log().div_ui(2);
                        hsum = hsum + lp;
                        hmax = RInt::max(hmax, lp);
                    }
                    if ((hsum.width_d() < 1e-9 && hmax.width_d() < 1e-9) || attempt >= 6)
                        break;
                    prec *= 2;
                }
                row.height = CertifiedValue(hsum.div_ui((unsigned long)forms.size()));
                row.house_log = CertifiedValue(hmax);
                double sq = std::sqrt((double)-disc);
                row.ratio_h = row.height.mid() / sq;
                row.ratio_house = row.house_log.mid() / sq;
                rows[i] = row;
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1 || discs.size() < 2) {
        work(0, discs.size());
    } else {
        unsigned nt = std::min<unsigned>(threads, (unsigned)discs.size());
        std::vector<std::thread> pool;
        size_t chunk = (discs.size() + nt - 1) / nt;
        for (unsigned t = 0; t < nt; t++) {
            size_t lo = t * chunk, hi = std::min(discs.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return rows;
}

WeightedProbeSummary weighted_exponent_probe(const std::vector<CMProfileRow>& rows,
                                             double gamma) {
    if (rows.size() < 5)
        throw DomainError("weighted_exponent_probe: need at least 5 rows");
    std::vector<CMProfileRow> sorted = rows;
    std::sort(sorted.begin(), sorted.end(),
              [](const CMProfileRow& a, const CMProfileRow& b) { return -a.disc < -b.disc; });
    WeightedProbeSummary out;
    out.gamma = gamma;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& r : sorted) {
        double v = std::pow((double)r.class_number, gamma) * r.height.mid();
        double x = std::sqrt((double)-r.disc);
        out.discs.push_back(r.disc);
        out.values.push_back(v);
        sx += x;
        sy += v;
        sxx += x * x;
        sxy += x * v;
    }
    double n = (double)sorted.size();
    out.max_value = *std::max_element(out.values.begin(), out.values.end());
    out.min_value = *std::min_element(out.values.begin(), out.values.end());
    out.trend_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

std::vector<long> fundamental_discriminants(long abs_min, long abs_max) {
    std::vector<long> out;
    for (long m = std::max(3L, abs_min); m <= abs_max; m++)
        if (is_fundamental_discriminant(-m)) out.push_back(-m);
    return out;
}

} // namespace nkit
