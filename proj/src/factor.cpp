#include "nkit/factor.hpp"

#include <algorithm>
#include <bitset>
#include <functional>

#include "nkit/errors.hpp"
#include "nkit/modp.hpp"

namespace nkit {

namespace {

constexpr size_t kMaskBits = 512;
using DegMask = std::bitset<kMaskBits>;

// fixed table of primes just below 2^20 (products accumulate safely in u64)
const uint64_t kPrimes[] = {
    1048573, 1048571, 1048559, 1048549, 1048517, 1048507, 1048447, 1048433,
    1048423, 1048391, 1048387, 1048367, 1048361, 1048357, 1048343, 1048309,
    1048291, 1048273, 1048261, 1048219, 1048217, 1048213, 1048193, 1048189,
    1048139, 1048129, 1048127, 1048123, 1048063, 1048051, 1048049, 1048043,
};
constexpr int kMaxPatternPrimes = 10;

DegMask subset_sums(const std::vector<long>& degs, long n) {
    DegMask s;
    s.set(0);
    for (long d : degs) s |= s << (size_t)d;
    DegMask cut;
    for (long i = 0; i <= n && i < (long)kMaskBits; i++) cut.set((size_t)i);
    return s & cut;
}

mpz_class mignotte_bound(const IntPolynomial& f) {
    // |coeff of any factor| <= 2^deg * ||f||_2; generous but safe
    mpz_class s = 0;
    for (const auto& c : f.coeffs()) s += c * c;
    mpz_class norm = sqrt(s) + 1;
    mpz_class b;
    mpz_ui_pow_ui(b.get_mpz_t(), 2, (unsigned long)f.degree() + 1);
    return b * norm;
}

IntPolynomial from_modp(const modp::Poly& a) {
    std::vector<mpz_class> c(a.size());
    for (size_t i = 0; i < a.size(); i++) c[i] = mpz_class((unsigned long)a[i]);
    return IntPolynomial(std::move(c));
}

IntPolynomial mod_q(const IntPolynomial& f, const mpz_class& q) {
    std::vector<mpz_class> c(f.coeffs());
    for (auto& v : c) {
        v %= q;
        if (v < 0) v += q;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial balance(const IntPolynomial& f, const mpz_class& q) {
    std::vector<mpz_class> c(f.coeffs());
    mpz_class half = q / 2;
    for (auto& v : c) {
        v %= q;
        if (v < 0) v += q;
        if (v > half) v -= q;
    }
    return IntPolynomial(std::move(c));
}

// division with remainder by a monic divisor, coefficients in Z/q
void divmod_monic_q(const IntPolynomial& a0, const IntPolynomial& m,
                    const mpz_class& q, IntPolynomial& quot, IntPolynomial& rem) {
    IntPolynomial a = mod_q(a0, q);
    if (m.degree() < 0) throw DivisionByZero("divmod by zero");
    std::vector<mpz_class> qc;
    if (a.degree() >= m.degree())
        qc.assign((size_t)(a.degree() - m.degree() + 1), 0);
    while (a.degree() >= m.degree()) {
        mpz_class c = a.leading();
        size_t shift = (size_t)(a.degree() - m.degree());
        qc[shift] = c;
        a = mod_q(a - IntPolynomial::monomial(c, shift) * m, q);
    }
    quot = IntPolynomial(std::move(qc));
    rem = a;
}

// extended gcd over F_p: s*a + t*b = 1 for coprime a, b
void modp_ext_gcd(const modp::Poly& a, const modp::Poly& b, uint64_t p,
                  modp::Poly& s_out, modp::Poly& t_out) {
    using namespace modp;
    Poly r0 = a, r1 = b;
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // qq, rr = divmod(r0, r1)
        Poly rr = r0;
        trim(rr);
        Poly qq;
        if (rr.size() >= r1.size()) qq.assign(rr.size() - r1.size() + 1, 0);
        uint64_t inv = inv_mod(r1.back(), p);
        while (rr.size() >= r1.size() && !rr.empty()) {
            uint64_t c = rr.back() % p;
            if (c) {
                c = c * inv % p;
                size_t shift = rr.size() - r1.size();
                qq[shift] = c;
                for (size_t j = 0; j < r1.size(); j++)
                    rr[shift + j] = (rr[shift + j] + p - c * r1[j] % p) % p;
            }
            rr.pop_back();
            trim(rr);
        }
        trim(qq);
        Poly s2 = sub(s0, mul(qq, s1, p), p);
        Poly t2 = sub(t0, mul(qq, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rr);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (degree(r0) != 0) throw DomainError("ext_gcd: inputs not coprime");
    uint64_t inv = inv_mod(r0[0], p);
    for (auto& v : s0) v = v * inv % p;
    for (auto& v : t0) v = v * inv % p;
    s_out = s0;
    t_out = t0;
}

/* One quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10):
 * given monic fstar ≡ g*h (mod q) with s*g + t*h ≡ 1 (mod q), produces the
 * same data mod q^2.  g, h monic. */
void hensel_step(const IntPolynomial& fstar, IntPolynomial& g, IntPolynomial& h,
                 IntPolynomial& s, IntPolynomial& t, const mpz_class& q) {
    mpz_class q2 = q * q;
    IntPolynomial e = mod_q(fstar - g * h, q2);
    IntPolynomial qq, rr;
    divmod_monic_q(e * s, h, q2, qq, rr);
    IntPolynomial g1 = mod_q(g + e * t + qq * g, q2);
    IntPolynomial h1 = mod_q(h + rr, q2);
    IntPolynomial b = mod_q(s * g1 + t * h1 - IntPolynomial{1}, q2);
    IntPolynomial cc, dd;
    divmod_monic_q(b * s, h1, q2, cc, dd);
    IntPolynomial s1 = mod_q(s - dd, q2);
    IntPolynomial t1 = mod_q(t - t * b - cc * g1, q2);
    g = g1;
    h = h1;
    s = s1;
    t = t1;
}

/* Lift the monic mod-p factors `leaves` of monic fstar (≡ prod leaves mod p)
 * to monic factors mod Q where Q = p^(2^m) >= target.  Recursive halving. */
void hensel_lift_rec(const IntPolynomial& fstar, uint64_t p, const mpz_class& Q,
                     const std::vector<modp::Poly>& leaves, size_t lo, size_t hi,
                     std::vector<IntPolynomial>& out) {
    if (hi - lo == 1) {
        out[lo] = mod_q(fstar, Q);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    modp::Poly gp{1}, hp{1};
    for (size_t i = lo; i < mid; i++) gp = modp::mul(gp, leaves[i], p);
    for (size_t i = mid; i < hi; i++) hp = modp::mul(hp, leaves[i], p);
    modp::Poly sp, tp;
    modp_ext_gcd(gp, hp, p, sp, tp);
    IntPolynomial g = from_modp(gp), h = from_modp(hp);
    IntPolynomial s = from_modp(sp), t = from_modp(tp);
    mpz_class q = (unsigned long)p;
    while (q < Q) {
        hensel_step(fstar, g, h, s, t, q);
        q = q * q;
    }
    hensel_lift_rec(g, p, Q, leaves, lo, mid, out);
    hensel_lift_rec(h, p, Q, leaves, mid, hi, out);
}

std::vector<IntPolynomial> hensel_lift(const IntPolynomial& f, uint64_t p,
                                       const std::vector<modp::Poly>& leaves,
                                       mpz_class& modulus_out) {
    // Q = p^(2^m) > 2*bound*|lc|
    mpz_class target = mignotte_bound(f) * ::abs(f.leading()) * 2;
    mpz_class Q = (unsigned long)p;
    while (Q <= target) Q = Q * Q;
    // monic version of f mod Q
    mpz_class lcinv;
    if (mpz_invert(lcinv.get_mpz_t(), f.leading().get_mpz_t(), Q.get_mpz_t()) == 0)
        throw DomainError("hensel: leading coefficient not invertible");
    IntPolynomial fstar = mod_q(f.mul_scalar(lcinv), Q);
    std::vector<IntPolynomial> out(leaves.size());
    hensel_lift_rec(fstar, p, Q, leaves, 0, leaves.size(), out);
    modulus_out = Q;
    return out;
}

IntPolynomial mul_mod_q(const IntPolynomial& a, const IntPolynomial& b, const mpz_class& q) {
    return mod_q(a * b, q);
}

/* Zassenhaus recombination over the lifted modular factors.  `allowed`
 * restricts candidate degree sums (from the degree-pattern sieve). */
std::vector<IntPolynomial> recombine(const IntPolynomial& f0,
                                     const std::vector<IntPolynomial>& lifted,
                                     const mpz_class& q, const DegMask& allowed) {
    std::vector<IntPolynomial> out;
    IntPolynomial f = f0;
    std::vector<char> used(lifted.size(), 0);
    size_t active = lifted.size();
    long budget = 1 << 22;

    auto try_subset = [&](const std::vector<size_t>& idx) -> bool {
        IntPolynomial prod = IntPolynomial::constant(f.leading());
        for (size_t i : idx) prod = mul_mod_q(prod, lifted[i], q);
        IntPolynomial cand = balance(prod, q);
        if (cand.degree() < 1) return false;
        cand = cand.primitive_part();
        IntPolynomial quot;
        if (!f.divides(cand, &quot)) return false;
        out.push_back(cand);
        f = quot.primitive_part();
        for (size_t i : idx) {
            used[i] = 1;
            active--;
        }
        return true;
    };

    bool progress = true;
    while (progress && active > 0) {
        progress = false;
        for (size_t card = 1; card * 2 <= active && !progress; card++) {
            std::vector<size_t> avail;
            for (size_t i = 0; i < lifted.size(); i++)
                if (!used[i]) avail.push_back(i);
            std::vector<size_t> pick(card);
            std::function<bool(size_t, size_t, long)> rec =
                [&](size_t start, size_t depth, long dsum) -> bool {
                if (--budget <= 0)
                    throw ResourceError("factor recombination budget exceeded");
                if (depth == card) {
                    if (dsum < 1 || dsum >= (long)kMaskBits || !allowed.test((size_t)dsum))
                        return false;
                    if (2 * dsum > f.degree() + 1 && dsum != f.degree()) {
                        // complement is smaller; it will be found instead
                    }
                    return try_subset(pick);
                }
                for (size_t i = start; i < avail.size(); i++) {
                    pick[depth] = avail[i];
                    if (rec(i + 1, depth + 1, dsum + lifted[avail[i]].degree()))
                        return true;
                }
                return false;
            };
            if (rec(0, 0, 0)) progress = true;
        }
    }
    if (f.degree() >= 1) out.push_back(f.primitive_part());
    return out;
}

bool degree_sorted_less(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

} // namespace

std::vector<IntPolynomial> factor_squarefree_primitive(const IntPolynomial& f0) {
    std::vector<IntPolynomial> out;
    IntPolynomial f = f0.primitive_part();
    long n = f.degree();
    if (n < 1) return out;
    if (n == 1) {
        out.push_back(f);
        return out;
    }
    if (n > kFactorDegreeCap)
        throw ResourceError("factorization degree cap exceeded");

    // peel off x | f (squarefree input: multiplicity 1)
    if (f[0] == 0) {
        std::vector<mpz_class> c(f.coeffs().begin() + 1, f.coeffs().end());
        out.push_back(IntPolynomial{0, 1});
        auto rest = factor_squarefree_primitive(IntPolynomial(std::move(c)));
        out.insert(out.end(), rest.begin(), rest.end());
        std::sort(out.begin(), out.end(), degree_sorted_less);
        return out;
    }

    // 1. modular degree-pattern sieve
    DegMask mask;
    for (long i = 0; i <= n; i++) mask.set((size_t)i);
    DegMask irred;
    irred.set(0);
    irred.set((size_t)n);
    uint64_t best_prime = 0;
    size_t best_count = (size_t)n + 1;
    int used_primes = 0;
    for (uint64_t p : kPrimes) {
        if (used_primes >= kMaxPatternPrimes) break;
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), (unsigned long)p)) continue;
        modp::Poly fp = modp::from_int_poly(f, p);
        if (!modp::is_squarefree(fp, p)) continue;
        used_primes++;
        auto dd = modp::distinct_degree(fp, p);
        std::vector<long> degs;
        for (auto& [d, prod] : dd)
            for (long c = 0; c < modp::degree(prod) / d; c++) degs.push_back(d);
        mask &= subset_sums(degs, n);
        if (degs.size() < best_count) {
            best_prime = p;
            best_count = degs.size();
        }
        if (mask == irred) {
            out.push_back(f);
            return out;
        }
        // residual {0,1,n-1,n}: recombination reduces to a root sweep
        DegMask thin = irred;
        thin.set(1);
        thin.set((size_t)(n - 1));
        if ((mask | thin) == thin && used_primes >= 3) break;
        if (used_primes >= 3 && best_count <= 3) break;
    }
    if (best_prime == 0)
        throw ResourceError("no usable prime for factorization");

    // 2. Hensel lifting + recombination at the best prime
    modp::Poly fp = modp::from_int_poly(f, best_prime);
    auto leaves = modp::factor_squarefree(fp, best_prime);
    if (leaves.size() == 1) {
        out.push_back(f);
        return out;
    }
    std::sort(leaves.begin(), leaves.end());
    mpz_class modulus;
    auto lifted = hensel_lift(f, best_prime, leaves, modulus);
    out = recombine(f, lifted, modulus, mask);
    std::sort(out.begin(), out.end(), degree_sorted_less);
    return out;
}

Factorization factor(const IntPolynomial& f) {
    Factorization out;
    if (f.is_zero()) {
        out.content = 0;
        return out;
    }
    out.content = f.content();
    if (f.leading() < 0) out.content = -out.content;
    auto layers = squarefree_decomposition(f);
    for (size_t i = 0; i < layers.size(); i++) {
        if (layers[i].degree() < 1) continue;
        for (auto& irr : factor_squarefree_primitive(layers[i]))
            out.factors.emplace_back(irr, (unsigned)(i + 1));
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  return degree_sorted_less(a.first, b.first);
              });
    return out;
}

bool is_irreducible(const IntPolynomial& f) {
    if (f.degree() < 1) return false;
    IntPolynomial p = f.primitive_part();
    if (squarefree_part(p).degree() != p.degree()) return false;
    return factor_squarefree_primitive(p).size() == 1;
}

} // namespace nkit
