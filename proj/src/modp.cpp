#include "nkit/modp.hpp"

#include "nkit/errors.hpp"

namespace nkit {
namespace modp {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_zero(const Poly& a) { return a.empty(); }

long degree(const Poly& a) { return (long)a.size() - 1; }

Poly from_int_poly(const IntPolynomial& f, uint64_t p) {
    Poly r(f.size());
    for (size_t i = 0; i < f.size(); i++) {
        mpz_class m = f[i] % (long)p;
        long v = m.get_si();
        if (v < 0) v += (long)p;
        r[i] = (uint64_t)v;
    }
    trim(r);
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
    // extended Euclid
    int64_t t = 0, newt = 1;
    int64_t r = (int64_t)p, newr = (int64_t)(a % p);
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw DomainError("inv_mod: not invertible");
    if (t < 0) t += (int64_t)p;
    return (uint64_t)t;
}

Poly mul(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    // accumulate then reduce: safe since p < 2^20 and degrees < 2^24
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); j++) {
            r[i + j] += ai * b[j];
            if (r[i + j] >= (uint64_t)1 << 62) r[i + j] %= p;
        }
    }
    for (auto& v : r) v %= p;
    trim(r);
    return r;
}

Poly rem(const Poly& a0, const Poly& b, uint64_t p) {
    if (b.empty()) throw DivisionByZero("mod-p division by zero poly");
    Poly a = a0;
    trim(a);
    uint64_t binv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        uint64_t c = a.back() % p;
        if (c != 0) {
            c = c * binv % p;
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); j++) {
                uint64_t sub = c * b[j] % p;
                uint64_t& x = a[shift + j];
                x = (x + p - sub) % p;
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

Poly divexact(const Poly& a0, const Poly& b, uint64_t p) {
    if (b.empty()) throw DivisionByZero("mod-p division by zero poly");
    Poly a = a0;
    trim(a);
    if (a.size() < b.size()) {
        if (a.empty()) return {};
        throw DomainError("mod-p divexact: degree too small");
    }
    Poly q(a.size() - b.size() + 1, 0);
    uint64_t binv = inv_mod(b.back(), p);
    for (size_t i = a.size(); i-- > b.size() - 1;) {
        uint64_t c = a[i] % p;
        if (c != 0) {
            c = c * binv % p;
            size_t shift = i + 1 - b.size();
            q[shift] = c;
            for (size_t j = 0; j < b.size(); j++) {
                uint64_t sub = c * b[j] % p;
                uint64_t& x = a[shift + j];
                x = (x + p - sub) % p;
            }
        }
    }
    for (auto v : a)
        if (v % p != 0) throw DomainError("mod-p divexact: not divisible");
    trim(q);
    return q;
}

Poly monic(const Poly& a, uint64_t p) {
    if (a.empty()) return a;
    Poly r = a;
    uint64_t inv = inv_mod(r.back(), p);
    for (auto& v : r) v = v * inv % p;
    return r;
}

Poly gcd(const Poly& a0, const Poly& b0, uint64_t p) {
    Poly a = a0, b = b0;
    trim(a);
    trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly derivative(const Poly& a, uint64_t p) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); i++) r[i - 1] = a[i] * (i % p) % p;
    trim(r);
    return r;
}

Poly add(const Poly& a, const Poly& b, uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod, uint64_t p) {
    Poly r{1};
    Poly b = rem(base, mod, p);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = rem(mul(r, b, p), mod, p);
        b = rem(mul(b, b, p), mod, p);
        k >>= 1;
    }
    return r;
}

bool is_squarefree(const Poly& f, uint64_t p) {
    Poly d = derivative(f, p);
    if (d.empty()) return false; // f is a p-th power or constant
    Poly g = gcd(f, d, p);
    return degree(g) == 0;
}

std::vector<std::pair<long, Poly>> distinct_degree(const Poly& f0, uint64_t p) {
    std::vector<std::pair<long, Poly>> out;
    Poly f = monic(f0, p);
    Poly v = f;
    Poly w{0, 1}; // x
    long d = 0;
    while (degree(v) >= 2 * (d + 1)) {
        d++;
        w = powmod(w, mpz_class((unsigned long)p), f, p);
        // gcd(v, w - x)
        Poly diff = w;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        Poly g = diff.empty() ? v : gcd(v, diff, p);
        if (degree(g) > 0) {
            out.emplace_back(d, g);
            v = divexact(v, g, p);
            // keep w reduced mod f (still fine; gcds with v only)
        }
    }
    if (degree(v) > 0) out.emplace_back(degree(v), v);
    return out;
}

/* split-free deterministic PRNG for equal-degree splitting */
static uint64_t splitmix(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

static void equal_degree_split(const Poly& f, long d, uint64_t p,
                               uint64_t& seed, std::vector<Poly>& out) {
    if (degree(f) == d) {
        out.push_back(monic(f, p));
        return;
    }
    // Cantor-Zassenhaus, p odd
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)p, (unsigned long)d);
    e = (e - 1) / 2;
    while (true) {
        Poly r(degree(f) >= 1 ? (size_t)degree(f) : 1);
        for (auto& v : r) v = splitmix(seed) % p;
        trim(r);
        if (degree(r) < 1) continue;
        Poly t = powmod(r, e, f, p);
        if (t.empty()) continue;
        t[0] = (t[0] + p - 1) % p;
        trim(t);
        if (t.empty()) continue;
        Poly g = gcd(f, t, p);
        if (degree(g) > 0 && degree(g) < degree(f)) {
            equal_degree_split(g, d, p, seed, out);
            equal_degree_split(divexact(f, g, p), d, p, seed, out);
            return;
        }
    }
}

std::vector<Poly> factor_squarefree(const Poly& f, uint64_t p) {
    std::vector<Poly> out;
    if (degree(f) < 1) return out;
    uint64_t seed = 0x5eed0000u ^ p ^ ((uint64_t)degree(f) << 32);
    for (auto& [d, prod] : distinct_degree(f, p)) {
        if (degree(prod) == d) {
            out.push_back(monic(prod, p));
        } else {
            equal_degree_split(prod, d, p, seed, out);
        }
    }
    return out;
}

} // namespace modp
} // namespace nkit
