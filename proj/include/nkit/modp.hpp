#ifndef NKIT_MODP_HPP
#define NKIT_MODP_HPP

/* Dense polynomial arithmetic over F_p for word-sized primes p < 2^20.
 * Products are accumulated in uint64 and reduced once per coefficient,
 * which is safe up to degree ~2^24 at this prime size. */

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "nkit/int_polynomial.hpp"

namespace nkit {
namespace modp {

using Poly = std::vector<uint64_t>; // low-first, trimmed, coeffs in [0, p)

void trim(Poly& a);
bool is_zero(const Poly& a);
long degree(const Poly& a);
Poly from_int_poly(const IntPolynomial& f, uint64_t p);

uint64_t inv_mod(uint64_t a, uint64_t p);
Poly mul(const Poly& a, const Poly& b, uint64_t p);
// remainder of a by monic-or-not b (b nonzero)
Poly rem(const Poly& a, const Poly& b, uint64_t p);
Poly divexact(const Poly& a, const Poly& b, uint64_t p);
Poly monic(const Poly& a, uint64_t p);
Poly gcd(const Poly& a, const Poly& b, uint64_t p);
Poly derivative(const Poly& a, uint64_t p);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod, uint64_t p);
Poly add(const Poly& a, const Poly& b, uint64_t p);
Poly sub(const Poly& a, const Poly& b, uint64_t p);

// distinct-degree factorization of squarefree monic f:
// returns (d_i, product-of-irreducible-factors-of-degree-d_i), d ascending.
std::vector<std::pair<long, Poly>> distinct_degree(const Poly& f, uint64_t p);

// full factorization of a squarefree f (not nec. monic): monic irreducible
// factors; deterministic (fixed-seed splitting).
std::vector<Poly> factor_squarefree(const Poly& f, uint64_t p);

bool is_squarefree(const Poly& f, uint64_t p);

} // namespace modp
} // namespace nkit

#endif
