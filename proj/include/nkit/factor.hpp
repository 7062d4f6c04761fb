#ifndef NKIT_FACTOR_HPP
#define NKIT_FACTOR_HPP

/* Factorization of integer polynomials: squarefree decomposition, then a
 * modular degree-pattern sieve that certifies irreducibility cheaply when
 * it can, falling back to Hensel lifting with subset recombination
 * (Zassenhaus).  Degrees are capped; the cap is a documented desk-scale
 * limit, not a correctness boundary. */

#include <vector>

#include "nkit/int_polynomial.hpp"

namespace nkit {

inline constexpr long kFactorDegreeCap = 420;

struct Factorization {
    mpz_class content;                                   // signed
    std::vector<std::pair<IntPolynomial, unsigned>> factors; // primitive, irreducible, positive-leading
};

// Factor a primitive squarefree polynomial into irreducible primitive
// factors with positive leading coefficients (order: by degree, then
// lexicographically by coefficients).
std::vector<IntPolynomial> factor_squarefree_primitive(const IntPolynomial& f);

Factorization factor(const IntPolynomial& f);

bool is_irreducible(const IntPolynomial& f);

} // namespace nkit

#endif
