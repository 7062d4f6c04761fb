#ifndef NKIT_INT_POLYNOMIAL_HPP
#define NKIT_INT_POLYNOMIAL_HPP

/* Dense univariate polynomials with arbitrary-precision integer
 * coefficients, stored lowest degree first.  The zero polynomial is the
 * empty coefficient vector.  Most height computations only ever see
 * content-normalized polynomials: gcd of coefficients 1, leading
 * coefficient positive. */

#include <gmpxx.h>
#include <initializer_list>
#include <string>
#include <vector>

#include "nkit/rint.hpp"

namespace nkit {

class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(const mpz_class& c);
    // x^k with coefficient c
    static IntPolynomial monomial(const mpz_class& c, size_t k);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return (long)c_.size() - 1; }
    const mpz_class& leading() const;
    const mpz_class& operator[](size_t i) const { return c_[i]; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    size_t size() const { return c_.size(); }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial mul_scalar(const mpz_class& s) const;
    IntPolynomial mul_xk(size_t k) const;

    mpz_class content() const;          // gcd of coefficients, >= 0
    IntPolynomial primitive_part() const; // content 1, positive leading
    bool is_content_normalized() const;

    IntPolynomial derivative() const;
    IntPolynomial reversed() const; // x^deg * p(1/x), trailing zeros dropped

    // p(x^k)
    IntPolynomial inflate(size_t k) const;
    // largest g with support contained in g*Z, and the deflated q with
    // p = q(x^g); g = 1 for constants
    size_t support_gcd() const;
    IntPolynomial deflate(size_t g) const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;
    RInt eval(const RInt& x) const;
    CInt eval(const CInt& x) const;
    // numerator of p(a/b): sum c_i a^i b^(deg-i)
    mpz_class eval_homogeneous(const mpz_class& a, const mpz_class& b) const;

    // Euclidean division with exact divisibility required
    IntPolynomial divexact(const IntPolynomial& d) const;
    bool divides(const IntPolynomial& d, IntPolynomial* quotient = nullptr) const;

    // max |coefficient|
    mpz_class height_coeff() const;
    // sum |coefficient|
    mpz_class length_coeff() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<mpz_class> c_;
    void trim();
};

// gcd of primitive parts (primitive PRS); result content-normalized
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// resultant via subresultant PRS
mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b);

mpz_class poly_discriminant(const IntPolynomial& f);

// squarefree part and full squarefree decomposition (Yun);
// parts[i] collects the factors of multiplicity i+1
IntPolynomial squarefree_part(const IntPolynomial& f);
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f);

mpz_class binomial(unsigned long n, unsigned long k);

} // namespace nkit

#endif
