#ifndef NKIT_MPOLY_HPP
#define NKIT_MPOLY_HPP

/* Sparse multivariate polynomials with rational coefficients, used for
 * Chow forms and norm forms of linear forms.  Terms are keyed by exponent
 * vectors under graded lexicographic order, so iteration order (and hence
 * serialization and the content-normalization sign rule) is deterministic. */

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nkit/rint.hpp"

namespace nkit {

struct GradedLex {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        unsigned da = 0, db = 0;
        for (unsigned v : a) da += v;
        for (unsigned v : b) db += v;
        if (da != db) return da < db;
        return a < b;
    }
};

class MPoly {
  public:
    using Terms = std::map<std::vector<unsigned>, mpq_class, GradedLex>;

    MPoly() : nvars_(0) {}
    explicit MPoly(size_t nvars) : nvars_(nvars) {}

    static MPoly constant(size_t nvars, const mpq_class& c);
    static MPoly variable(size_t nvars, size_t i);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const std::vector<unsigned>& exp, const mpq_class& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly mul_scalar(const mpq_class& s) const;
    MPoly pow(unsigned k) const;

    bool operator==(const MPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // total degree (-1 for zero); per-variable-block homogeneous degree check
    long total_degree() const;
    bool homogeneous_in_block(size_t lo, size_t hi, unsigned* degree_out) const;

    // gcd of numerators / lcm of denominators, signed so that dividing by it
    // makes the graded-lex-first coefficient positive
    mpq_class content_signed() const;
    // divide by content: integer coefficients, deterministic sign
    MPoly primitive_integer() const;
    bool has_integer_coeffs() const;
    mpz_class max_abs_coeff() const; // requires integer coefficients

    CInt eval(const std::vector<CInt>& point) const;
    std::complex<double> eval_d(const std::vector<std::complex<double>>& point) const;

    // substitute variables by polynomials (all same nvars target)
    MPoly substitute(const std::vector<MPoly>& images) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

  private:
    size_t nvars_;
    Terms terms_;
};

/* Determinant of the pencil sum_i u_i * C_i, an m x m matrix of linear
 * forms; the norm form of a linear form over a degree-m field.  Capped at
 * m <= 16 (subset-DP expansion). */
MPoly pencil_determinant(const std::vector<std::vector<std::vector<mpq_class>>>& mats);

} // namespace nkit

#endif
