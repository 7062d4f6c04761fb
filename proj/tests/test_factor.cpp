#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nkit/factor.hpp"
#include "nkit/errors.hpp"

using namespace nkit;

namespace {
IntPolynomial qtr_numerator(unsigned k) {
    // 5x^(2k) - 6x^k + 5
    std::vector<mpz_class> c(2 * k + 1, 0);
    c[0] = 5;
    c[k] = -6;
    c[2 * k] = 5;
    return IntPolynomial(std::move(c));
}
} // namespace

TEST_CASE("small factorizations") {
    // x^2 - 1 = (x-1)(x+1)
    auto f = factor(IntPolynomial{-1, 0, 1});
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first.to_string() == "x - 1");
    CHECK(f.factors[1].first.to_string() == "x + 1");
    CHECK(f.content == 1);

    // 6x^2 - 6 content handling
    auto g = factor(IntPolynomial{-6, 0, 6});
    CHECK(g.content == 6);
    REQUIRE(g.factors.size() == 2);
}

TEST_CASE("irreducibility of classical examples") {
    CHECK(is_irreducible(IntPolynomial{-2, 0, 1}));        // x^2-2 (Eisenstein)
    CHECK(is_irreducible(IntPolynomial{-7, 0, 0, 1}));     // x^3-7
    CHECK(is_irreducible(IntPolynomial{1, -1, 1}));        // x^2-x+1
    CHECK(is_irreducible(IntPolynomial{5, -6, 5}));        // 5x^2-6x+5
    CHECK(!is_irreducible(IntPolynomial{-1, 0, 1}));
    CHECK(!is_irreducible(IntPolynomial{1}));
    // x^4 - 10x^2 + 1 (minimal polynomial of sqrt2+sqrt3)
    CHECK(is_irreducible(IntPolynomial{1, 0, -10, 0, 1}));
    // swinnerton-dyer-ish: x^4+1 factors mod every prime but is irreducible
    CHECK(is_irreducible(IntPolynomial{1, 0, 0, 0, 1}));
}

TEST_CASE("multiplicities") {
    IntPolynomial f = IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{-2, 0, 1};
    auto fac = factor(f);
    REQUIRE(fac.factors.size() == 2);
    bool saw_sq = false, saw_lin = false;
    for (auto& [g, m] : fac.factors) {
        if (g.degree() == 1) {
            CHECK(m == 2);
            saw_lin = true;
        }
        if (g.degree() == 2) {
            CHECK(m == 1);
            saw_sq = true;
        }
    }
    CHECK(saw_lin);
    CHECK(saw_sq);
}

TEST_CASE("product of factors reproduces the input up to content") {
    std::vector<IntPolynomial> inputs = {
        IntPolynomial{6, 5, 1},                  // (x+2)(x+3)
        IntPolynomial{-15, 2, 8},                // 8x^2+2x-15 = (2x+3)(4x-5)
        IntPolynomial{0, -4, 0, 4},              // 4x(x-1)(x+1)
        IntPolynomial{2, 3, 1} * IntPolynomial{1, 0, 1} * IntPolynomial{-3, 1},
    };
    for (auto& f : inputs) {
        auto fac = factor(f);
        IntPolynomial prod = IntPolynomial::constant(fac.content);
        for (auto& [g, m] : fac.factors) {
            CHECK(is_irreducible(g));
            for (unsigned i = 0; i < m; i++) prod = prod * g;
        }
        CHECK(prod == f);
    }
}

TEST_CASE("cyclotomic-like and wide-degree inputs") {
    // x^12 - 1 factors into cyclotomics: phi-degrees 1,1,2,2,2,4
    auto fac = factor(IntPolynomial{-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    long total = 0;
    for (auto& [g, m] : fac.factors) total += g.degree() * m;
    CHECK(total == 12);
    CHECK(fac.factors.size() == 6);
}

TEST_CASE("degree-pattern certification handles the tower numerators") {
    // irreducible of degree 2k with k up to a desk-scale bound
    for (unsigned k : {3u, 8u, 17u}) {
        auto fs = factor_squarefree_primitive(qtr_numerator(k));
        CHECK(fs.size() == 1);
        CHECK(fs[0].degree() == 2 * (long)k);
    }
}

TEST_CASE("degree cap is enforced") {
    std::vector<mpz_class> c(kFactorDegreeCap + 2, 0);
    c[0] = -2;
    c.back() = 1;
    CHECK_THROWS_AS(factor_squarefree_primitive(IntPolynomial(std::move(c))),
                    ResourceError);
}
