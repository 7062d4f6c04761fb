#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nkit/heights.hpp"
#include "nkit/errors.hpp"

using namespace nkit;

namespace {
bool close(const CertifiedValue& v, double x, double tol = 1e-9) {
    return std::fabs(v.mid() - x) <= tol + v.rad();
}
AlgebraicNumber sqrt2() { return root_of(IntPolynomial{-2, 0, 1}, 1); }
} // namespace

TEST_CASE("weil height of rationals and quadratics") {
    CHECK(weil_height(AlgebraicNumber::from_int(1)).mid() == 0.0);
    CHECK(close(weil_height(AlgebraicNumber::from_rational(mpq_class(1, 2))), std::log(2)));
    // root of 5x^2-6x+5: Mahler measure 5, degree 2
    AlgebraicNumber w = root_of(IntPolynomial{5, -6, 5}, 0);
    CHECK(close(weil_height(w), 0.5 * std::log(5), 1e-12));
    // golden ratio
    AlgebraicNumber phi = root_of(IntPolynomial{-1, -1, 1}, 1);
    double golden = (1 + std::sqrt(5.0)) / 2;
    CHECK(close(weil_height(phi), 0.5 * std::log(golden), 1e-12));
    // sqrt2
    CHECK(close(weil_height(sqrt2()), 0.5 * std::log(2), 1e-12));
}

TEST_CASE("galois invariance is exact by construction") {
    IntPolynomial p{5, -6, 5};
    auto h0 = weil_height(root_of(p, 0));
    auto h1 = weil_height(root_of(p, 1));
    CHECK(h0.mid() == h1.mid());
    CHECK(h0.rad() == h1.rad());
}

TEST_CASE("house") {
    AlgebraicNumber c = nth_root(mpq_class(2), 3);
    CHECK(close(house(c), std::pow(2.0, 1.0 / 3.0), 1e-12));
    CHECK(house(AlgebraicNumber::from_int(-3)).mid() == 3.0);
    AlgebraicNumber w = root_of(IntPolynomial{5, -6, 5}, 0);
    CHECK(close(house(w), 1.0, 1e-12));
}

TEST_CASE("projective height rational paths") {
    CHECK(projective_height(ProjectiveTuple::from_ints({1, 1})).mid() == 0.0);
    auto h123 = projective_height(ProjectiveTuple::from_ints({1, 2, 3}));
    CHECK(close(h123, std::log(3)));
    auto h246 = projective_height(ProjectiveTuple::from_ints({2, 4, 6}));
    CHECK(h123.mid() == h246.mid()); // scaling invariance, exact
    // permutation invariance
    auto hperm = projective_height(ProjectiveTuple::from_ints({3, 1, 2}));
    CHECK(hperm.mid() == h123.mid());
    CHECK_THROWS_AS(ProjectiveTuple::from_ints({0, 0}), DomainError);
}

TEST_CASE("l2 height") {
    CHECK(l2_height(ProjectiveTuple::from_ints({1, 0})).mid() == 0.0);
    CHECK(close(l2_height(ProjectiveTuple::from_ints({1, 2, 3})), 0.5 * std::log(14)));
    CHECK(close(l2_height(ProjectiveTuple::from_ints({3, 4})), std::log(5)));
}

TEST_CASE("heights of tuples with algebraic coordinates") {
    AlgebraicNumber s2 = sqrt2();
    ProjectiveTuple P{std::vector<AlgebraicNumber>{AlgebraicNumber::from_int(1), s2}};
    CHECK(close(projective_height(P), 0.5 * std::log(2), 1e-10));
    // product formula: height of a 1-tuple vanishes
    for (auto& a : {s2, root_of(IntPolynomial{-1, -1, 0, 1}, 2),
                    AlgebraicNumber::from_rational(mpq_class(22, 7))}) {
        ProjectiveTuple single{std::vector<AlgebraicNumber>{a}};
        auto h = projective_height(single);
        CHECK(h.interval().contains_zero());
        CHECK(h.rad() < 1e-9);
    }
    // l2 - proj sandwich: 0 <= l2 - h <= (1/2) log(n+1)
    ProjectiveTuple Q{std::vector<AlgebraicNumber>{
        AlgebraicNumber::from_int(1), s2, root_of(IntPolynomial{-3, 0, 1}, 1)}};
    double hq = projective_height(Q).mid(), lq = l2_height(Q).mid();
    CHECK(lq - hq >= -1e-9);
    CHECK(lq - hq <= 0.5 * std::log(3.0) + 1e-9);
}

TEST_CASE("weighted height") {
    auto v = weighted_height(AlgebraicNumber::from_rational(mpq_class(1, 2)), 5.0);
    CHECK(close(v, std::log(2)));
    auto w = weighted_height(sqrt2(), 1.0);
    CHECK(close(w, std::log(2), 1e-10));
    auto z = weighted_height(sqrt2(), 0.0);
    CHECK(close(z, 0.5 * std::log(2), 1e-10));
}

TEST_CASE("poly height") {
    CHECK(poly_height(IntPolynomial{1, 1}, HeightKind::Weil).mid() == 0.0);
    CHECK(poly_height(IntPolynomial{-1, 0, 1}, HeightKind::Weil).mid() == 0.0);
    CHECK(close(poly_height(IntPolynomial{5, -6, 5}, HeightKind::Weil), std::log(6)));
    CHECK_THROWS_AS(poly_height(IntPolynomial::zero(), HeightKind::Weil), DomainError);
}

TEST_CASE("mahler measure") {
    CHECK(close(mahler_measure(IntPolynomial{-2, 1}), 2.0));
    // Lehmer's polynomial
    IntPolynomial lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
    CHECK(close(mahler_measure(lehmer), 1.176280818259917, 1e-10));
    // measure of x^k composition is invariant
    IntPolynomial q{5, -6, 5};
    CHECK(close(mahler_measure(q.inflate(9)), 5.0, 1e-10));
}

TEST_CASE("two-variable mahler measure matches the dirichlet route") {
    MPoly f(2);
    f.add_term({0, 0}, 1);
    f.add_term({1, 0}, 1);
    f.add_term({0, 1}, 1);
    auto mm = mahler_measure_2var(f);
    CHECK(mm.non_rigorous);
    auto dl = dirichlet_L2_chi3();
    CHECK(std::fabs(mm.mid() - 0.3230659472194505) < 1e-6);
    CHECK(std::fabs(dl.mid() - 0.3230659472194505) < 1e-8);
    CHECK(std::fabs(mm.mid() - dl.mid()) < 1e-6);
    CHECK(dl.rad() < 1e-8);
}

TEST_CASE("height axioms sampled") {
    AlgebraicNumber s2 = sqrt2();
    AlgebraicNumber c7 = nth_root(mpq_class(7), 3);
    double hs = weil_height(s2).mid(), hc = weil_height(c7).mid();
    double hsum = weil_height(alg_add(s2, c7)).mid();
    double hprod = weil_height(alg_mul(s2, c7)).mid();
    CHECK(hsum <= hs + hc + std::log(2) + 1e-9);
    CHECK(hprod <= hs + hc + 1e-9);
}
