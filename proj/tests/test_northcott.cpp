#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nkit/northcott.hpp"
#include "nkit/errors.hpp"

using namespace nkit;

TEST_CASE("nc_lower_bound") {
    auto r = nc_lower_bound(10, 2, BoundMode::Simple);
    CHECK(std::fabs(r.aggregate.mid() - (10 - 2 * std::log(2)) / 8.0) < 1e-12);
    CHECK(r.aggregation_rule == "theorem_simple");

    auto o = nc_lower_bound(10, 2, BoundMode::Optimal);
    double expect = std::min((10 - std::log(2)) / 2.0, 10.0 / 2.0);
    CHECK(std::fabs(o.aggregate.mid() - expect) < 1e-12);
    CHECK(o.per_j.size() == 2);

    auto z = nc_lower_bound(0, 3, BoundMode::Simple);
    CHECK(z.aggregate.mid() == 0.0); // clamped

    CHECK_THROWS_AS(nc_lower_bound(1, 0, BoundMode::Simple), DomainError);
}

TEST_CASE("nc_house_lower_bound") {
    auto s = nc_house_lower_bound(16, 2, BoundMode::Simple);
    CHECK(std::fabs(s.aggregate.mid() - 1.0) < 1e-12); // 4/4
    auto o = nc_house_lower_bound(16, 2, BoundMode::Optimal);
    CHECK(std::fabs(o.aggregate.mid() - 4.0) < 1e-12); // min(16/2, 4/1)
    auto z = nc_house_lower_bound(0, 3, BoundMode::Simple);
    CHECK(z.aggregate.mid() == 0.0);
}

TEST_CASE("nc_upper_bound") {
    auto pj = nc_upper_bound(0, 2, BoundMode::PerJConservative);
    REQUIRE(pj.per_j.size() == 2);
    CHECK(std::fabs(pj.per_j.at(1).mid() - std::log(2)) < 1e-12);
    CHECK(pj.per_j.at(2).mid() == 0.0);
    CHECK(std::fabs(pj.aggregate.mid() - std::log(2)) < 1e-12);
    CHECK(pj.aggregation_rule == "max_over_j");

    auto s = nc_upper_bound(1, 1, BoundMode::Simple);
    CHECK(std::fabs(s.aggregate.mid() - (2 + std::log(2))) < 1e-12);
    auto d1 = nc_upper_bound(0, 1, BoundMode::Simple);
    CHECK(std::fabs(d1.aggregate.mid() - std::log(2)) < 1e-12);
}

TEST_CASE("bound consistency: optimal >= simple for C >= d log 2") {
    for (unsigned d = 1; d <= 5; d++) {
        for (long Cnum : {1, 2, 5, 9, 14}) {
            mpq_class C(Cnum);
            if (C.get_d() < d * std::log(2)) continue;
            auto s = nc_lower_bound(C, d, BoundMode::Simple);
            auto o = nc_lower_bound(C, d, BoundMode::Optimal);
            CHECK(o.aggregate.mid() >= s.aggregate.mid() - 1e-12);
        }
    }
}

TEST_CASE("relative_floor") {
    CHECK(relative_floor(5, 2) == 3.0);
    CHECK(relative_floor(1, 3) == 0.0);
    CHECK(relative_floor(4.5, 0) == 4.5);
    CHECK_THROWS_AS(relative_floor(-1, 0), DomainError);
}

TEST_CASE("build_tower at t = 1") {
    TowerSpec spec = build_tower(1, 3);
    REQUIRE(spec.steps.size() == 3);
    CHECK(spec.steps[0].p == 7);
    CHECK(spec.steps[0].d == 1);
    for (size_t i = 1; i < spec.steps.size(); i++) {
        CHECK(spec.steps[i].p > spec.steps[i - 1].p);
        CHECK(spec.steps[i].d > spec.steps[i - 1].d);
    }
    CHECK(verify_tower(spec));
    // determinism
    TowerSpec again = build_tower(1, 3);
    for (size_t i = 0; i < 3; i++) {
        CHECK(again.steps[i].p == spec.steps[i].p);
        CHECK(again.steps[i].d == spec.steps[i].d);
    }
}

TEST_CASE("tower single step invariant") {
    TowerSpec spec = build_tower(mpq_class(3, 2), 1);
    REQUIRE(spec.steps.size() == 1);
    double target = std::exp(2.0 * 1.5);
    double got = std::pow(spec.steps[0].p.get_d(), 1.0 / (double)spec.steps[0].d);
    CHECK(std::fabs(got - target) <= 0.5 + 1e-9);
}

TEST_CASE("enumerate_bounded height log 2 in degree 1") {
    auto xs = enumerate_bounded(1, HeightCutoff::log_rational(2));
    // {0, +-1, +-2, +-1/2}
    CHECK(xs.size() == 7);
    int zero = 0, one = 0, two = 0, half = 0;
    for (auto& x : xs) {
        REQUIRE(x.is_rational());
        mpq_class v = x.as_rational();
        if (v == 0) zero++;
        if (v == 1 || v == -1) one++;
        if (v == 2 || v == -2) two++;
        if (v == mpq_class(1, 2) || v == mpq_class(-1, 2)) half++;
    }
    CHECK(zero == 1);
    CHECK(one == 2);
    CHECK(two == 2);
    CHECK(half == 2);
}

TEST_CASE("enumerate_bounded height 0") {
    auto xs = enumerate_bounded(1, HeightCutoff::plain(0.0));
    CHECK(xs.size() == 3); // 0, 1, -1
    auto deg2 = enumerate_bounded(2, HeightCutoff::plain(0.0));
    // 0, +-1 plus the degree-2 roots of unity: +-i, primitive cube and sixth roots
    size_t quadratic = 0;
    bool has_i = false, has_omega = false, has_sixth = false;
    for (auto& x : deg2) {
        if (x.degree() == 2) {
            quadratic++;
            if (x.minpoly() == IntPolynomial{1, 0, 1}) has_i = true;
            if (x.minpoly() == IntPolynomial{1, 1, 1}) has_omega = true;
            if (x.minpoly() == IntPolynomial{1, -1, 1}) has_sixth = true;
        }
    }
    CHECK(quadratic == 6);
    CHECK(has_i);
    CHECK(has_omega);
    CHECK(has_sixth);
    CHECK(deg2.size() == 9);
}

TEST_CASE("mahler_at_most settles exact boundaries") {
    // M(x^2+3x+4) = 4 exactly (complex pair of modulus 2)
    IntPolynomial f{4, 3, 1};
    CHECK(mahler_at_most(f, 4));
    CHECK(!mahler_at_most(f, mpq_class(799, 200)));
    // M(5x^2-6x+5) = 5 (both roots on the unit circle)
    IntPolynomial g{5, -6, 5};
    CHECK(mahler_at_most(g, 5));
    CHECK(!mahler_at_most(g, mpq_class(499, 100)));
    // M(x^2-2) = 2
    CHECK(mahler_at_most(IntPolynomial{-2, 0, 1}, 2));
    CHECK(!mahler_at_most(IntPolynomial{-2, 0, 1}, mpq_class(199, 100)));
}

TEST_CASE("tower_field_elements") {
    TowerSpec spec = build_tower(1, 2);
    // k = 0: rationals only
    auto base = tower_field_elements(spec, 0, 8, HeightCutoff::log_rational(2));
    for (auto& x : base) CHECK(x.is_rational());
    // k = 1 with d = 1: still rationals
    auto k1 = tower_field_elements(spec, 1, 8, HeightCutoff::log_rational(2));
    for (auto& x : k1) CHECK(x.is_rational());
    // k = 2: contains p2^(1/d2) if its height fits; check emitted heights
    auto k2 = tower_field_elements(spec, 2, 8, HeightCutoff::plain(2.5));
    bool saw_radical = false;
    for (auto& x : k2) {
        if (x.degree() > 1) {
            saw_radical = true;
            double h = weil_height(x).mid();
            CHECK(h <= 2.5 + 1e-9);
        }
    }
    CHECK(saw_radical);
    // the emitted radical p2^(1/d2) has height (log p2)/d2
    const auto& st = spec.steps[1];
    AlgebraicNumber rad = nth_root(mpq_class(st.p), st.d);
    double expect = std::log(st.p.get_d()) / (double)st.d;
    CHECK(std::fabs(weil_height(rad).mid() - expect) < 1e-10);
}
