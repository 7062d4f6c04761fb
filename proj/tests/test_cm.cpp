#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nkit/cm.hpp"
#include "nkit/heights.hpp"
#include "nkit/errors.hpp"

using namespace nkit;

TEST_CASE("fundamental discriminants") {
    CHECK(is_fundamental_discriminant(-3));
    CHECK(is_fundamental_discriminant(-4));
    CHECK(is_fundamental_discriminant(-23));
    CHECK(!is_fundamental_discriminant(-12)); // -12/4 = -3 ≡ 1 mod 4
    CHECK(!is_fundamental_discriminant(-9));
    CHECK(!is_fundamental_discriminant(5));
    auto ds = fundamental_discriminants(3, 20);
    CHECK(std::find(ds.begin(), ds.end(), -15) != ds.end());
    CHECK(std::find(ds.begin(), ds.end(), -16) == ds.end());
}

TEST_CASE("reduced forms") {
    auto f3 = reduced_forms(-3);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].a == 1);
    CHECK(f3[0].b == 1);
    CHECK(f3[0].c == 1);
    auto f4 = reduced_forms(-4);
    REQUIRE(f4.size() == 1);
    CHECK(f4[0].a == 1);
    CHECK(f4[0].b == 0);
    CHECK(f4[0].c == 1);
    auto f23 = reduced_forms(-23);
    REQUIRE(f23.size() == 3);
    // (1,1,6), (2,+-1,3)
    CHECK(f23[0].a == 1);
    CHECK(f23[0].c == 6);
    CHECK(f23[1].a == 2);
    CHECK(f23[2].a == 2);
    CHECK(f23[1].b == -f23[2].b);
    CHECK_THROWS_AS(reduced_forms(-12), DomainError);
}

TEST_CASE("j values at the special points") {
    // j(i) = 1728 for the form (1,0,1); j(zeta6) = 0 for (1,1,1)
    CInt ji = j_value({1, 0, 1}, -4, 192);
    CHECK(ji.re.contains(mpq_class(1728)));
    CHECK(ji.im.contains_zero());
    CHECK(ji.re.width_d() < 1e-20);
    CInt j3 = j_value({1, 1, 1}, -3, 192);
    CHECK(j3.re.contains(mpq_class(0)));
    CHECK(j3.im.contains_zero());
}

TEST_CASE("class polynomials of small discriminants") {
    CHECK(class_polynomial(-3) == IntPolynomial{0, 1});            // x
    CHECK(class_polynomial(-4) == IntPolynomial{-1728, 1});        // x - 1728
    // H_{-23} = x^3 + 3491750 x^2 - 5151296875 x + 12771880859375
    IntPolynomial h23 = class_polynomial(-23);
    CHECK(h23.degree() == 3);
    CHECK(h23[0] == mpz_class("12771880859375"));
    CHECK(h23[1] == mpz_class("-5151296875"));
    CHECK(h23[2] == mpz_class("3491750"));
    // stability under precision doubling
    CHECK(class_polynomial(-23, 2048) == h23);
    // degree = class number for a batch
    for (long d : {-7, -8, -11, -15, -19, -20, -24, -163}) {
        auto forms = reduced_forms(d);
        CHECK(class_polynomial(d).degree() == (long)forms.size());
    }
    // h(-163) = 1 and the Heegner constant term
    IntPolynomial h163 = class_polynomial(-163);
    CHECK(h163.degree() == 1);
    CHECK(h163[0] == mpz_class("262537412640768000"));
}

TEST_CASE("cm profile") {
    auto rows = cm_profile({-3, -4, -23});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].height.mid() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(rows[1].class_number == 1);
    CHECK(std::fabs(rows[1].height.mid() - std::log(1728.0)) < 1e-9);
    CHECK(rows[2].class_number == 3);
    // profile height agrees with the Weil height of a root of H_disc
    AlgebraicNumber x23 = root_of(class_polynomial(-23), 0);
    CHECK(std::fabs(rows[2].height.mid() - weil_height(x23).mid()) < 1e-8);
    // ratio sanity at small sizes: log house ~ pi sqrt|disc| from below
    CHECK(rows[2].ratio_house > 2.0);
    CHECK(rows[2].ratio_house < 3.5);
}

TEST_CASE("weighted exponent probe") {
    auto discs = fundamental_discriminants(40, 120);
    auto rows = cm_profile(discs, 2);
    auto probe0 = weighted_exponent_probe(rows, 0.0);
    CHECK(probe0.values.size() == rows.size());
    // gamma = 0: heights grow along |disc| (trend up)
    CHECK(probe0.trend_slope > 0);
    auto probe2 = weighted_exponent_probe(rows, -2.0);
    CHECK(probe2.max_value >= probe2.min_value);
    CHECK_THROWS_AS(weighted_exponent_probe({}, 0.0), DomainError);
}
