#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nkit/thresholds.hpp"
#include "nkit/errors.hpp"

using namespace nkit;

TEST_CASE("threshold_proj worked example") {
    auto rep = threshold_proj(1, 1, 1);
    double expect = 1 + 3.5 * std::log(2) + 0.5 + std::log(2);
    CHECK(std::fabs(rep.threshold.mid() - expect) < 1e-10);
    CHECK(std::fabs(rep.threshold.mid() - 4.6192) < 1e-4);
    REQUIRE(rep.irreducible_variant.has_value());
    double diff = rep.threshold.mid() - rep.irreducible_variant->mid();
    CHECK(std::fabs(diff - std::log(2)) < 1e-12);
    // relative shift adds exactly
    auto rel = threshold_proj(1, 1, 1, 2.0);
    CHECK(std::fabs(rel.threshold.mid() - (expect + 2.0)) < 1e-10);
}

TEST_CASE("threshold_abvar worked example") {
    auto rep = threshold_abvar(1, 16, 1, 0, 3);
    double expect = 1 + 0 + 3 * std::log(2) + 11.0 / 12 + std::log(2);
    CHECK(std::fabs(rep.threshold.mid() - expect) < 1e-10);
    CHECK(std::fabs(rep.threshold.mid() - 4.690) < 1e-3);
    // raising h2 by 1 raises the threshold by (d/16) 4^(g+1) = 16
    auto rep2 = threshold_abvar(1, 16, 1, 1, 3);
    CHECK(std::fabs(rep2.threshold.mid() - rep.threshold.mid() - 16.0) < 1e-9);
    // irreducible variant subtracts d log2/16 = log 2 here
    double diff = rep.threshold.mid() - rep.irreducible_variant->mid();
    CHECK(std::fabs(diff - std::log(2)) < 1e-12);
}

TEST_CASE("threshold_dyn") {
    auto rep = threshold_dyn(1, 2, 1, 1, 0);
    // 1 + 3*4^64 + 1/2; log10 ~ 39.01
    REQUIRE(rep.dyn.has_value());
    CHECK(rep.dyn->c1 == 20);
    CHECK(rep.dyn->c2_exact);
    double l10 = std::stod(rep.log10_threshold);
    CHECK(std::fabs(l10 - 39.0137) < 0.01);
    CHECK(!rep.irreducible_variant.has_value());
    // C1 contribution: h_f = 1 adds d*20
    auto rep2 = threshold_dyn(1, 2, 1, 1, 1);
    double delta = rep2.threshold.mid() - rep.threshold.mid();
    CHECK(std::fabs(delta - 20.0) < 1e-6);
    // astronomically large: n = 3, D = 3 still renders
    auto big = threshold_dyn(3, 3, 1, 1, 0);
    CHECK(!big.dyn->c2_exact);
    CHECK(big.log10_threshold.size() > 3);
}

TEST_CASE("threshold_main and consistency with proj") {
    auto rep = threshold_main(2, 1, 3);
    CHECK(rep.threshold.mid() == 8.0);
    auto c = threshold_main(1, mpq_class(7, 2), 0);
    CHECK(c.threshold.mid() == doctest::Approx(3.5));
    // threshold_proj(n,d,C) = threshold_main(d, C, R) with
    // R = (7/2) n log2 + c(n) + log 2 -- checked at matching precision
    for (unsigned n : {1u, 2u, 4u}) {
        for (unsigned d : {1u, 3u}) {
            auto p = threshold_proj(n, d, 2);
            RInt R = RInt::log2().mul_si(7L * n).div_ui(2) + RInt::exact(c_n(n)) + RInt::log2();
            RInt main_style = (RInt::exact(mpq_class(2)) + R).mul_si((long)d);
            CHECK(std::fabs(p.threshold.mid() - main_style.mid_d()) < 1e-12);
        }
    }
}

TEST_CASE("monotonicity in every input") {
    auto base = threshold_proj(2, 2, 2);
    CHECK(threshold_proj(2, 3, 2).threshold.mid() > base.threshold.mid());
    CHECK(threshold_proj(2, 2, 3).threshold.mid() > base.threshold.mid());
    CHECK(threshold_proj(3, 2, 2).threshold.mid() > base.threshold.mid());
    auto ab = threshold_abvar(1, 4, 1, 1, 2);
    CHECK(threshold_abvar(1, 4, 2, 1, 2).threshold.mid() > ab.threshold.mid());
    CHECK(threshold_abvar(1, 4, 1, 2, 2).threshold.mid() > ab.threshold.mid());
    CHECK(threshold_abvar(2, 4, 1, 1, 2).threshold.mid() > ab.threshold.mid());
    CHECK_THROWS_AS(threshold_proj(0, 1, 1), DomainError);
    CHECK_THROWS_AS(threshold_main(1, 0, 1), DomainError);
}

TEST_CASE("doubled precision agreement") {
    auto a = threshold_proj(2, 3, mpq_class(5, 3));
    mpfr_prec_t old = default_precision();
    set_default_precision(old * 2);
    auto b = threshold_proj(2, 3, mpq_class(5, 3));
    set_default_precision(old);
    CHECK(std::fabs(a.threshold.mid() - b.threshold.mid()) < 1e-15);
    CHECK(b.threshold.rad() <= a.threshold.rad());
}
