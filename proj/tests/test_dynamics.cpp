#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nkit/dynamics.hpp"
#include "nkit/errors.hpp"

using namespace nkit;

namespace {
MPoly m2(std::initializer_list<std::pair<std::vector<unsigned>, long>> terms) {
    MPoly f(2);
    for (auto& [e, c] : terms) f.add_term(e, c);
    return f;
}
ProjectiveSelfMap power_map(unsigned D) {
    return make_selfmap({m2({{{D, 0}, 1}}), m2({{{0, D}, 1}})});
}
} // namespace

TEST_CASE("make_selfmap validation") {
    auto f = power_map(2);
    CHECK(f.D == 2);
    CHECK(f.n == 1);
    CHECK(f.morphism_certified);

    // (x^2, xy) has the common zero (0:1)
    CHECK_THROWS_AS(make_selfmap({m2({{{2, 0}, 1}}), m2({{{1, 1}, 1}})}), NotAMorphism);
    // unequal degrees
    CHECK_THROWS_AS(make_selfmap({m2({{{2, 0}, 1}}), m2({{{0, 3}, 1}})}), DomainError);
    // degree 1 rejected
    CHECK_THROWS_AS(make_selfmap({m2({{{1, 0}, 1}}), m2({{{0, 1}, 1}})}), DomainError);
}

TEST_CASE("lattes duplication of y^2 = x^3 - x") {
    auto L = lattes_duplication(-1, 0);
    CHECK(L.D == 4);
    CHECK(L.morphism_certified);
    // forms: (x^2+z^2)^2 and 4z(x^3 - x z^2)
    MPoly F0 = m2({{{4, 0}, 1}, {{2, 2}, 2}, {{0, 4}, 1}});
    MPoly F1 = m2({{{3, 1}, 4}, {{1, 3}, -4}});
    CHECK(L.forms[0] == F0);
    CHECK(L.forms[1] == F1);
    CHECK_THROWS_AS(lattes_duplication(0, 0), DomainError);
}

TEST_CASE("map height") {
    CHECK(map_height(power_map(2)).mid() == 0.0);
    // (x^2+y^2, 2y^2): coefficients (1,1,2) coprime -> log 2
    auto f = make_selfmap({m2({{{2, 0}, 1}, {{0, 2}, 1}}), m2({{{0, 2}, 2}})});
    CHECK(std::fabs(map_height(f).mid() - std::log(2)) < 1e-12);
    // scaling all forms by 5 leaves the height unchanged
    auto g = make_selfmap({m2({{{2, 0}, 5}, {{0, 2}, 5}}), m2({{{0, 2}, 10}})});
    CHECK(map_height(g).mid() == map_height(f).mid());
}

TEST_CASE("height gap bound") {
    auto p = power_map(2);
    auto gp = height_gap_bound(p);
    CHECK(gp.R.interval().hi_d() <= 1e-12); // exactly 0 for power maps
    CHECK(!gp.lower_heuristic);

    auto f = make_selfmap({m2({{{2, 0}, 1}, {{0, 2}, 1}}), m2({{{0, 2}, 2}})});
    auto gf = height_gap_bound(f);
    // upper part: log max L1 = log 2
    CHECK(std::fabs(gf.upper.mid() - std::log(2)) < 1e-12);
    CHECK(gf.R.mid() >= gf.upper.mid() - 1e-12);
    // soundness on sampled points: |h(fP) - 2h(P)| <= R
    double R = gf.R.interval().hi_d();
    uint64_t st = 7;
    for (int t = 0; t < 300; t++) {
        st = st * 6364136223846793005ull + 1442695040888963407ull;
        long a = (long)(st >> 52) - 2048;
        st = st * 6364136223846793005ull + 1442695040888963407ull;
        long b = (long)(st >> 52) - 2048;
        if (a == 0 && b == 0) a = 1;
        auto v = normalize_int_tuple({mpz_class(a), mpz_class(b)});
        auto w = apply_map_int(f, v);
        double h = 0, hw = 0;
        for (auto& x : v) h = std::max(h, std::log(std::fabs(x.get_d())));
        for (auto& x : w) hw = std::max(hw, std::log(std::fabs(x.get_d())));
        CHECK(std::fabs(hw - 2 * h) <= R + 1e-9);
    }
}

TEST_CASE("canonical height of power maps is the ordinary height") {
    auto p = power_map(2);
    auto r = canonical_height(p, ProjectiveTuple::from_ints({2, 1}), 1e-9);
    CHECK(std::fabs(r.value.mid() - std::log(2)) < 1e-9);
    CHECK(r.iterations_used == 0);
    // root of unity: hhat = 0 via R = 0
    AlgebraicNumber zeta5 = root_of(IntPolynomial{1, 1, 1, 1, 1}, 0);
    ProjectiveTuple Pz{std::vector<AlgebraicNumber>{zeta5, AlgebraicNumber::from_int(1)}};
    auto rz = canonical_height(p, Pz, 1e-9);
    CHECK(rz.value.interval().hi_d() < 1e-9);
}

TEST_CASE("canonical height telescoping for a non-power map") {
    auto f = make_selfmap({m2({{{2, 0}, 1}, {{0, 2}, 1}}), m2({{{0, 2}, 2}})});
    auto r = canonical_height(f, ProjectiveTuple::from_ints({3, 1}), 1e-4);
    CHECK(r.value.rad() <= 2e-4 + 1e-9);
    // functional equation |hhat(fP) - D hhat(P)| within radii
    auto v = apply_map_int(f, {3, 1});
    std::vector<long> vl;
    for (auto& x : v) vl.push_back((long)x.get_si());
    auto rf = canonical_height(f, ProjectiveTuple::from_ints(vl), 1e-4);
    CHECK(std::fabs(rf.value.mid() - 2.0 * r.value.mid()) <=
          rf.value.rad() + 2 * r.value.rad() + 1e-6);
}

TEST_CASE("lattes two-torsion points are preperiodic with hhat 0") {
    auto L = lattes_duplication(-1, 0);
    for (long x : {0L, 1L, -1L}) {
        auto pre = preperiodic_test(L, ProjectiveTuple::from_ints({x, 1}), 32);
        CHECK(pre.status == PreperiodicStatus::Preperiodic);
        auto ch = canonical_height(L, ProjectiveTuple::from_ints({x, 1}), 1e-9);
        CHECK(ch.exact_zero);
        CHECK(ch.value.mid() == 0.0);
    }
    // point at infinity is fixed
    auto pinf = preperiodic_test(L, ProjectiveTuple::from_ints({1, 0}), 8);
    CHECK(pinf.status == PreperiodicStatus::Preperiodic);
    CHECK(pinf.period == 1);
}

TEST_CASE("preperiodic test on power maps") {
    auto p = power_map(2);
    auto fixed = preperiodic_test(p, ProjectiveTuple::from_ints({1, 1}), 8);
    CHECK(fixed.status == PreperiodicStatus::Preperiodic);
    auto wander = preperiodic_test(p, ProjectiveTuple::from_ints({2, 1}), 16);
    CHECK(wander.status == PreperiodicStatus::NotPreperiodic);
    CHECK(wander.hhat_lower > 0.5);
    // x^2 - 1 homogenized: (x^2 - y^2, y^2), orbit of (0:1): 0 -> -1 -> 0
    auto f = make_selfmap({m2({{{2, 0}, 1}, {{0, 2}, -1}}), m2({{{0, 2}, 1}})});
    auto r = preperiodic_test(f, ProjectiveTuple::from_ints({0, 1}), 8);
    CHECK(r.status == PreperiodicStatus::Preperiodic);
    CHECK(r.period == 2);
}

TEST_CASE("dyn_constants") {
    auto c = dyn_constants(1, 2);
    CHECK(c.c1 == 20);
    REQUIRE(c.c2_exact);
    mpz_class expect = 3 * (mpz_class(1) << 128); // 3 * 4^64
    CHECK(c.c2 == expect);
    CHECK(std::fabs(c.log_c2.mid_d() - (std::log(3.0) + 64 * std::log(4.0))) < 1e-9);

    auto c2 = dyn_constants(2, 2);
    CHECK(c2.c1 == 80);

    CHECK_THROWS_AS(dyn_constants(0, 2), DomainError);
    CHECK_THROWS_AS(dyn_constants(1, 1), DomainError);
}

TEST_CASE("call_silverman_gap") {
    CHECK(call_silverman_gap(CertifiedValue(RInt::exact(0)), 2.0).mid() == 0.0);
    auto v = call_silverman_gap(CertifiedValue(RInt::exact(6).log()), 2.0);
    CHECK(std::fabs(v.mid() - std::log(6)) < 1e-12);
    auto w = call_silverman_gap(CertifiedValue(RInt::exact(1)), 3.0);
    CHECK(std::fabs(w.mid() - 0.5) < 1e-12);
    CHECK_THROWS_AS(call_silverman_gap(CertifiedValue(RInt::exact(1)), 1.0), DomainError);
}

TEST_CASE("macaulay morphism certification on P^2") {
    // (x^2, y^2, z^2) is a morphism of P^2
    MPoly x2(3), y2(3), z2(3);
    x2.add_term({2, 0, 0}, 1);
    y2.add_term({0, 2, 0}, 1);
    z2.add_term({0, 0, 2}, 1);
    auto f = make_selfmap({x2, y2, z2});
    CHECK(f.morphism_certified);
    CHECK(f.n == 2);
    auto g = height_gap_bound(f);
    CHECK(!g.lower_heuristic);
    CHECK(g.R.interval().hi_d() < 1e-9); // power map on P^2
    // degenerate: (x^2, y^2, xy) has common zeros
    MPoly xy(3);
    xy.add_term({1, 1, 0}, 1);
    CHECK_THROWS_AS(make_selfmap({x2, y2, xy}), NotAMorphism);
}
