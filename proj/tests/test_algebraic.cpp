#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nkit/algebraic.hpp"
#include "nkit/errors.hpp"

using namespace nkit;

namespace {
AlgebraicNumber sqrt_of(long n) {
    return root_of(IntPolynomial{-n, 0, 1}, 1); // positive root sorts second
}
} // namespace

TEST_CASE("root_of basics") {
    // x^2 - 2: roots sorted by real part: index 0 = -sqrt2, 1 = +sqrt2
    AlgebraicNumber r = sqrt_of(2);
    CHECK(r.minpoly().to_string() == "x^2 - 2");
    CHECK(r.degree() == 2);
    CHECK(r.region().re.strictly_positive());

    // reducible input is factored: roots of x^2-1 are -1, 1
    AlgebraicNumber m = root_of(IntPolynomial{-1, 0, 1}, 0);
    CHECK(m.is_rational());
    CHECK(m.as_rational() == -1);
    CHECK(m.minpoly().to_string() == "x + 1");

    // x^3 - 7 has one real root; complex pair sorts first by real part
    AlgebraicNumber c = root_of(IntPolynomial{-7, 0, 0, 1}, 2);
    CHECK(c.degree() == 3);
    CHECK(c.region().im.contains_zero());

    CHECK_THROWS_AS(root_of(IntPolynomial{-2, 0, 1}, 2), IndexError);
    CHECK_THROWS_AS(root_of(IntPolynomial{5}, 0), DomainError);
}

TEST_CASE("deterministic selector ordering") {
    AlgebraicNumber a = root_of(IntPolynomial{-2, 0, 1}, 0);
    AlgebraicNumber b = root_of(IntPolynomial{-2, 0, 1}, 0);
    CHECK(a.same_number(b));
    AlgebraicNumber c = root_of(IntPolynomial{-2, 0, 1}, 1);
    CHECK(!a.same_number(c));
}

TEST_CASE("alg_add") {
    AlgebraicNumber s2 = sqrt_of(2);
    AlgebraicNumber s3 = sqrt_of(3);
    AlgebraicNumber sum = alg_add(s2, s3);
    CHECK(sum.degree() == 4);
    CHECK(sum.minpoly().to_string() == "x^4 - 10*x^2 + 1");

    AlgebraicNumber z = alg_add(s2, alg_neg(s2));
    CHECK(z.is_zero());

    AlgebraicNumber q = alg_add(AlgebraicNumber::from_rational(mpq_class(1, 2)),
                                AlgebraicNumber::from_rational(mpq_class(1, 3)));
    CHECK(q.as_rational() == mpq_class(5, 6));

    // rational + algebraic shift
    AlgebraicNumber sh = alg_add(s2, AlgebraicNumber::from_int(1));
    CHECK(sh.degree() == 2);
    CHECK(sh.minpoly().to_string() == "x^2 - 2*x - 1");
}

TEST_CASE("alg_mul") {
    AlgebraicNumber s2 = sqrt_of(2);
    AlgebraicNumber p = alg_mul(s2, s2);
    CHECK(p.is_rational());
    CHECK(p.as_rational() == 2);

    AlgebraicNumber s3 = sqrt_of(3);
    AlgebraicNumber s6 = alg_mul(s2, s3);
    CHECK(s6.degree() == 2);
    CHECK(s6.minpoly().to_string() == "x^2 - 6");

    CHECK(alg_mul(s2, AlgebraicNumber()).is_zero());
}

TEST_CASE("alg_inv") {
    CHECK(alg_inv(AlgebraicNumber::from_int(2)).as_rational() == mpq_class(1, 2));
    AlgebraicNumber s2 = sqrt_of(2);
    AlgebraicNumber inv = alg_inv(s2);
    CHECK(inv.minpoly().to_string() == "2*x^2 - 1");
    CHECK(alg_mul(s2, inv).as_rational() == 1);
    CHECK_THROWS_AS(alg_inv(AlgebraicNumber()), DivisionByZero);

    // (2-i)/(2+i) is a root of 5x^2-6x+5; inverse has the same minpoly
    AlgebraicNumber w = root_of(IntPolynomial{5, -6, 5}, 0);
    AlgebraicNumber winv = alg_inv(w);
    CHECK(winv.minpoly().to_string() == "5*x^2 - 6*x + 5");
    CHECK(winv.same_number(alg_conj(w)));
}

TEST_CASE("conjugates") {
    AlgebraicNumber s2 = sqrt_of(2);
    auto conj = s2.conjugates(1e-12);
    REQUIRE(conj.size() == 2);
    CHECK(conj[0].re.strictly_negative());
    CHECK(conj[1].re.strictly_positive());
    for (auto& b : conj) CHECK((b.abs() * b.abs()).contains(mpq_class(2)));

    // unit-circle pair for 5x^2-6x+5
    AlgebraicNumber w = root_of(IntPolynomial{5, -6, 5}, 0);
    for (auto& b : w.conjugates(1e-15)) CHECK(b.abs2().contains(mpq_class(1)));

    auto rq = AlgebraicNumber::from_rational(mpq_class(7, 3)).conjugates(1e-10);
    REQUIRE(rq.size() == 1);
    CHECK(rq[0].re.contains(mpq_class(7, 3)));
}

TEST_CASE("nth_root") {
    AlgebraicNumber r = nth_root(mpq_class(2), 2);
    CHECK(r.minpoly().to_string() == "x^2 - 2");
    CHECK(r.region().re.strictly_positive());

    AlgebraicNumber s = nth_root(mpq_class(53), 2);
    CInt e = s.enclosure(1e-6);
    CHECK(e.re.lo_d() > 7.2801 - 1e-3);
    CHECK(e.re.hi_d() < 7.2801 + 1e-3);

    AlgebraicNumber t = nth_root(mpq_class(4), 2);
    CHECK(t.is_rational());
    CHECK(t.as_rational() == 2);

    AlgebraicNumber c = nth_root(mpq_class(7), 3);
    CHECK(c.degree() == 3);

    CHECK_THROWS_AS(nth_root(mpq_class(-1), 2), DomainError);
    CHECK_THROWS_AS(nth_root(mpq_class(0), 2), DomainError);
}

TEST_CASE("closure property: minpoly of sum vanishes on sum enclosure") {
    AlgebraicNumber a = root_of(IntPolynomial{-1, -1, 0, 1}, 2); // real root of x^3-x-1
    AlgebraicNumber b = sqrt_of(5);
    AlgebraicNumber s = alg_add(a, b);
    CInt ea = a.enclosure(1e-20), eb = b.enclosure(1e-20);
    CInt sum = ea + eb;
    CHECK(s.minpoly().eval(sum).contains_zero());
    CHECK(s.degree() == 6);
}
