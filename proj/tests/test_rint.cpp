#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nkit/rint.hpp"

using namespace nkit;

TEST_CASE("interval arithmetic encloses exact values") {
    RInt a = RInt::exact(mpq_class(1, 3));
    RInt b = RInt::exact(mpq_class(1, 7));
    RInt s = a + b;
    CHECK(s.contains(mpq_class(10, 21)));
    RInt p = a * b;
    CHECK(p.contains(mpq_class(1, 21)));
    CHECK(p.width_d() < 1e-40);
}

TEST_CASE("division and sign handling") {
    RInt a = RInt::from_endpoints(mpq_class(-2), mpq_class(3));
    RInt b = RInt::exact(2);
    RInt q = a / b;
    CHECK(q.contains(mpq_class(-1)));
    CHECK(q.contains(mpq_class(3, 2)));
    CHECK_THROWS_AS(a / RInt::from_endpoints(mpq_class(-1), mpq_class(1)), DivisionByZero);
}

TEST_CASE("log exp sqrt round trips") {
    RInt x = RInt::exact(mpq_class(5));
    RInt l = x.log();
    RInt back = l.exp();
    CHECK(back.contains(mpq_class(5)));
    RInt r = x.sqrt();
    CHECK((r * r).contains(mpq_class(5)));
    RInt c = x.root_ui(3);
    CHECK((c * c * c).contains(mpq_class(5)));
}

TEST_CASE("pi and log2 enclose references") {
    RInt pi = RInt::pi();
    CHECK(pi.lo_d() > 3.14159265358979);
    CHECK(pi.hi_d() < 3.14159265358980);
    RInt l2 = RInt::log2();
    CHECK(l2.lo_d() > 0.693147180559945);
    CHECK(l2.hi_d() < 0.693147180559946);
}

TEST_CASE("complex rectangle operations") {
    CInt i{RInt::exact(0), RInt::exact(1)};
    CInt sq = i * i;
    CHECK(sq.re.contains(mpq_class(-1)));
    CHECK(sq.im.contains(mpq_class(0)));
    CHECK(sq.abs().contains(mpq_class(1)));
    CInt z = CInt::exact(mpq_class(3), mpq_class(4));
    CHECK(z.abs().contains(mpq_class(5)));
}

TEST_CASE("certified value formatting") {
    CertifiedValue v(RInt::exact(mpq_class(1, 2)));
    CHECK(v.mid() == doctest::Approx(0.5));
    CHECK(v.rad() < 1e-300);
}

TEST_CASE("pow_ui on mixed-sign intervals") {
    RInt a = RInt::from_endpoints(mpq_class(-2), mpq_class(3));
    RInt sq = a.pow_ui(2);
    CHECK(sq.contains(mpq_class(0)));
    CHECK(sq.contains(mpq_class(9)));
    CHECK(sq.contains(mpq_class(4)));
    CHECK(!sq.contains(mpq_class(10)));
    RInt cu = a.pow_ui(3);
    CHECK(cu.contains(mpq_class(-8)));
    CHECK(cu.contains(mpq_class(27)));
}
