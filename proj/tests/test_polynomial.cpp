#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acomp/error.hpp"
#include "acomp/polynomial.hpp"

using namespace acomp;

TEST_CASE("parsing both text forms") {
    auto p = IntPolynomial::parse("x^3-x-1");
    CHECK(p.degree() == 3);
    CHECK(p.coeff(3) == 1);
    CHECK(p.coeff(2) == 0);
    CHECK(p.coeff(1) == -1);
    CHECK(p.coeff(0) == -1);
    CHECK(p == IntPolynomial::parse("[-1,-1,0,1]"));
    CHECK(IntPolynomial::parse("x^2-3x+1").coeff(1) == -3);
    CHECK(IntPolynomial::parse("2x^2+x") == IntPolynomial::parse("[0,1,2]"));
    CHECK_THROWS_AS(IntPolynomial::parse("x^2-3y"), Error);
    CHECK_THROWS_AS(IntPolynomial::parse(""), Error);
}

TEST_CASE("to_string is canonical and round-trips") {
    for (const char* s : {"x^3-x-1", "x^2-x-1", "x^3-2x^2-x+1", "x^3-x^2-2x-1"}) {
        auto p = IntPolynomial::parse(s);
        CHECK(p.to_string() == s);
        CHECK(IntPolynomial::parse(p.to_string()) == p);
    }
}

TEST_CASE("ring operations") {
    auto f = IntPolynomial::parse("x^2-x-1");
    auto g = IntPolynomial::parse("x-2");
    CHECK((f + g) == IntPolynomial::parse("x^2-3"));
    CHECK((f - g) == IntPolynomial::parse("x^2-2x+1"));
    CHECK((f * g) == IntPolynomial::parse("x^3-3x^2+x+2"));
    CHECK(f.derivative() == IntPolynomial::parse("2x-1"));
    CHECK(f.eval(mpz_class(3)) == 5);
    CHECK(f.eval(mpq_class(1, 2)) == mpq_class(-5, 4));
}

TEST_CASE("exact division") {
    auto prod = IntPolynomial::parse("x^3-3x^2+x+2");
    auto q = prod.divide_exact(IntPolynomial::parse("x-2"));
    REQUIRE(q.has_value());
    CHECK(*q == IntPolynomial::parse("x^2-x-1"));
    CHECK(!prod.divide_exact(IntPolynomial::parse("x-1")).has_value());
}

TEST_CASE("irreducibility certificates") {
    CHECK(!IntPolynomial::parse("x^2-x-1").find_rational_factor().has_value());
    CHECK(!IntPolynomial::parse("x^3-x-1").find_rational_factor().has_value());
    CHECK(!IntPolynomial::parse("x^3-x^2-x-1").find_rational_factor().has_value());
    CHECK(!IntPolynomial::parse("x^3-2x^2-x+1").find_rational_factor().has_value());

    auto f1 = IntPolynomial::parse("x^2-3x-4").find_rational_factor();
    REQUIRE(f1.has_value());
    CHECK(IntPolynomial::parse("x^2-3x-4").divide_exact(*f1).has_value());

    auto f2 = IntPolynomial::parse("x^3-3x^2+x").find_rational_factor();
    REQUIRE(f2.has_value());
    CHECK(IntPolynomial::parse("x^3-3x^2+x").divide_exact(*f2).has_value());

    // product of two irreducible quadratics, no rational root
    auto f3 = IntPolynomial::parse("x^4-3x^2+1").find_rational_factor();
    REQUIRE(f3.has_value());
    CHECK(f3->degree() == 2);
}

TEST_CASE("real root counting via Sturm chains") {
    auto golden = IntPolynomial::parse("x^2-x-1");
    CHECK(golden.count_real_roots(mpq_class(0), mpq_class(2)) == 1);
    CHECK(golden.count_real_roots(mpq_class(-2), mpq_class(2)) == 2);
    CHECK(golden.count_real_roots(mpq_class(2), mpq_class(10)) == 0);

    auto plastic = IntPolynomial::parse("x^3-x-1");
    CHECK(plastic.count_real_roots(mpq_class(-10), mpq_class(10)) == 1);
    CHECK(plastic.count_real_roots(mpq_class(1), mpq_class(2)) == 1);

    // three real roots
    auto allreal = IntPolynomial::parse("x^3-2x^2-x+1");
    CHECK(allreal.count_real_roots(mpq_class(-10), mpq_class(10)) == 3);
    CHECK(allreal.count_real_roots(mpq_class(2), mpq_class(3)) == 1);
}
