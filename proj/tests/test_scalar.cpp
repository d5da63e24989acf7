#include "doctest.h"

#include "jetgerm/scalar.hpp"

using namespace jetgerm;

TEST_CASE("rationals are always canonical") {
    Rat a = make_rat(2, 6);
    CHECK(rat_str(a) == "1/3");
    Rat b = make_rat(1, 3);
    Rat s = a + b;
    s.canonicalize();
    CHECK(rat_str(s) == "2/3");
    CHECK(rat_str(make_rat(-4, 8)) == "-1/2");
    CHECK(rat_str(make_rat(3, -9)) == "-1/3");
    CHECK(rat_str(make_rat(0, 7)) == "0");
    CHECK(rat_str(make_rat(5)) == "5");
}

TEST_CASE("rational parsing") {
    CHECK(rat_parse("22/7") == make_rat(22, 7));
    CHECK(rat_parse("-3/6") == make_rat(-1, 2));
    CHECK(rat_parse("4") == make_rat(4));
    CHECK(rat_parse("0") == make_rat(0));
    CHECK_THROWS_AS(rat_parse("1/0"), Error);
    CHECK_THROWS_AS(rat_parse("abc"), Error);
    CHECK_THROWS_AS(make_rat(1, 0), Error);
}

TEST_CASE("complex rational field operations") {
    CRat i = CRat(make_rat(0), make_rat(1));
    CHECK(i * i == CRat(make_rat(-1), make_rat(0)));

    CRat z(make_rat(1, 2), make_rat(-1, 3));
    CRat w(make_rat(2), make_rat(5));

    CRat p = z * w;
    // (1/2 - i/3)(2 + 5i) = 1 + 5/3 + i(5/2 - 2/3)
    CHECK(p == CRat(make_rat(8, 3), make_rat(11, 6)));

    CRat q = p / w;
    CHECK(q == z);
    CHECK((z + w) - w == z);

    CHECK_THROWS_AS(z / CRat{}, Error);
    CHECK(CRat{}.is_zero());
    CHECK(!z.is_zero());
}

TEST_CASE("scalar traits for both coefficient modes") {
    static_assert(ScalarOps<CRat>::exact);
    static_assert(!ScalarOps<std::complex<double>>::exact);

    CHECK(ScalarOps<CRat>::is_zero(ScalarOps<CRat>::zero()));
    CHECK(ScalarOps<CRat>::from_ratio(3, 4) == CRat(make_rat(3, 4), make_rat(0)));
    auto c = ScalarOps<CRat>::to_c(CRat(make_rat(1, 4), make_rat(-2)));
    CHECK(c.real() == doctest::Approx(0.25));
    CHECK(c.imag() == doctest::Approx(-2.0));

    using C = std::complex<double>;
    CHECK(ScalarOps<C>::is_zero(C(0.0, 0.0)));
    CHECK(!ScalarOps<C>::is_zero(C(1e-6, 0.0)));
    CHECK(ScalarOps<C>::from_ratio(1, 8) == C(0.125, 0.0));
}
