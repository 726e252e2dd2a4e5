#include "doctest.h"
#include "hyperopic/errors.hpp"
#include "hyperopic/rational.hpp"

using namespace hyperopic;

TEST_CASE("construction and reduction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).num() == 2);
    CHECK(Rational(6, 3).den() == 1);
    CHECK(Rational(113, 355).num() == 113); // already reduced
    CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), InputError);
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(-1, 6).abs() == Rational(1, 6));
}

TEST_CASE("comparison") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(113, 355) < Rational(1, 3));
    CHECK(Rational(1, 2) <= Rational(1, 2));
    CHECK(Rational(2, 5) > Rational(1, 3));
    CHECK(Rational(0) < Rational(1, 1000000));
}

TEST_CASE("formatting") {
    CHECK(Rational(1, 3).to_string() == "1/3");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(-1, 3).to_string() == "-1/3");
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
}

TEST_CASE("convergents") {
    // 1/3 = [0; 3]: convergents 0/1 then 1/3.
    auto c = Rational(1, 3).convergents();
    REQUIRE(c.size() == 2);
    CHECK(c[0] == Rational(0));
    CHECK(c[1] == Rational(1, 3));

    // 2/5 = [0; 2, 2]: 0/1, 1/2, 2/5.
    auto d = Rational(2, 5).convergents();
    REQUIRE(d.size() == 3);
    CHECK(d[1] == Rational(1, 2));
    CHECK(d[2] == Rational(2, 5));

    // The sequence ends at the value itself and error shrinks monotonically.
    Rational target(113, 355);
    auto e = target.convergents();
    CHECK(e.back() == target);
    for (std::size_t i = 2; i < e.size(); ++i) {
        CHECK((e[i] - target).abs() < (e[i - 1] - target).abs());
    }
}
