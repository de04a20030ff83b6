#include <doctest.h>

#include "fractiso/ratio.hpp"

using namespace fractiso;

TEST_SUITE("ratio") {

TEST_CASE("lowest terms and positive denominator") {
    CHECK(Ratio(2, 4).str() == "1/2");
    CHECK(Ratio(-2, 4).str() == "-1/2");
    CHECK(Ratio(2, -4).str() == "-1/2");
    CHECK(Ratio(0, 7).str() == "0/1");
    CHECK(Ratio(7).str() == "7/1");
}

TEST_CASE("parsing accepts integers, p/q and decimals") {
    CHECK(Ratio::parse("3") == Ratio(3));
    CHECK(Ratio::parse("-3") == Ratio(-3));
    CHECK(Ratio::parse("6/8") == Ratio(3, 4));
    CHECK(Ratio::parse(" 1/3 ") == Ratio(1, 3));
    CHECK(Ratio::parse("0.25") == Ratio(1, 4));
    CHECK(Ratio::parse("-0.5") == Ratio(-1, 2));
    CHECK(Ratio::parse("1.") == Ratio(1));
    CHECK(Ratio::parse(".5") == Ratio(1, 2));
    // d digits means denominator 10^d before reduction
    CHECK(Ratio::parse("0.142857") == Ratio(142857, 1000000));
}

TEST_CASE("parse failures carry ParseError") {
    for (const char* bad : {"", "1/0", "a", "1/2/3", "1.2.3", "2e3", "/3", "--1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Ratio::parse(bad), error);
        try {
            Ratio::parse(bad);
        } catch (const error& e) {
            CHECK(e.code() == errc::parse_error);
        }
    }
}

TEST_CASE("field operations are exact") {
    const Ratio a(1, 3), b(1, 6);
    CHECK(a + b == Ratio(1, 2));
    CHECK(a - b == Ratio(1, 6));
    CHECK(a * b == Ratio(1, 18));
    CHECK(a / b == Ratio(2));
    CHECK(-a == Ratio(-1, 3));
    CHECK(a + b > a);
    CHECK(Ratio(1, 3) + Ratio(1, 3) + Ratio(1, 3) == Ratio(1));
}

TEST_CASE("exactness survives where doubles would not") {
    Ratio acc;
    for (int i = 0; i < 10; ++i) acc += Ratio(1, 10);
    CHECK(acc == Ratio(1));
    // denominators beyond 64-bit
    Ratio big(1, 3);
    for (int i = 0; i < 50; ++i) big *= Ratio(1, 3);
    Ratio back = big;
    for (int i = 0; i < 51; ++i) back *= Ratio(3);
    CHECK(back == Ratio(1));
}

TEST_CASE("field axioms on pseudo-random rationals") {
    std::uint64_t state = 42;
    auto next_ratio = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        const long num = static_cast<long>((state >> 33) % 401) - 200;
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        const long den = 1 + static_cast<long>((state >> 33) % 40);
        return Ratio(num, den);
    };
    for (int trial = 0; trial < 200; ++trial) {
        const Ratio a = next_ratio(), b = next_ratio(), c = next_ratio();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}

TEST_CASE("dot product") {
    CHECK(dot({Ratio(1, 2), Ratio(1, 3)}, {Ratio(2), Ratio(3)}) == Ratio(2));
    CHECK_THROWS_AS(dot({Ratio(1)}, {}), error);
}

} // TEST_SUITE
