#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/perversity.hpp"

using namespace strata;
using Std = Perversity::Standard;

TEST_CASE("standard perversities for n=4") {
    CHECK(Perversity::standard(Std::Top, 4).values() == std::vector<int>{0, 1, 2});
    CHECK(Perversity::standard(Std::LowerMiddle, 4).values() == std::vector<int>{0, 0, 1});
    CHECK(Perversity::standard(Std::UpperMiddle, 4).values() == std::vector<int>{0, 1, 1});
    CHECK(Perversity::standard(Std::Zero, 4).values() == std::vector<int>{0, 0, 0});
}

TEST_CASE("make validates the growth conditions") {
    CHECK(Perversity::make({0, 0, 0}, 4).values() == std::vector<int>{0, 0, 0});
    CHECK(Perversity::make({0, 1, 2}, 4).values() == std::vector<int>{0, 1, 2});
    CHECK_THROWS_WITH_AS(Perversity::make({0, 2}, 3), doctest::Contains("k=3"), InputError);
    CHECK_THROWS_AS(Perversity::make({1, 1}, 3), InputError);   // p_2 != 0
    CHECK_THROWS_AS(Perversity::make({0, 1, 0}, 4), InputError); // decreasing
    CHECK_THROWS_AS(Perversity::make({0, 0}, 4), InputError);   // wrong length
}

TEST_CASE("all four standards validate for 2 <= n <= 8") {
    for (int n = 2; n <= 8; ++n)
        for (const Perversity& p : standard_perversities(n))
            CHECK_NOTHROW(Perversity::make(p.values(), n));
}

TEST_CASE("complementary pairs and involution") {
    CHECK(Perversity::standard(Std::Zero, 3).complementary() ==
          Perversity::standard(Std::Top, 3));
    CHECK(Perversity::standard(Std::LowerMiddle, 4).complementary() ==
          Perversity::standard(Std::UpperMiddle, 4));
    for (int n = 2; n <= 6; ++n)
        for (const Perversity& p : standard_perversities(n))
            CHECK(p.complementary().complementary() == p);
}

TEST_CASE("lower-middle equals upper-middle exactly where k-2 is even") {
    for (int n = 2; n <= 8; ++n) {
        const Perversity lm = Perversity::standard(Std::LowerMiddle, n);
        const Perversity um = Perversity::standard(Std::UpperMiddle, n);
        if (n <= 2) CHECK(lm == um);
        for (int k = 2; k <= n; ++k) {
            if ((k - 2) % 2 == 0)
                CHECK(lm(k) == um(k));
            else
                CHECK(lm(k) + 1 == um(k));
        }
    }
}

TEST_CASE("implicit p_0 = p_1 = 0 and accessor bounds") {
    const Perversity t = Perversity::standard(Std::Top, 5);
    CHECK(t(0) == 0);
    CHECK(t(1) == 0);
    CHECK(t(2) == 0);
    CHECK(t(5) == 3);
}

TEST_CASE("CLI spellings parse") {
    CHECK(Perversity::parse("zero", 4) == Perversity::standard(Std::Zero, 4));
    CHECK(Perversity::parse("lower-middle", 4) == Perversity::standard(Std::LowerMiddle, 4));
    CHECK(Perversity::parse("upper-middle", 4) == Perversity::standard(Std::UpperMiddle, 4));
    CHECK(Perversity::parse("top", 4) == Perversity::standard(Std::Top, 4));
    CHECK(Perversity::parse("custom:0,1,1", 4).values() == std::vector<int>{0, 1, 1});
    CHECK_THROWS_AS(Perversity::parse("custom:0,2", 3), InputError);
    CHECK_THROWS_AS(Perversity::parse("middle", 4), InputError);
}

TEST_CASE("truncation restricts to smaller ambient dimensions") {
    const Perversity t = Perversity::standard(Std::Top, 6);
    CHECK(t.truncated(4) == Perversity::standard(Std::Top, 4));
    CHECK(t.truncated(1).values().empty());
}

TEST_CASE("trivial perversities below n=2") {
    for (int n = 0; n <= 1; ++n) {
        for (const Perversity& p : standard_perversities(n)) {
            CHECK(p.values().empty());
            CHECK(p.n() == n);
        }
    }
}

TEST_CASE("display names") {
    CHECK(Perversity::standard(Std::Top, 5).display_name() == "top");
    CHECK(Perversity::make({0, 1, 1, 1}, 5).display_name() == "custom:0,1,1,1");
}
