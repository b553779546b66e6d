#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "brauer/gaussrat.hpp"

using namespace brauer;

namespace {

// Independent oracle: r = p/q (reduced) is a rational square iff every prime
// in p and q appears to an even power. Trial division, no gmp helpers.
bool odd_exponent_free(long n) {
    if (n < 0) return false;
    for (long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2 != 0) return false;
    }
    return n == 1;  // leftover prime would have exponent 1
}

bool rational_square_oracle(long num, long den) {
    if (num == 0) return true;
    if (num < 0) return false;
    long g = std::gcd(num, den);
    return odd_exponent_free(num / g) && odd_exponent_free(den / g);
}

// case split for c = a + 0i: square in Q(i) iff a or -a is a rational square
bool real_square_in_qi_oracle(long num, long den) {
    return rational_square_oracle(num, den) || rational_square_oracle(-num, den);
}

GaussRat gr(long re_n, long re_d, long im_n, long im_d) {
    return GaussRat(make_rat(re_n, re_d), make_rat(im_n, im_d));
}

} // namespace

TEST_CASE("rational construction stays reduced with positive denominator") {
    Rat r = make_rat(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(rat_str(r) == "-3/2");
    CHECK(rat_str(make_rat(10, 5)) == "2");
}

TEST_CASE("gauss_is_square on known values") {
    auto w144 = gauss_is_square(GaussRat(144));
    REQUIRE(w144.has_value());
    CHECK(*w144 == GaussRat(12));

    auto wm1 = gauss_is_square(GaussRat(-1));
    REQUIRE(wm1.has_value());
    CHECK(*wm1 == GaussRat::imag_unit());

    auto wm4 = gauss_is_square(GaussRat(-4));
    REQUIRE(wm4.has_value());
    CHECK(*wm4 == gr(0, 1, 2, 1));
}

TEST_CASE("2 is not a square in Q(i): oracle agreement") {
    // exhaustive case split: a^2 - b^2 = 2 with 2ab = 0 forces b = 0 or a = 0,
    // i.e. 2 or -2 a rational square; the oracle rejects both
    CHECK_FALSE(real_square_in_qi_oracle(2, 1));
    CHECK_FALSE(gauss_is_square(GaussRat(2)).has_value());

    // the same oracle agrees on a sweep of small rationals
    for (long n = -30; n <= 30; ++n) {
        for (long d = 1; d <= 6; ++d) {
            if (n == 0) continue;
            CHECK(gauss_is_square(GaussRat(make_rat(n, d))).has_value() ==
                  real_square_in_qi_oracle(n, d));
        }
    }
}

TEST_CASE("zero input is rejected") {
    CHECK_THROWS_AS(gauss_is_square(GaussRat(0)), ZeroInput);
}

TEST_CASE("square witnesses multiply and round-trip") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> coeff(-9, 9);
    int tested = 0;
    while (tested < 200) {
        GaussRat c(make_rat(coeff(rng), 1 + std::abs(coeff(rng))),
                   make_rat(coeff(rng), 1 + std::abs(coeff(rng))));
        if (c.is_zero()) continue;
        ++tested;

        // gauss_is_square(c^2) returns +-c
        auto w = gauss_is_square(c * c);
        REQUIRE(w.has_value());
        CHECK((*w == c || *w == -c));
        CHECK(*w * *w == c * c);

        // multiplicativity: squares are closed under products
        GaussRat d = c * c * GaussRat(make_rat(5, 3), make_rat(1, 2));
        auto wd = gauss_is_square(d * d);
        REQUIRE(wd.has_value());
        auto prod = gauss_is_square((c * c) * (d * d));
        REQUIRE(prod.has_value());
        CHECK(*prod * *prod == (c * c) * (d * d));
    }
}

TEST_CASE("canonical text form") {
    CHECK(GaussRat(3).str() == "3");
    CHECK(gr(-1, 2, 0, 1).str() == "-1/2");
    CHECK(GaussRat::imag_unit().str() == "i");
    CHECK(gr(0, 1, -1, 1).str() == "-i");
    CHECK(gr(0, 1, 3, 1).str() == "3*i");
    CHECK(gr(1, 2, 3, 4).str() == "1/2+3/4*i");
    CHECK(gr(2, 1, -1, 1).str() == "2-i");
    CHECK(gr(2, 1, -2, 3).str() == "2-2/3*i");
}

TEST_CASE("field arithmetic in Q(i)") {
    GaussRat i = GaussRat::imag_unit();
    CHECK(i * i == GaussRat(-1));
    GaussRat z = gr(3, 1, -2, 1);
    CHECK(z * z.inv() == GaussRat(1));
    CHECK(z.pow(3) == z * z * z);
    CHECK(z.pow(-2) == (z * z).inv());
    CHECK(z.norm() == make_rat(13, 1));
}
