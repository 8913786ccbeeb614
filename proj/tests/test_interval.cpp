#include <doctest.h>

#include <cmath>
#include <random>

#include "oddc/interval.hpp"

using oddc::Interval;

namespace {
const double inf = Interval::inf();
}

TEST_CASE("contains is lower-closed, upper-open") {
    CHECK(Interval::at_least(2.197).contains(2.197));
    CHECK_FALSE(Interval::below(2.197).contains(2.197));
    CHECK(Interval{0.772, 3.479}.contains(3.0));
    CHECK_FALSE(Interval{0.772, 3.479}.contains(3.479));
    CHECK(Interval{0.772, 3.479}.contains(0.772));
}

TEST_CASE("contains at infinite endpoints") {
    CHECK(Interval::below(2.0).contains(-inf));
    CHECK(Interval::at_least(2.0).contains(inf));
    CHECK_FALSE(Interval::below(2.0).contains(inf));
    CHECK_FALSE(Interval{1.0, 2.0}.contains(inf));
    CHECK(Interval::full().contains(0.0));
    CHECK_FALSE(Interval::empty().contains(0.0));
    CHECK_THROWS_AS((void)Interval::full().contains(std::nan("")), std::invalid_argument);
}

TEST_CASE("offset shifts both ends and keeps infinities") {
    CHECK(offset(Interval{2, 5}, -1) == Interval{1, 4});
    CHECK(offset(Interval::below(2.197), 0.5) == Interval::below(2.697));
    // one-attribute recursion step: [rho, inf) shifted by -w
    CHECK(offset(Interval::at_least(2.0), -0.75) == Interval::at_least(1.25));
    CHECK_THROWS_AS((void)offset(Interval{0, 1}, inf), std::invalid_argument);
}

TEST_CASE("offset round-trips exactly for representable deltas") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        double lo = num(rng) / 64.0;
        double hi = lo + (std::abs(num(rng)) + 1) / 64.0;
        double delta = num(rng) / 64.0;
        Interval iv{lo, hi};
        CHECK(offset(offset(iv, delta), -delta) == iv);
    }
}

TEST_CASE("intersect basics") {
    CHECK(intersect(Interval{0, 3}, Interval{1, 5}) == Interval{1, 3});
    Interval iv{-2.5, 7.25};
    CHECK(intersect(iv, Interval::full()) == iv);
    CHECK(intersect(Interval{0, 1}, Interval{2, 3}).is_empty());
}

TEST_CASE("intersect is commutative, associative, idempotent") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(-10.0, 10.0);
    auto random_interval = [&] {
        switch (rng() % 4) {
        case 0: return Interval::full();
        case 1: return Interval::at_least(unif(rng));
        case 2: return Interval::below(unif(rng));
        default: {
            double a = unif(rng), b = unif(rng);
            return a < b ? Interval{a, b} : Interval{b, a};
        }
        }
    };
    for (int i = 0; i < 300; ++i) {
        Interval a = random_interval(), b = random_interval(), c = random_interval();
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(intersect(a, a) == a);

        double x = unif(rng);
        CHECK(intersect(a, b).contains(x) == (a.contains(x) && b.contains(x)));
    }
}

TEST_CASE("rendering uses 6 significant digits and spelled-out infinities") {
    CHECK(oddc::to_string(Interval{0.771514632, 3.47914543}) == "[0.771515, 3.47915)");
    CHECK(oddc::to_string(Interval::below(2.197)) == "[-inf, 2.197)");
    CHECK(oddc::to_string(Interval::at_least(0.0)) == "[0, inf)");
}
