#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "support/oracle.hpp"
#include "ulam/seq.hpp"
#include "ulam/stats.hpp"

using ulam::Bound;
using ulam::SeqParams;
using ulam::u64;

namespace {

ulam::UlamSequence seq(u64 a, u64 b, u64 value) {
    return ulam::generate(SeqParams(a, b), Bound::by_value(value));
}

constexpr double kLambda = 2.443442967;

}  // namespace

TEST_CASE("densest window of U(1,2)") {
    auto s = seq(1, 2, 100000);
    auto w = ulam::window_max(s);
    CHECK(w.window_len == 6);  // default 3n
    CHECK(w.max_count == 3);
    CHECK(w.window_lo == 8);   // {8, 11, 13}
}

TEST_CASE("densest windows stay within n + 1") {
    for (u64 n = 2; n <= 12; ++n) {
        auto s = seq(1, n, 10000);
        auto w = ulam::window_max(s);
        CHECK(w.window_len == 3 * n);
        CHECK(w.max_count <= n + 1);
    }
    // Denser probes at scale; the bound stays tight but unbroken.
    auto s50 = seq(1, 50, 100000);
    auto w50 = ulam::window_max(s50);
    CHECK(w50.max_count == 50);
    CHECK(w50.window_lo == 200);
}

TEST_CASE("window preconditions") {
    auto other = ulam::generate(SeqParams(2, 5), Bound::by_value(1000));
    CHECK_THROWS_AS(ulam::window_max(other), std::invalid_argument);
    auto tiny = seq(1, 30, 95);  // no full 90-window above 62
    CHECK_THROWS_AS(ulam::window_max(tiny), std::invalid_argument);
}

TEST_CASE("density report matches a direct count") {
    auto s = seq(1, 2, 10000);
    auto expect = oracle::sequence_by_value(1, 2, 10000);
    auto rep = ulam::density(s, 10000);
    CHECK(rep.n == 2);
    CHECK(rep.count == expect.size());
    CHECK(rep.ratio == doctest::Approx(double(expect.size()) / 10000));
    CHECK(rep.bound == doctest::Approx(0.5));  // (n+1)/(3n) at n = 2
    CHECK(rep.truncated.empty());

    CHECK_THROWS_AS(ulam::density(s, 20000), std::out_of_range);
}

TEST_CASE("truncated densities over the first intervals") {
    auto s = seq(1, 2, 1000);
    auto rep = ulam::density(s, 1000, 3);
    REQUIRE(rep.truncated.size() == 3);
    // Intervals: [1,4], [6,6], [8,8].
    CHECK(rep.truncated[0].M == 1);
    CHECK(rep.truncated[0].value == doctest::Approx(1.0));
    CHECK(rep.truncated[1].value == doctest::Approx(5.0 / 6.0));
    CHECK(rep.truncated[2].value == doctest::Approx(6.0 / 8.0));

    // M beyond the interval count reports what exists.
    auto all = ulam::density(s, 1000, 100000);
    CHECK(all.truncated.size() < 100000);
    CHECK(!all.truncated.empty());
}

TEST_CASE("ratio at a hundred thousand terms") {
    auto s = ulam::generate(SeqParams(1, 2), Bound::by_count(100000));
    CHECK(s.terms().back() == 1351223);
    auto rep = ulam::density(s, s.max_value_examined());
    CHECK(rep.count == 100000);
    CHECK(rep.ratio == doctest::Approx(0.0740070).epsilon(1e-4));
}

TEST_CASE("forbidden bands hold for small parameters") {
    for (u64 n : {2ull, 4ull, 7ull}) {
        auto s = seq(1, n, 10000);
        CHECK(ulam::sieve_check(s).empty());
    }
    auto other = ulam::generate(SeqParams(2, 5), Bound::by_value(1000));
    CHECK_THROWS_AS(ulam::sieve_check(other), std::invalid_argument);
}

TEST_CASE("window dichotomy for U(1,2)") {
    auto s = seq(1, 2, 100000);
    CHECK(ulam::u12_window_check(s).empty());

    // At t = 47 the 9-window holds three terms (47, 48, 53) and the
    // 17-window five; the first arm of the dichotomy applies.
    u64 c9 = 0, c17 = 0;
    for (u64 v : s.terms()) {
        if (v >= 47 && v <= 55) ++c9;
        if (v >= 47 && v <= 63) ++c17;
    }
    CHECK(c9 == 3);
    CHECK(c17 == 5);

    auto other = ulam::generate(SeqParams(1, 3), Bound::by_value(1000));
    CHECK_THROWS_AS(ulam::u12_window_check(other), std::invalid_argument);
}

TEST_CASE("histogram conserves mass and validates input") {
    auto s = seq(1, 2, 5000);
    auto h = ulam::mod_histogram(s, kLambda, 60);
    CHECK(h.total == s.terms().size());
    CHECK(std::accumulate(h.bins.begin(), h.bins.end(), u64(0)) == h.total);
    CHECK(h.lambda == doctest::Approx(kLambda));

    auto skipped = ulam::mod_histogram(s, kLambda, 60, 10);
    CHECK(skipped.total == s.terms().size() - 10);

    std::vector<u64> vals = {1, 2, 3};
    CHECK_THROWS_AS(ulam::mod_histogram(vals, kLambda, 2), std::invalid_argument);
    CHECK_THROWS_AS(ulam::mod_histogram(vals, 0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(ulam::mod_histogram(vals, kLambda, 10, 3), std::invalid_argument);
}

TEST_CASE("middle-third mass does not depend on the binning") {
    auto s = seq(1, 2, 20000);
    auto h60 = ulam::mod_histogram(s, kLambda, 60);
    auto h90 = ulam::mod_histogram(s, kLambda, 90);
    auto h7 = ulam::mod_histogram(s, kLambda, 7);
    CHECK(h60.middle_third_mass == doctest::Approx(h90.middle_third_mass));
    CHECK(h60.middle_third_mass == doctest::Approx(h7.middle_third_mass));
}

TEST_CASE("the residue signal concentrates in the middle third") {
    auto s = ulam::generate(SeqParams(1, 2), Bound::by_count(10000));
    auto h0 = ulam::mod_histogram(s, kLambda, 60);
    auto h10 = ulam::mod_histogram(s, kLambda, 60, 10);
    CHECK(h0.middle_third_mass == doctest::Approx(0.99340).epsilon(2e-4));
    CHECK(h10.middle_third_mass == doctest::Approx(0.99379).epsilon(2e-4));
}

TEST_CASE("uniform integers are a flat control") {
    std::vector<u64> vals(100000);
    std::iota(vals.begin(), vals.end(), 1);
    auto h = ulam::mod_histogram(vals, kLambda, 60);
    CHECK(h.middle_third_mass == doctest::Approx(1.0 / 3.0).epsilon(0.06));
    CHECK(h.middle_third_mass > 1.0 / 3.0 - 0.02);
    CHECK(h.middle_third_mass < 1.0 / 3.0 + 0.02);
}
