#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ulam/regularity.hpp"
#include "ulam/seq.hpp"

using ulam::Bound;
using ulam::Certificate;
using ulam::SeqParams;
using ulam::u64;

namespace {

ulam::UlamSequence seq(u64 a, u64 b, u64 value) {
    return ulam::generate(SeqParams(a, b), Bound::by_value(value));
}

}  // namespace

TEST_CASE("odd-position windows") {
    auto s = seq(1, 2, 100);
    // Odd members up to 17: 1, 3, 11, 13. The window at k = 1 with l = 10
    // reads the bits of 1,3,5,7,9,11,13,15,17.
    auto w = ulam::s_window(s, 10, 1);
    CHECK(w.l == 10);
    CHECK(w.k == 1);
    CHECK(w.bits == "110001100");

    CHECK_THROWS_AS(ulam::s_window(s, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ulam::s_window(s, 10, 4), std::invalid_argument);  // even anchor
    CHECK_THROWS_AS(ulam::s_window(s, 10, 99), std::out_of_range);     // runs past 100
}

TEST_CASE("certificate field validation") {
    auto cert = [](u64 a, u64 b, std::uint32_t l, u64 p, u64 q) {
        return Certificate{a, b, l, p, q};
    };
    CHECK_NOTHROW(cert(4, 11, 25, 107, 1425).validate());
    // p and q swapped.
    CHECK_THROWS_AS(cert(4, 11, 25, 1425, 107).validate(), std::invalid_argument);
    // Even p.
    CHECK_THROWS_AS(cert(4, 11, 25, 106, 1425).validate(), std::invalid_argument);
    // q below 2l.
    CHECK_THROWS_AS(cert(4, 11, 25, 31, 41).validate(), std::invalid_argument);
    // b too large for the window length: needs b < 2l - 2.
    CHECK_THROWS_AS(cert(4, 11, 6, 107, 1425).validate(), std::invalid_argument);
}

TEST_CASE("a published certificate verifies") {
    auto check = ulam::verify_certificate({4, 11, 25, 107, 1425});
    CHECK(check.window_match);
    CHECK(check.even_free);
    CHECK(check.verified);
    CHECK(check.even_violations.empty());
    CHECK(check.max_value_checked == 3 * 1425 - 107);
}

TEST_CASE("a misanchored certificate fails on the window") {
    // 109 sits two steps from the genuine anchor 107; its window differs.
    auto check = ulam::verify_certificate({4, 11, 25, 109, 1425});
    CHECK(!check.window_match);
    CHECK(!check.verified);
    // The band check is independent of the anchor and still passes.
    CHECK(check.even_free);
}

TEST_CASE("window equality at the published anchors") {
    auto s = seq(4, 11, 4200);
    auto wp = ulam::s_window(s, 25, 107);
    auto wq = ulam::s_window(s, 25, 1425);
    CHECK(wp.bits == wq.bits);
}

TEST_CASE("verification against a pregenerated sequence") {
    auto s = seq(4, 11, 4200);
    auto check = ulam::verify_certificate_on(s, {4, 11, 25, 107, 1425});
    CHECK(check.verified);

    auto small = seq(4, 11, 2000);
    CHECK_THROWS_AS(ulam::verify_certificate_on(small, {4, 11, 25, 107, 1425}),
                    std::out_of_range);
    CHECK_THROWS_AS(ulam::verify_certificate_on(s, {4, 13, 25, 107, 1425}),
                    std::invalid_argument);
}

TEST_CASE("even terms in a range") {
    auto s = seq(1, 2, 100);
    CHECK(ulam::even_terms(s, 1, 20) == std::vector<u64>{2, 4, 6, 8, 16, 18});
    CHECK(ulam::even_terms(s, 9, 15).empty());
    CHECK(ulam::even_terms(s, 20, 10).empty());  // inverted range
    CHECK_THROWS_AS(ulam::even_terms(s, 1, 500), std::out_of_range);
}

TEST_CASE("sequences with two even terms stay odd afterwards") {
    auto s25 = seq(2, 5, 100000);
    CHECK(ulam::even_terms(s25, 1, 100000) == std::vector<u64>{2, 12});
    auto s27 = seq(2, 7, 100000);
    CHECK(ulam::even_terms(s27, 1, 100000) == std::vector<u64>{2, 16});
}

TEST_CASE("certificate search finds the published triple") {
    ulam::CertSearchOptions opts;
    opts.value_budget = 5000;
    auto found = ulam::search_certificate(4, 11, opts);
    REQUIRE(found);
    CHECK(found->l == 25);
    CHECK(found->p == 107);
    CHECK(found->q == 1425);
    CHECK(ulam::verify_certificate(*found).verified);
}

TEST_CASE("search returns nothing for a sequence rich in evens") {
    ulam::CertSearchOptions opts;
    opts.value_budget = 20000;
    CHECK(!ulam::search_certificate(2, 3, opts));
    CHECK(!ulam::search_certificate(1, 2, opts));
}

TEST_CASE("a verified certificate is honored far beyond its band") {
    // The certified band [2l, 3q-p] forces oddness from 2l on; spot-check
    // three times further out.
    for (auto [a, b, l, p, q] :
         {std::tuple<u64, u64, u64, u64, u64>{4, 11, 25, 107, 1425},
          {4, 19, 41, 14745, 17305}}) {
        u64 horizon = 3 * (3 * q - p);
        auto s = seq(a, b, horizon);
        auto check = ulam::verify_certificate_on(
            s, {a, b, static_cast<std::uint32_t>(l), p, q});
        CHECK(check.verified);
        CHECK(ulam::even_terms(s, 2 * l, horizon).empty());
    }
}

TEST_CASE("matching windows force a periodic tail") {
    // With the certificate verified, odd membership repeats with period
    // q - p from the anchor onward.
    auto s = seq(4, 11, 4200);
    const u64 shift = 1425 - 107;
    for (u64 x = 107; x + shift <= 4200; x += 2)
        CHECK(s.contains(x) == s.contains(x + shift));
}

TEST_CASE("difference periods of known regular sequences") {
    auto s27 = seq(2, 7, 100000);
    auto rep = ulam::difference_period(s27);
    REQUIRE(rep);
    CHECK(rep->preperiod == 7);
    CHECK(rep->period == 26);

    auto s411 = seq(4, 11, 200000);
    auto rep2 = ulam::difference_period(s411);
    REQUIRE(rep2);
    CHECK(rep2->preperiod == 28);
    CHECK(rep2->period == 246);

    // The reported period genuinely repeats through the tail.
    const auto& t = s411.terms();
    std::vector<u64> d;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) d.push_back(t[i + 1] - t[i]);
    for (std::size_t i = rep2->preperiod; i + rep2->period < d.size(); ++i)
        REQUIRE(d[i] == d[i + rep2->period]);
}

TEST_CASE("difference period needs enough confirmations") {
    auto s411 = seq(4, 11, 20000);
    CHECK(!ulam::difference_period(s411, 50));
    // Lowering the bar lets the true period surface earlier.
    auto rep = ulam::difference_period(s411, 10);
    REQUIRE(rep);
    CHECK(rep->period == 246);
}

TEST_CASE("certificate JSON round trip") {
    auto check = ulam::verify_certificate({4, 11, 25, 107, 1425});
    auto text = ulam::certificate_check_to_json(check);
    auto cert = ulam::certificate_from_json(text);
    CHECK(cert.a == 4);
    CHECK(cert.b == 11);
    CHECK(cert.l == 25);
    CHECK(cert.p == 107);
    CHECK(cert.q == 1425);
    CHECK_THROWS(ulam::certificate_from_json("{"));
}
