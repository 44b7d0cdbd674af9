#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qmatch/series.hpp>

#include <vector>

using namespace qmatch;

namespace {

TruncatedSeries poly(std::int64_t valuation, std::vector<long> cs,
                     std::int64_t order) {
    std::vector<Int> v(cs.begin(), cs.end());
    v.resize(static_cast<std::size_t>(order - valuation));
    return TruncatedSeries::make(valuation, std::move(v), order);
}

}  // namespace

TEST_CASE("factories and basic shape") {
    auto z = TruncatedSeries::zero(10);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 10);
    CHECK(z.order() == 10);

    auto one = TruncatedSeries::one(10);
    CHECK(one.valuation() == 0);
    CHECK(one.coefficient(0) == 1);
    CHECK(one.coefficient(9) == 0);

    auto m = TruncatedSeries::monomial(-3, 4, 10);
    CHECK(m.valuation() == 4);
    CHECK(m.coefficient(4) == -3);
    CHECK(m.coefficient(0) == 0);

    auto c = TruncatedSeries::constant(7, 10);
    CHECK(c.coefficient(0) == 7);

    // constant 0 is the zero series
    CHECK(TruncatedSeries::constant(0, 10).is_zero());
}

TEST_CASE("make strips leading zeros and keeps Laurent valuations") {
    auto s = poly(-2, {0, 0, 5, 1}, 10);
    CHECK(s.valuation() == 0);
    CHECK(s.coefficient(-1) == 0);
    CHECK(s.coefficient(0) == 5);
    CHECK(s.coefficient(1) == 1);

    auto lau = poly(-3, {1, 0, 2}, 4);
    CHECK(lau.valuation() == -3);
    CHECK(lau.coefficient(-3) == 1);
    CHECK(lau.coefficient(-1) == 2);
    CHECK(lau.coefficient(3) == 0);
}

TEST_CASE("coefficient beyond the order throws, below valuation reads zero") {
    auto s = poly(2, {1, 4}, 6);
    CHECK(s.coefficient(0) == 0);
    CHECK(s.coefficient(5) == 0);
    CHECK_THROWS_AS((void)s.coefficient(6), OrderExceededError);
    CHECK_THROWS_AS((void)s.coefficient(100), OrderExceededError);
    CHECK_THROWS_AS((void)TruncatedSeries::zero(3).coefficient(3),
                    OrderExceededError);
}

TEST_CASE("add/sub/mul on small exact polynomials") {
    auto a = poly(0, {1, 2, 3}, 10);       // 1 + 2q + 3q^2
    auto b = poly(1, {-2, 1}, 10);         // -2q + q^2
    auto sum = a.add(b);
    CHECK(sum.coefficient(0) == 1);
    CHECK(sum.coefficient(1) == 0);
    CHECK(sum.coefficient(2) == 4);

    auto prod = a.mul(b);  // (1+2q+3q^2)(-2q+q^2)
    CHECK(prod.valuation() == 1);
    CHECK(prod.coefficient(1) == -2);
    CHECK(prod.coefficient(2) == -3);
    CHECK(prod.coefficient(3) == -4);
    CHECK(prod.coefficient(4) == 3);

    CHECK(a.sub(a).is_zero());
}

TEST_CASE("mul tracks the honest truncation window") {
    auto a = poly(2, {1, 1}, 5);    // known on [2,5)
    auto b = poly(0, {1, 1}, 10);   // known on [0,10)
    auto p = a.mul(b);
    // order = min(5 + 0, 10 + 2) = 5
    CHECK(p.order() == 5);
    CHECK_THROWS_AS((void)p.coefficient(5), OrderExceededError);

    // scalar multiples and zero never lose the window
    CHECK(a.scalar_mul(0).is_zero());
    CHECK(a.scalar_mul(0).order() == 5);
    auto za = TruncatedSeries::zero(7).mul(b);
    CHECK(za.is_zero());
    CHECK(za.order() == 7);
}

TEST_CASE("invert: geometric series and window shrinkage") {
    // 1/(1 - q) = 1 + q + q^2 + ...
    auto g = poly(0, {1, -1}, 50).invert();
    for (int n = 0; n < 50; ++n) CHECK(g.coefficient(n) == 1);

    // leading -1 works too: 1/(-1 + q) = -1 - q - q^2 - ...
    auto h = poly(0, {-1, 1}, 20).invert();
    for (int n = 0; n < 20; ++n) CHECK(h.coefficient(n) == -1);

    // valuation v costs 2v of window: 1/(q^3(1-q)) known to 10 - 6 = 4
    auto s = poly(3, {1, -1}, 10).invert();
    CHECK(s.valuation() == -3);
    CHECK(s.order() == 4);
    CHECK(s.coefficient(-3) == 1);
    CHECK(s.coefficient(0) == 1);

    CHECK_THROWS_AS(poly(0, {2, 1}, 10).invert(), NonUnitLeadingError);
    CHECK_THROWS_AS(TruncatedSeries::zero(10).invert(), Error);
}

TEST_CASE("pow including negative exponents") {
    auto a = poly(0, {1, 1}, 30);  // 1 + q
    auto sq = a.pow(2);
    CHECK(sq.coefficient(0) == 1);
    CHECK(sq.coefficient(1) == 2);
    CHECK(sq.coefficient(2) == 1);
    CHECK(a.pow(0).coefficient(0) == 1);

    auto inv2 = a.pow(-2);  // 1 - 2q + 3q^2 - 4q^3 ...
    for (int n = 0; n < 10; ++n)
        CHECK(inv2.coefficient(n) == ((n % 2 == 0) ? n + 1 : -(n + 1)));

    CHECK(equal_to_order(a.pow(5).mul(a.pow(-5)), TruncatedSeries::one(20)).passed);
}

TEST_CASE("substitute_power, alternate_sign, truncate, support") {
    auto a = poly(0, {1, 2, 0, 3}, 10);
    auto a2 = a.substitute_power(3);
    CHECK(a2.order() == 30);
    CHECK(a2.coefficient(0) == 1);
    CHECK(a2.coefficient(3) == 2);
    CHECK(a2.coefficient(4) == 0);
    CHECK(a2.coefficient(9) == 3);

    auto alt = a.alternate_sign();
    CHECK(alt.coefficient(1) == -2);
    CHECK(alt.coefficient(3) == -3);
    CHECK(equal_to_order(alt.alternate_sign(), a).passed);

    auto t = a.truncate(2);
    CHECK(t.order() == 2);
    CHECK_THROWS_AS((void)t.coefficient(2), OrderExceededError);

    CHECK(a.support() == std::vector<std::int64_t>{0, 1, 3});
}

TEST_CASE("extract selects arithmetic progressions") {
    // A = sum n q^n on [0,12)
    std::vector<Int> cs;
    for (int n = 0; n < 12; ++n) cs.push_back(n);
    auto a = TruncatedSeries::make(0, std::move(cs), 12);

    auto e = a.extract(ExtractionSpec(3, 1));  // A(3n+1): 1, 4, 7, 10
    CHECK(e.coefficient(0) == 1);
    CHECK(e.coefficient(1) == 4);
    CHECK(e.coefficient(2) == 7);
    CHECK(e.coefficient(3) == 10);
    CHECK(e.order() == 4);

    // indices below the valuation read as zero
    auto m = TruncatedSeries::monomial(5, 7, 20);
    auto em = m.extract(ExtractionSpec(2, 1));  // picks q^1,q^3,...: hit at 7
    CHECK(em.coefficient(0) == 0);
    CHECK(em.coefficient(3) == 5);
}

TEST_CASE("equal_to_order reports the first mismatch") {
    auto a = poly(0, {1, 2, 3, 4}, 4);
    auto b = poly(0, {1, 2, 9, 4}, 8);
    auto rep = equal_to_order(a, b);
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.first_failure_n.has_value());
    CHECK(*rep.first_failure_n == 2);
    CHECK(rep.order_used == 4);

    auto ok = equal_to_order(a, poly(0, {1, 2, 3, 4}, 6));
    CHECK(ok.passed);
    CHECK(ok.checked_count == 4);
}

TEST_CASE("saturating_add never overflows near the unbounded order") {
    CHECK(saturating_add(kUnboundedOrder, kUnboundedOrder) == kUnboundedOrder);
    CHECK(saturating_add(kUnboundedOrder - 1, 5) == kUnboundedOrder);
    CHECK(saturating_add(5, 7) == 12);
}

TEST_CASE("big integer coefficients stay exact") {
    // (1+q)^200 at q^100 is C(200,100), a 60-digit number
    auto a = poly(0, {1, 1}, 101).pow(200);
    Int expected;
    mpz_bin_uiui(expected.get_mpz_t(), 200, 100);
    CHECK(a.coefficient(100) == expected);
}
