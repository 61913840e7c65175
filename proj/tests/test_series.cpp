#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latring/series.hpp"

using namespace latring;

namespace {
TruncatedSeries mono(const FieldPtr& K, int d) { return TruncatedSeries::monomial(K, d); }
}

TEST_CASE("basic arithmetic and valuation") {
    auto q = FieldCtx::rationals();
    auto f = mono(q, 4) - mono(q, 5);
    CHECK(f.valuation() == 4);
    CHECK(f.coeff(4) == q->one());
    CHECK(f.coeff(5) == -q->one());
    CHECK(f.coeff(9).is_zero());
    CHECK((f + mono(q, 5)).terms().size() == 1);
    CHECK((f - f).is_exact_zero());
    CHECK(TruncatedSeries::zero(q).valuation() == TruncatedSeries::kInf);
    CHECK(f.str() == "t4-t5");
}

TEST_CASE("window bookkeeping is honest") {
    auto q = FieldCtx::rationals();
    // a known below 5 with valuation 0, b = t^3 exact
    TruncatedSeries a = TruncatedSeries::one(q) + mono(q, 1);
    a = a.truncated(5);
    TruncatedSeries b = mono(q, 3);
    auto p = a * b;
    CHECK(p.known_to() == 8);  // min(v(a)+inf, v(b)+5) = 3+5
    CHECK(p.coeff(3) == q->one());
    CHECK_THROWS_AS(p.coeff(8), precision_error);

    // truncated zero has no certified valuation
    TruncatedSeries z = (a - a);
    CHECK(z.known_to() == 5);
    CHECK_THROWS_AS(z.valuation(), precision_error);
}

TEST_CASE("series inverse") {
    auto q = FieldCtx::rationals();
    auto one = TruncatedSeries::one(q);
    auto g = one - mono(q, 1);  // 1 - t
    auto inv = g.inverse(5);
    for (int i = 0; i < 5; ++i) CHECK(inv.coeff(i) == q->one());
    CHECK((g * inv).truncated(5) == one.truncated(5));

    auto h = mono(q, 3) + mono(q, 4);  // t^3(1+t)
    auto hi = h.inverse(2);
    CHECK(hi.valuation() == -3);
    CHECK((h * hi).truncated(2) == one.truncated(2));

    CHECK_THROWS_AS(TruncatedSeries::zero(q).inverse(4), domain_error);
}

TEST_CASE("scaling and shifting") {
    auto f5 = FieldCtx::prime(5);
    auto f = mono(f5, 2) + mono(f5, 4);
    CHECK(f.shifted(3).valuation() == 5);
    CHECK(f.scaled(f5->from_int(2)).coeff(2) == f5->from_int(2));
    CHECK(f.scaled(f5->zero()).is_exact_zero());
}
