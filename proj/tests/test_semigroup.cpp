#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "latring/semigroup.hpp"

using namespace latring;

TEST_CASE("gaps, Frobenius number, Apery set") {
    NumericalSemigroup s{{4, 5, 6}};
    CHECK(s.gaps() == std::vector<std::int64_t>{1, 2, 3, 7});
    CHECK(s.frobenius() == 7);
    CHECK(s.conductor() == 8);
    CHECK(s.multiplicity() == 4);
    CHECK(s.apery() == std::vector<std::int64_t>{0, 5, 6, 11});

    NumericalSemigroup n{{1}};
    CHECK(n.gaps().empty());
    CHECK(n.frobenius() == -1);

    NumericalSemigroup t{{3, 4, 5}};
    CHECK(t.gaps() == std::vector<std::int64_t>{1, 2});
    CHECK(t.frobenius() == 2);

    CHECK_THROWS_AS(NumericalSemigroup({2, 4}), domain_error);
    CHECK_THROWS_AS(NumericalSemigroup({0, 3}), domain_error);
}

TEST_CASE("pseudo-Frobenius, type, symmetry") {
    NumericalSemigroup s{{4, 5, 6}};
    CHECK(s.pseudo_frobenius() == std::vector<std::int64_t>{7});
    CHECK(s.type() == 1);
    CHECK(s.symmetric());
    CHECK(s.almost_symmetric());

    NumericalSemigroup t{{3, 4, 5}};
    CHECK(t.pseudo_frobenius() == std::vector<std::int64_t>{1, 2});
    CHECK(t.type() == 2);
    CHECK_FALSE(t.symmetric());
    CHECK(t.almost_symmetric());

    NumericalSemigroup n{{1}};
    CHECK(n.type() == 1);
}

TEST_CASE("symmetry iff type one, across the genus-8 census") {
    for (const auto& s : NumericalSemigroup::enumerate(8))
        CHECK(s.symmetric() == (s.type() == 1));
}

TEST_CASE("minimal generators are canonical") {
    NumericalSemigroup s{{4, 5, 6, 9, 10}};
    CHECK(s.minimal_generators() == std::vector<std::int64_t>{4, 5, 6});
    NumericalSemigroup v{{2, 3}};
    CHECK(v.minimal_generators() == std::vector<std::int64_t>{2, 3});
}

TEST_CASE("oversemigroups") {
    NumericalSemigroup s{{4, 5, 6}};
    auto over = s.oversemigroups();
    REQUIRE(over.size() == 6);
    std::vector<std::vector<std::int64_t>> gap_sets;
    for (const auto& t : over) gap_sets.push_back(t.gaps());
    std::vector<std::vector<std::int64_t>> expect = {
        {}, {1}, {1, 2}, {1, 3}, {1, 2, 3}, {1, 2, 3, 7}};
    CHECK(gap_sets == expect);

    CHECK(NumericalSemigroup{{1}}.oversemigroups().size() == 1);

    auto over345 = NumericalSemigroup{{3, 4, 5}}.oversemigroups();
    REQUIRE(over345.size() == 3);
    CHECK(over345[0].gaps().empty());
    CHECK(over345[1].gaps() == std::vector<std::int64_t>{1});
    CHECK(over345[2].gaps() == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("set-ideal arithmetic") {
    NumericalSemigroup s{{4, 5, 6}};
    SemigroupIdeal es(s, {0});          // S itself
    SemigroupIdeal en(s, {0, 1, 2, 3});  // all of N

    auto cond = ideal_colon(es, en);
    CHECK(cond.min() == 8);
    for (int x = 8; x <= 14; ++x) CHECK(cond.contains(x));
    CHECK_FALSE(cond.contains(7));

    CHECK(ideal_colon(es, es).contains(0));
    CHECK(ideal_colon(en, en).contains(0));

    SemigroupIdeal e3(s, {3}), e4(s, {4});
    auto prod = ideal_product(e3, e4);
    CHECK(prod == SemigroupIdeal(s, {7}));

    auto uni = ideal_sum(e3, e4);
    CHECK(uni.contains(3));
    CHECK(uni.contains(4));
    CHECK_FALSE(uni.contains(6));  // 6 = 3+3 is not in 3+S or 4+S

    CHECK(ideal_sum(e3, e3) == e3);
    CHECK(es.colength(cond) == 4);  // [S : conductor-ideal] = elements 0,4,5,6
}

namespace {
// independent oracle: count gap sets directly (G ⊆ {1..2g-1}, |G| = g,
// complement closed under addition)
int count_semigroups_brute(int g) {
    if (g == 0) return 1;
    int hi = 2 * g;  // F <= 2g - 1
    int count = 0;
    std::vector<char> gap(static_cast<std::size_t>(hi), 0);
    // iterate all g-subsets of {1..hi-1}
    std::vector<int> comb;
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            std::fill(gap.begin(), gap.end(), 0);
            for (int x : comb) gap[static_cast<std::size_t>(x)] = 1;
            for (int a = 1; a < hi; ++a) {
                if (gap[static_cast<std::size_t>(a)]) continue;
                for (int b = a; a + b < hi; ++b) {
                    if (gap[static_cast<std::size_t>(b)]) continue;
                    if (gap[static_cast<std::size_t>(a + b)]) return;
                }
            }
            ++count;
            return;
        }
        for (int x = start; x < hi; ++x) {
            comb.push_back(x);
            self(self, x + 1, left - 1);
            comb.pop_back();
        }
    };
    rec(rec, 1, g);
    return count;
}
}  // namespace

TEST_CASE("census of all semigroups by genus") {
    auto all = NumericalSemigroup::enumerate(8);
    std::vector<int> by_genus(9, 0);
    for (const auto& s : all) by_genus[static_cast<std::size_t>(s.genus())]++;
    // small genera against the brute-force subset oracle
    for (int g = 0; g <= 5; ++g) CHECK(by_genus[static_cast<std::size_t>(g)] == count_semigroups_brute(g));
    CHECK(std::accumulate(by_genus.begin(), by_genus.end(), 0) == static_cast<int>(all.size()));

    // no duplicates
    for (std::size_t i = 1; i < all.size(); ++i) CHECK_FALSE(all[i] == all[i - 1]);

    // the multiplicity filter leaves enough rings for the census sweep
    auto filtered = NumericalSemigroup::enumerate(8, 6);
    CHECK(filtered.size() >= 30);
    for (const auto& s : filtered) CHECK(s.multiplicity() <= 6);
}
