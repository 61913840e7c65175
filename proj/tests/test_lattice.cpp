#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latring/lattice.hpp"
#include "latring/semigroup.hpp"

using namespace latring;

namespace {

TruncatedSeries mono(const FieldPtr& K, int d) { return TruncatedSeries::monomial(K, d); }

Lattice semigroup_ring_lattice(const FieldPtr& k, std::vector<std::int64_t> gens, int window = 32) {
    std::vector<TruncatedSeries> g;
    for (auto e : gens) g.push_back(mono(k, static_cast<int>(e)));
    return lattice_from_generators(FieldTower::trivial(k), g, Closure::multiplicative, window);
}

Lattice module_ideal(const FieldTower& tw, const Lattice& R, std::vector<TruncatedSeries> gens) {
    return lattice_from_generators(tw, gens, Closure::module, 0, 4, &R);
}

}  // namespace

TEST_CASE("multiplicative closure reproduces the monomial ring") {
    auto q = FieldCtx::rationals();
    auto tw = FieldTower::trivial(q);
    Lattice R = semigroup_ring_lattice(q, {4, 5, 6});
    CHECK(R.cond() == 8);
    // degree support below the conductor: 0, 4, 5, 6
    REQUIRE(R.rows().size() == 4);
    CHECK(R.rows()[0].valuation() == 0);
    CHECK(R.rows()[1].valuation() == 4);
    CHECK(R.rows()[2].valuation() == 5);
    CHECK(R.rows()[3].valuation() == 6);

    CHECK_FALSE(member(mono(q, 7), R));
    CHECK(member(mono(q, 9), R));
    CHECK(member(TruncatedSeries::zero(q), R));

    // the trivial span lattice
    Lattice one = Lattice::make(tw, {TruncatedSeries::one(q)});
    CHECK(one.rows().size() == 1);
    CHECK_FALSE(one.has_tail());
}

TEST_CASE("closure of k[[t^2+t^3, t^5]] over F_2") {
    auto f2 = FieldCtx::prime(2);
    auto tw = FieldTower::trivial(f2);
    Lattice B1 = lattice_from_generators(tw, {mono(f2, 2) + mono(f2, 3), mono(f2, 5)},
                                         Closure::multiplicative, 32);
    CHECK(B1.cond() == 4);
    REQUIRE(B1.rows().size() == 2);
    CHECK(B1.rows()[0] == TruncatedSeries::one(f2));
    CHECK(B1.rows()[1] == mono(f2, 2) + mono(f2, 3));
}

TEST_CASE("closure failure modes") {
    auto q = FieldCtx::rationals();
    auto tw = FieldTower::trivial(q);
    CHECK_THROWS_AS(lattice_from_generators(tw, {mono(q, 2)}, Closure::multiplicative, 32),
                    domain_error);  // k[[t^2]] has infinite codimension
    CHECK_THROWS_AS(lattice_from_generators(tw, {mono(q, 4), mono(q, 5), mono(q, 6)},
                                            Closure::multiplicative, 10),
                    precision_error);  // window below max(2c, c+guard)
}

TEST_CASE("lattice sum") {
    auto q = FieldCtx::rationals();
    auto tw = FieldTower::trivial(q);
    Lattice R = semigroup_ring_lattice(q, {4, 5, 6});
    CHECK(lat_equal(lat_sum(R, R), R));

    // R + k t^7 is the ring k[[t^4,t^5,t^6,t^7]] = k + t^4 K[[t]]
    Lattice S = lat_sum(R, Lattice::make(tw, {mono(q, 7)}));
    CHECK(S.cond() == 4);
    REQUIRE(S.rows().size() == 1);
    CHECK(S.rows()[0] == TruncatedSeries::one(q));
    CHECK(lat_equal(S, lat_sum(S, S)));

    CHECK(lat_equal(lat_sum(Lattice::tail(tw, 8), Lattice::tail(tw, 5)), Lattice::tail(tw, 5)));
}

TEST_CASE("lattice product") {
    auto q = FieldCtx::rationals();
    auto tw = FieldTower::trivial(q);

    // m^2 = t^3 m in k[[t^3,t^4,t^5]] (m = t^3 K[[t]])
    Lattice m = Lattice::tail(tw, 3);
    CHECK(lat_equal(lat_product(m, m), Lattice::tail(tw, 6)));
    CHECK(lat_equal(lat_scale(mono(q, 3), m), Lattice::tail(tw, 6)));

    Lattice R = semigroup_ring_lattice(q, {4, 5, 6});
    Lattice one = Lattice::make(tw, {TruncatedSeries::one(q)});
    CHECK(lat_equal(lat_product(R, one), R));

    // (t^4 - t^5, t^6) R contains the conductor ideal
    Lattice I = module_ideal(tw, R, {mono(q, 4) - mono(q, 5), mono(q, 6)});
    for (int d = 8; d <= 11; ++d) CHECK(member(mono(q, d), I));
    CHECK_FALSE(member(mono(q, 4), I));
    CHECK(member(mono(q, 4) - mono(q, 5), I));
}

TEST_CASE("colon: conductor and overring duals") {
    auto q = FieldCtx::rationals();
    auto tw = FieldTower::trivial(q);
    Lattice R = semigroup_ring_lattice(q, {4, 5, 6});
    Lattice V = Lattice::tail(tw, 0);

    CHECK(lat_equal(lat_colon(R, V), Lattice::tail(tw, 8)));
    CHECK(lat_equal(lat_colon(R, R), R));
    CHECK(member(TruncatedSeries::one(q), lat_colon(R, R)));

    // R : B_a = (t^4 - a t^5, t^6) for every a in k
    for (int a : {0, 1, 2, -1}) {
        auto gen2 = mono(q, 2) + mono(q, 3).scaled(q->from_int(a));
        Lattice Ba = lattice_from_generators(tw, {gen2, mono(q, 5)}, Closure::multiplicative, 32);
        Lattice expect =
            module_ideal(tw, R, {mono(q, 4) - mono(q, 5).scaled(q->from_int(a)), mono(q, 6)});
        CHECK(lat_equal(lat_colon(R, Ba), expect));
    }
}

TEST_CASE("colength") {
    auto q = FieldCtx::rationals();
    auto tw = FieldTower::trivial(q);
    Lattice R = semigroup_ring_lattice(q, {4, 5, 6});
    Lattice S = lat_sum(R, Lattice::make(tw, {mono(q, 7)}));
    Lattice V = Lattice::tail(tw, 0);

    CHECK(colength(S, R) == 1);
    CHECK(colength(R, R) == 0);
    CHECK(colength(V, R) == NumericalSemigroup{{4, 5, 6}}.genus());
    CHECK_THROWS_AS(colength(R, S), domain_error);  // S is not inside R
}

TEST_CASE("equality is canonical") {
    auto q = FieldCtx::rationals();
    auto tw = FieldTower::trivial(q);
    Lattice a = Lattice::tail(tw, 4);
    Lattice b = Lattice::make(tw, {mono(q, 4), mono(q, 5), mono(q, 6), mono(q, 7)}, 8);
    CHECK(lat_equal(a, b));
    CHECK(a.cond() == b.cond());

    Lattice R = semigroup_ring_lattice(q, {4, 5, 6});
    Lattice S = lat_sum(R, Lattice::make(tw, {mono(q, 7)}));
    CHECK_FALSE(lat_equal(R, S));
}

TEST_CASE("canonical bases do not depend on the generating set") {
    auto f3 = FieldCtx::prime(3);
    auto tw = FieldTower::trivial(f3);
    Lattice R = semigroup_ring_lattice(f3, {4, 5, 6});
    Lattice I1 = module_ideal(tw, R, {mono(f3, 4) - mono(f3, 5), mono(f3, 6)});
    // same ideal from a different generating set (scaled + redundant gens)
    auto g1 = (mono(f3, 4) - mono(f3, 5)).scaled(f3->from_int(2));
    Lattice I2 = module_ideal(tw, R, {g1, mono(f3, 6), mono(f3, 10)});
    CHECK(lat_equal(I1, I2));
    CHECK(I1.rows().size() == I2.rows().size());
    for (std::size_t i = 0; i < I1.rows().size(); ++i) CHECK(I1.rows()[i] == I2.rows()[i]);
}

TEST_CASE("refinement invariance") {
    auto q = FieldCtx::rationals();
    auto tw = FieldTower::trivial(q);
    std::vector<TruncatedSeries> gens = {mono(q, 4), mono(q, 5), mono(q, 6)};
    Lattice R16 = lattice_from_generators(tw, gens, Closure::multiplicative, 16);
    Lattice R32 = refine_precision(tw, gens, Closure::multiplicative, R16, 32);
    CHECK(lat_equal(R16, R32));

    // widen-then-colon equals colon-then-widen
    Lattice V = Lattice::tail(tw, 0);
    CHECK(lat_equal(lat_colon(R16, V), lat_colon(R32, V)));

    CHECK(Lattice::zero(tw).is_zero());
    CHECK(lat_equal(Lattice::zero(tw), Lattice::make(tw, {})));
}

TEST_CASE("residue-extension ambient: d coordinates per degree") {
    auto f2 = FieldCtx::prime(2);
    auto f8 = FieldCtx::extension(2, 3);
    auto tw = FieldTower::over_base(f8);
    REQUIRE(tw.d == 3);
    REQUIRE(tw.k->same_field(*f2));

    // R = k + tK[[t]] as a k-lattice
    Lattice R = Lattice::make(tw, {TruncatedSeries::one(f8)}, 1);
    CHECK(R.cond() == 1);
    CHECK(R.rows().size() == 1);

    Lattice V = Lattice::tail(tw, 0);
    CHECK(colength(V, R) == 2);  // dim_k K/k = 3 - 1

    // m = R : V is t K[[t]], and m : m = V
    Lattice m = lat_colon(R, V);
    CHECK(lat_equal(m, Lattice::tail(tw, 1)));
    CHECK(lat_equal(lat_colon(m, m), V));
    CHECK(lat_equal(lat_colon(R, m), V));

    auto x = f8->parse("[0,1]");
    CHECK(member(TruncatedSeries::monomial(f8, 1, x), R));       // xt in R
    CHECK_FALSE(member(TruncatedSeries::monomial(f8, 0, x), R)); // x not in R
}

namespace {

struct RandomIdeals {
    FieldPtr k;
    FieldTower tw;
    Lattice R;
    std::mt19937_64 rng{20260810};

    explicit RandomIdeals(FieldPtr kk, std::vector<std::int64_t> gens)
        : k(std::move(kk)), tw(FieldTower::trivial(k)), R(semigroup_ring_lattice(k, std::move(gens))) {}

    FieldElem nonzero_scalar() {
        if (k->kind() == FieldCtx::Kind::rationals) {
            std::int64_t v = static_cast<std::int64_t>(rng() % 7) - 3;
            if (v == 0) v = 1;
            return k->from_int(v);
        }
        return k->element(1 + rng() % (k->order() - 1));
    }

    // random monomial or binomial fractional ideal over R
    Lattice next() {
        std::vector<TruncatedSeries> gens;
        int ngens = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < ngens; ++i) {
            int d = static_cast<int>(rng() % 12) - 2;
            TruncatedSeries g = TruncatedSeries::monomial(k, d, nonzero_scalar());
            if (rng() % 2) {
                int e = d + 1 + static_cast<int>(rng() % 4);
                g = g + TruncatedSeries::monomial(k, e, nonzero_scalar());
            }
            gens.push_back(g);
        }
        return module_ideal(tw, R, gens);
    }
};

}  // namespace

TEST_CASE("colon identities on random ideals") {
    for (auto k : {FieldCtx::prime(2), FieldCtx::rationals()}) {
        RandomIdeals gen(k, {4, 5, 6});
        const Lattice& R = gen.R;
        for (int trial = 0; trial < 40; ++trial) {
            Lattice X = gen.next(), Y = gen.next(), Z = gen.next();

            // X : (Y*Z) = (X:Y) : Z
            CHECK(lat_equal(lat_colon(X, lat_product(Y, Z)), lat_colon(lat_colon(X, Y), Z)));

            // monotonicity: X ⊆ X+Y implies Z:(X+Y) ⊆ Z:X
            Lattice XY = lat_sum(X, Y);
            CHECK(lat_subset(lat_colon(Z, XY), lat_colon(Z, X)));

            // 1 in X:X and X * (X:X) = X
            Lattice XX = lat_colon(X, X);
            CHECK(member(TruncatedSeries::one(k).truncated(XX.cond()), XX));
            CHECK(lat_equal(lat_product(X, XX), X));

            // duals are reflexive: Y' = R:X satisfies Y' = R:(R:Y')
            Lattice Yd = lat_colon(R, X);
            CHECK(lat_equal(Yd, lat_colon(R, lat_colon(R, Yd))));
        }
    }
}

TEST_CASE("stable principal multiples: I^2 = aI gives I:I = a^{-1} I") {
    auto q = FieldCtx::rationals();
    auto tw = FieldTower::trivial(q);
    Lattice R = semigroup_ring_lattice(q, {3, 4, 5});
    Lattice m = lat_intersect(R, Lattice::tail(tw, 1));
    // m = t^3 K[[t]] here, so m^2 = t^3 m
    auto a = mono(q, 3);
    REQUIRE(lat_equal(lat_product(m, m), lat_scale(a, m)));
    Lattice lhs = lat_colon(m, m);
    Lattice rhs = lat_scale(a.inverse(16), m);
    CHECK(lat_equal(lhs, rhs));
}
