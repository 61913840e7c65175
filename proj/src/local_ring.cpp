#include "latring/local_ring.hpp"

#include <algorithm>

namespace latring {

namespace {

std::string join64(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

RingPtr LocalRing::semigroup_ring(FieldPtr k, const std::vector<std::int64_t>& gens) {
    NumericalSemigroup S(gens);
    auto tower = FieldTower::trivial(k);
    int c = static_cast<int>(S.conductor());
    std::vector<TruncatedSeries> rows;
    for (auto s : S.elements_below(c)) rows.push_back(TruncatedSeries::monomial(k, static_cast<int>(s)));

    auto ring = std::shared_ptr<LocalRing>(new LocalRing());
    ring->tower_ = tower;
    ring->lat_ = Lattice::make(tower, rows, c);
    ring->descriptor_ = "sg:" + join64(S.minimal_generators());
    ring->sg_ = S;
    ring->origin_ = Origin::semigroup;
    for (auto g : gens) ring->gens_.push_back(TruncatedSeries::monomial(k, static_cast<int>(g)));

    // cross-check the combinatorial construction against the generic closure
    int window = std::max(2 * c, c + 4);
    if (window == 0) window = 4;
    Lattice closure = lattice_from_generators(tower, ring->gens_, Closure::multiplicative, window);
    check(lat_equal(ring->lat_, closure), "semigroup ring disagrees with multiplicative closure");

    ring->init();
    return ring;
}

RingPtr LocalRing::from_series_generators(FieldPtr k, const std::vector<TruncatedSeries>& gens,
                                          int window) {
    auto tower = FieldTower::trivial(k);
    Lattice lat = Lattice::zero(tower);
    if (window > 0) {
        lat = lattice_from_generators(tower, gens, Closure::multiplicative, window);
    } else {
        try {
            lat = lattice_from_generators(tower, gens, Closure::multiplicative, 32);
        } catch (const precision_error&) {
            lat = lattice_from_generators(tower, gens, Closure::multiplicative, 64);
        }
    }
    auto ring = std::shared_ptr<LocalRing>(new LocalRing());
    ring->tower_ = tower;
    ring->lat_ = std::move(lat);
    std::string d = "gens:";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) d += ",";
        d += gens[i].str();
    }
    ring->descriptor_ = d;
    ring->gens_ = gens;
    ring->origin_ = Origin::series;
    ring->init();
    if (ring->residue_degree_ != 1)
        throw domain_error("generated ring is not local with residue field k");
    return ring;
}

RingPtr LocalRing::residue_extension(FieldPtr k, FieldPtr K) {
    if (k->kind() != FieldCtx::Kind::prime || K->kind() != FieldCtx::Kind::extension ||
        K->characteristic() != k->characteristic())
        throw domain_error("residue extension ring needs finite fields k ⊂ K = F_{p^n}, n >= 2");
    FieldTower tower{k, K, K->degree_over_base()};
    auto ring = std::shared_ptr<LocalRing>(new LocalRing());
    ring->tower_ = tower;
    ring->lat_ = Lattice::make(tower, {TruncatedSeries::one(K)}, 1);
    ring->descriptor_ = "resext:" + K->describe();
    ring->origin_ = Origin::resext;
    ring->gens_ = {};  // k-algebra generators are w_b t, b < n; the lattice is exact as built
    ring->init();
    check(ring->conductor_exponent() == 1, "residue extension ring must have conductor t");
    check(lat_equal(ring->m_, Lattice::tail(tower, 1)), "residue extension maximal ideal must be tV");
    return ring;
}

RingPtr LocalRing::from_ring_lattice(const FieldTower& t, Lattice lat, std::string descriptor) {
    auto ring = std::shared_ptr<LocalRing>(new LocalRing());
    ring->tower_ = t;
    ring->lat_ = std::move(lat);
    ring->descriptor_ = std::move(descriptor);
    ring->origin_ = Origin::lattice;
    ring->init();
    return ring;
}

bool LocalRing::is_monomial() const {
    for (const auto& r : lat_.rows())
        if (r.terms().size() != 1 || !r.terms().begin()->second.is_one()) return false;
    return tower_.d == 1;
}

void LocalRing::init() {
    check(lat_.has_tail(), "ring lattice needs a certified conductor");
    check(lat_.vmin() == 0, "ring lattice must start at valuation 0");
    check(member(TruncatedSeries::one(tower_.K).truncated(lat_.cond()), lat_),
          "ring lattice does not contain 1");
    check(lat_equal(lat_product(lat_, lat_), lat_), "ring lattice is not multiplicatively closed");
    check(lat_equal(lat_colon(lat_, Lattice::tail(tower_, 0)), conductor_lattice()),
          "conductor ideal disagrees with the certified bound");

    m_ = lat_intersect(lat_, Lattice::tail(tower_, 1));
    residue_degree_ = static_cast<int>(colength(lat_, m_));
    check(residue_degree_ >= 1, "empty residue field");

    // multiplicity by Hilbert-function stabilization: dim_k(m^n/m^{n+1})
    // divided by the residue degree stabilizes in dimension one
    {
        const int c = lat_.cond();
        Lattice mn = m_;
        std::int64_t prev = -1;
        std::int64_t stable = -1;
        int cap = std::max(2 * c + 8, 16);
        for (int n = 1; n <= cap; ++n) {
            Lattice mnext = lat_product(mn, m_);
            std::int64_t dim = colength(mn, mnext);
            check(dim % residue_degree_ == 0, "Hilbert step not divisible by residue degree");
            dim /= residue_degree_;
            if (n >= 2 && dim == prev && n >= c) {
                stable = dim;
                break;
            }
            prev = dim;
            mn = std::move(mnext);
        }
        check(stable >= 1, "multiplicity did not stabilize below the window cap");
        mult_ = stable;
    }

    embdim_ = colength(m_, lat_product(m_, m_)) / residue_degree_;

    if (mult_ == 1) {
        check(lat_equal(lat_, Lattice::tail(tower_, 0)), "multiplicity one forces R = K[[t]]");
        type_ = 1;  // DVR convention, flagged through is_dvr()
    } else {
        Lattice rm = lat_colon(lat_, m_);
        std::int64_t dim = colength(rm, lat_);
        check(dim % residue_degree_ == 0, "type not divisible by residue degree");
        type_ = dim / residue_degree_;
        check(type_ >= 1, "Cohen-Macaulay type must be positive");
    }

    if (sg_) {
        check(mult_ == sg_->multiplicity(), "multiplicity disagrees with the value semigroup");
        check(is_dvr() || type_ == sg_->type(), "type disagrees with the value semigroup");
        check(is_gorenstein() == sg_->symmetric(), "Gorenstein flag disagrees with symmetry");
    }
    if (origin_ == Origin::resext)
        check(mult_ == tower_.d, "residue extension ring must have multiplicity [K:k]");

    if (is_gorenstein()) {
        almost_g_ = Tri::yes;
    } else if (sg_) {
        almost_g_ = sg_->almost_symmetric() ? Tri::yes : Tri::no;
    } else if (origin_ == Origin::resext) {
        check(lat_subset(lat_product(m_, normalization_lattice()), lat_),
              "mV is not inside R for a residue extension ring");
        almost_g_ = Tri::yes;
    } else {
        almost_g_ = Tri::undecided;
    }
}

RingPtr LocalRing::rebuilt_with_window(int window) const {
    RingPtr again;
    switch (origin_) {
        case Origin::semigroup:
        case Origin::series: {
            auto tower = tower_;
            Lattice wide =
                lattice_from_generators(tower, gens_, Closure::multiplicative, window);
            check(lat_equal(wide, lat_), "rebuild changed a certified ring lattice");
            again = from_ring_lattice(tower, wide, descriptor_);
            break;
        }
        case Origin::resext:
        case Origin::lattice:
            // exact by construction; nothing window-dependent to rebuild
            again = shared_from_this();
            break;
    }
    check(again->multiplicity() == mult_ && again->cm_type() == type_ &&
              again->conductor_exponent() == lat_.cond(),
          "rebuild changed ring invariants");
    return again;
}

FracIdeal::FracIdeal(RingPtr R, Lattice lat) : R_(std::move(R)), lat_(std::move(lat)) {
    check(!lat_.is_zero(), "fractional ideals must be nonzero");
    check(lat_.has_tail(), "fractional ideals need a certified conductor");
    check(lat_.tower().same(R_->tower()), "ideal ambient differs from the ring ambient");
    check(lat_equal(lat_product(lat_, R_->lattice()), lat_), "lattice is not an R-module");
}

FracIdeal FracIdeal::from_generators(RingPtr R, const std::vector<TruncatedSeries>& gens) {
    Lattice lat = lattice_from_generators(R->tower(), gens, Closure::module, 0, 4, &R->lattice());
    return FracIdeal(std::move(R), std::move(lat));
}

FracIdeal FracIdeal::principal(RingPtr R, const TruncatedSeries& a) {
    return from_generators(std::move(R), {a});
}

TruncatedSeries FracIdeal::min_val_element() const {
    if (!lat_.rows().empty()) return lat_.rows().front();
    return TruncatedSeries::monomial(lat_.tower().K, lat_.cond());
}

FracIdeal FracIdeal::integral_shift() const {
    int v = lat_.vmin();
    if (v == 0) return *this;
    auto shift = TruncatedSeries::monomial(lat_.tower().K, -v);
    return FracIdeal(R_, lat_scale(shift, lat_));
}

}  // namespace latring
