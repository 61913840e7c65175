#ifndef LATRING_LOCAL_RING_HPP
#define LATRING_LOCAL_RING_HPP

#include <memory>
#include <optional>
#include <string>

#include "latring/lattice.hpp"
#include "latring/semigroup.hpp"

namespace latring {

class LocalRing;
using RingPtr = std::shared_ptr<const LocalRing>;

/* A one-dimensional complete local ring R ⊆ K[[t]], presented as a certified
 * ring lattice.  The normalization is always V = K[[t]] and the conductor
 * ideal R:V is t^c K[[t]] with c the lattice's certified bound.  Invariants
 * are computed at construction; instances are immutable. */
class LocalRing : public std::enable_shared_from_this<LocalRing> {
public:
    enum class Tri { yes, no, undecided };

    // R = k[[t^g : g in gens]]; gcd(gens) must be 1.  The lattice is built
    // from the value semigroup and cross-checked against the multiplicative
    // closure of the monomial generators.
    static RingPtr semigroup_ring(FieldPtr k, const std::vector<std::int64_t>& gens);
    // The complete local subalgebra k[[gens]]; window 0 picks a default and
    // widens once before giving up.
    static RingPtr from_series_generators(FieldPtr k, const std::vector<TruncatedSeries>& gens,
                                          int window = 0);
    // R = k + t K[[t]] inside K[[t]], for K/k a proper extension of finite
    // fields.  Conductor exponent 1, maximal ideal t K[[t]].
    static RingPtr residue_extension(FieldPtr k, FieldPtr K);
    // Wrap an already-certified ring lattice (used for enumerated overrings).
    static RingPtr from_ring_lattice(const FieldTower& t, Lattice lat, std::string descriptor);

    const FieldTower& tower() const { return tower_; }
    const Lattice& lattice() const { return lat_; }
    const Lattice& maximal_ideal() const { return m_; }
    Lattice normalization_lattice() const { return Lattice::tail(tower_, 0); }
    Lattice conductor_lattice() const { return Lattice::tail(tower_, lat_.cond()); }
    int conductor_exponent() const { return lat_.cond(); }
    const std::string& descriptor() const { return descriptor_; }
    const std::optional<NumericalSemigroup>& value_semigroup() const { return sg_; }
    const std::vector<TruncatedSeries>& generators() const { return gens_; }

    bool is_monomial() const;  // every canonical basis row is a monomial
    int residue_degree() const { return residue_degree_; }  // [R/m : k]

    std::int64_t multiplicity() const { return mult_; }
    std::int64_t embedding_dimension() const { return embdim_; }
    std::int64_t cm_type() const { return type_; }
    bool is_dvr() const { return mult_ == 1; }
    bool is_gorenstein() const { return type_ == 1; }
    Tri almost_gorenstein() const { return almost_g_; }

    // Rebuild from the retained generators on a wider window; the result is
    // checked equal and returned (precision-doubling invariant).
    RingPtr rebuilt_with_window(int window) const;

private:
    LocalRing() = default;
    void init();

    FieldTower tower_;
    Lattice lat_ = Lattice::zero(FieldTower{});
    Lattice m_ = Lattice::zero(FieldTower{});
    std::string descriptor_;
    std::vector<TruncatedSeries> gens_;
    std::optional<NumericalSemigroup> sg_;
    enum class Origin { semigroup, series, resext, lattice } origin_ = Origin::lattice;
    int residue_degree_ = 1;
    std::int64_t mult_ = 0, embdim_ = 0, type_ = 0;
    Tri almost_g_ = Tri::undecided;
};

/* A nonzero fractional ideal over R: an R-submodule lattice of K((t)).  The
 * ambient is a domain, so nonzero already means regular. */
class FracIdeal {
public:
    FracIdeal(RingPtr R, Lattice lat);
    static FracIdeal from_generators(RingPtr R, const std::vector<TruncatedSeries>& gens);
    static FracIdeal principal(RingPtr R, const TruncatedSeries& a);

    const LocalRing& ring() const { return *R_; }
    const RingPtr& ring_ptr() const { return R_; }
    const Lattice& lattice() const { return lat_; }

    // An element of least valuation (the regularity witness).
    TruncatedSeries min_val_element() const;
    bool is_integral() const { return lat_subset(lat_, R_->lattice()); }
    // t^{-vmin} I, an integral representative of the isomorphism class.
    FracIdeal integral_shift() const;

    bool operator==(const FracIdeal& o) const { return lat_equal(lat_, o.lat_); }

private:
    RingPtr R_;
    Lattice lat_;
};

}  // namespace latring

#endif
