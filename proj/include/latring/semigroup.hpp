#ifndef LATRING_SEMIGROUP_HPP
#define LATRING_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

#include "latring/errors.hpp"

namespace latring {

/* A numerical semigroup: a cofinite additive submonoid of N, given by
 * generators with gcd 1.  This module is pure combinatorics and serves as the
 * independent oracle for every monomial computation in the lattice engine. */
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<std::int64_t> generators);

    bool contains(std::int64_t x) const;
    const std::vector<std::int64_t>& minimal_generators() const { return min_gens_; }
    const std::vector<std::int64_t>& gaps() const { return gaps_; }
    std::int64_t frobenius() const { return frobenius_; }      // -1 for N itself
    std::int64_t conductor() const { return frobenius_ + 1; }  // least c with c + N ⊆ S
    std::int64_t multiplicity() const;                          // least nonzero element
    std::int64_t genus() const { return static_cast<std::int64_t>(gaps_.size()); }

    // Apery set w.r.t. m (default: multiplicity): least member in each residue
    // class mod m, ordered by residue 0..m-1.
    std::vector<std::int64_t> apery(std::int64_t m = 0) const;
    std::vector<std::int64_t> pseudo_frobenius() const;
    std::int64_t type() const;
    bool symmetric() const;
    bool almost_symmetric() const;

    // Members of S in [0, bound).
    std::vector<std::int64_t> elements_below(std::int64_t bound) const;

    // All numerical semigroups T with S ⊆ T ⊆ N (finite), sorted by
    // (genus, gap list).  Exhaustive search over addition-closed gap subsets.
    std::vector<NumericalSemigroup> oversemigroups() const;

    bool operator==(const NumericalSemigroup& o) const { return gaps_ == o.gaps_; }

    // All numerical semigroups with genus <= max_genus (and, when
    // max_multiplicity > 0, multiplicity <= max_multiplicity), via the tree
    // that removes one minimal generator > Frobenius number per step.
    static std::vector<NumericalSemigroup> enumerate(std::int64_t max_genus,
                                                     std::int64_t max_multiplicity = 0);

private:
    NumericalSemigroup() = default;
    void rebuild_from_table();

    std::vector<char> table_;  // membership for 0..frobenius_+1 (at least)
    std::vector<std::int64_t> min_gens_;
    std::vector<std::int64_t> gaps_;
    std::int64_t frobenius_ = -1;
};

/* A set E ⊆ Z with E + S ⊆ E, bounded below and cofinite in min(E) + N.
 * Canonical form: the members in [min, min + conductor(S)), everything from
 * min + conductor(S) on implicit. */
class SemigroupIdeal {
public:
    SemigroupIdeal(const NumericalSemigroup& S, std::vector<std::int64_t> generators);

    const NumericalSemigroup& semigroup() const { return *S_; }
    bool contains(std::int64_t x) const;
    std::int64_t min() const { return min_; }
    std::int64_t tail_from() const { return tail_from_; }  // all x >= tail_from are members
    const std::vector<std::int64_t>& head() const { return head_; }  // members in [min, tail_from)

    bool operator==(const SemigroupIdeal& o) const;

    // dim of E/F as a set difference count; F ⊆ E required.
    std::int64_t colength(const SemigroupIdeal& F) const;

    friend SemigroupIdeal ideal_sum(const SemigroupIdeal& E, const SemigroupIdeal& F);
    friend SemigroupIdeal ideal_product(const SemigroupIdeal& E, const SemigroupIdeal& F);
    friend SemigroupIdeal ideal_colon(const SemigroupIdeal& E, const SemigroupIdeal& F);

private:
    SemigroupIdeal(const NumericalSemigroup& S, std::int64_t min, std::vector<std::int64_t> head);

    const NumericalSemigroup* S_;
    std::int64_t min_ = 0;
    std::int64_t tail_from_ = 0;
    std::vector<std::int64_t> head_;
};

SemigroupIdeal ideal_sum(const SemigroupIdeal& E, const SemigroupIdeal& F);
SemigroupIdeal ideal_product(const SemigroupIdeal& E, const SemigroupIdeal& F);
SemigroupIdeal ideal_colon(const SemigroupIdeal& E, const SemigroupIdeal& F);

}  // namespace latring

#endif
