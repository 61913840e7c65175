#ifndef LATRING_LATTICE_HPP
#define LATRING_LATTICE_HPP

#include <optional>
#include <vector>

#include "latring/series.hpp"

namespace latring {

/* The ambient coefficient pair k ⊆ K.  Either K == k (d = 1) or K is an
 * extension field of the prime field k (d = [K:k]).  Row reduction is always
 * over k; each t-degree contributes d base-field coordinates. */
struct FieldTower {
    FieldPtr k;
    FieldPtr K;
    int d = 1;

    static FieldTower trivial(FieldPtr f) { return FieldTower{f, f, 1}; }
    static FieldTower over_base(FieldPtr K);  // k = K->base_field()
    bool same(const FieldTower& o) const;
};

/* A finite-dimensional k-subspace of K((t)) presented exactly:
 *
 *     L = span_k(rows) + t^cond * K[[t]]          (no tail when cond() == kCondInf)
 *
 * in canonical form: cond is the least certified conductor bound, rows are the
 * reduced row echelon basis over k of L modulo t^cond K[[t]], supported on
 * [vmin, cond).  Two lattices are equal as subsets of K((t)) iff their
 * canonical data agree, and every operation below is exact. */
class Lattice {
public:
    static constexpr int kCondInf = TruncatedSeries::kInf;
    static constexpr int kValInf = TruncatedSeries::kInf;

    static Lattice zero(const FieldTower& t);
    static Lattice tail(const FieldTower& t, int c);  // t^c K[[t]]
    // span_k of exact series, optionally together with a certified tail.
    static Lattice make(const FieldTower& t, std::vector<TruncatedSeries> rows,
                        int cond = kCondInf);

    const FieldTower& tower() const { return tower_; }
    int cond() const { return cond_; }
    bool has_tail() const { return cond_ != kCondInf; }
    int vmin() const { return vmin_; }
    bool is_zero() const { return rows_.empty() && !has_tail(); }
    const std::vector<TruncatedSeries>& rows() const { return rows_; }
    std::int64_t rank_below_cond() const { return static_cast<std::int64_t>(rows_.size()); }

    // k-basis of L modulo t^hi K[[t]]: the stored rows plus the monomial rows
    // t^j w_b for cond <= j < hi.
    std::vector<TruncatedSeries> basis_below(int hi) const;

    bool operator==(const Lattice& o) const;
    int cmp(const Lattice& o) const;  // total order for deterministic listings

private:
    FieldTower tower_;
    int cond_ = kCondInf;
    int vmin_ = kValInf;
    std::vector<TruncatedSeries> rows_;
};

bool member(const TruncatedSeries& f, const Lattice& L);
bool lat_subset(const Lattice& inner, const Lattice& outer);
bool lat_equal(const Lattice& a, const Lattice& b);

Lattice lat_sum(const Lattice& a, const Lattice& b);
Lattice lat_product(const Lattice& a, const Lattice& b);
// {f in K((t)) : f*Y ⊆ X}; X needs a certified conductor, Y must be nonzero.
Lattice lat_colon(const Lattice& x, const Lattice& y);
Lattice lat_intersect(const Lattice& a, const Lattice& b);
// a*X for a nonzero series known far enough.
Lattice lat_scale(const TruncatedSeries& a, const Lattice& x);

// dim_k(X/Y) for Y ⊆ X; throws when the quotient is not finite dimensional.
std::int64_t colength(const Lattice& x, const Lattice& y);

enum class Closure {
    span,            // plain k-span of the generators
    multiplicative,  // smallest complete k-subalgebra containing 1 and the generators
    module,          // smallest module over a given ring lattice containing the generators
};

/* Build a lattice from generators.
 *
 * For Closure::multiplicative the closure is iterated below window_hi until it
 * stabilizes; a conductor c is certified when every degree in [c, window_hi)
 * carries the full coefficient block and window_hi >= max(2c, c + guard)
 * (completeness below c plus t^c K[[t]] ⊆ L follow; see the note in
 * lattice.cpp).  For Closure::module the conductor min- valuation + cond(ring)
 * is certified directly.  Throws precision_error when the window cannot
 * certify a conductor. */
Lattice lattice_from_generators(const FieldTower& t, const std::vector<TruncatedSeries>& gens,
                                Closure mode, int window_hi = 64, int guard = 4,
                                const Lattice* module_ring = nullptr);

// Rebuild from the same generators on a wider window and check that the
// result is the same subset of K((t)).
Lattice refine_precision(const FieldTower& t, const std::vector<TruncatedSeries>& gens,
                         Closure mode, const Lattice& built, int new_hi, int guard = 4,
                         const Lattice* module_ring = nullptr);

}  // namespace latring

#endif
