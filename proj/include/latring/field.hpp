#ifndef LATRING_FIELD_HPP
#define LATRING_FIELD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "latring/errors.hpp"

namespace latring {

class FieldElem;
class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/* An exact coefficient field: Q, F_p, or F_{p^n} = F_p[x]/(modulus).
 *
 * Contexts are immutable after construction and safe to share between threads.
 * Elements keep a raw pointer to their context; every owner of elements
 * (lattices, rings, reports) holds the context via shared_ptr, so the pointer
 * outlives the element.
 */
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    enum class Kind { rationals, prime, extension };

    static FieldPtr rationals();
    static FieldPtr prime(std::int64_t p);
    // Empty modulus: pick the least irreducible monic polynomial of degree n,
    // coefficient tuples compared as base-p numerals (constant term least
    // significant).  A supplied modulus is given as c0,...,c_{n-1},1 and is
    // verified irreducible.
    static FieldPtr extension(std::int64_t p, int n, std::vector<std::int64_t> modulus = {});

    Kind kind() const { return kind_; }
    std::int64_t characteristic() const { return p_; }
    int degree_over_base() const { return kind_ == Kind::extension ? n_ : 1; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    bool is_finite() const { return kind_ != Kind::rationals; }
    // Number of elements; finite fields only.
    std::uint64_t order() const;
    // For extension fields: no proper intermediate field exists iff the degree
    // is prime.  True for Q and prime fields (degree one).
    bool no_intermediate_field() const { return no_intermediate_; }
    // Base field of the power-basis view: F_p for extensions, *this otherwise.
    FieldPtr base_field() const;

    bool same_field(const FieldCtx& other) const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(std::int64_t v) const;
    FieldElem from_rational(const mpq_class& q) const;  // rationals only
    // Canonical enumeration of a finite field, index in [0, order()).
    FieldElem element(std::uint64_t index) const;
    // Inverse of coords_over_base: coords are base-field elements, length
    // degree_over_base().
    FieldElem from_base_coords(const std::vector<FieldElem>& coords) const;
    // Lift an element of base_field() into this field.
    FieldElem embed_base(const FieldElem& a) const;

    FieldElem parse(const std::string& text) const;
    std::string describe() const;  // "Q", "F2", "F8/F2"

private:
    FieldCtx() = default;
    friend class FieldElem;

    Kind kind_ = Kind::rationals;
    std::int64_t p_ = 0;
    int n_ = 1;
    std::vector<std::int64_t> modulus_;  // size n_+1, monic; extensions only
    bool no_intermediate_ = true;
};

/* One field element in canonical form: a reduced fraction over Q, the least
 * residue over F_p, polynomial coordinates of degree < n over F_{p^n}. */
class FieldElem {
public:
    static constexpr int kMaxExtDegree = 8;

    FieldElem() = default;  // "null" element; arithmetic on it throws

    bool valid() const { return ctx_ != nullptr; }
    const FieldCtx* ctx() const { return ctx_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& b) const;
    FieldElem operator-(const FieldElem& b) const;
    FieldElem operator*(const FieldElem& b) const;
    FieldElem operator/(const FieldElem& b) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(std::uint64_t e) const;

    bool operator==(const FieldElem& b) const;
    bool operator!=(const FieldElem& b) const { return !(*this == b); }
    // Total order used for canonical sorting; same field required.
    int cmp(const FieldElem& b) const;

    // Coordinates w.r.t. the power basis 1, x, ..., x^{n-1}, as base-field
    // elements.  Defined for prime and extension fields.
    std::vector<FieldElem> coords_over_base() const;

    const mpq_class& rational() const;
    std::int64_t coord(int i) const;  // finite fields, 0 <= i < degree

    std::string str() const;

private:
    friend class FieldCtx;
    const FieldCtx* ctx_ = nullptr;
    mpq_class q_;                            // rationals payload
    std::array<std::int64_t, kMaxExtDegree> c_{};  // finite payload, c_[0..deg)
    void require_same(const FieldElem& b) const;
};

}  // namespace latring

#endif
