#ifndef LATRING_SERIES_HPP
#define LATRING_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "latring/field.hpp"

namespace latring {

/* An element of K((t)) known exactly on all degrees < known_to().
 * known_to() == kInf means the series is an exact Laurent polynomial.
 * The term map stores only nonzero coefficients below known_to(). */
class TruncatedSeries {
public:
    static constexpr int kInf = 1 << 28;

    explicit TruncatedSeries(FieldPtr K) : K_(std::move(K)), known_to_(kInf) {}

    static TruncatedSeries zero(FieldPtr K) { return TruncatedSeries(std::move(K)); }
    static TruncatedSeries one(FieldPtr K);
    static TruncatedSeries monomial(FieldPtr K, int deg);
    static TruncatedSeries monomial(FieldPtr K, int deg, const FieldElem& c);

    const FieldPtr& coeff_field() const { return K_; }
    const std::map<int, FieldElem>& terms() const { return terms_; }
    int known_to() const { return known_to_; }
    bool exact() const { return known_to_ == kInf; }

    // Exactly zero as far as it is known.
    bool no_known_terms() const { return terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && exact(); }

    // Least degree with a nonzero coefficient.  kInf for the exact zero
    // series; throws precision_error when the window shows no term but the
    // series is not known exactly.
    int valuation() const;
    // Proven lower bound for the valuation; never throws.
    int valuation_lower_bound() const { return terms_.empty() ? known_to_ : terms_.begin()->first; }

    FieldElem coeff(int deg) const;  // throws precision_error for deg >= known_to
    FieldElem leading_coeff() const { return coeff(valuation()); }

    TruncatedSeries truncated(int hi) const;  // forget coefficients at degrees >= hi
    TruncatedSeries shifted(int k) const;     // multiply by t^k

    TruncatedSeries operator+(const TruncatedSeries& b) const;
    TruncatedSeries operator-(const TruncatedSeries& b) const;
    TruncatedSeries operator*(const TruncatedSeries& b) const;
    TruncatedSeries operator-() const;
    TruncatedSeries scaled(const FieldElem& c) const;

    // Multiplicative inverse in K((t)), computed on degrees < want_known_to
    // (and no further than the input's own precision allows).
    TruncatedSeries inverse(int want_known_to) const;

    bool operator==(const TruncatedSeries& b) const;
    // Total order on exact series for canonical sorting.
    int cmp(const TruncatedSeries& b) const;

    void set_coeff(int deg, const FieldElem& c);
    void set_known_to(int k);

    std::string str() const;  // "t4-t5", "1+t2", "[1,1,0]t3"

private:
    FieldPtr K_;
    std::map<int, FieldElem> terms_;
    int known_to_;
};

}  // namespace latring

#endif
