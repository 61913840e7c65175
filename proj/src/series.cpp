#include "latring/series.hpp"

#include <algorithm>

namespace latring {

namespace {
int add_capped(int a, int b) {
    long s = static_cast<long>(a) + static_cast<long>(b);
    if (s >= TruncatedSeries::kInf) return TruncatedSeries::kInf;
    if (s <= -TruncatedSeries::kInf) return -TruncatedSeries::kInf;
    return static_cast<int>(s);
}
}  // namespace

TruncatedSeries TruncatedSeries::one(FieldPtr K) { return monomial(std::move(K), 0); }

TruncatedSeries TruncatedSeries::monomial(FieldPtr K, int deg) {
    FieldElem c = K->one();
    return monomial(std::move(K), deg, c);
}

TruncatedSeries TruncatedSeries::monomial(FieldPtr K, int deg, const FieldElem& c) {
    TruncatedSeries s(std::move(K));
    if (!c.is_zero()) s.terms_[deg] = c;
    return s;
}

int TruncatedSeries::valuation() const {
    if (!terms_.empty()) return terms_.begin()->first;
    if (exact()) return kInf;
    throw precision_error("valuation unknown: series has no term below its precision window");
}

FieldElem TruncatedSeries::coeff(int deg) const {
    if (deg >= known_to_)
        throw precision_error("coefficient at degree " + std::to_string(deg) +
                              " is beyond the known window");
    auto it = terms_.find(deg);
    return it == terms_.end() ? K_->zero() : it->second;
}

TruncatedSeries TruncatedSeries::truncated(int hi) const {
    TruncatedSeries r(K_);
    r.known_to_ = std::min(known_to_, hi);
    for (const auto& [d, c] : terms_) {
        if (d >= r.known_to_) break;
        r.terms_[d] = c;
    }
    return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    TruncatedSeries r(K_);
    r.known_to_ = add_capped(known_to_, k);
    for (const auto& [d, c] : terms_) r.terms_[d + k] = c;
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& b) const {
    TruncatedSeries r(K_);
    r.known_to_ = std::min(known_to_, b.known_to_);
    for (const auto& [d, c] : terms_)
        if (d < r.known_to_) r.terms_[d] = c;
    for (const auto& [d, c] : b.terms_) {
        if (d >= r.known_to_) continue;
        auto it = r.terms_.find(d);
        if (it == r.terms_.end()) {
            r.terms_[d] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(K_);
    r.known_to_ = known_to_;
    for (const auto& [d, c] : terms_) r.terms_[d] = -c;
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& b) const { return *this + (-b); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& b) const {
    TruncatedSeries r(K_);
    if (is_exact_zero() || b.is_exact_zero()) return r;
    // product of series known below h1, h2 with valuations >= v1, v2 is known
    // below min(v1+h2, v2+h1)
    r.known_to_ = std::min(add_capped(valuation_lower_bound(), b.known_to_),
                           add_capped(b.valuation_lower_bound(), known_to_));
    for (const auto& [da, ca] : terms_)
        for (const auto& [db, cb] : b.terms_) {
            int d = da + db;
            if (d >= r.known_to_) continue;
            FieldElem prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = r.terms_.find(d);
            if (it == r.terms_.end()) {
                r.terms_[d] = prod;
            } else {
                it->second = it->second + prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const FieldElem& c) const {
    TruncatedSeries r(K_);
    r.known_to_ = known_to_;
    if (c.is_zero()) {
        if (exact()) r.known_to_ = kInf;
        return r;
    }
    for (const auto& [d, a] : terms_) r.terms_[d] = a * c;
    return r;
}

TruncatedSeries TruncatedSeries::inverse(int want_known_to) const {
    int v = valuation();
    if (v == kInf) throw domain_error("inverse of the zero series");
    FieldElem lead_inv = leading_coeff().inverse();
    // u = t^{-v} * this is a unit of K[[t]]; invert u by the linear recurrence
    int terms_known = exact() ? kInf : known_to_ - v;
    int want_terms = std::min(add_capped(want_known_to, v), terms_known);
    if (want_terms <= 0)
        throw precision_error("series inverse: requested window is empty at this precision");
    std::vector<FieldElem> b(static_cast<std::size_t>(want_terms));
    b[0] = lead_inv;
    for (int m = 1; m < want_terms; ++m) {
        FieldElem acc = K_->zero();
        for (int j = 1; j <= m; ++j) {
            auto it = terms_.find(v + j);
            if (it == terms_.end()) continue;
            acc = acc + it->second * b[static_cast<std::size_t>(m - j)];
        }
        b[static_cast<std::size_t>(m)] = -(lead_inv * acc);
    }
    TruncatedSeries r(K_);
    r.known_to_ = want_terms == kInf ? kInf : want_terms - v;
    for (int m = 0; m < want_terms; ++m)
        if (!b[static_cast<std::size_t>(m)].is_zero()) r.terms_[m - v] = b[static_cast<std::size_t>(m)];
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& b) const {
    return known_to_ == b.known_to_ && terms_.size() == b.terms_.size() &&
           std::equal(terms_.begin(), terms_.end(), b.terms_.begin(),
                      [](const auto& x, const auto& y) {
                          return x.first == y.first && x.second == y.second;
                      });
}

int TruncatedSeries::cmp(const TruncatedSeries& b) const {
    auto ia = terms_.begin(), ib = b.terms_.begin();
    while (ia != terms_.end() && ib != b.terms_.end()) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = ia->second.cmp(ib->second);
        if (c != 0) return c;
        ++ia;
        ++ib;
    }
    if (ia != terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

void TruncatedSeries::set_coeff(int deg, const FieldElem& c) {
    if (deg >= known_to_) throw domain_error("set_coeff beyond the known window");
    if (c.is_zero())
        terms_.erase(deg);
    else
        terms_[deg] = c;
}

void TruncatedSeries::set_known_to(int k) {
    known_to_ = k;
    terms_.erase(terms_.lower_bound(k), terms_.end());
}

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        std::string cs = c.str();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                s += "-";
                cs = cs.substr(1);
            } else {
                s += "+";
            }
        }
        if (d == 0) {
            s += cs;
        } else {
            if (cs == "-1")
                s += "-";
            else if (cs != "1")
                s += cs;
            s += "t" + std::to_string(d);
        }
        first = false;
    }
    return s;
}

}  // namespace latring
