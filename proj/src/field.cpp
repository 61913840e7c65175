#include "latring/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace latring {

namespace {

bool is_prime_int(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero mod p
    std::int64_t t = 0, newt = 1, r = p, newr = mod_pos(a, p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw domain_error("element not invertible mod p");
    return mod_pos(t, p);
}

using Poly = std::vector<std::int64_t>;  // coefficients, index = degree, over F_p

int pdeg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly pmul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_pos(r[i + j] + a[i] * b[j], p);
    }
    return r;
}

// remainder of a modulo monic divisor d
Poly pmod(Poly a, const Poly& d, std::int64_t p) {
    int dd = pdeg(d);
    for (int i = pdeg(a); i >= dd && i >= 0; i = pdeg(a)) {
        std::int64_t c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j)
            a[i - dd + j] = mod_pos(a[i - dd + j] - c * d[j], p);
    }
    a.resize(std::max(dd, 0));
    return a;
}

bool divides(const Poly& g, const Poly& f, std::int64_t p) {
    return pdeg(pmod(f, g, p)) < 0;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, std::int64_t p) {
    int n = pdeg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t m = 0; m < count; ++m) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t t = m;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<std::int64_t>(t % p);
                t /= p;
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr FieldCtx::rationals() {
    static FieldPtr q = [] {
        auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
        ctx->kind_ = Kind::rationals;
        return FieldPtr(ctx);
    }();
    return q;
}

FieldPtr FieldCtx::prime(std::int64_t p) {
    if (!is_prime_int(p)) throw domain_error("field characteristic must be prime, got " + std::to_string(p));
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->kind_ = Kind::prime;
    ctx->p_ = p;
    ctx->n_ = 1;
    return ctx;
}

FieldPtr FieldCtx::extension(std::int64_t p, int n, std::vector<std::int64_t> modulus) {
    if (!is_prime_int(p)) throw domain_error("field characteristic must be prime, got " + std::to_string(p));
    if (n < 2) throw domain_error("extension degree must be >= 2");
    if (n > FieldElem::kMaxExtDegree) throw cap_error("extension degree above desk-scale cap 8");
    // irreducibility testing is exhaustive trial division; keep the search space sane
    double work = std::pow(static_cast<double>(p), n / 2 + 1);
    if (work > 4e6) throw cap_error("irreducible-polynomial search space too large for F_" +
                                    std::to_string(p) + "^" + std::to_string(n));

    if (modulus.empty()) {
        std::uint64_t count = 1;
        for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(p);
        bool found = false;
        for (std::uint64_t m = 0; m < count && !found; ++m) {
            Poly f(n + 1, 0);
            f[n] = 1;
            std::uint64_t t = m;
            for (int i = 0; i < n; ++i) {
                f[i] = static_cast<std::int64_t>(t % p);
                t /= p;
            }
            if (poly_irreducible(f, p)) {
                modulus = f;
                found = true;
            }
        }
        if (!found) throw cap_error("no irreducible modulus found");  // cannot happen mathematically
    } else {
        if (static_cast<int>(modulus.size()) != n + 1 || modulus[n] != 1)
            throw domain_error("modulus must be monic of degree n, given as c0,...,c_{n-1},1");
        for (auto& c : modulus) c = mod_pos(c, p);
        if (!poly_irreducible(modulus, p))
            throw domain_error("supplied modulus is reducible over F_" + std::to_string(p));
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->kind_ = Kind::extension;
    ctx->p_ = p;
    ctx->n_ = n;
    ctx->modulus_ = std::move(modulus);
    ctx->no_intermediate_ = is_prime_int(n);
    return ctx;
}

std::uint64_t FieldCtx::order() const {
    if (!is_finite()) throw domain_error("order() on an infinite field");
    std::uint64_t q = 1;
    for (int i = 0; i < degree_over_base(); ++i) q *= static_cast<std::uint64_t>(p_);
    return q;
}

FieldPtr FieldCtx::base_field() const {
    if (kind_ == Kind::extension) return prime(p_);
    return shared_from_this();
}

bool FieldCtx::same_field(const FieldCtx& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
}

FieldElem FieldCtx::zero() const { return from_int(0); }
FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::from_int(std::int64_t v) const {
    FieldElem e;
    e.ctx_ = this;
    if (kind_ == Kind::rationals)
        e.q_ = v;
    else
        e.c_[0] = mod_pos(v, p_);
    return e;
}

FieldElem FieldCtx::from_rational(const mpq_class& q) const {
    if (kind_ != Kind::rationals) throw domain_error("from_rational on a finite field");
    FieldElem e;
    e.ctx_ = this;
    e.q_ = q;
    e.q_.canonicalize();
    return e;
}

FieldElem FieldCtx::element(std::uint64_t index) const {
    if (!is_finite()) throw domain_error("element enumeration on an infinite field");
    FieldElem e;
    e.ctx_ = this;
    for (int i = 0; i < degree_over_base(); ++i) {
        e.c_[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p_));
        index /= static_cast<std::uint64_t>(p_);
    }
    if (index != 0) throw domain_error("element index out of range");
    return e;
}

FieldElem FieldCtx::from_base_coords(const std::vector<FieldElem>& coords) const {
    int d = degree_over_base();
    if (static_cast<int>(coords.size()) != d) throw domain_error("coordinate vector has wrong length");
    if (kind_ == Kind::rationals) return coords[0];
    FieldElem e;
    e.ctx_ = this;
    for (int i = 0; i < d; ++i) {
        const FieldElem& c = coords[i];
        if (!c.valid() || c.ctx()->kind() == Kind::rationals || c.ctx()->characteristic() != p_ ||
            c.ctx()->degree_over_base() != 1)
            throw domain_error("coordinates must live in the prime base field");
        e.c_[i] = c.coord(0);
    }
    return e;
}

FieldElem FieldCtx::embed_base(const FieldElem& a) const {
    if (kind_ == Kind::rationals) return a;
    if (!a.valid() || a.ctx()->characteristic() != p_ || a.ctx()->degree_over_base() != 1)
        throw domain_error("embed_base: element is not in the prime base field");
    FieldElem e;
    e.ctx_ = this;
    e.c_[0] = a.coord(0);
    return e;
}

std::string FieldCtx::describe() const {
    switch (kind_) {
        case Kind::rationals: return "Q";
        case Kind::prime: return "F" + std::to_string(p_);
        case Kind::extension: {
            std::uint64_t q = order();
            return "F" + std::to_string(q) + "/F" + std::to_string(p_);
        }
    }
    return "?";
}

FieldElem FieldCtx::parse(const std::string& text) const {
    if (text.empty()) throw parse_error("empty field element");
    if (kind_ == Kind::rationals) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw parse_error("bad rational '" + text + "'");
        q.canonicalize();
        return from_rational(q);
    }
    if (text.front() == '[') {
        if (text.back() != ']') throw parse_error("unterminated coordinate list '" + text + "'");
        std::vector<FieldElem> coords;
        auto base = base_field();
        std::stringstream ss(text.substr(1, text.size() - 2));
        std::string part;
        while (std::getline(ss, part, ','))
            coords.push_back(base->parse(part));
        while (static_cast<int>(coords.size()) < degree_over_base()) coords.push_back(base->zero());
        return from_base_coords(coords);
    }
    std::size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos != text.size()) throw parse_error("bad field element '" + text + "'");
    return from_int(v);
}

void FieldElem::require_same(const FieldElem& b) const {
    if (!valid() || !b.valid()) throw domain_error("arithmetic on a null field element");
    if (ctx_ != b.ctx_ && !ctx_->same_field(*b.ctx_)) throw domain_error("field context mismatch");
}

bool FieldElem::is_zero() const {
    if (!valid()) throw domain_error("null field element");
    if (ctx_->kind() == FieldCtx::Kind::rationals) return q_ == 0;
    for (int i = 0; i < ctx_->degree_over_base(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool FieldElem::is_one() const {
    if (!valid()) throw domain_error("null field element");
    if (ctx_->kind() == FieldCtx::Kind::rationals) return q_ == 1;
    if (c_[0] != 1) return false;
    for (int i = 1; i < ctx_->degree_over_base(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

FieldElem FieldElem::operator+(const FieldElem& b) const {
    require_same(b);
    FieldElem r;
    r.ctx_ = ctx_;
    if (ctx_->kind() == FieldCtx::Kind::rationals) {
        r.q_ = q_ + b.q_;
    } else {
        for (int i = 0; i < ctx_->degree_over_base(); ++i)
            r.c_[i] = mod_pos(c_[i] + b.c_[i], ctx_->p_);
    }
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& b) const {
    require_same(b);
    FieldElem r;
    r.ctx_ = ctx_;
    if (ctx_->kind() == FieldCtx::Kind::rationals) {
        r.q_ = q_ - b.q_;
    } else {
        for (int i = 0; i < ctx_->degree_over_base(); ++i)
            r.c_[i] = mod_pos(c_[i] - b.c_[i], ctx_->p_);
    }
    return r;
}

FieldElem FieldElem::operator-() const {
    if (!valid()) throw domain_error("null field element");
    FieldElem r;
    r.ctx_ = ctx_;
    if (ctx_->kind() == FieldCtx::Kind::rationals) {
        r.q_ = -q_;
    } else {
        for (int i = 0; i < ctx_->degree_over_base(); ++i)
            r.c_[i] = mod_pos(-c_[i], ctx_->p_);
    }
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& b) const {
    require_same(b);
    FieldElem r;
    r.ctx_ = ctx_;
    if (ctx_->kind() == FieldCtx::Kind::rationals) {
        r.q_ = q_ * b.q_;
        return r;
    }
    int n = ctx_->degree_over_base();
    if (n == 1) {
        r.c_[0] = mod_pos(c_[0] * b.c_[0], ctx_->p_);
        return r;
    }
    Poly a(c_.begin(), c_.begin() + n), bb(b.c_.begin(), b.c_.begin() + n);
    Poly prod = pmod(pmul(a, bb, ctx_->p_), ctx_->modulus_, ctx_->p_);
    for (int i = 0; i < n; ++i)
        r.c_[i] = i < static_cast<int>(prod.size()) ? prod[i] : 0;
    return r;
}

FieldElem FieldElem::inverse() const {
    if (!valid()) throw domain_error("null field element");
    if (is_zero()) throw domain_error("division by zero");
    FieldElem r;
    r.ctx_ = ctx_;
    if (ctx_->kind() == FieldCtx::Kind::rationals) {
        r.q_ = 1 / q_;
        return r;
    }
    int n = ctx_->degree_over_base();
    if (n == 1) {
        r.c_[0] = inv_mod(c_[0], ctx_->p_);
        return r;
    }
    // extended Euclid in F_p[x] against the modulus
    std::int64_t p = ctx_->p_;
    Poly r0 = ctx_->modulus_, r1(c_.begin(), c_.begin() + n);
    Poly t0 = {}, t1 = {1};
    while (pdeg(r1) > 0) {
        // divide r0 by r1
        Poly rem = r0, quo;
        int d1 = pdeg(r1);
        std::int64_t lead_inv = inv_mod(r1[d1], p);
        quo.assign(std::max(pdeg(r0) - d1 + 1, 1), 0);
        for (int i = pdeg(rem); i >= d1; i = pdeg(rem)) {
            if (i < 0 || rem[i] == 0) break;
            std::int64_t c = mod_pos(rem[i] * lead_inv, p);
            quo[i - d1] = c;
            for (int j = 0; j <= d1; ++j)
                rem[i - d1 + j] = mod_pos(rem[i - d1 + j] - c * r1[j], p);
        }
        Poly t2_sub = pmul(quo, t1, p);
        Poly t2 = t0;
        t2.resize(std::max(t2.size(), t2_sub.size()), 0);
        for (std::size_t i = 0; i < t2_sub.size(); ++i)
            t2[i] = mod_pos(t2[i] - t2_sub[i], p);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    if (pdeg(r1) != 0) throw domain_error("inverse: element not invertible");
    std::int64_t scale = inv_mod(r1[0], p);
    for (int i = 0; i < n; ++i)
        r.c_[i] = i < static_cast<int>(t1.size()) ? mod_pos(t1[i] * scale, p) : 0;
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& b) const { return *this * b.inverse(); }

FieldElem FieldElem::pow(std::uint64_t e) const {
    if (!valid()) throw domain_error("null field element");
    FieldElem acc = ctx_->one(), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldElem::operator==(const FieldElem& b) const {
    require_same(b);
    if (ctx_->kind() == FieldCtx::Kind::rationals) return q_ == b.q_;
    for (int i = 0; i < ctx_->degree_over_base(); ++i)
        if (c_[i] != b.c_[i]) return false;
    return true;
}

int FieldElem::cmp(const FieldElem& b) const {
    require_same(b);
    if (ctx_->kind() == FieldCtx::Kind::rationals) return ::cmp(q_, b.q_);
    for (int i = ctx_->degree_over_base() - 1; i >= 0; --i) {
        if (c_[i] != b.c_[i]) return c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<FieldElem> FieldElem::coords_over_base() const {
    if (!valid()) throw domain_error("null field element");
    if (ctx_->kind() == FieldCtx::Kind::rationals)
        throw domain_error("coords_over_base is not defined over Q");
    auto base = ctx_->base_field();
    std::vector<FieldElem> out;
    for (int i = 0; i < ctx_->degree_over_base(); ++i)
        out.push_back(base->from_int(c_[i]));
    return out;
}

const mpq_class& FieldElem::rational() const {
    if (!valid() || ctx_->kind() != FieldCtx::Kind::rationals)
        throw domain_error("rational() on a finite-field element");
    return q_;
}

std::int64_t FieldElem::coord(int i) const {
    if (!valid() || ctx_->kind() == FieldCtx::Kind::rationals)
        throw domain_error("coord() on a rational element");
    if (i < 0 || i >= ctx_->degree_over_base()) throw domain_error("coordinate index out of range");
    return c_[i];
}

std::string FieldElem::str() const {
    if (!valid()) return "<null>";
    if (ctx_->kind() == FieldCtx::Kind::rationals) return q_.get_str();
    int n = ctx_->degree_over_base();
    if (n == 1) return std::to_string(c_[0]);
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s + "]";
}

}  // namespace latring
