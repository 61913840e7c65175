#include "latring/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace latring {

namespace {
constexpr int kInf = TruncatedSeries::kInf;

int add_capped(int a, int b) {
    long s = static_cast<long>(a) + static_cast<long>(b);
    if (s >= kInf) return kInf;
    if (s <= -kInf) return -kInf;
    return static_cast<int>(s);
}
}  // namespace

FieldTower FieldTower::over_base(FieldPtr K) {
    if (K->kind() == FieldCtx::Kind::extension)
        return FieldTower{K->base_field(), K, K->degree_over_base()};
    return trivial(std::move(K));
}

bool FieldTower::same(const FieldTower& o) const {
    return d == o.d && k->same_field(*o.k) && K->same_field(*o.K);
}

namespace {

// w_b = x^b in the power basis of K over k (b < d).
FieldElem power_basis_elem(const FieldTower& tw, int b) {
    if (tw.d == 1) {
        check(b == 0, "power basis index out of range");
        return tw.K->one();
    }
    std::vector<FieldElem> coords(static_cast<std::size_t>(tw.d), tw.k->zero());
    coords[static_cast<std::size_t>(b)] = tw.k->one();
    return tw.K->from_base_coords(coords);
}

// multiply a K-coefficient series by a k-scalar
TruncatedSeries scale_by_base(const FieldTower& tw, const TruncatedSeries& f, const FieldElem& c) {
    return f.scaled(tw.d == 1 ? c : tw.K->embed_base(c));
}

using Row = std::vector<FieldElem>;
using Matrix = std::vector<Row>;

Row to_coords(const FieldTower& tw, const TruncatedSeries& f, int lo, int hi) {
    Row v(static_cast<std::size_t>((hi - lo) * tw.d), tw.k->zero());
    for (const auto& [deg, c] : f.terms()) {
        check(deg >= lo, "series term below the coordinate window");
        if (deg >= hi) continue;
        if (tw.d == 1) {
            v[static_cast<std::size_t>(deg - lo)] = c;
        } else {
            auto cc = c.coords_over_base();
            for (int b = 0; b < tw.d; ++b)
                v[static_cast<std::size_t>((deg - lo) * tw.d + b)] = cc[static_cast<std::size_t>(b)];
        }
    }
    return v;
}

TruncatedSeries from_coords(const FieldTower& tw, const Row& v, int lo) {
    TruncatedSeries f(tw.K);
    int nblocks = static_cast<int>(v.size()) / tw.d;
    for (int j = 0; j < nblocks; ++j) {
        if (tw.d == 1) {
            if (!v[static_cast<std::size_t>(j)].is_zero())
                f.set_coeff(lo + j, v[static_cast<std::size_t>(j)]);
        } else {
            std::vector<FieldElem> cc(v.begin() + j * tw.d, v.begin() + (j + 1) * tw.d);
            FieldElem c = tw.K->from_base_coords(cc);
            if (!c.is_zero()) f.set_coeff(lo + j, c);
        }
    }
    return f;
}

// in-place reduced row echelon form over k; zero rows dropped; returns pivot columns
std::vector<int> rref(Matrix& rows, int ncols) {
    std::vector<int> pivots;
    std::size_t lead = 0;
    for (int col = 0; col < ncols && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[lead], rows[pivot]);
        FieldElem inv = rows[lead][static_cast<std::size_t>(col)].inverse();
        if (!inv.is_one())
            for (auto& e : rows[lead]) e = e * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead) continue;
            FieldElem c = rows[r][static_cast<std::size_t>(col)];
            if (c.is_zero()) continue;
            for (int j = col; j < ncols; ++j)
                rows[r][static_cast<std::size_t>(j)] =
                    rows[r][static_cast<std::size_t>(j)] - c * rows[lead][static_cast<std::size_t>(j)];
        }
        pivots.push_back(col);
        ++lead;
    }
    rows.resize(pivots.size());
    return pivots;
}

void reduce_against(const Matrix& rows, const std::vector<int>& pivots, Row& v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        FieldElem c = v[static_cast<std::size_t>(pivots[r])];
        if (c.is_zero()) continue;
        for (std::size_t j = static_cast<std::size_t>(pivots[r]); j < v.size(); ++j)
            v[j] = v[j] - c * rows[r][j];
    }
}

bool all_zero(const Row& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

// null space basis of the constraint matrix (rows = constraints over n unknowns)
Matrix kernel(Matrix constraints, int n, const FieldPtr& k) {
    auto pivots = rref(constraints, n);
    Matrix out;
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Row x(static_cast<std::size_t>(n), k->zero());
        x[static_cast<std::size_t>(f)] = k->one();
        for (std::size_t r = 0; r < constraints.size(); ++r)
            x[static_cast<std::size_t>(pivots[r])] = -constraints[r][static_cast<std::size_t>(f)];
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace

Lattice Lattice::zero(const FieldTower& t) {
    Lattice l;
    l.tower_ = t;
    return l;
}

Lattice Lattice::tail(const FieldTower& t, int c) {
    Lattice l;
    l.tower_ = t;
    l.cond_ = c;
    l.vmin_ = c;
    return l;
}

Lattice Lattice::make(const FieldTower& t, std::vector<TruncatedSeries> in_rows, int cond) {
    // rows must be exactly known below cond; everything at >= cond lives in the tail
    for (auto& r : in_rows) {
        if (r.known_to() < cond)
            throw precision_error("lattice row known only below degree " +
                                  std::to_string(r.known_to()) + ", need " +
                                  (cond == kCondInf ? std::string("full precision")
                                                    : std::to_string(cond)));
        if (cond != kCondInf) r = r.truncated(cond);
    }
    std::erase_if(in_rows, [](const TruncatedSeries& r) { return r.no_known_terms(); });

    Lattice l;
    l.tower_ = t;
    l.cond_ = cond;
    if (in_rows.empty()) {
        l.vmin_ = cond == kCondInf ? kValInf : cond;
        return l;
    }

    int lo = cond == kCondInf ? kInf : cond;
    int hi = cond == kCondInf ? -kInf : cond;
    for (const auto& r : in_rows) {
        lo = std::min(lo, r.terms().begin()->first);
        hi = std::max(hi, r.terms().rbegin()->first + 1);
    }
    if (cond != kCondInf) hi = cond;

    Matrix m;
    for (const auto& r : in_rows) m.push_back(to_coords(t, r, lo, hi));
    auto pivots = rref(m, (hi - lo) * t.d);

    // shrink the certified conductor to its least value: drop a top degree as
    // long as its full coefficient block already lies in the row span
    while (l.cond_ != kCondInf && l.cond_ > lo) {
        bool full = true;
        for (int b = 0; b < t.d && full; ++b) {
            auto mono = to_coords(
                t, TruncatedSeries::monomial(t.K, l.cond_ - 1, power_basis_elem(t, b)), lo, hi);
            reduce_against(m, pivots, mono);
            if (!all_zero(mono)) full = false;
        }
        if (!full) break;
        l.cond_ -= 1;
        int ncols = (l.cond_ - lo) * t.d;
        Matrix m2;
        for (auto& row : m) m2.emplace_back(row.begin(), row.begin() + ncols);
        pivots = rref(m2, ncols);
        m = std::move(m2);
        hi = l.cond_;
    }

    for (const auto& row : m) l.rows_.push_back(from_coords(t, row, lo));
    if (!l.rows_.empty())
        l.vmin_ = l.rows_.front().valuation();
    else
        l.vmin_ = l.cond_ == kCondInf ? kValInf : l.cond_;
    return l;
}

std::vector<TruncatedSeries> Lattice::basis_below(int hi) const {
    std::vector<TruncatedSeries> out = rows_;
    if (cond_ != kCondInf) {
        check(hi >= cond_, "basis_below window ends before the conductor");
        for (int j = cond_; j < hi; ++j)
            for (int b = 0; b < tower_.d; ++b)
                out.push_back(TruncatedSeries::monomial(tower_.K, j, power_basis_elem(tower_, b)));
    }
    return out;
}

bool Lattice::operator==(const Lattice& o) const { return cmp(o) == 0; }

int Lattice::cmp(const Lattice& o) const {
    check(tower_.same(o.tower_), "lattice comparison across different ambients");
    if (cond_ != o.cond_) return cond_ < o.cond_ ? -1 : 1;
    if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size() ? -1 : 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        int c = rows_[i].cmp(o.rows_[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool lat_equal(const Lattice& a, const Lattice& b) { return a == b; }

bool member(const TruncatedSeries& f, const Lattice& L) {
    const auto& t = L.tower();
    if (f.is_exact_zero()) return true;
    if (L.is_zero()) {
        if (!f.no_known_terms()) return false;
        throw precision_error("membership in the zero lattice undecidable at this precision");
    }
    const int cond = L.cond();
    int lo = std::min(L.vmin(), f.valuation_lower_bound());
    int hi;
    if (cond == Lattice::kCondInf) {
        hi = lo;
        if (!f.terms().empty()) hi = std::max(hi, f.terms().rbegin()->first + 1);
        for (const auto& r : L.rows())
            hi = std::max(hi, r.terms().rbegin()->first + 1);
    } else {
        hi = cond;
        lo = std::min(lo, cond);
    }
    if (lo >= hi) hi = lo;

    Matrix m;
    for (const auto& r : L.rows()) m.push_back(to_coords(t, r, lo, hi));
    auto pivots = rref(m, (hi - lo) * t.d);
    auto v = to_coords(t, f.truncated(hi), lo, hi);
    reduce_against(m, pivots, v);

    // a nonzero residual at a degree we know decides the question outright
    const int reduce_to = std::min(hi, f.known_to());
    for (std::size_t col = 0; col < v.size(); ++col) {
        if (v[col].is_zero()) continue;
        int deg = lo + static_cast<int>(col) / t.d;
        if (deg < reduce_to) return false;
    }
    if (f.known_to() < hi)
        throw precision_error("membership undecidable: series known below " +
                              std::to_string(f.known_to()) + ", lattice certified to " +
                              std::to_string(hi));
    return all_zero(v);
}

bool lat_subset(const Lattice& inner, const Lattice& outer) {
    if (inner.has_tail() && !(outer.has_tail() && outer.cond() <= inner.cond())) return false;
    for (const auto& r : inner.rows())
        if (!member(r, outer)) return false;
    return true;
}

Lattice lat_sum(const Lattice& a, const Lattice& b) {
    check(a.tower().same(b.tower()), "lattice sum across different ambients");
    std::vector<TruncatedSeries> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Lattice::make(a.tower(), std::move(rows), std::min(a.cond(), b.cond()));
}

Lattice lat_product(const Lattice& a, const Lattice& b) {
    check(a.tower().same(b.tower()), "lattice product across different ambients");
    const auto& t = a.tower();
    if (a.is_zero() || b.is_zero()) return Lattice::zero(t);

    int cond = kInf;
    if (a.has_tail()) cond = std::min(cond, add_capped(a.cond(), b.vmin()));
    if (b.has_tail()) cond = std::min(cond, add_capped(b.cond(), a.vmin()));

    std::vector<TruncatedSeries> ba =
        a.has_tail() ? a.basis_below(std::max(a.cond(), cond - b.vmin())) : a.rows();
    std::vector<TruncatedSeries> bb =
        b.has_tail() ? b.basis_below(std::max(b.cond(), cond - a.vmin())) : b.rows();

    std::vector<TruncatedSeries> prods;
    prods.reserve(ba.size() * bb.size());
    for (const auto& x : ba)
        for (const auto& y : bb) {
            TruncatedSeries p = x * y;
            prods.push_back(cond == kInf ? p : p.truncated(cond));
        }
    return Lattice::make(t, std::move(prods), cond);
}

Lattice lat_scale(const TruncatedSeries& s, const Lattice& x) {
    const auto& t = x.tower();
    if (x.is_zero()) return Lattice::zero(t);
    int v = s.valuation();
    if (v == kInf) throw domain_error("scaling a lattice by the zero series");
    int cond = add_capped(x.cond(), v);
    std::vector<TruncatedSeries> rows;
    for (const auto& r : x.rows()) {
        TruncatedSeries p = r * s;
        if (p.known_to() < cond)
            throw precision_error("lat_scale: scaling series not known far enough");
        rows.push_back(cond == kInf ? p : p.truncated(cond));
    }
    return Lattice::make(t, std::move(rows), cond);
}

Lattice lat_colon(const Lattice& x, const Lattice& y) {
    check(x.tower().same(y.tower()), "colon across different ambients");
    const auto& t = x.tower();
    if (y.is_zero()) throw domain_error("colon by the zero lattice");
    if (x.is_zero()) return Lattice::zero(t);
    if (!x.has_tail())
        throw precision_error("colon needs a certified conductor on the left lattice");

    const int cx = x.cond(), vx = x.vmin(), vy = y.vmin();
    // sandwich: t^{cx - vy} K[[t]] ⊆ X:Y ⊆ t^{lo} K[[t]]
    int lo = vx - vy;
    if (y.has_tail()) lo = std::max(lo, cx - y.cond());
    const int cond = cx - vy;
    check(cond >= lo, "colon window is inconsistent");

    // test elements of Y: its rows plus tail monomials up to degree cx - lo;
    // f * t^j w is automatic for j >= cx - lo since v(f) >= lo
    std::vector<TruncatedSeries> ybasis =
        y.has_tail() ? y.basis_below(std::max(y.cond(), cx - lo)) : y.rows();

    // X as a reduction target on [vx, cx)
    Matrix xm;
    for (const auto& r : x.rows()) xm.push_back(to_coords(t, r, vx, cx));
    auto xpiv = rref(xm, (cx - vx) * t.d);
    auto residual = [&](const TruncatedSeries& f) {
        auto v = to_coords(t, f.truncated(cx), vx, cx);
        reduce_against(xm, xpiv, v);
        return v;
    };

    const int d = t.d;
    const int nunk = (cond - lo) * d;
    std::vector<TruncatedSeries> sol_rows;
    if (nunk > 0) {
        const int res_len = (cx - vx) * d;
        Matrix cols;
        cols.reserve(static_cast<std::size_t>(nunk));
        for (int u = 0; u < nunk; ++u) {
            int j = lo + u / d, b = u % d;
            TruncatedSeries unit = TruncatedSeries::monomial(t.K, j, power_basis_elem(t, b));
            Row col;
            col.reserve(ybasis.size() * static_cast<std::size_t>(res_len));
            for (const auto& yi : ybasis) {
                auto res = residual(unit * yi);
                col.insert(col.end(), res.begin(), res.end());
            }
            cols.push_back(std::move(col));
        }
        const std::size_t ncons = cols[0].size();
        Matrix constraints(ncons, Row(static_cast<std::size_t>(nunk), t.k->zero()));
        for (int u = 0; u < nunk; ++u)
            for (std::size_t r = 0; r < ncons; ++r)
                constraints[r][static_cast<std::size_t>(u)] = cols[static_cast<std::size_t>(u)][r];
        for (const auto& vec : kernel(std::move(constraints), nunk, t.k))
            sol_rows.push_back(from_coords(t, vec, lo));
    }

    Lattice result = Lattice::make(t, std::move(sol_rows), cond);

    // runtime verification of the certified tail and of every solution row
    for (int b = 0; b < d; ++b) {
        TruncatedSeries unit = TruncatedSeries::monomial(t.K, cond, power_basis_elem(t, b));
        for (const auto& yi : ybasis)
            check(member((unit * yi).truncated(cx), x), "colon tail certificate failed");
    }
    for (const auto& f : result.rows())
        for (const auto& yi : ybasis)
            check(member((f * yi).truncated(cx), x), "colon solution verification failed");
    return result;
}

Lattice lat_intersect(const Lattice& a, const Lattice& b) {
    check(a.tower().same(b.tower()), "intersection across different ambients");
    const auto& t = a.tower();
    if (a.is_zero() || b.is_zero()) return Lattice::zero(t);

    int cond = kInf;
    if (a.has_tail() && b.has_tail()) cond = std::max(a.cond(), b.cond());

    int hi = cond;
    if (cond == kInf) {
        hi = -kInf;
        for (const auto& r : a.rows()) hi = std::max(hi, r.terms().rbegin()->first + 1);
        for (const auto& r : b.rows()) hi = std::max(hi, r.terms().rbegin()->first + 1);
        if (a.has_tail()) hi = std::max(hi, a.cond());
        if (b.has_tail()) hi = std::max(hi, b.cond());
    }
    auto ua = a.has_tail() ? a.basis_below(std::max(a.cond(), hi)) : a.rows();
    auto ub = b.has_tail() ? b.basis_below(std::max(b.cond(), hi)) : b.rows();
    int lo = std::min(a.vmin(), b.vmin());

    // solve sum(alpha_i u_i) = sum(beta_j v_j) on the common window
    const int width = (hi - lo) * t.d;
    const std::size_t n = ua.size() + ub.size();
    Matrix constraints(static_cast<std::size_t>(width), Row(n, t.k->zero()));
    for (std::size_t i = 0; i < ua.size(); ++i) {
        auto v = to_coords(t, ua[i].truncated(hi), lo, hi);
        for (int r = 0; r < width; ++r)
            constraints[static_cast<std::size_t>(r)][i] = v[static_cast<std::size_t>(r)];
    }
    for (std::size_t j = 0; j < ub.size(); ++j) {
        auto v = to_coords(t, ub[j].truncated(hi), lo, hi);
        for (int r = 0; r < width; ++r)
            constraints[static_cast<std::size_t>(r)][ua.size() + j] = -v[static_cast<std::size_t>(r)];
    }
    std::vector<TruncatedSeries> rows;
    for (const auto& vec : kernel(std::move(constraints), static_cast<int>(n), t.k)) {
        TruncatedSeries f(t.K);
        for (std::size_t i = 0; i < ua.size(); ++i)
            if (!vec[i].is_zero()) f = f + scale_by_base(t, ua[i], vec[i]);
        rows.push_back(cond == kInf ? f : f.truncated(cond));
    }
    return Lattice::make(t, std::move(rows), cond);
}

std::int64_t colength(const Lattice& x, const Lattice& y) {
    check(x.tower().same(y.tower()), "colength across different ambients");
    if (!lat_subset(y, x)) throw domain_error("colength: second lattice is not contained in the first");
    if (x.has_tail() && !y.has_tail()) throw domain_error("colength: infinite quotient");
    if (!x.has_tail())
        return static_cast<std::int64_t>(x.rows().size()) - static_cast<std::int64_t>(y.rows().size());
    // both tails; align at c = max cond
    int c = std::max(x.cond(), y.cond());
    std::int64_t rx = static_cast<std::int64_t>(x.rows().size()) +
                      static_cast<std::int64_t>(c - x.cond()) * x.tower().d;
    std::int64_t ry = static_cast<std::int64_t>(y.rows().size()) +
                      static_cast<std::int64_t>(c - y.cond()) * x.tower().d;
    check(rx >= ry, "colength: negative dimension");
    return rx - ry;
}

Lattice lattice_from_generators(const FieldTower& t, const std::vector<TruncatedSeries>& gens,
                                Closure mode, int window_hi, int guard,
                                const Lattice* module_ring) {
    if (mode == Closure::span) return Lattice::make(t, gens, Lattice::kCondInf);

    if (mode == Closure::module) {
        check(module_ring != nullptr, "module closure needs the ring lattice");
        const Lattice& R = *module_ring;
        check(R.has_tail() && R.vmin() == 0, "module closure needs a certified ring lattice");
        std::vector<TruncatedSeries> nz;
        for (const auto& g : gens)
            if (!g.is_exact_zero()) nz.push_back(g);
        if (nz.empty()) return Lattice::zero(t);
        int vg = kInf;
        for (const auto& g : nz) vg = std::min(vg, g.valuation());
        const int cond = vg + R.cond();
        std::vector<TruncatedSeries> rows;
        for (const auto& g : nz) {
            if (g.known_to() < cond)
                throw precision_error("module closure: generator not known up to the conductor");
            for (const auto& r : R.rows()) rows.push_back((g * r).truncated(cond));
            rows.push_back(g.truncated(cond));  // g*1; the echelon rows of R need not contain 1
        }
        Lattice m = Lattice::make(t, std::move(rows), cond);
        check(lat_equal(lat_product(m, R), m), "module closure did not stabilize");
        for (const auto& g : nz)
            check(member(g.truncated(m.cond()), m), "module closure lost a generator");
        return m;
    }

    // multiplicative closure: the complete subalgebra generated by 1 and gens.
    // Iterated below window_hi until the rank stabilizes; a conductor c is
    // certified when every degree of [c, hi) carries the full coefficient
    // block and hi >= max(2c, c + guard).  (Then every degree j >= hi is a sum
    // j1 + j2 with j1, j2 in [c, hi) up to multiples of c, so the complete
    // algebra contains elements of every valuation >= c with every leading
    // coefficient, and t^c K[[t]] follows by successive leading-term
    // elimination.)
    const int hi = window_hi;
    std::vector<TruncatedSeries> basis = {TruncatedSeries::one(t.K)};
    for (const auto& g : gens) {
        if (g.known_to() < hi)
            throw precision_error("ring closure: generator known below " +
                                  std::to_string(g.known_to()) + ", window needs " +
                                  std::to_string(hi));
        TruncatedSeries gt = g.truncated(hi);
        if (gt.no_known_terms()) continue;
        if (gt.valuation() < 0) throw domain_error("ring generators must have nonnegative valuation");
        basis.push_back(gt);
    }

    const int lo = 0;
    const int ncols = (hi - lo) * t.d;
    Matrix m;
    for (const auto& r : basis) m.push_back(to_coords(t, r, lo, hi));
    auto pivots = rref(m, ncols);
    std::vector<TruncatedSeries> cur;
    for (const auto& row : m) cur.push_back(from_coords(t, row, lo));

    std::size_t last_rank = 0;
    while (cur.size() != last_rank) {
        last_rank = cur.size();
        std::vector<TruncatedSeries> next = cur;
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i; j < cur.size(); ++j)
                next.push_back((cur[i] * cur[j]).truncated(hi));
        Matrix mm;
        for (const auto& r : next) mm.push_back(to_coords(t, r, lo, hi));
        pivots = rref(mm, ncols);
        m = std::move(mm);
        cur.clear();
        for (const auto& row : m) cur.push_back(from_coords(t, row, lo));
    }

    auto block_full = [&](int j) {
        for (int b = 0; b < t.d; ++b) {
            auto mono =
                to_coords(t, TruncatedSeries::monomial(t.K, j, power_basis_elem(t, b)), lo, hi);
            reduce_against(m, pivots, mono);
            if (!all_zero(mono)) return false;
        }
        return true;
    };
    int c = hi;
    while (c > 0 && block_full(c - 1)) --c;
    if (c == hi) {
        // if the valuations have gcd > 1 the generated ring has infinite
        // codimension and no window will ever certify a conductor
        std::int64_t g = 0;
        for (const auto& r : cur)
            if (r.valuation() > 0) g = std::gcd(g, static_cast<std::int64_t>(r.valuation()));
        if (g > 1)
            throw domain_error("generated ring has infinite codimension in K[[t]] (valuation gcd " +
                               std::to_string(g) + ")");
        throw precision_error("ring closure: no conductor certified below window " +
                              std::to_string(hi));
    }
    if (hi < std::max(2 * c, c + guard))
        throw precision_error("ring closure: window " + std::to_string(hi) +
                              " too small to certify conductor " + std::to_string(c) + " (need " +
                              std::to_string(std::max(2 * c, c + guard)) + ")");

    std::vector<TruncatedSeries> rows;
    for (const auto& r : cur) rows.push_back(r.truncated(c));
    Lattice L = Lattice::make(t, std::move(rows), c);
    check(member(TruncatedSeries::one(t.K).truncated(L.cond()), L), "ring closure lost the identity");
    check(lat_equal(lat_product(L, L), L), "ring closure is not multiplicatively closed");
    return L;
}

Lattice refine_precision(const FieldTower& t, const std::vector<TruncatedSeries>& gens,
                         Closure mode, const Lattice& built, int new_hi, int guard,
                         const Lattice* module_ring) {
    Lattice wide = lattice_from_generators(t, gens, mode, new_hi, guard, module_ring);
    check(lat_equal(built, wide), "refinement changed a certified lattice");
    return wide;
}

}  // namespace latring
