#include "latring/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace latring {

namespace {

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators) {
    if (generators.empty()) throw domain_error("semigroup needs at least one generator");
    std::int64_t g = 0;
    for (auto x : generators) {
        if (x <= 0) throw domain_error("semigroup generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1)
        throw domain_error("gcd of semigroup generators is " + std::to_string(g) +
                           ", not 1 (generators " + join(generators) + ")");
    std::sort(generators.begin(), generators.end());
    // F(S) < min*max for gcd-1 semigroups; the table is rebuilt to a tight
    // bound afterwards.
    std::int64_t bound = generators.front() * generators.back() + generators.front() + 2;
    table_.assign(static_cast<std::size_t>(bound), 0);
    table_[0] = 1;
    for (std::int64_t x = 1; x < bound; ++x)
        for (auto gen : generators)
            if (gen <= x && table_[static_cast<std::size_t>(x - gen)]) {
                table_[static_cast<std::size_t>(x)] = 1;
                break;
            }
    rebuild_from_table();
}

void NumericalSemigroup::rebuild_from_table() {
    frobenius_ = -1;
    gaps_.clear();
    for (std::int64_t x = 0; x < static_cast<std::int64_t>(table_.size()); ++x)
        if (!table_[static_cast<std::size_t>(x)]) {
            gaps_.push_back(x);
            frobenius_ = x;
        }
    std::int64_t m = multiplicity();
    std::int64_t need = frobenius_ + m + 2;
    check(static_cast<std::int64_t>(table_.size()) >= need, "semigroup table too short");
    table_.resize(static_cast<std::size_t>(need));
    // minimal generators live in [m, F + m]
    min_gens_.clear();
    for (std::int64_t s = 1; s <= frobenius_ + m; ++s) {
        if (!contains(s)) continue;
        bool minimal = true;
        for (std::int64_t t = m; minimal && t <= s - m; ++t)
            if (contains(t) && contains(s - t)) minimal = false;
        if (minimal) min_gens_.push_back(s);
    }
    if (min_gens_.empty()) min_gens_ = {1};  // S = N
}

bool NumericalSemigroup::contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return table_[static_cast<std::size_t>(x)] != 0;
}

std::int64_t NumericalSemigroup::multiplicity() const {
    for (std::int64_t x = 1;; ++x)
        if (contains(x)) return x;
}

std::vector<std::int64_t> NumericalSemigroup::apery(std::int64_t m) const {
    if (m == 0) m = multiplicity();
    if (!contains(m) || m <= 0) throw domain_error("Apery set needs a nonzero member of S");
    std::vector<std::int64_t> w(static_cast<std::size_t>(m));
    for (std::int64_t r = 0; r < m; ++r)
        for (std::int64_t x = r;; x += m)
            if (contains(x)) {
                w[static_cast<std::size_t>(r)] = x;
                break;
            }
    return w;
}

std::vector<std::int64_t> NumericalSemigroup::pseudo_frobenius() const {
    if (gaps_.empty()) return {-1};  // S = N, standard convention
    std::vector<std::int64_t> pf;
    for (auto x : gaps_) {
        bool ok = true;
        for (auto g : min_gens_)
            if (!contains(x + g)) {
                ok = false;
                break;
            }
        if (ok) pf.push_back(x);
    }
    return pf;
}

std::int64_t NumericalSemigroup::type() const {
    return static_cast<std::int64_t>(pseudo_frobenius().size());
}

bool NumericalSemigroup::symmetric() const {
    for (auto x : gaps_)
        if (!contains(frobenius_ - x)) return false;
    return true;
}

bool NumericalSemigroup::almost_symmetric() const {
    auto pf = pseudo_frobenius();
    for (auto x : gaps_) {
        if (contains(frobenius_ - x)) continue;
        if (std::find(pf.begin(), pf.end(), x) == pf.end()) return false;
    }
    return true;
}

std::vector<std::int64_t> NumericalSemigroup::elements_below(std::int64_t bound) const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < bound; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

std::vector<NumericalSemigroup> NumericalSemigroup::oversemigroups() const {
    if (genus() > 20) throw cap_error("oversemigroup search capped at genus 20");
    std::vector<NumericalSemigroup> out;
    std::size_t g = gaps_.size();
    for (std::uint64_t mask = 0; mask < (1ull << g); ++mask) {
        auto member = [&](std::int64_t x) {
            if (contains(x)) return true;
            for (std::size_t i = 0; i < g; ++i)
                if ((mask >> i & 1) && gaps_[i] == x) return true;
            return false;
        };
        bool closed = true;
        for (std::size_t i = 0; closed && i < g; ++i) {
            if (!(mask >> i & 1)) continue;
            std::int64_t a = gaps_[i];
            // a + (added gaps) and a + (nonzero members of S) must stay inside
            for (std::size_t j = i; closed && j < g; ++j)
                if ((mask >> j & 1) && !member(a + gaps_[j])) closed = false;
            for (std::int64_t s = 1; closed && s <= frobenius_; ++s)
                if (contains(s) && !member(a + s)) closed = false;
        }
        if (!closed) continue;
        NumericalSemigroup T;
        T.table_.assign(table_.size(), 0);
        for (std::int64_t x = 0; x < static_cast<std::int64_t>(table_.size()); ++x)
            if (member(x)) T.table_[static_cast<std::size_t>(x)] = 1;
        T.rebuild_from_table();
        out.push_back(std::move(T));
    }
    std::sort(out.begin(), out.end(), [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
        if (a.genus() != b.genus()) return a.genus() < b.genus();
        return a.gaps() < b.gaps();
    });
    return out;
}

std::vector<NumericalSemigroup> NumericalSemigroup::enumerate(std::int64_t max_genus,
                                                              std::int64_t max_multiplicity) {
    if (max_genus > 20) throw cap_error("semigroup enumeration capped at genus 20");
    std::vector<NumericalSemigroup> out;
    NumericalSemigroup n0({1});
    // table large enough for the deepest descendant: F <= 2*genus - 1
    n0.table_.assign(static_cast<std::size_t>(2 * max_genus + 2 * (max_genus + 2) + 4), 1);
    n0.rebuild_from_table();

    // Children remove one minimal generator > F(S); every semigroup appears
    // exactly once in this tree.
    std::vector<NumericalSemigroup> stack = {n0};
    while (!stack.empty()) {
        NumericalSemigroup s = std::move(stack.back());
        stack.pop_back();
        if (max_multiplicity == 0 || s.multiplicity() <= max_multiplicity) out.push_back(s);
        if (s.genus() >= max_genus) continue;
        for (auto g : s.min_gens_) {
            if (g <= s.frobenius()) continue;
            NumericalSemigroup child;
            child.table_ = s.table_;
            child.table_[static_cast<std::size_t>(g)] = 0;
            child.rebuild_from_table();
            stack.push_back(std::move(child));
        }
    }
    std::sort(out.begin(), out.end(), [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
        if (a.genus() != b.genus()) return a.genus() < b.genus();
        return a.gaps() < b.gaps();
    });
    return out;
}

SemigroupIdeal::SemigroupIdeal(const NumericalSemigroup& S, std::vector<std::int64_t> generators)
    : S_(&S) {
    if (generators.empty()) throw domain_error("semigroup ideal needs generators");
    min_ = *std::min_element(generators.begin(), generators.end());
    tail_from_ = min_ + S.conductor();
    for (std::int64_t x = min_; x < tail_from_; ++x)
        for (auto gen : generators)
            if (x >= gen && S.contains(x - gen)) {
                head_.push_back(x);
                break;
            }
}

SemigroupIdeal::SemigroupIdeal(const NumericalSemigroup& S, std::int64_t mn,
                               std::vector<std::int64_t> head)
    : S_(&S), min_(mn), tail_from_(mn + S.conductor()), head_(std::move(head)) {}

bool SemigroupIdeal::contains(std::int64_t x) const {
    if (x >= tail_from_) return true;
    return std::binary_search(head_.begin(), head_.end(), x);
}

bool SemigroupIdeal::operator==(const SemigroupIdeal& o) const {
    return min_ == o.min_ && head_ == o.head_;
}

std::int64_t SemigroupIdeal::colength(const SemigroupIdeal& F) const {
    std::int64_t hi = std::max(tail_from_, F.tail_from_);
    std::int64_t count = 0;
    for (std::int64_t x = std::min(min_, F.min_); x < hi; ++x) {
        bool e = contains(x), f = F.contains(x);
        if (f && !e) throw domain_error("colength: second ideal is not contained in the first");
        if (e && !f) ++count;
    }
    return count;
}

namespace {
SemigroupIdeal from_member_set(const NumericalSemigroup& S, std::int64_t lo, std::int64_t hi,
                               const std::vector<char>& member) {
    std::int64_t mn = 0;
    bool found = false;
    for (std::int64_t x = lo; x < hi && !found; ++x)
        if (member[static_cast<std::size_t>(x - lo)]) {
            mn = x;
            found = true;
        }
    check(found, "semigroup ideal is empty");
    std::vector<std::int64_t> head;
    for (std::int64_t x = mn; x < mn + S.conductor(); ++x) {
        check(x - lo < static_cast<std::int64_t>(member.size()), "ideal window too small");
        if (member[static_cast<std::size_t>(x - lo)]) head.push_back(x);
    }
    std::vector<std::int64_t> gens = head;  // head together with the tail start generates
    gens.push_back(mn + S.conductor());
    return SemigroupIdeal(S, gens);
}
}  // namespace

SemigroupIdeal ideal_sum(const SemigroupIdeal& E, const SemigroupIdeal& F) {
    const auto& S = *E.S_;
    std::int64_t lo = std::min(E.min_, F.min_);
    std::int64_t hi = std::max(E.tail_from_, F.tail_from_) + S.conductor() + 1;
    std::vector<char> member(static_cast<std::size_t>(hi - lo), 0);
    for (std::int64_t x = lo; x < hi; ++x)
        if (E.contains(x) || F.contains(x)) member[static_cast<std::size_t>(x - lo)] = 1;
    return from_member_set(S, lo, hi, member);
}

SemigroupIdeal ideal_product(const SemigroupIdeal& E, const SemigroupIdeal& F) {
    const auto& S = *E.S_;
    std::int64_t lo = E.min_ + F.min_;
    std::int64_t hi = lo + 2 * S.conductor() + 2;
    std::vector<char> member(static_cast<std::size_t>(hi - lo), 0);
    for (std::int64_t x = lo; x < hi; ++x) {
        for (std::int64_t e = E.min_; e <= x - F.min_; ++e)
            if (E.contains(e) && F.contains(x - e)) {
                member[static_cast<std::size_t>(x - lo)] = 1;
                break;
            }
    }
    return from_member_set(S, lo, hi, member);
}

SemigroupIdeal ideal_colon(const SemigroupIdeal& E, const SemigroupIdeal& F) {
    const auto& S = *E.S_;
    std::int64_t lo = E.min_ - F.min_;
    // everything >= E.min + cond - F.min qualifies; window sized so the
    // canonical head of the result fits even when its min sits above lo
    std::int64_t hi = lo + 2 * S.conductor() + 2;
    std::vector<char> member(static_cast<std::size_t>(hi - lo), 0);
    for (std::int64_t z = lo; z < hi; ++z) {
        bool ok = true;
        for (auto f : F.head_)
            if (!E.contains(z + f)) {
                ok = false;
                break;
            }
        // tail of F: z + f >= lo + tail_from(F) >= E.min + cond(S), inside E's tail
        if (ok) member[static_cast<std::size_t>(z - lo)] = 1;
    }
    return from_member_set(S, lo, hi, member);
}

}  // namespace latring
