#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"

namespace mbp {

/// Dynamic bitset sized at construction; used for poset order relations.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ull; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset&) const = default;

    template <class F>
    void for_each(F f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi)
            for (std::uint64_t x = w_[wi]; x; x &= x - 1)
                f(static_cast<int>(wi * 64 + std::countr_zero(x)));
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Finite graded poset with a designated bottom and top. The order is stored
/// as one strictly-below bitset per element; covers are derived from ranks.
class GradedPoset {
public:
    GradedPoset() = default;

    /// Builds from ranks and a strict-order predicate. The predicate must be a
    /// partial order consistent with the ranks; bottom and top must be unique.
    static GradedPoset from_less(std::vector<int> ranks,
                                 const std::function<bool(int, int)>& less) {
        int m = static_cast<int>(ranks.size());
        std::vector<Bitset> below(m, Bitset(m));
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i)
                if (i != j && less(i, j)) below[j].set(i);
        return from_below(std::move(ranks), std::move(below));
    }

    static GradedPoset from_below(std::vector<int> ranks, std::vector<Bitset> below) {
        GradedPoset p;
        p.rank_ = std::move(ranks);
        p.below_ = std::move(below);
        int m = p.size();
        if (m == 0) fail(ErrorKind::BadParameters, "empty poset");
        p.above_.assign(m, Bitset(m));
        for (int j = 0; j < m; ++j)
            p.below_[j].for_each([&](int i) { p.above_[i].set(j); });
        int nbot = 0, ntop = 0;
        for (int i = 0; i < m; ++i) {
            if (!p.below_[i].any()) {
                p.bottom_ = i;
                nbot++;
            }
            if (!p.above_[i].any()) {
                p.top_ = i;
                ntop++;
            }
        }
        if (nbot != 1 || ntop != 1)
            fail(ErrorKind::NotGraded, "poset must have a unique bottom and top");
        if (p.rank_[p.bottom_] != 0) fail(ErrorKind::NotGraded, "bottom must have rank 0");
        return p;
    }

    int size() const { return static_cast<int>(rank_.size()); }
    int rank(int i) const { return rank_[i]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int top_rank() const { return rank_[top_]; }

    bool less(int a, int b) const { return below_[b].test(a); }
    bool leq(int a, int b) const { return a == b || less(a, b); }
    const Bitset& strictly_below(int i) const { return below_[i]; }
    const Bitset& strictly_above(int i) const { return above_[i]; }

    std::vector<int> elements_of_rank(int r) const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (rank_[i] == r) out.push_back(i);
        return out;
    }

    /// Covers of a graded poset: pairs (x, y) with x < y and rank difference 1.
    std::vector<std::pair<int, int>> cover_relations() const {
        std::vector<std::pair<int, int>> out;
        for (int y = 0; y < size(); ++y)
            below_[y].for_each([&](int x) {
                if (rank_[y] == rank_[x] + 1) out.emplace_back(x, y);
            });
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Checks the grading: ranks increase by exactly 1 along covers (pairs
    /// with nothing strictly between), and bottom/top bound every element.
    bool is_graded() const {
        for (int y = 0; y < size(); ++y) {
            bool bad = false;
            below_[y].for_each([&](int x) {
                Bitset between = above_[x] & below_[y];
                if (!between.any() && rank_[y] != rank_[x] + 1) bad = true;
            });
            if (bad) return false;
            if (y != bottom_ && !below_[y].test(bottom_)) return false;
            if (y != top_ && !above_[y].test(top_)) return false;
        }
        return true;
    }

    /// The interval [x, y] as a poset in its own right, ranks shifted to 0.
    GradedPoset interval(int x, int y) const {
        if (!leq(x, y)) fail(ErrorKind::NotComparable, "interval endpoints are not comparable");
        std::vector<int> ids;
        for (int z = 0; z < size(); ++z)
            if (leq(x, z) && leq(z, y)) ids.push_back(z);
        std::vector<int> pos(size(), -1);
        for (size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
        std::vector<int> ranks(ids.size());
        std::vector<Bitset> below(ids.size(), Bitset(static_cast<int>(ids.size())));
        for (size_t i = 0; i < ids.size(); ++i) {
            ranks[i] = rank_[ids[i]] - rank_[x];
            below_[ids[i]].for_each([&](int z) {
                if (pos[z] >= 0) below[i].set(pos[z]);
            });
        }
        return from_below(std::move(ranks), std::move(below));
    }

    GradedPoset dual() const {
        int maxr = top_rank();
        std::vector<int> ranks(size());
        for (int i = 0; i < size(); ++i) ranks[i] = maxr - rank_[i];
        return from_below(std::move(ranks), above_);
    }

    /// Möbius function values mu(x, z) for all z >= x, computed by the
    /// defining recursion; entries for z not above x are 0.
    std::vector<long long> mobius_from(int x) const {
        std::vector<long long> mu(size(), 0);
        mu[x] = 1;
        std::vector<int> ups;
        above_[x].for_each([&](int z) { ups.push_back(z); });
        std::sort(ups.begin(), ups.end(), [&](int a, int b) { return rank_[a] < rank_[b]; });
        for (int y : ups) {
            long long s = mu[x];
            (above_[x] & below_[y]).for_each([&](int z) { s += mu[z]; });
            mu[y] = -s;
        }
        return mu;
    }

    /// Eulerian: mu(x, y) = (-1)^(rank(y) - rank(x)) on every interval.
    bool is_eulerian() const {
        for (int x = 0; x < size(); ++x) {
            auto mu = mobius_from(x);
            bool ok = true;
            above_[x].for_each([&](int y) {
                long long want = ((rank_[y] - rank_[x]) % 2 == 0) ? 1 : -1;
                if (mu[y] != want) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    }

private:
    std::vector<int> rank_;
    std::vector<Bitset> below_, above_;
    int bottom_ = -1, top_ = -1;
};

inline bool is_eulerian(const GradedPoset& p) { return p.is_eulerian(); }

/// Boolean lattice on m atoms: all subsets of {1..m} ordered by inclusion.
/// This is the face lattice of a simplex with m vertices.
inline GradedPoset boolean_lattice(int m) {
    if (m < 0 || m > 20) fail(ErrorKind::BadParameters, "boolean lattice size out of range");
    int sz = 1 << m;
    std::vector<int> ranks(sz);
    std::vector<Bitset> below(sz, Bitset(sz));
    for (int s = 0; s < sz; ++s) {
        ranks[s] = std::popcount(static_cast<unsigned>(s));
        for (int t = 0; t < sz; ++t)
            if (t != s && (t & ~s) == 0) below[s].set(t);
    }
    return GradedPoset::from_below(std::move(ranks), std::move(below));
}

/// Plain Cartesian product of two graded posets: pairs ordered componentwise,
/// ranks added. The product of a face lattice with the 2-chain (boolean
/// lattice on one atom) is the face lattice of the pyramid.
inline GradedPoset direct_product(const GradedPoset& p, const GradedPoset& q) {
    int mp = p.size(), mq = q.size();
    std::vector<int> ranks(mp * mq);
    for (int x = 0; x < mp; ++x)
        for (int y = 0; y < mq; ++y) ranks[x * mq + y] = p.rank(x) + q.rank(y);
    std::vector<Bitset> below(mp * mq, Bitset(mp * mq));
    for (int x = 0; x < mp; ++x)
        for (int y = 0; y < mq; ++y) {
            int id = x * mq + y;
            for (int x2 = 0; x2 < mp; ++x2)
                for (int y2 = 0; y2 < mq; ++y2) {
                    int id2 = x2 * mq + y2;
                    if (id2 != id && p.leq(x2, x) && q.leq(y2, y)) below[id].set(id2);
                }
        }
    return GradedPoset::from_below(std::move(ranks), std::move(below));
}

/// Small poset carrying labels; not graded. Used for posets on connected
/// components (at most 31 elements), with the strict order held as bitmasks.
struct LabeledPoset {
    std::vector<ElementSet> labels;
    std::vector<std::uint32_t> below;  // below[i] = indices strictly under i

    int size() const { return static_cast<int>(labels.size()); }
    bool less(int a, int b) const { return (below[b] >> a) & 1u; }
    bool leq(int a, int b) const { return a == b || less(a, b); }

    std::vector<std::pair<int, int>> cover_relations() const {
        std::vector<std::pair<int, int>> out;
        for (int y = 0; y < size(); ++y)
            for (std::uint32_t m = below[y]; m; m &= m - 1) {
                int x = std::countr_zero(m);
                bool between = false;
                for (std::uint32_t m2 = below[y]; m2; m2 &= m2 - 1) {
                    int z = std::countr_zero(m2);
                    if (z != x && less(x, z)) between = true;
                }
                if (!between) out.emplace_back(x, y);
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// All order ideals, each as a bitmask over poset indices.
    std::vector<std::uint32_t> order_ideals() const {
        std::vector<std::uint32_t> out;
        int m = size();
        for (std::uint32_t u = 0; u < (1u << m); ++u) {
            bool ideal = true;
            for (std::uint32_t t = u; t; t &= t - 1)
                if ((below[std::countr_zero(t)] & ~u) != 0) ideal = false;
            if (ideal) out.push_back(u);
        }
        return out;
    }

    bool operator==(const LabeledPoset&) const = default;
};

}  // namespace mbp
