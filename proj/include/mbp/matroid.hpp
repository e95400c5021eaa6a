#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "composition.hpp"
#include "config.hpp"
#include "element_set.hpp"
#include "errors.hpp"

namespace mbp {

namespace detail {

/// Looks for a violation of the basis exchange axiom in a family of equal-size
/// sets. Returns (B1, B2, x) with x in B1\B2 admitting no exchange, or nullopt.
inline std::optional<std::array<ElementSet, 3>> exchange_violation(const std::vector<ElementSet>& bases) {
    std::unordered_set<std::uint32_t> in_family;
    in_family.reserve(bases.size() * 2);
    for (ElementSet b : bases) in_family.insert(b.mask());
    for (ElementSet b1 : bases) {
        for (ElementSet b2 : bases) {
            std::uint32_t out = (b1 - b2).mask();
            for (std::uint32_t xm = out; xm; xm &= xm - 1) {
                std::uint32_t xbit = xm & ~(xm - 1);
                bool ok = false;
                for (std::uint32_t ym = (b2 - b1).mask(); ym; ym &= ym - 1) {
                    std::uint32_t ybit = ym & ~(ym - 1);
                    if (in_family.count((b1.mask() & ~xbit) | ybit)) {
                        ok = true;
                        break;
                    }
                }
                if (!ok)
                    return std::array<ElementSet, 3>{b1, b2, ElementSet(xbit)};
            }
        }
    }
    return std::nullopt;
}

inline std::vector<ElementSet> sorted_unique(std::vector<ElementSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

}  // namespace detail

/// Matroid given by its explicit basis family. The ground set may be any
/// subset of {1,...,31}; minors keep the original element labels.
class Matroid {
public:
    static Matroid on_ground(ElementSet ground, std::vector<ElementSet> bases) {
        bases = detail::sorted_unique(std::move(bases));
        validate(ground, bases);
        return Matroid(ground, std::move(bases));
    }

    static Matroid from_bases(int n, std::vector<ElementSet> bases) {
        if (n < 1) fail(ErrorKind::BadParameters, "ground set size must be >= 1");
        require_within_cap(n, "matroid");
        return on_ground(ElementSet::full(n), std::move(bases));
    }

    /// For families whose matroid-ness is already guaranteed (minors of a
    /// valid matroid, direct sums, faces of a base polytope).
    static Matroid unchecked(ElementSet ground, std::vector<ElementSet> bases) {
        return Matroid(ground, detail::sorted_unique(std::move(bases)));
    }

    ElementSet ground() const { return ground_; }
    int ground_size() const { return ground_.size(); }
    const std::vector<ElementSet>& bases() const { return bases_; }
    int rank() const { return bases_.front().size(); }

    bool is_basis(ElementSet b) const {
        return std::binary_search(bases_.begin(), bases_.end(), b);
    }

    /// r(S) = max over bases B of |B ∩ S|.
    int rank(ElementSet s) const {
        int best = 0;
        for (ElementSet b : bases_) best = std::max(best, (b & s).size());
        return best;
    }

    bool is_independent(ElementSet s) const { return rank(s) == s.size(); }

    /// Restriction M|_S: ground set S, bases the maximal independent subsets of S.
    Matroid restriction(ElementSet s) const {
        s = s & ground_;
        int rs = rank(s);
        std::vector<ElementSet> fam;
        for (ElementSet b : bases_)
            if ((b & s).size() == rs) fam.push_back(b & s);
        return Matroid(s, detail::sorted_unique(std::move(fam)));
    }

    /// Contraction M/S on ground set minus S, labels preserved.
    Matroid contraction(ElementSet s) const {
        s = s & ground_;
        int rs = rank(s);
        std::vector<ElementSet> fam;
        for (ElementSet b : bases_)
            if ((b & s).size() == rs) fam.push_back(b - s);
        fam = detail::sorted_unique(std::move(fam));
        if (fam.empty()) fail(ErrorKind::ContractNonexistent, "contraction produced an empty family");
        return Matroid(ground_ - s, std::move(fam));
    }

    Matroid deletion(ElementSet s) const { return restriction(ground_ - s); }

    /// Connected components: classes of the ground set under the transitive
    /// closure of single-element basis exchanges. Loops and coloops come out
    /// as singleton classes. Sorted by smallest element.
    std::vector<ElementSet> components() const {
        int parent[32];
        for (int i = 0; i < 32; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (size_t i = 0; i < bases_.size(); ++i) {
            for (size_t j = i + 1; j < bases_.size(); ++j) {
                ElementSet d = bases_[i] ^ bases_[j];
                if (d.size() == 2) {
                    int a = (bases_[i] - bases_[j]).min_element();
                    int b = (bases_[j] - bases_[i]).min_element();
                    parent[find(a - 1)] = find(b - 1);
                }
            }
        }
        std::vector<ElementSet> comps;
        for (std::uint32_t m = ground_.mask(); m; m &= m - 1) {
            int e = std::countr_zero(m);
            if (find(e) == e) {
                ElementSet c;
                for (std::uint32_t m2 = ground_.mask(); m2; m2 &= m2 - 1) {
                    int f = std::countr_zero(m2);
                    if (find(f) == e) c = c | ElementSet::single(f + 1);
                }
                comps.push_back(c);
            }
        }
        std::sort(comps.begin(), comps.end(),
                  [](ElementSet a, ElementSet b) { return a.min_element() < b.min_element(); });
        return comps;
    }

    bool is_connected() const { return components().size() == 1; }

    bool operator==(const Matroid& o) const { return ground_ == o.ground_ && bases_ == o.bases_; }

private:
    Matroid(ElementSet ground, std::vector<ElementSet> bases)
        : ground_(ground), bases_(std::move(bases)) {}

    static void validate(ElementSet ground, const std::vector<ElementSet>& bases) {
        if (bases.empty()) fail(ErrorKind::EmptyFamily, "a matroid needs at least one basis");
        int r = bases.front().size();
        for (ElementSet b : bases) {
            if (!b.subset_of(ground))
                fail(ErrorKind::BadParameters, "basis {" + b.to_string() + "} not inside the ground set");
            if (b.size() != r)
                fail(ErrorKind::UnequalSizes, "bases {" + bases.front().to_string() + "} and {" +
                                                  b.to_string() + "} have different sizes");
        }
        if (auto w = detail::exchange_violation(bases))
            fail(ErrorKind::ExchangeAxiomViolated,
                 "no exchange for " + (*w)[2].to_string() + " from {" + (*w)[0].to_string() +
                     "} toward {" + (*w)[1].to_string() + "}");
    }

    ElementSet ground_;
    std::vector<ElementSet> bases_;
};

/// True iff the family is a nonempty collection of equal-size subsets of the
/// ground set satisfying the basis exchange axiom.
inline bool is_basis_family(ElementSet ground, const std::vector<ElementSet>& sets) {
    if (sets.empty()) return false;
    auto fam = detail::sorted_unique(sets);
    int r = fam.front().size();
    for (ElementSet b : fam)
        if (b.size() != r || !b.subset_of(ground)) return false;
    return !detail::exchange_violation(fam).has_value();
}

inline bool is_basis_family(int n, const std::vector<ElementSet>& sets) {
    return is_basis_family(ElementSet::full(n), sets);
}

/// Direct sum; the two ground sets must be disjoint.
inline Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
    if (m1.ground().intersects(m2.ground()))
        fail(ErrorKind::LabelCollision,
             "ground sets overlap on {" + (m1.ground() & m2.ground()).to_string() + "}");
    std::vector<ElementSet> fam;
    fam.reserve(m1.bases().size() * m2.bases().size());
    for (ElementSet a : m1.bases())
        for (ElementSet b : m2.bases()) fam.push_back(a | b);
    return Matroid::unchecked(m1.ground() | m2.ground(), std::move(fam));
}

/// Uniform matroid of rank r on an arbitrary ground set, labels kept.
inline Matroid uniform_on(int r, ElementSet ground) {
    int n = ground.size();
    if (r < 0 || r > n) fail(ErrorKind::BadParameters, "uniform matroid needs 0 <= r <= n");
    require_within_cap(n, "uniform");
    std::vector<int> elems = ground.elements();
    std::vector<ElementSet> fam;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        ElementSet b;
        for (int i : idx) b = b | ElementSet::single(elems[i]);
        fam.push_back(b);
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return Matroid::unchecked(ground, std::move(fam));
}

inline Matroid uniform(int r, int n) {
    if (n < 1) fail(ErrorKind::BadParameters, "uniform matroid needs n >= 1");
    return uniform_on(r, ElementSet::full(n));
}

/// Parallelism classes of a rank-2 matroid built from a strict composition:
/// consecutive blocks of sizes alpha_1, ..., alpha_k.
inline std::vector<ElementSet> composition_blocks(const Composition& alpha) {
    std::vector<ElementSet> blocks;
    int start = 1;
    for (int a : alpha.parts) {
        ElementSet blk;
        for (int e = start; e < start + a; ++e) blk = blk | ElementSet::single(e);
        blocks.push_back(blk);
        start += a;
    }
    return blocks;
}

/// Loopless rank-2 matroid whose parallelism classes are consecutive blocks of
/// sizes alpha_1,...,alpha_k; bases are the pairs meeting two distinct blocks.
inline Matroid rank2_from_composition(const Composition& alpha) {
    if (!alpha.is_strict() || alpha.length() < 2)
        fail(ErrorKind::BadParameters, "need a strict composition with at least 2 parts");
    int n = alpha.sum();
    require_within_cap(n, "rank2_from_composition");
    auto blocks = composition_blocks(alpha);
    std::vector<ElementSet> fam;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j)
            for (int x : blocks[i].elements())
                for (int y : blocks[j].elements())
                    fam.push_back(ElementSet::single(x) | ElementSet::single(y));
    return Matroid::unchecked(ElementSet::full(n), std::move(fam));
}

/// Parallelism classes of a loopless matroid of rank <= 2 (elements e, f are
/// parallel iff r({e,f}) = 1).
inline std::vector<ElementSet> parallelism_classes(const Matroid& m) {
    if (m.rank() > 2) fail(ErrorKind::BadParameters, "parallelism classes need rank <= 2");
    std::vector<int> elems = m.ground().elements();
    for (int e : elems)
        if (m.rank(ElementSet::single(e)) == 0)
            fail(ErrorKind::BadParameters, "matroid has a loop at " + std::to_string(e));
    std::vector<ElementSet> classes;
    ElementSet seen;
    for (int e : elems) {
        if (seen.contains(e)) continue;
        ElementSet cls = ElementSet::single(e);
        for (int f : elems)
            if (f != e && m.rank(ElementSet::single(e) | ElementSet::single(f)) == 1)
                cls = cls | ElementSet::single(f);
        classes.push_back(cls);
        seen = seen | cls;
    }
    return classes;
}

}  // namespace mbp
