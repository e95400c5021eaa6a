#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "matroid.hpp"
#include "poset.hpp"

namespace mbp {

/// Chain of subsets ∅ = S_0 ⊂ S_1 ⊂ ... ⊂ S_{k+1} = ground, all inclusions proper.
struct Flag {
    std::vector<ElementSet> sets;

    int k() const { return static_cast<int>(sets.size()) - 2; }

    /// Builds ∅ ⊂ middles... ⊂ ground and validates strictness.
    static Flag chain(ElementSet ground, std::vector<ElementSet> middles) {
        Flag f;
        f.sets.push_back(ElementSet());
        for (ElementSet s : middles) f.sets.push_back(s);
        f.sets.push_back(ground);
        for (size_t i = 1; i < f.sets.size(); ++i) {
            if (!f.sets[i - 1].subset_of(f.sets[i]) || f.sets[i - 1] == f.sets[i])
                fail(ErrorKind::BadParameters, "flag sets must strictly increase");
            if (!f.sets[i].subset_of(ground))
                fail(ErrorKind::BadParameters, "flag set outside the ground set");
        }
        return f;
    }

    bool operator==(const Flag&) const = default;
};

/// Level-set flag of a weight vector: S_i collects the i smallest weight levels.
inline Flag level_set_flag(const std::vector<long long>& w, int n) {
    if (static_cast<int>(w.size()) != n) fail(ErrorKind::BadParameters, "weight vector length");
    std::vector<long long> levels(w);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<ElementSet> mids;
    for (size_t t = 0; t + 1 < levels.size(); ++t) {
        ElementSet s;
        for (int e = 1; e <= n; ++e)
            if (w[e - 1] <= levels[t]) s = s | ElementSet::single(e);
        mids.push_back(s);
    }
    return Flag::chain(ElementSet::full(n), std::move(mids));
}

/// dim Q(M) = n − c(M).
inline int polytope_dimension(const Matroid& m) {
    return m.ground_size() - static_cast<int>(m.components().size());
}

/// M_F = ⊕ (M|_{S_i}) / S_{i−1}, a matroid on the same ground set with the
/// original labels.
inline Matroid matroid_of_flag(const Matroid& m, const Flag& f) {
    if (f.sets.front() != ElementSet() || f.sets.back() != m.ground())
        fail(ErrorKind::BadParameters, "flag does not span the ground set");
    std::optional<Matroid> acc;
    for (size_t i = 1; i < f.sets.size(); ++i) {
        Matroid factor = m.restriction(f.sets[i]).contraction(f.sets[i - 1]);
        acc = acc ? direct_sum(*acc, factor) : factor;
    }
    return *acc;
}

inline bool is_factor_connected(const Matroid& m, const Flag& f) {
    if (f.sets.front() != ElementSet() || f.sets.back() != m.ground())
        fail(ErrorKind::BadParameters, "flag does not span the ground set");
    for (size_t i = 1; i < f.sets.size(); ++i)
        if (!m.restriction(f.sets[i]).contraction(f.sets[i - 1]).is_connected()) return false;
    return true;
}

/// The adjacency move at position j: when (M|_{S_{j+1}})/S_{j−1} has two
/// connected components they are S_j\S_{j−1} and S_{j+1}\S_j, and swapping
/// them gives an equivalent flag. Returns nothing when that minor is connected.
inline std::optional<Flag> adjacent_flag(const Matroid& m, const Flag& f, int j) {
    if (!is_factor_connected(m, f)) fail(ErrorKind::NotFactorConnected, "flag is not factor-connected");
    if (j < 1 || j > f.k()) fail(ErrorKind::IndexOutOfRange, "adjacency position out of range");
    Matroid mid = m.restriction(f.sets[j + 1]).contraction(f.sets[j - 1]);
    auto comps = mid.components();
    if (comps.size() == 1) return std::nullopt;
    if (comps.size() != 2)
        fail(ErrorKind::InvariantViolation, "middle minor of a factor-connected flag has >2 components");
    Flag g = f;
    g.sets[j] = f.sets[j - 1] | (f.sets[j + 1] - f.sets[j]);
    return g;
}

/// Equivalence of factor-connected flags: breadth-first search over adjacency
/// moves. Agrees with equality of the flag matroids (checked in debug builds).
inline bool flags_equivalent(const Matroid& m, const Flag& f1, const Flag& f2) {
    if (!is_factor_connected(m, f1) || !is_factor_connected(m, f2))
        fail(ErrorKind::NotFactorConnected, "flags must be factor-connected");
    bool found = false;
    if (f1.sets.size() == f2.sets.size()) {
        auto key = [](const Flag& f) {
            std::vector<std::uint32_t> k;
            for (size_t i = 1; i + 1 < f.sets.size(); ++i) k.push_back(f.sets[i].mask());
            return k;
        };
        std::set<std::vector<std::uint32_t>> seen{key(f1)};
        std::vector<Flag> queue{f1};
        const auto target = key(f2);
        if (key(f1) == target) found = true;
        while (!queue.empty() && !found) {
            Flag cur = queue.back();
            queue.pop_back();
            for (int j = 1; j <= cur.k() && !found; ++j) {
                auto next = adjacent_flag(m, cur, j);
                if (!next) continue;
                auto nk = key(*next);
                if (nk == target) found = true;
                else if (seen.insert(nk).second) queue.push_back(*next);
            }
        }
    }
#ifndef NDEBUG
    bool same_matroid = matroid_of_flag(m, f1) == matroid_of_flag(m, f2);
    if (found != same_matroid)
        fail(ErrorKind::InvariantViolation, "flag equivalence disagrees with flag-matroid equality");
#endif
    return found;
}

/// Every factor-connected flag of M, by depth-first extension.
inline std::vector<Flag> all_factor_connected_flags(const Matroid& m) {
    require_within_cap(m.ground_size(), "all_factor_connected_flags");
    std::vector<Flag> out;
    std::vector<ElementSet> prefix{ElementSet()};
    auto rec = [&](auto&& self) -> void {
        ElementSet prev = prefix.back();
        std::uint32_t rest = (m.ground() - prev).mask();
        // all nonempty subsets of the remaining elements
        for (std::uint32_t s = rest; s != 0; s = (s - 1) & rest) {
            ElementSet t = prev | ElementSet(s);
            if (m.restriction(t).contraction(prev).is_connected()) {
                prefix.push_back(t);
                if (t == m.ground()) {
                    Flag f;
                    f.sets = prefix;
                    out.push_back(f);
                } else {
                    self(self);
                }
                prefix.pop_back();
            }
        }
    };
    rec(rec);
    return out;
}

/// Face of a matroid base polytope: a subfamily of bases that is itself the
/// basis family of a matroid on the same ground set.
struct Face {
    std::vector<ElementSet> vertex_bases;  // sorted
    std::optional<Matroid> matroid;        // absent only for the empty face
    int dim = -1;
};

namespace detail {

inline Face make_face(const Matroid& m, std::vector<ElementSet> family) {
    Face f;
    f.vertex_bases = sorted_unique(std::move(family));
    f.matroid = Matroid::unchecked(m.ground(), f.vertex_bases);
    f.dim = m.ground_size() - static_cast<int>(f.matroid->components().size());
    return f;
}

inline void require_face(const Matroid& m, const Face& sigma) {
    if (sigma.vertex_bases.empty()) fail(ErrorKind::NotAFace, "empty vertex family");
    for (ElementSet b : sigma.vertex_bases)
        if (!m.is_basis(b)) fail(ErrorKind::NotAFace, "{" + b.to_string() + "} is not a basis");
    if (!is_basis_family(m.ground(), sigma.vertex_bases))
        fail(ErrorKind::NotAFace, "vertex family is not a basis family");
}

}  // namespace detail

/// Full face lattice of Q(M), including the empty face (rank 0) and Q(M)
/// itself (rank dim+1). faces[i] describes poset element i.
struct FaceLattice {
    GradedPoset poset;
    std::vector<Face> faces;

    int dimension() const { return poset.top_rank() - 1; }

    /// Index of the face with the given (sorted) vertex family; -1 if absent.
    int index_of(const std::vector<ElementSet>& family) const {
        auto it = index_.find(family);
        return it == index_.end() ? -1 : it->second;
    }

    std::map<std::vector<ElementSet>, int> index_;
};

/// Builds the face lattice by intersection closure of facet vertex families.
/// Facets of each connected component factor are the proper subsets S with
/// both M|_S and M/S connected; a disconnected matroid contributes the lifted
/// facets of each factor, so the closure yields exactly the products of
/// component faces.
inline FaceLattice face_lattice(const Matroid& m) {
    require_within_cap(m.ground_size(), "face_lattice");
    const auto& bases = m.bases();
    int nb = static_cast<int>(bases.size());

    std::set<std::vector<int>> facets;
    for (ElementSet comp : m.components()) {
        if (comp.size() < 2) continue;
        Matroid mc = m.restriction(comp);
        std::uint32_t cm = comp.mask();
        for (std::uint32_t s = (cm - 1) & cm; s != 0; s = (s - 1) & cm) {
            ElementSet sub(s);
            if (!mc.restriction(sub).is_connected() || !mc.contraction(sub).is_connected()) continue;
            int rs = m.rank(sub);
            std::vector<int> fam;
            for (int i = 0; i < nb; ++i)
                if ((bases[i] & sub).size() == rs) fam.push_back(i);
            facets.insert(std::move(fam));
        }
    }

    std::vector<int> full(nb);
    std::iota(full.begin(), full.end(), 0);
    std::set<std::vector<int>> closed{full};
    std::vector<std::vector<int>> queue{full};
    while (!queue.empty()) {
        std::vector<int> f = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : facets) {
            std::vector<int> h;
            std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(h));
            if (!h.empty() && closed.insert(h).second) queue.push_back(std::move(h));
        }
    }

    std::vector<Face> faces;
    faces.push_back(Face{});  // empty face
    for (const auto& fam : closed) {
        std::vector<ElementSet> family;
        family.reserve(fam.size());
        for (int i : fam) family.push_back(bases[i]);
        faces.push_back(detail::make_face(m, std::move(family)));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_bases < b.vertex_bases;
    });

    int nf = static_cast<int>(faces.size());
    std::vector<int> ranks(nf);
    for (int i = 0; i < nf; ++i) ranks[i] = faces[i].dim + 1;
    std::vector<Bitset> below(nf, Bitset(nf));
    for (int j = 0; j < nf; ++j)
        for (int i = 0; i < nf; ++i) {
            if (i == j) continue;
            if (i == 0 ||
                (faces[i].vertex_bases.size() < faces[j].vertex_bases.size() &&
                 std::includes(faces[j].vertex_bases.begin(), faces[j].vertex_bases.end(),
                               faces[i].vertex_bases.begin(), faces[i].vertex_bases.end())))
                below[j].set(i);
        }
    // the empty face is below nothing else when j == 0
    FaceLattice out;
    out.poset = GradedPoset::from_below(std::move(ranks), std::move(below));
    out.faces = std::move(faces);
    for (int i = 1; i < nf; ++i) out.index_.emplace(out.faces[i].vertex_bases, i);
    return out;
}

/// Face minimizing a weight vector, computed two ways and compared: directly
/// as the bases of minimum total weight, and as the flag matroid of the
/// level-set flag of the weights.
inline Face minimizing_face(const Matroid& m, const std::vector<long long>& w) {
    int n = m.ground_size();
    if (m.ground() != ElementSet::full(n))
        fail(ErrorKind::BadParameters, "minimizing_face expects a matroid on [n]");
    if (static_cast<int>(w.size()) != n) fail(ErrorKind::BadParameters, "weight vector length");
    long long best = 0;
    bool first = true;
    std::vector<ElementSet> argmin;
    for (ElementSet b : m.bases()) {
        long long tot = 0;
        for (int e : b.elements()) tot += w[e - 1];
        if (first || tot < best) {
            best = tot;
            argmin.clear();
            first = false;
        }
        if (tot == best) argmin.push_back(b);
    }
    Matroid via_flag = matroid_of_flag(m, level_set_flag(w, n));
    if (via_flag.bases() != argmin)
        fail(ErrorKind::InvariantViolation,
             "weight minimization disagrees with the level-set flag matroid");
    Face f;
    f.vertex_bases = argmin;
    f.matroid = via_flag;
    f.dim = n - static_cast<int>(via_flag.components().size());
    return f;
}

/// σ ⊆ H_S iff every vertex basis meets S in exactly r(S) elements.
inline bool face_in_hyperplane(const Matroid& m, const Face& sigma, ElementSet s) {
    int rs = m.rank(s);
    for (ElementSet b : sigma.vertex_bases)
        if ((b & s).size() != rs) return false;
    return true;
}

/// The flag-membership criterion for σ ⊆ H_S: some factor-connected flag
/// contains S and realizes σ. Exponential; used to validate the hyperplane
/// test on small instances.
inline bool face_in_hyperplane_via_flags(const Matroid& m, const Face& sigma, ElementSet s) {
    for (const Flag& f : all_factor_connected_flags(m)) {
        if (std::find(f.sets.begin(), f.sets.end(), s) == f.sets.end()) continue;
        if (matroid_of_flag(m, f).bases() == sigma.vertex_bases) return true;
    }
    return false;
}

/// All sets belonging to some factor-connected flag realizing σ: exactly the
/// unions of components of M_σ lying in a hyperplane containing σ. Sorted by
/// (size, mask); always contains ∅ and the ground set.
inline std::vector<ElementSet> L_sigma(const Matroid& m, const Face& sigma) {
    detail::require_face(m, sigma);
    auto comps = sigma.matroid ? sigma.matroid->components()
                               : Matroid::unchecked(m.ground(), sigma.vertex_bases).components();
    int c = static_cast<int>(comps.size());
    std::vector<ElementSet> out;
    for (std::uint32_t u = 0; u < (1u << c); ++u) {
        ElementSet s;
        for (int i = 0; i < c; ++i)
            if ((u >> i) & 1) s = s | comps[i];
        if (face_in_hyperplane(m, sigma, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// The poset on the connected components of M_σ whose order ideals give
/// L_sigma: C1 < C2 iff every hyperplane set containing C2 contains C1.
inline LabeledPoset P_sigma(const Matroid& m, const Face& sigma) {
    detail::require_face(m, sigma);
    auto comps = sigma.matroid ? sigma.matroid->components()
                               : Matroid::unchecked(m.ground(), sigma.vertex_bases).components();
    int c = static_cast<int>(comps.size());
    std::vector<ElementSet> hyper;  // all hyperplane sets that are unions of components
    for (std::uint32_t u = 0; u < (1u << c); ++u) {
        ElementSet s;
        for (int i = 0; i < c; ++i)
            if ((u >> i) & 1) s = s | comps[i];
        if (face_in_hyperplane(m, sigma, s)) hyper.push_back(s);
    }
    LabeledPoset p;
    p.labels = comps;
    p.below.assign(c, 0);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) {
            if (i == j) continue;
            bool dominated = true;
            for (ElementSet s : hyper)
                if (comps[j].subset_of(s) && !comps[i].subset_of(s)) dominated = false;
            if (dominated) p.below[j] |= 1u << i;
        }
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            if (i != j && p.less(i, j) && p.less(j, i))
                fail(ErrorKind::InvariantViolation, "component order has a 2-cycle");
    return p;
}

/// Basic-bond poset of a basis: e < e' iff e ∈ B, e' ∉ B, and the single
/// exchange (B \ e) ∪ e' is again a basis.
inline LabeledPoset P_B(const Matroid& m, ElementSet b) {
    if (!m.is_basis(b)) fail(ErrorKind::NotABasis, "{" + b.to_string() + "} is not a basis");
    std::vector<int> elems = m.ground().elements();
    LabeledPoset p;
    for (int e : elems) p.labels.push_back(ElementSet::single(e));
    p.below.assign(elems.size(), 0);
    for (size_t i = 0; i < elems.size(); ++i) {
        if (!b.contains(elems[i])) continue;
        for (size_t j = 0; j < elems.size(); ++j) {
            if (b.contains(elems[j])) continue;
            ElementSet swapped = (b - ElementSet::single(elems[i])) | ElementSet::single(elems[j]);
            if (m.is_basis(swapped)) p.below[j] |= 1u << i;
        }
    }
    return p;
}

}  // namespace mbp
