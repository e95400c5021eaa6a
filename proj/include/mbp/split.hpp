#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cd_index.hpp"
#include "face_lattice.hpp"
#include "matroid.hpp"

namespace mbp {

/// The hyperplane Σ_{e∈S} x_e = k. Only this normalized form is accepted;
/// a general (a, b) hyperplane either reduces to it or gives no split.
struct SplitSpec {
    ElementSet S;
    int k = 0;
};

inline void validate_spec(const Matroid& m, const SplitSpec& spec) {
    if (spec.S.empty() || spec.S == m.ground() || !spec.S.subset_of(m.ground()))
        fail(ErrorKind::BadParameters, "S must be a proper nonempty subset of the ground set");
    if (spec.k < 1 || spec.k >= m.rank())
        fail(ErrorKind::BadParameters, "k must satisfy 1 <= k <= rank-1");
}

/// Condition (i): r(S) > k and r(S^c) > r−k; equivalently the hyperplane
/// meets the interior of Q(M).
inline bool check_condition_i(const Matroid& m, const SplitSpec& spec) {
    validate_spec(m, spec);
    ElementSet sc = m.ground() - spec.S;
    return m.rank(spec.S) > spec.k && m.rank(sc) > m.rank() - spec.k;
}

namespace detail {

/// Enumerates independent subsets I ⊆ S of the given size with
/// rank((M/I)|_rest) = want_rank and collects the distinct minors on rest.
inline bool minors_all_equal(const Matroid& m, ElementSet s, int size, ElementSet rest,
                             int want_rank) {
    std::vector<int> elems = s.elements();
    int n = static_cast<int>(elems.size());
    std::optional<std::vector<ElementSet>> seen;
    bool equal = true;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    if (size > n) return true;
    while (true) {
        ElementSet is;
        for (int i : idx) is = is | ElementSet::single(elems[i]);
        if (m.is_independent(is)) {
            Matroid minor = m.contraction(is).restriction(rest);
            if (minor.rank() == want_rank) {
                if (!seen)
                    seen = minor.bases();
                else if (*seen != minor.bases())
                    equal = false;
            }
        }
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    return equal;
}

}  // namespace detail

/// Condition (ii): all minors (M/I)|_{S^c} over k-element independent I ⊆ S
/// of full remaining rank agree.
inline bool check_condition_ii(const Matroid& m, const SplitSpec& spec) {
    validate_spec(m, spec);
    ElementSet sc = m.ground() - spec.S;
    return detail::minors_all_equal(m, spec.S, spec.k, sc, m.rank() - spec.k);
}

/// Condition (ii′), the same statement from the S^c side with (r−k)-element
/// independent sets.
inline bool check_condition_ii_dual(const Matroid& m, const SplitSpec& spec) {
    validate_spec(m, spec);
    ElementSet sc = m.ground() - spec.S;
    return detail::minors_all_equal(m, sc, m.rank() - spec.k, spec.S, spec.k);
}

struct SplitResult {
    bool is_split = false;
    std::string reason;  // "condition_i" or "condition_ii" when not a split
    std::optional<Matroid> m_plus, m_minus, m_hat;
};

/// Decides the split and, on success, builds the two pieces and their common
/// facet by filtering bases on |B ∩ S| against k. Every structural claim is
/// re-verified; a failure is a bug trap, not a user error.
inline SplitResult hyperplane_split(const Matroid& m, const SplitSpec& spec) {
    validate_spec(m, spec);
    SplitResult res;
    if (!check_condition_i(m, spec)) {
        res.reason = "condition_i";
        return res;
    }
    bool ii = check_condition_ii(m, spec);
    if (ii != check_condition_ii_dual(m, spec))
        fail(ErrorKind::InvariantViolation, "conditions (ii) and (ii') disagree");
    if (!ii) {
        res.reason = "condition_ii";
        return res;
    }
    res.is_split = true;
    std::vector<ElementSet> above, below, level;
    for (ElementSet b : m.bases()) {
        int t = (b & spec.S).size();
        if (t >= spec.k) above.push_back(b);
        if (t <= spec.k) below.push_back(b);
        if (t == spec.k) level.push_back(b);
    }
    if (!is_basis_family(m.ground(), above) || !is_basis_family(m.ground(), below) ||
        !is_basis_family(m.ground(), level))
        fail(ErrorKind::InvariantViolation, "split pieces are not basis families");
    if (above.size() + below.size() != m.bases().size() + level.size())
        fail(ErrorKind::InvariantViolation, "split pieces do not partition the bases");
    res.m_plus = Matroid::unchecked(m.ground(), above);
    res.m_minus = Matroid::unchecked(m.ground(), below);
    res.m_hat = Matroid::unchecked(m.ground(), level);
    return res;
}

/// Independent split test straight from the definitions: the hyperplane has
/// bases strictly on both sides and all three filtered families are basis
/// families of matroids.
inline bool brute_force_split_oracle(const Matroid& m, const SplitSpec& spec) {
    validate_spec(m, spec);
    bool strictly_above = false, strictly_below = false;
    std::vector<ElementSet> above, below, level;
    for (ElementSet b : m.bases()) {
        int t = (b & spec.S).size();
        if (t > spec.k) strictly_above = true;
        if (t < spec.k) strictly_below = true;
        if (t >= spec.k) above.push_back(b);
        if (t <= spec.k) below.push_back(b);
        if (t == spec.k) level.push_back(b);
    }
    if (!strictly_above || !strictly_below) return false;
    return is_basis_family(m.ground(), above) && is_basis_family(m.ground(), below) &&
           is_basis_family(m.ground(), level);
}

struct SplitIdentityReport {
    NCPolynomial lhs{Alphabet::cd}, rhs{Alphabet::cd};
    bool equal = false;
    int crossing_faces = 0;
};

/// Checks Ψ(Q) = Ψ(Q⁺) + Ψ(Q⁻) − Ψ(Q̂)c − Σ Ψ(σ̂)·d·Ψ(Q̂/σ̂) exactly on a
/// matroid hyperplane split, with all four lattices computed independently
/// from their matroids. The crossing faces are those with vertex bases on
/// both strict sides of the hyperplane; each maps to σ̂, its sub-family at
/// level k, which must be a face of Q̂.
inline SplitIdentityReport verify_split_identity(const Matroid& m, const SplitSpec& spec,
                                                 const FaceLattice& lattice_of_m) {
    SplitResult split = hyperplane_split(m, spec);
    if (!split.is_split)
        fail(ErrorKind::BadParameters, "verify_split_identity needs a hyperplane split");
    const FaceLattice& lq = lattice_of_m;
    FaceLattice lplus = face_lattice(*split.m_plus);
    FaceLattice lminus = face_lattice(*split.m_minus);
    FaceLattice lhat = face_lattice(*split.m_hat);

    std::vector<int> crossers;
    for (int i = 0; i < lq.poset.size(); ++i) {
        if (i == lq.poset.bottom() || i == lq.poset.top()) continue;
        const Face& f = lq.faces[i];
        bool up = false, down = false;
        std::vector<ElementSet> at_level;
        for (ElementSet b : f.vertex_bases) {
            int t = (b & spec.S).size();
            if (t > spec.k) up = true;
            if (t < spec.k) down = true;
            if (t == spec.k) at_level.push_back(b);
        }
        if (!up || !down) continue;
        int idx = lhat.index_of(at_level);
        if (idx < 0)
            fail(ErrorKind::InvariantViolation, "crossing face does not cut Q-hat in a face");
        crossers.push_back(idx);
    }

    SplitIdentityReport rep;
    rep.lhs = cd_index(lq.poset);
    rep.rhs = split_rhs(lplus.poset, lminus.poset, lhat.poset, crossers);
    rep.equal = rep.lhs == rep.rhs;
    rep.crossing_faces = static_cast<int>(crossers.size());
    return rep;
}

inline SplitIdentityReport verify_split_identity(const Matroid& m, const SplitSpec& spec) {
    return verify_split_identity(m, spec, face_lattice(m));
}

}  // namespace mbp
