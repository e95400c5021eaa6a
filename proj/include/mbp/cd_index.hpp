#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "nc_polynomial.hpp"
#include "poset.hpp"

namespace mbp {

/// Chain counts of a graded poset of rank n+1, indexed by rank sets S ⊆ {1..n}
/// (bit i-1 of the mask is rank i). f(∅) = 1 by convention.
class FlagVector {
public:
    FlagVector(int nranks, std::vector<long long> values)
        : nranks_(nranks), values_(std::move(values)) {}

    int nranks() const { return nranks_; }
    long long at(std::uint32_t rankset) const { return values_[rankset]; }
    const std::vector<long long>& values() const { return values_; }

    bool operator==(const FlagVector&) const = default;

private:
    int nranks_;
    std::vector<long long> values_;  // size 2^nranks
};

/// Counts chains of the open interval (0̂, 1̂) whose rank sets are exactly S,
/// for every S ⊆ {1..n}, where n+1 is the poset rank.
inline FlagVector flag_f_vector(const GradedPoset& p) {
    if (!p.is_graded()) fail(ErrorKind::NotGraded, "flag f-vector needs a graded poset");
    int n = p.top_rank() - 1;
    if (n < 0) return FlagVector(0, {1});
    std::vector<std::vector<int>> byrank(n + 1);
    for (int i = 0; i < p.size(); ++i)
        if (i != p.bottom() && i != p.top()) byrank[p.rank(i)].push_back(i);
    std::vector<long long> f(std::size_t(1) << n, 0);
    f[0] = 1;
    std::vector<long long> cur(p.size()), nxt(p.size());
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        std::vector<int> ranks;
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1) ranks.push_back(i + 1);
        for (int x : byrank[ranks[0]]) cur[x] = 1;
        for (size_t t = 1; t < ranks.size(); ++t) {
            for (int y : byrank[ranks[t]]) {
                long long total = 0;
                for (int x : byrank[ranks[t - 1]])
                    if (p.less(x, y)) total += cur[x];
                nxt[y] = total;
            }
            for (int y : byrank[ranks[t]]) cur[y] = nxt[y];
        }
        long long total = 0;
        for (int x : byrank[ranks.back()]) total += cur[x];
        f[s] = total;
    }
    return FlagVector(n, std::move(f));
}

/// Inclusion–exclusion transform h(S) = Σ_{T⊆S} (−1)^{|S\T|} f(T).
inline FlagVector flag_h_from_f(const FlagVector& f) {
    int n = f.nranks();
    std::vector<long long> h = f.values();
    for (int b = 0; b < n; ++b)
        for (std::uint32_t s = 0; s < (1u << n); ++s)
            if ((s >> b) & 1) h[s] -= h[s ^ (1u << b)];
    return FlagVector(n, std::move(h));
}

inline FlagVector flag_h_vector(const GradedPoset& p) {
    FlagVector f = flag_f_vector(p);
    FlagVector h = flag_h_from_f(f);
    // round-trip: f(S) = Σ_{T⊆S} h(T)
    int n = f.nranks();
    std::vector<long long> back = h.values();
    for (int b = 0; b < n; ++b)
        for (std::uint32_t s = 0; s < (1u << n); ++s)
            if ((s >> b) & 1) back[s] += back[s ^ (1u << b)];
    if (back != f.values())
        fail(ErrorKind::DefinitionMismatch, "flag f/h round-trip failed");
    return h;
}

namespace detail {

inline std::string rankset_word(std::uint32_t s, int n) {
    std::string w(n, 'a');
    for (int i = 0; i < n; ++i)
        if ((s >> i) & 1) w[i] = 'b';
    return w;
}

}  // namespace detail

/// ab-index, computed two ways: Σ_S h(S)·u_S, and the chain-weight sum
/// Σ_c w(c) grouped by rank set (b on chain ranks, a−b elsewhere, expanded).
/// The two must agree word for word.
inline NCPolynomial ab_index(const GradedPoset& p) {
    FlagVector f = flag_f_vector(p);
    int n = f.nranks();
    FlagVector h = flag_h_from_f(f);
    NCPolynomial via_h(Alphabet::ab);
    for (std::uint32_t s = 0; s < (1u << n); ++s)
        via_h.add_term(detail::rankset_word(s, n), h.at(s));

    NCPolynomial via_chains(Alphabet::ab);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        long long fs = f.at(s);
        if (fs == 0) continue;
        std::vector<int> off;
        for (int i = 0; i < n; ++i)
            if (!((s >> i) & 1)) off.push_back(i);
        for (std::uint32_t u = 0; u < (1u << off.size()); ++u) {
            std::uint32_t word_mask = s;
            int sign = 1;
            for (size_t t = 0; t < off.size(); ++t)
                if ((u >> t) & 1) {
                    word_mask |= 1u << off[t];
                    sign = -sign;
                }
            via_chains.add_term(detail::rankset_word(word_mask, n), sign * fs);
        }
    }
    if (!(via_h == via_chains))
        fail(ErrorKind::DefinitionMismatch, "the two ab-index definitions disagree");
    return via_h;
}

/// cd-index of an Eulerian poset. A failure of the exact rewriting into c and
/// d is reported as NotEulerian (a non-Eulerian poset cannot have one).
inline NCPolynomial cd_index(const GradedPoset& p) {
    try {
        return ab_to_cd(ab_index(p));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotRepresentable)
            fail(ErrorKind::NotEulerian, std::string("no cd-index: ") + e.what());
        throw;
    }
}

/// cd-index of the interval [x, y]; this is the face lattice of the face
/// figure when the poset is a polytope face lattice.
inline NCPolynomial interval_index(const GradedPoset& p, int x, int y) {
    if (!p.leq(x, y)) fail(ErrorKind::NotComparable, "interval endpoints are not comparable");
    if (x == y) return NCPolynomial::one(Alphabet::cd);
    return cd_index(p.interval(x, y));
}

namespace detail {

inline void require_face_lattice(const GradedPoset& p, const char* what) {
    if (!p.is_graded()) fail(ErrorKind::NotFaceLattice, std::string(what) + ": poset is not graded");
    if (p.top_rank() < 1) fail(ErrorKind::NotFaceLattice, std::string(what) + ": rank too small");
}

}  // namespace detail

/// Face lattice of a product of polytopes: pairs of nonempty faces ordered
/// componentwise, plus a new joint empty face.
inline GradedPoset poset_product(const GradedPoset& p, const GradedPoset& q) {
    detail::require_face_lattice(p, "poset_product");
    detail::require_face_lattice(q, "poset_product");
    std::vector<int> pe, qe;
    for (int x = 0; x < p.size(); ++x)
        if (x != p.bottom()) pe.push_back(x);
    for (int y = 0; y < q.size(); ++y)
        if (y != q.bottom()) qe.push_back(y);
    int m = static_cast<int>(pe.size() * qe.size()) + 1;
    std::vector<int> ranks(m);
    std::vector<Bitset> below(m, Bitset(m));
    ranks[0] = 0;
    auto id = [&](size_t i, size_t j) { return static_cast<int>(1 + i * qe.size() + j); };
    for (size_t i = 0; i < pe.size(); ++i)
        for (size_t j = 0; j < qe.size(); ++j) {
            int a = id(i, j);
            ranks[a] = p.rank(pe[i]) + q.rank(qe[j]) - 1;
            below[a].set(0);
            for (size_t i2 = 0; i2 < pe.size(); ++i2)
                for (size_t j2 = 0; j2 < qe.size(); ++j2)
                    if ((i2 != i || j2 != j) && p.leq(pe[i2], pe[i]) && q.leq(qe[j2], qe[j]))
                        below[a].set(id(i2, j2));
        }
    return GradedPoset::from_below(std::move(ranks), std::move(below));
}

/// Face lattice of the pyramid: the direct product with a 2-chain (the new
/// apex is joined to every face).
inline GradedPoset pyramid_lattice(const GradedPoset& p) {
    detail::require_face_lattice(p, "pyramid_lattice");
    return direct_product(p, boolean_lattice(1));
}

/// Face lattice of the prism: product with a segment.
inline GradedPoset prism_lattice(const GradedPoset& p) {
    return poset_product(p, boolean_lattice(2));
}

/// Face lattice of the bipyramid: dual of the prism of the dual.
inline GradedPoset bipyramid_lattice(const GradedPoset& p) {
    detail::require_face_lattice(p, "bipyramid_lattice");
    return prism_lattice(p.dual()).dual();
}

namespace detail {

/// Σ over nonempty proper faces σ of Ψ(σ)·d·Ψ(Q/σ), the shared term of the
/// pyramid, prism and bipyramid formulas.
inline NCPolynomial face_figure_sum(const GradedPoset& q) {
    NCPolynomial d = NCPolynomial::monomial(Alphabet::cd, "d");
    NCPolynomial total(Alphabet::cd);
    for (int s = 0; s < q.size(); ++s) {
        if (s == q.bottom() || s == q.top()) continue;
        total += interval_index(q, q.bottom(), s) * d * interval_index(q, s, q.top());
    }
    return total;
}

}  // namespace detail

/// Ψ(Pyr Q) = ½ [Ψ(Q)c + cΨ(Q) + Σ_σ Ψ(σ)·d·Ψ(Q/σ)]; the halving must be exact.
inline NCPolynomial pyramid_cd(const GradedPoset& q) {
    detail::require_face_lattice(q, "pyramid_cd");
    NCPolynomial c = NCPolynomial::monomial(Alphabet::cd, "c");
    NCPolynomial psi = cd_index(q);
    NCPolynomial total = psi * c + c * psi + detail::face_figure_sum(q);
    NCPolynomial half(Alphabet::cd);
    for (const auto& [w, coeff] : total.terms()) {
        if (coeff % 2 != 0)
            fail(ErrorKind::OddCoefficients, "pyramid halving is not exact at word \"" + w + "\"");
        half.add_term(w, coeff / 2);
    }
    return half;
}

/// Ψ(Prism Q) = Ψ(Q)c + Σ_σ Ψ(σ)·d·Ψ(Q/σ).
inline NCPolynomial prism_cd(const GradedPoset& q) {
    detail::require_face_lattice(q, "prism_cd");
    NCPolynomial c = NCPolynomial::monomial(Alphabet::cd, "c");
    return cd_index(q) * c + detail::face_figure_sum(q);
}

/// Ψ(Bipyr Q) = cΨ(Q) + Σ_σ Ψ(σ)·d·Ψ(Q/σ).
inline NCPolynomial bipyramid_cd(const GradedPoset& q) {
    detail::require_face_lattice(q, "bipyramid_cd");
    NCPolynomial c = NCPolynomial::monomial(Alphabet::cd, "c");
    return c * cd_index(q) + detail::face_figure_sum(q);
}

/// Right-hand side of the hyperplane-split identity:
///   Ψ(Q⁺) + Ψ(Q⁻) − Ψ(Q̂)·c − Σ Ψ(σ̂)·d·Ψ(Q̂/σ̂),
/// where crossers lists σ̂ = σ∩H over all proper faces σ of Q meeting both
/// open halfspaces, given as elements of the Q̂ lattice (repeats allowed).
inline NCPolynomial split_rhs(const GradedPoset& qplus, const GradedPoset& qminus,
                              const GradedPoset& qhat, const std::vector<int>& crossers) {
    if (qplus.top_rank() != qminus.top_rank() || qhat.top_rank() + 1 != qplus.top_rank())
        fail(ErrorKind::RankMismatch, "the three lattices have inconsistent ranks");
    NCPolynomial c = NCPolynomial::monomial(Alphabet::cd, "c");
    NCPolynomial d = NCPolynomial::monomial(Alphabet::cd, "d");
    NCPolynomial rhs = cd_index(qplus) + cd_index(qminus) - cd_index(qhat) * c;
    for (int s : crossers)
        rhs -= interval_index(qhat, qhat.bottom(), s) * d * interval_index(qhat, s, qhat.top());
    return rhs;
}

/// cd-index of the simplex with m vertices (the boolean lattice), memoized.
inline NCPolynomial simplex_cd(int m) {
    static std::map<int, NCPolynomial> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    NCPolynomial psi = cd_index(boolean_lattice(m));
    memo.emplace(m, psi);
    return psi;
}

/// cd-index of a product of two simplices with a and b vertices, memoized.
inline NCPolynomial simplex_product_cd(int a, int b) {
    if (a > b) std::swap(a, b);
    static std::map<std::pair<int, int>, NCPolynomial> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    NCPolynomial psi = cd_index(poset_product(boolean_lattice(a), boolean_lattice(b)));
    memo.emplace(std::make_pair(a, b), psi);
    return psi;
}

}  // namespace mbp
