#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "cd_index.hpp"
#include "composition.hpp"
#include "face_lattice.hpp"
#include "matroid.hpp"

namespace mbp {

/// A rank-2 matroid together with its parallelism classes as blocks.
struct Rank2Context {
    Composition alpha;
    std::vector<ElementSet> blocks;
    Matroid matroid;
};

inline Rank2Context rank2_context(const Composition& alpha) {
    return Rank2Context{alpha, composition_blocks(alpha), rank2_from_composition(alpha)};
}

/// λ(α, i) = (α_1+...+α_{i−1}, α_i, α_{i+1}+...+α_k), for 2 <= i <= k−1.
inline Composition lambda_comp(const Composition& alpha, int i) {
    int k = alpha.length();
    if (i < 2 || i > k - 1) fail(ErrorKind::IndexOutOfRange, "lambda needs 2 <= i <= len-1");
    int pre = 0, post = 0;
    for (int j = 1; j <= i - 1; ++j) pre += alpha.parts[j - 1];
    for (int j = i + 1; j <= k; ++j) post += alpha.parts[j - 1];
    return Composition{{pre, alpha.parts[i - 1], post}};
}

/// μ(α, i) = (α_1+...+α_i, α_{i+1}+...+α_k), for 1 <= i <= k−1.
inline Composition mu_comp(const Composition& alpha, int i) {
    int k = alpha.length();
    if (i < 1 || i > k - 1) fail(ErrorKind::IndexOutOfRange, "mu needs 1 <= i <= len-1");
    int pre = 0, post = 0;
    for (int j = 1; j <= i; ++j) pre += alpha.parts[j - 1];
    for (int j = i + 1; j <= k; ++j) post += alpha.parts[j - 1];
    return Composition{{pre, post}};
}

/// Removes zero parts from a weak composition.
inline Composition zero_deletion(const Composition& beta) {
    if (!beta.is_weak()) fail(ErrorKind::BadParameters, "negative part in composition");
    Composition out;
    for (int p : beta.parts)
        if (p > 0) out.parts.push_back(p);
    return out;
}

/// The two pieces of the rank-2 split along S = P_1 ∪ ... ∪ P_m: merging the
/// first m classes gives one piece, merging the rest gives the other. Both
/// are returned as matroids on [n] with the block labelling of alpha.
inline std::pair<Matroid, Matroid> rank2_split(const Composition& alpha, int m) {
    int k = alpha.length();
    if (!alpha.is_strict() || k < 4) fail(ErrorKind::BadM, "need a strict composition with >= 4 parts");
    if (m < 2 || m > k - 2)
        fail(ErrorKind::BadM, "both sides must union at least two parallelism classes");
    Composition c1, c2;
    int merged = 0;
    for (int j = 0; j < m; ++j) merged += alpha.parts[j];
    c1.parts.push_back(merged);
    for (int j = m; j < k; ++j) c1.parts.push_back(alpha.parts[j]);
    merged = 0;
    for (int j = 0; j < m; ++j) c2.parts.push_back(alpha.parts[j]);
    for (int j = m; j < k; ++j) merged += alpha.parts[j];
    c2.parts.push_back(merged);
    return {rank2_from_composition(c1), rank2_from_composition(c2)};
}

/// Direct route: cd-index of the face lattice of Q(M_alpha).
inline NCPolynomial cd_index_rank2_direct(const Composition& alpha) {
    if (!alpha.is_strict() || alpha.length() < 2)
        fail(ErrorKind::BadParameters, "need a strict composition with at least 2 parts");
    return cd_index(face_lattice(rank2_from_composition(alpha)).poset);
}

namespace detail {

inline std::vector<int> sorted_desc(const Composition& alpha) {
    std::vector<int> v = alpha.parts;
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/// cd-index of Q(M_alpha) by the rank-2 recursion: two classes give a product
/// of simplices, three classes are the base case computed from the face
/// lattice, and longer compositions reduce through the split identity,
///   Ψ(α) = Σ_i Ψ(λ(α,i)) − (Σ_i Ψ(Δ×Δ over μ(α,i)))·c
///          − Σ_{β<α, ℓ(β̄)>=4} Π binom(α_j, β_j) (Σ_i Ψ(Δ×Δ over μ(β̄,i)))·d·Ψ(Δ_{n−|β̄|}).
/// Memoized on the sorted composition (the polytope only depends on the
/// multiset of class sizes).
inline NCPolynomial cd_index_rank2(const Composition& alpha) {
    if (!alpha.is_strict() || alpha.length() < 2)
        fail(ErrorKind::BadParameters, "need a strict composition with at least 2 parts");
    static std::map<std::vector<int>, NCPolynomial> memo;
    static std::mutex mtx;
    std::vector<int> key = detail::sorted_desc(alpha);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    int k = alpha.length();
    NCPolynomial result(Alphabet::cd);
    if (k == 2) {
        result = simplex_product_cd(alpha.parts[0], alpha.parts[1]);
    } else if (k == 3) {
        result = cd_index_rank2_direct(alpha);
    } else {
        int n = alpha.sum();
        NCPolynomial c = NCPolynomial::monomial(Alphabet::cd, "c");
        NCPolynomial d = NCPolynomial::monomial(Alphabet::cd, "d");
        for (int i = 2; i <= k - 1; ++i) result += cd_index_rank2(lambda_comp(alpha, i));
        NCPolynomial mid(Alphabet::cd);
        for (int i = 2; i <= k - 2; ++i) {
            Composition mu = mu_comp(alpha, i);
            mid += simplex_product_cd(mu.parts[0], mu.parts[1]);
        }
        result -= mid * c;
        // beta runs over weak compositions strictly below alpha componentwise
        std::vector<int> beta(k, 0);
        while (true) {
            Composition bc{beta};
            Composition bbar = zero_deletion(bc);
            bool is_alpha = (beta == alpha.parts);
            if (!is_alpha && bbar.length() >= 4) {
                long long mult = 1;
                for (int j = 0; j < k; ++j) mult *= detail::binomial(alpha.parts[j], beta[j]);
                NCPolynomial inner(Alphabet::cd);
                for (int i = 2; i <= bbar.length() - 2; ++i) {
                    Composition mu = mu_comp(bbar, i);
                    inner += simplex_product_cd(mu.parts[0], mu.parts[1]);
                }
                result -= mult * (inner * d * simplex_cd(n - bbar.sum()));
            }
            int pos = 0;
            while (pos < k && beta[pos] == alpha.parts[pos]) beta[pos++] = 0;
            if (pos == k) break;
            beta[pos]++;
        }
    }
#ifndef NDEBUG
    if (alpha.sum() <= 8 && !(result == cd_index_rank2_direct(alpha)))
        fail(ErrorKind::InvariantViolation, "rank-2 recursion disagrees with the face lattice");
#endif
    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(std::move(key), result);
    return result;
}

/// The eleven published cd-indices for three-part compositions, used as
/// ground truth by the verification suite.
inline std::vector<std::pair<Composition, NCPolynomial>> table1() {
    auto row = [](std::initializer_list<int> parts,
                  std::initializer_list<std::pair<const char*, long long>> terms) {
        NCPolynomial p(Alphabet::cd);
        for (const auto& [w, c] : terms) p.add_term(w, c);
        return std::make_pair(Composition(parts), p);
    };
    return {
        row({1, 1, 1}, {{"cc", 1}, {"d", 1}}),
        row({2, 1, 1}, {{"ccc", 1}, {"cd", 3}, {"dc", 3}}),
        row({3, 1, 1}, {{"cccc", 1}, {"ccd", 4}, {"cdc", 8}, {"dcc", 5}, {"dd", 7}}),
        row({2, 2, 1}, {{"cccc", 1}, {"ccd", 5}, {"cdc", 10}, {"dcc", 6}, {"dd", 10}}),
        row({4, 1, 1},
            {{"ccccc", 1}, {"cccd", 5}, {"ccdc", 13}, {"cdcc", 15}, {"cdd", 20},
             {"dccc", 7}, {"dcd", 18}, {"ddc", 22}}),
        row({3, 2, 1},
            {{"ccccc", 1}, {"cccd", 6}, {"ccdc", 17}, {"cdcc", 20}, {"cdd", 28},
             {"dccc", 9}, {"dcd", 26}, {"ddc", 33}}),
        row({2, 2, 2},
            {{"ccccc", 1}, {"cccd", 7}, {"ccdc", 21}, {"cdcc", 24}, {"cdd", 36},
             {"dccc", 10}, {"dcd", 34}, {"ddc", 42}}),
        row({5, 1, 1},
            {{"cccccc", 1}, {"ccccd", 6}, {"cccdc", 19}, {"ccdcc", 29}, {"ccdd", 38},
             {"cdccc", 24}, {"cdcd", 60}, {"cddc", 72}, {"dcccc", 9}, {"dccd", 33},
             {"dcdc", 65}, {"ddcc", 47}, {"ddd", 64}}),
        row({4, 2, 1},
            {{"cccccc", 1}, {"ccccd", 7}, {"cccdc", 24}, {"ccdcc", 39}, {"ccdd", 52},
             {"cdccc", 33}, {"cdcd", 86}, {"cddc", 104}, {"dcccc", 12}, {"dccd", 48},
             {"dcdc", 98}, {"ddcc", 72}, {"ddd", 100}}),
        row({3, 3, 1},
            {{"cccccc", 1}, {"ccccd", 7}, {"cccdc", 25}, {"ccdcc", 42}, {"ccdd", 55},
             {"cdccc", 36}, {"cdcd", 93}, {"cddc", 114}, {"dcccc", 13}, {"dccd", 52},
             {"dcdc", 109}, {"ddcc", 81}, {"ddd", 112}}),
        row({3, 2, 2},
            {{"cccccc", 1}, {"ccccd", 8}, {"cccdc", 30}, {"ccdcc", 51}, {"ccdd", 69},
             {"cdccc", 42}, {"cdcd", 116}, {"cddc", 142}, {"dcccc", 14}, {"dccd", 64},
             {"dcdc", 136}, {"ddcc", 98}, {"ddd", 142}}),
    };
}

}  // namespace mbp
