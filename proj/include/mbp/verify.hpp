#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cd_index.hpp"
#include "face_lattice.hpp"
#include "matroid.hpp"
#include "rank2.hpp"
#include "split.hpp"

namespace mbp {

// ---------------------------------------------------------------------------
// Test corpus
// ---------------------------------------------------------------------------

/// All strict compositions with the given sum.
inline std::vector<Composition> strict_compositions(int total) {
    std::vector<Composition> out;
    if (total < 1) return out;
    for (std::uint32_t cuts = 0; cuts < (1u << (total - 1)); ++cuts) {
        Composition c;
        int run = 1;
        for (int i = 0; i < total - 1; ++i) {
            if ((cuts >> i) & 1) {
                c.parts.push_back(run);
                run = 1;
            } else {
                run++;
            }
        }
        c.parts.push_back(run);
        out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<Matroid> rank2_corpus(int max_n) {
    std::vector<Matroid> out;
    for (int n = 2; n <= max_n; ++n)
        for (const Composition& alpha : strict_compositions(n))
            if (alpha.length() >= 2) out.push_back(rank2_from_composition(alpha));
    return out;
}

inline std::vector<Matroid> uniform_corpus(int max_n) {
    std::vector<Matroid> out;
    out.push_back(uniform(1, 1));
    for (int n = 2; n <= max_n; ++n)
        for (int r = 1; r <= n - 1; ++r) out.push_back(uniform(r, n));
    return out;
}

/// Graphic matroid of the complete graph on four vertices; edges labelled
/// 1..6 as 12, 13, 14, 23, 24, 34, bases the 16 spanning trees.
inline Matroid k4_graphic() {
    const int ends[7][2] = {{0, 0}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    std::vector<ElementSet> trees;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) {
                int parent[5];
                for (int v = 1; v <= 4; ++v) parent[v] = v;
                auto find = [&](int x) {
                    while (parent[x] != x) x = parent[x] = parent[parent[x]];
                    return x;
                };
                bool acyclic = true;
                for (int e : {a, b, c}) {
                    int ra = find(ends[e][0]), rb = find(ends[e][1]);
                    if (ra == rb) acyclic = false;
                    parent[ra] = rb;
                }
                if (acyclic) trees.push_back(ElementSet::of({a, b, c}));
            }
    return Matroid::from_bases(6, std::move(trees));
}

/// Seeded random basis families kept when they satisfy the exchange axiom.
inline std::vector<Matroid> random_corpus(int count, std::uint64_t seed) {
    std::vector<Matroid> out;
    std::uint64_t state = seed;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    int attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts < 20000) {
        attempts++;
        int n = 4 + static_cast<int>(next() % 3);  // 4..6
        int r = 2 + static_cast<int>(next() % 2);  // 2..3
        Matroid all = uniform(r, n);
        std::vector<ElementSet> fam;
        for (ElementSet b : all.bases())
            if (next() % 100 < 65) fam.push_back(b);
        if (fam.empty()) continue;
        if (is_basis_family(n, fam)) out.push_back(Matroid::unchecked(ElementSet::full(n), fam));
    }
    return out;
}

inline std::vector<Matroid> assorted_corpus() {
    std::vector<Matroid> out;
    out.push_back(direct_sum(uniform(1, 2), uniform_on(1, ElementSet::of({3, 4}))));
    out.push_back(direct_sum(direct_sum(uniform(1, 2), uniform_on(1, ElementSet::of({3, 4}))),
                             uniform_on(1, ElementSet::of({5, 6}))));
    out.push_back(direct_sum(uniform(1, 2), uniform_on(1, ElementSet::of({3, 4, 5}))));
    out.push_back(direct_sum(uniform(2, 3), uniform_on(1, ElementSet::of({4, 5}))));
    out.push_back(direct_sum(uniform(1, 1), uniform_on(1, ElementSet::of({2, 3}))));
    out.push_back(k4_graphic());
    for (Matroid& m : random_corpus(10, 0x5eedULL)) out.push_back(std::move(m));
    return out;
}

/// Deduplicated corpus of every matroid family the suite sweeps.
inline std::vector<Matroid> full_corpus(int max_n) {
    std::vector<Matroid> out;
    std::set<std::pair<std::uint32_t, std::vector<ElementSet>>> seen;
    auto add = [&](const Matroid& m) {
        if (m.ground_size() > max_n) return;
        if (seen.insert({m.ground().mask(), m.bases()}).second) out.push_back(m);
    };
    for (const Matroid& m : rank2_corpus(max_n)) add(m);
    for (const Matroid& m : uniform_corpus(std::min(max_n, 6))) add(m);
    for (const Matroid& m : assorted_corpus()) add(m);
    return out;
}

// ---------------------------------------------------------------------------
// Independent geometric oracle
// ---------------------------------------------------------------------------

/// Affine dimension of a set of 0/1 incidence vectors, by fraction-free
/// integer elimination. Independent of the component-count formula it checks.
inline int affine_dimension(const std::vector<ElementSet>& family, int n) {
    if (family.size() <= 1) return 0;
    std::vector<std::vector<long long>> rows;
    for (size_t i = 1; i < family.size(); ++i) {
        std::vector<long long> r(n);
        for (int e = 1; e <= n; ++e)
            r[e - 1] = (family[i].contains(e) ? 1 : 0) - (family[0].contains(e) ? 1 : 0);
        rows.push_back(std::move(r));
    }
    int mrows = static_cast<int>(rows.size());
    int rank = 0;
    long long prev = 1;
    for (int col = 0; col < n && rank < mrows; ++col) {
        int piv = -1;
        for (int r = rank; r < mrows; ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = rank + 1; r < mrows; ++r) {
            for (int c2 = col + 1; c2 < n; ++c2)
                rows[r][c2] = (rows[r][c2] * rows[rank][col] - rows[r][col] * rows[rank][c2]) / prev;
            rows[r][col] = 0;
        }
        prev = rows[rank][col];
        rank++;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

namespace detail {

inline Criterion timed(int id, const std::string& name,
                       const std::function<std::pair<bool, std::string>()>& body) {
    Criterion c;
    c.id = id;
    c.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto [pass, detail] = body();
        c.pass = pass;
        c.detail = detail;
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

inline GradedPoset square_lattice() {
    return face_lattice(direct_sum(uniform(1, 2), uniform_on(1, ElementSet::of({3, 4})))).poset;
}

}  // namespace detail

/// 1. The eleven published three-part cd-indices, from the face lattice.
inline Criterion criterion_table1() {
    return detail::timed(1, "Table of three-class cd-indices reproduced exactly", [] {
        int ok = 0, total = 0;
        std::string bad;
        for (const auto& [alpha, expect] : table1()) {
            total++;
            if (cd_index_rank2_direct(alpha) == expect)
                ok++;
            else
                bad += " " + alpha.to_string();
        }
        return std::make_pair(ok == total,
                              std::to_string(ok) + "/" + std::to_string(total) + " rows" +
                                  (bad.empty() ? "" : "; mismatch at" + bad));
    });
}

/// 2. Recursion equals the direct face-lattice computation for every strict
/// composition with sum <= 8.
inline Criterion criterion_recursion() {
    return detail::timed(2, "Rank-2 recursion matches direct cd-indices (sum <= 8)", [] {
        int ok = 0, total = 0;
        std::string bad;
        for (int n = 2; n <= 8; ++n)
            for (const Composition& alpha : strict_compositions(n)) {
                if (alpha.length() < 2) continue;
                total++;
                if (cd_index_rank2(alpha) == cd_index_rank2_direct(alpha))
                    ok++;
                else
                    bad += " " + alpha.to_string();
            }
        return std::make_pair(ok == total,
                              std::to_string(ok) + "/" + std::to_string(total) + " compositions" +
                                  (bad.empty() ? "" : "; mismatch at" + bad));
    });
}

namespace detail {

struct SweepOutcome {
    long long checked = 0;
    long long splits = 0;
    long long identity_failures = 0;
    long long oracle_disagreements = 0;
    long long structure_failures = 0;  // codimension of the shared facet
    bool octahedron_seen = false;
    bool octahedron_value_ok = false;
};

/// Shared sweep for criteria 3 and 4: every (M, S, k) over the split corpus.
inline const SweepOutcome& split_sweep() {
    static SweepOutcome out = [] {
        SweepOutcome o;
        std::vector<Matroid> corpus;
        std::set<std::pair<std::uint32_t, std::vector<ElementSet>>> seen;
        for (const Matroid& m : rank2_corpus(7))
            if (seen.insert({m.ground().mask(), m.bases()}).second) corpus.push_back(m);
        for (const Matroid& m : uniform_corpus(6))
            if (m.rank() >= 2 && seen.insert({m.ground().mask(), m.bases()}).second)
                corpus.push_back(m);
        NCPolynomial octa(Alphabet::cd);
        octa.add_term("ccc", 1);
        octa.add_term("cd", 6);
        octa.add_term("dc", 4);
        for (const Matroid& m : corpus) {
            int n = m.ground_size();
            std::optional<FaceLattice> lattice;
            for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) {
                for (int k = 1; k <= m.rank() - 1; ++k) {
                    SplitSpec spec{ElementSet(s), k};
                    SplitResult res = hyperplane_split(m, spec);
                    bool oracle = brute_force_split_oracle(m, spec);
                    o.checked++;
                    if (res.is_split != oracle) o.oracle_disagreements++;
                    if (!res.is_split) continue;
                    o.splits++;
                    if (polytope_dimension(*res.m_hat) != polytope_dimension(m) - 1)
                        o.structure_failures++;
                    if (!lattice) lattice = face_lattice(m);
                    SplitIdentityReport rep = verify_split_identity(m, spec, *lattice);
                    if (!rep.equal) o.identity_failures++;
                    if (m == uniform(2, 4) && spec.S == ElementSet::of({1, 2}) && k == 1) {
                        o.octahedron_seen = true;
                        o.octahedron_value_ok = rep.equal && rep.lhs == octa;
                    }
                }
            }
        }
        return o;
    }();
    return out;
}

}  // namespace detail

/// 3. The split identity holds exactly on every hyperplane split found in the
/// sweep, including the hand-checkable octahedron case.
inline Criterion criterion_split_identity() {
    return detail::timed(3, "Split identity exact on every swept hyperplane split", [] {
        const auto& o = detail::split_sweep();
        bool pass = o.identity_failures == 0 && o.structure_failures == 0 && o.octahedron_seen &&
                    o.octahedron_value_ok;
        return std::make_pair(pass, std::to_string(o.splits) + " splits, " +
                                        std::to_string(o.identity_failures) + " identity failures, " +
                                        std::to_string(o.structure_failures) +
                                        " codimension failures; octahedron case " +
                                        (o.octahedron_value_ok ? "verified" : "NOT verified"));
    });
}

/// 4. The two-condition split test agrees with the brute-force oracle on the
/// full sweep.
inline Criterion criterion_split_oracle() {
    return detail::timed(4, "Split criterion agrees with brute-force oracle on full sweep", [] {
        const auto& o = detail::split_sweep();
        return std::make_pair(o.oracle_disagreements == 0,
                              std::to_string(o.checked) + " (M,S,k) triples, " +
                                  std::to_string(o.oracle_disagreements) + " disagreements");
    });
}

/// 5. Pyramid/prism/bipyramid closed forms equal direct cd-indices of the
/// constructed lattices for all base polytopes of dimension <= 3.
inline Criterion criterion_pyr_prism_bipyr() {
    return detail::timed(5, "Pyramid/prism/bipyramid formulas match constructed lattices", [] {
        std::vector<std::pair<std::string, GradedPoset>> polytopes;
        polytopes.emplace_back("segment", face_lattice(uniform(1, 2)).poset);
        polytopes.emplace_back("triangle", face_lattice(uniform(2, 3)).poset);
        polytopes.emplace_back("square", detail::square_lattice());
        polytopes.emplace_back("square pyramid",
                               face_lattice(rank2_from_composition(Composition{2, 1, 1})).poset);
        polytopes.emplace_back("octahedron", face_lattice(uniform(2, 4)).poset);
        polytopes.emplace_back(
            "cube", face_lattice(direct_sum(direct_sum(uniform(1, 2), uniform_on(1, ElementSet::of({3, 4}))),
                                            uniform_on(1, ElementSet::of({5, 6}))))
                        .poset);
        std::string bad;
        for (const auto& [name, q] : polytopes) {
            if (!(pyramid_cd(q) == cd_index(pyramid_lattice(q)))) bad += " pyr(" + name + ")";
            if (!(prism_cd(q) == cd_index(prism_lattice(q)))) bad += " prism(" + name + ")";
            if (!(bipyramid_cd(q) == cd_index(bipyramid_lattice(q)))) bad += " bipyr(" + name + ")";
        }
        NCPolynomial sqpyr(Alphabet::cd);
        sqpyr.add_term("ccc", 1);
        sqpyr.add_term("cd", 3);
        sqpyr.add_term("dc", 3);
        if (!(pyramid_cd(detail::square_lattice()) == sqpyr)) bad += " pyr(square)!=table-row";
        return std::make_pair(bad.empty(),
                              bad.empty() ? "18 constructions + pinned pyramid over the square"
                                          : "mismatch at" + bad);
    });
}

/// 6. Flag equivalence (breadth-first over adjacency moves) coincides with
/// equality of flag matroids, for all factor-connected flags, n <= 6.
inline Criterion criterion_flag_equivalence() {
    return detail::timed(6, "Flag equivalence classes equal flag-matroid fibers (n <= 6)", [] {
        long long flags_total = 0;
        for (const Matroid& m : full_corpus(6)) {
            std::vector<Flag> flags = all_factor_connected_flags(m);
            flags_total += static_cast<long long>(flags.size());
            // group by flag matroid
            std::map<std::vector<ElementSet>, std::vector<int>> fibers;
            for (size_t i = 0; i < flags.size(); ++i)
                fibers[matroid_of_flag(m, flags[i]).bases()].push_back(static_cast<int>(i));
            // union-find over adjacency moves
            std::vector<int> parent(flags.size());
            for (size_t i = 0; i < flags.size(); ++i) parent[i] = static_cast<int>(i);
            std::function<int(int)> find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            std::map<std::vector<std::uint32_t>, int> by_key;
            auto key = [](const Flag& f) {
                std::vector<std::uint32_t> k;
                for (size_t i = 1; i + 1 < f.sets.size(); ++i) k.push_back(f.sets[i].mask());
                return k;
            };
            for (size_t i = 0; i < flags.size(); ++i) by_key[key(flags[i])] = static_cast<int>(i);
            for (size_t i = 0; i < flags.size(); ++i)
                for (int j = 1; j <= flags[i].k(); ++j)
                    if (auto g = adjacent_flag(m, flags[i], j))
                        parent[find(static_cast<int>(i))] = find(by_key.at(key(*g)));
            // compare partitions
            for (const auto& [fam, members] : fibers) {
                int root = find(members[0]);
                for (int i : members)
                    if (find(i) != root)
                        return std::make_pair(false, std::string("equivalent-fiber flag not reachable by moves"));
            }
            std::map<int, std::vector<ElementSet>> root_fam;
            for (size_t i = 0; i < flags.size(); ++i) {
                int root = find(static_cast<int>(i));
                auto fam = matroid_of_flag(m, flags[i]).bases();
                auto it = root_fam.find(root);
                if (it == root_fam.end())
                    root_fam.emplace(root, fam);
                else if (it->second != fam)
                    return std::make_pair(false, std::string("adjacency move changed the flag matroid"));
            }
        }
        return std::make_pair(true, std::to_string(flags_total) + " factor-connected flags checked");
    });
}

/// 7. L_sigma is the ideal lattice of P_sigma on every corpus face (n <= 6);
/// at vertices P_sigma is the basic-bond poset; the worked example on the
/// square pyramid gives exactly the relations 12 < 3 and 4 < 3.
inline Criterion criterion_component_posets() {
    return detail::timed(7, "Component posets: ideals, vertex case, worked example", [] {
        long long faces_checked = 0;
        for (const Matroid& m : full_corpus(6)) {
            FaceLattice fl = face_lattice(m);
            for (int i = 0; i < fl.poset.size(); ++i) {
                if (i == fl.poset.bottom()) continue;
                const Face& f = fl.faces[i];
                LabeledPoset ps = P_sigma(m, f);
                std::vector<ElementSet> ls = L_sigma(m, f);
                std::set<std::uint32_t> ideals_as_sets;
                for (std::uint32_t ideal : ps.order_ideals()) {
                    ElementSet s;
                    for (int t = 0; t < ps.size(); ++t)
                        if ((ideal >> t) & 1) s = s | ps.labels[t];
                    ideals_as_sets.insert(s.mask());
                }
                std::set<std::uint32_t> ls_set;
                for (ElementSet s : ls) ls_set.insert(s.mask());
                if (ideals_as_sets != ls_set)
                    return std::make_pair(false, std::string("L_sigma differs from the order ideals of P_sigma"));
                faces_checked++;
            }
            for (ElementSet b : m.bases()) {
                Face vertex;
                vertex.vertex_bases = {b};
                vertex.matroid = Matroid::unchecked(m.ground(), {b});
                vertex.dim = 0;
                LabeledPoset via_face = P_sigma(m, vertex);
                LabeledPoset via_bond = P_B(m, b);
                if (!(via_face == via_bond))
                    return std::make_pair(false, std::string("vertex P_sigma differs from the basic-bond poset"));
            }
        }
        // worked example: the edge between e_{14} and e_{24} of the square pyramid
        Matroid m = rank2_from_composition(Composition{2, 1, 1});
        Face edge;
        edge.vertex_bases = {ElementSet::of({1, 4}), ElementSet::of({2, 4})};
        edge.matroid = Matroid::unchecked(m.ground(), edge.vertex_bases);
        edge.dim = 1;
        LabeledPoset ps = P_sigma(m, edge);
        std::vector<ElementSet> want_labels = {ElementSet::of({1, 2}), ElementSet::of({3}),
                                               ElementSet::of({4})};
        if (ps.labels != want_labels)
            return std::make_pair(false, std::string("worked example: wrong components"));
        auto covers = ps.cover_relations();
        std::vector<std::pair<int, int>> want_covers = {{0, 1}, {2, 1}};  // 12 < 3, 4 < 3
        if (covers != want_covers)
            return std::make_pair(false, std::string("worked example: wrong relations"));
        return std::make_pair(true, std::to_string(faces_checked) + " faces checked + worked example");
    });
}

/// 8. Structural suites: the dimension formula against exact affine rank,
/// Eulerian face lattices, agreement of both ab-index routes, the cd basis
/// round-trip up to degree 8, and the flag f/h round-trip.
inline Criterion criterion_structural() {
    return detail::timed(8, "Dimension formula, Eulerian lattices, ab/cd round-trips", [] {
        long long faces = 0, lattices = 0;
        for (const Matroid& m : full_corpus(6)) {
            FaceLattice fl = face_lattice(m);
            lattices++;
            if (!fl.poset.is_graded()) return std::make_pair(false, std::string("face lattice not graded"));
            if (!fl.poset.is_eulerian()) return std::make_pair(false, std::string("face lattice not Eulerian"));
            ab_index(fl.poset);      // throws DefinitionMismatch if the two routes differ
            flag_h_vector(fl.poset); // throws on a failed f/h round-trip
            for (int i = 0; i < fl.poset.size(); ++i) {
                if (i == fl.poset.bottom()) continue;
                const Face& f = fl.faces[i];
                if (affine_dimension(f.vertex_bases, m.ground_size()) != f.dim)
                    return std::make_pair(false, std::string("dimension formula fails against affine rank"));
                if (!is_basis_family(m.ground(), f.vertex_bases))
                    return std::make_pair(false, std::string("face family is not a basis family"));
                faces++;
            }
        }
        for (int deg = 0; deg <= 8; ++deg)
            for (const std::string& w : cd_words_of_degree(deg)) {
                NCPolynomial back = ab_to_cd(expand_cd_monomial(w));
                if (!(back == NCPolynomial::monomial(Alphabet::cd, w)))
                    return std::make_pair(false, "ab_to_cd(expand " + w + ") is not the identity");
            }
        return std::make_pair(true, std::to_string(faces) + " faces over " + std::to_string(lattices) +
                                        " lattices; cd words to degree 8");
    });
}

inline std::vector<Criterion> run_acceptance() {
    return {
        criterion_table1(),        criterion_recursion(),      criterion_split_identity(),
        criterion_split_oracle(),  criterion_pyr_prism_bipyr(), criterion_flag_equivalence(),
        criterion_component_posets(), criterion_structural(),
    };
}

}  // namespace mbp
