#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cd_index.hpp"
#include "face_lattice.hpp"
#include "matroid.hpp"
#include "nc_polynomial.hpp"
#include "poset.hpp"

namespace mbp {

using nlohmann::json;

/// {"n": 4, "bases": [[1,3],[1,4],...]} with 1-based elements. Matroids on a
/// ground set with holes are re-indexed to 1..n here; labels are preserved
/// everywhere else.
inline json matroid_to_json(const Matroid& m) {
    std::vector<int> elems = m.ground().elements();
    std::vector<int> pos(32, 0);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i) + 1;
    std::vector<std::vector<int>> rows;
    for (ElementSet b : m.bases()) {
        std::vector<int> row;
        for (int e : b.elements()) row.push_back(pos[e]);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return json{{"n", static_cast<int>(elems.size())}, {"bases", rows}};
}

inline Matroid matroid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("bases"))
        fail(ErrorKind::InputParse, "matroid JSON needs fields \"n\" and \"bases\"");
    if (!j["n"].is_number_integer()) fail(ErrorKind::InputParse, "\"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 1 || n > 31) fail(ErrorKind::InputParse, "\"n\" out of range");
    if (!j["bases"].is_array()) fail(ErrorKind::InputParse, "\"bases\" must be an array");
    std::vector<ElementSet> bases;
    for (const auto& row : j["bases"]) {
        if (!row.is_array()) fail(ErrorKind::InputParse, "each basis must be an array");
        ElementSet b;
        for (const auto& v : row) {
            if (!v.is_number_integer()) fail(ErrorKind::InputParse, "elements must be integers");
            int e = v.get<int>();
            if (e < 1 || e > n) fail(ErrorKind::InputParse, "element out of range: " + std::to_string(e));
            b = b | ElementSet::single(e);
        }
        bases.push_back(b);
    }
    return Matroid::from_bases(n, std::move(bases));
}

inline Matroid matroid_from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::InputParse, "invalid JSON");
    return matroid_from_json(j);
}

/// {"ccc":1,"cd":3,"dc":3}; the empty word is the key "".
inline json poly_to_json(const NCPolynomial& p) {
    json j = json::object();
    for (const auto& [w, c] : p.terms()) j[w] = c;
    return j;
}

inline NCPolynomial poly_from_json(const json& j, Alphabet a) {
    if (!j.is_object()) fail(ErrorKind::InputParse, "polynomial JSON must be an object");
    NCPolynomial p(a);
    for (const auto& [w, c] : j.items()) {
        if (!c.is_number_integer()) fail(ErrorKind::InputParse, "coefficients must be integers");
        detail::check_letters(a, w);
        p.add_term(w, c.get<long long>());
    }
    return p;
}

/// Rank sets rendered as sorted comma strings: {"": 1, "1": 3, "1,2": 6}.
inline json flag_vector_to_json(const FlagVector& f) {
    json j = json::object();
    int n = f.nranks();
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        std::string key;
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1) {
                if (!key.empty()) key += ',';
                key += std::to_string(i + 1);
            }
        j[key] = f.at(s);
    }
    return j;
}

inline json labeled_poset_to_json(const LabeledPoset& p) {
    json elements = json::array();
    for (ElementSet s : p.labels) elements.push_back(s.elements());
    json covers = json::array();
    for (auto [a, b] : p.cover_relations()) covers.push_back(json::array({a, b}));
    return json{{"elements", elements}, {"cover_relations", covers}};
}

inline json face_to_json(const Face& f) {
    json bases = json::array();
    for (ElementSet b : f.vertex_bases) bases.push_back(b.elements());
    json comps = json::array();
    if (f.matroid)
        for (ElementSet c : f.matroid->components()) comps.push_back(c.elements());
    return json{{"dim", f.dim}, {"bases", bases}, {"components", comps}};
}

inline json face_lattice_to_json(const FaceLattice& fl) {
    json faces = json::array();
    for (const Face& f : fl.faces) faces.push_back(face_to_json(f));
    json covers = json::array();
    for (auto [a, b] : fl.poset.cover_relations()) covers.push_back(json::array({a, b}));
    return json{{"dim", fl.dimension()}, {"faces", faces}, {"cover_relations", covers}};
}

/// Text Hasse diagram of a small labeled poset, one line per element with the
/// elements it covers.
inline std::string labeled_poset_to_text(const LabeledPoset& p) {
    auto covers = p.cover_relations();
    std::ostringstream out;
    out << "elements:";
    for (ElementSet s : p.labels) out << " {" << s.to_string() << "}";
    out << "\n";
    if (covers.empty()) {
        out << "relations: none (antichain)\n";
        return out.str();
    }
    out << "relations:";
    for (auto [a, b] : covers) out << " " << p.labels[a].to_string() << " < " << p.labels[b].to_string() << ";";
    out << "\n";
    return out.str();
}

/// Text rendering of a face lattice, one rank per block, covers listed by
/// face index.
inline std::string face_lattice_to_text(const FaceLattice& fl) {
    std::ostringstream out;
    out << "face lattice, dim " << fl.dimension() << ", " << fl.poset.size() << " elements\n";
    for (int r = 0; r <= fl.poset.top_rank(); ++r) {
        for (int i : fl.poset.elements_of_rank(r)) {
            const Face& f = fl.faces[i];
            out << "  [" << i << "] rank " << r << " dim " << f.dim << " bases {";
            bool first = true;
            for (ElementSet b : f.vertex_bases) {
                if (!first) out << " ";
                first = false;
                out << b.to_string();
            }
            out << "}";
            std::string cov;
            fl.poset.strictly_below(i).for_each([&](int x) {
                if (fl.poset.rank(x) == r - 1) cov += (cov.empty() ? "" : ",") + std::to_string(x);
            });
            if (!cov.empty()) out << " covers [" << cov << "]";
            out << "\n";
        }
    }
    return out.str();
}

/// Parses a comma-separated list of rationals ("0,1/2,-3") and scales by the
/// common denominator; weight minimization only depends on the order type.
inline std::vector<long long> parse_weights(const std::string& text, int n) {
    std::vector<long long> num, den;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        long long a = 0, b = 1;
        size_t slash = tok.find('/');
        try {
            size_t pos = 0;
            a = std::stoll(tok.substr(0, slash), &pos);
            if (slash != std::string::npos) b = std::stoll(tok.substr(slash + 1), &pos);
        } catch (const std::exception&) {
            fail(ErrorKind::InputParse, "bad weight '" + tok + "'");
        }
        if (b <= 0) fail(ErrorKind::InputParse, "weight denominators must be positive");
        num.push_back(a);
        den.push_back(b);
    }
    if (static_cast<int>(num.size()) != n)
        fail(ErrorKind::InputParse, "expected " + std::to_string(n) + " weights");
    long long l = 1;
    for (long long d : den) l = std::lcm(l, d);
    std::vector<long long> out(num.size());
    for (size_t i = 0; i < num.size(); ++i) out[i] = num[i] * (l / den[i]);
    return out;
}

}  // namespace mbp
