// Command-line front end: cd-indices, face lattices, component posets,
// hyperplane splits, the rank-2 recursion, and the verification suite.
// Exit codes: 0 success, 1 verification mismatch, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mbp/mbp.hpp"

namespace {

struct InputOpts {
    std::string matroid_path;
    std::string alpha;
    std::string bases_json;
    int n = 0;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
    auto* m = cmd->add_option("--matroid", in.matroid_path, "path to a matroid JSON file");
    auto* a = cmd->add_option("--alpha", in.alpha,
                              "rank-2 matroid from parallelism-class sizes, e.g. 2,1,1");
    auto* b = cmd->add_option("--bases", in.bases_json,
                              "inline bases JSON, e.g. [[1,3],[1,4],[3,4]] (requires --n)");
    cmd->add_option("--n", in.n, "ground-set size for --bases");
    m->excludes(a);
    m->excludes(b);
    a->excludes(b);
}

mbp::Matroid load_matroid(const InputOpts& in) {
    using namespace mbp;
    int sources = (!in.matroid_path.empty() ? 1 : 0) + (!in.alpha.empty() ? 1 : 0) +
                  (!in.bases_json.empty() ? 1 : 0);
    if (sources != 1)
        fail(ErrorKind::InputParse, "need exactly one input source: --matroid, --alpha or --bases");
    if (!in.matroid_path.empty()) {
        std::ifstream f(in.matroid_path);
        if (!f) fail(ErrorKind::InputParse, "cannot open " + in.matroid_path);
        std::stringstream ss;
        ss << f.rdbuf();
        return matroid_from_json_text(ss.str());
    }
    if (!in.alpha.empty()) return rank2_from_composition(Composition::parse(in.alpha));
    if (in.n < 1) fail(ErrorKind::InputParse, "--bases requires --n");
    mbp::json j = mbp::json::parse(in.bases_json, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::InputParse, "invalid --bases JSON");
    return matroid_from_json(mbp::json{{"n", in.n}, {"bases", j}});
}

int cmd_cdindex(const InputOpts& in, const std::string& format) {
    using namespace mbp;
    Matroid m = load_matroid(in);
    NCPolynomial psi = cd_index(face_lattice(m).poset);
    if (format == "json")
        std::cout << json{{"matroid", matroid_to_json(m)}, {"cd_index", poly_to_json(psi)}}.dump()
                  << "\n";
    else
        std::cout << psi.to_text() << "\n";
    return 0;
}

int cmd_faces(const InputOpts& in, const std::string& format) {
    using namespace mbp;
    Matroid m = load_matroid(in);
    FaceLattice fl = face_lattice(m);
    if (format == "json")
        std::cout << face_lattice_to_json(fl).dump() << "\n";
    else
        std::cout << face_lattice_to_text(fl);
    return 0;
}

int cmd_psigma(const InputOpts& in, const std::string& weights, const std::string& basis,
               const std::string& format) {
    using namespace mbp;
    Matroid m = load_matroid(in);
    if (weights.empty() == basis.empty())
        fail(ErrorKind::InputParse, "select the face with exactly one of --weights or --basis");
    Face sigma;
    LabeledPoset poset;
    if (!basis.empty()) {
        ElementSet b = ElementSet::parse(basis);
        poset = P_B(m, b);
        sigma.vertex_bases = {b};
        sigma.matroid = Matroid::unchecked(m.ground(), sigma.vertex_bases);
        sigma.dim = 0;
    } else {
        sigma = minimizing_face(m, parse_weights(weights, m.ground_size()));
        poset = P_sigma(m, sigma);
    }
    if (format == "json") {
        json j{{"face", face_to_json(sigma)}, {"poset", labeled_poset_to_json(poset)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "face: dim " << sigma.dim << ", bases {";
        for (size_t i = 0; i < sigma.vertex_bases.size(); ++i)
            std::cout << (i ? " " : "") << sigma.vertex_bases[i].to_string();
        std::cout << "}\n" << labeled_poset_to_text(poset);
    }
    return 0;
}

int cmd_split_check(const InputOpts& in, const std::string& set_csv, int k, bool verify_cd,
                    const std::string& format) {
    using namespace mbp;
    Matroid m = load_matroid(in);
    SplitSpec spec{ElementSet::parse(set_csv), k};
    SplitResult res = hyperplane_split(m, spec);
    json report{{"is_split", res.is_split}};
    report["failed_condition"] = res.is_split ? json(nullptr) : json(res.reason);
    if (res.is_split) {
        report["m_plus"] = matroid_to_json(*res.m_plus);
        report["m_minus"] = matroid_to_json(*res.m_minus);
        report["m_hat"] = matroid_to_json(*res.m_hat);
    }
    bool identity_ok = true;
    if (verify_cd && res.is_split) {
        SplitIdentityReport rep = verify_split_identity(m, spec);
        identity_ok = rep.equal;
        report["cd_identity"] = json{{"lhs", poly_to_json(rep.lhs)},
                                     {"rhs", poly_to_json(rep.rhs)},
                                     {"equal", rep.equal}};
    }
    if (format == "text") {
        std::cout << "is_split: " << (res.is_split ? "true" : "false") << "\n";
        if (!res.is_split) std::cout << "failed condition: " << res.reason << "\n";
        if (res.is_split) {
            std::cout << "m_plus:  " << matroid_to_json(*res.m_plus).dump() << "\n";
            std::cout << "m_minus: " << matroid_to_json(*res.m_minus).dump() << "\n";
            std::cout << "m_hat:   " << matroid_to_json(*res.m_hat).dump() << "\n";
        }
        if (verify_cd && res.is_split)
            std::cout << "cd identity: " << (identity_ok ? "equal" : "NOT EQUAL") << "\n";
    } else {
        std::cout << report.dump() << "\n";
    }
    return identity_ok ? 0 : 1;
}

int cmd_rank2(const std::string& alpha_str, const std::string& method, const std::string& format) {
    using namespace mbp;
    Composition alpha = Composition::parse(alpha_str);
    json j{{"alpha", alpha.to_string()}, {"method", method}};
    bool equal = true;
    NCPolynomial shown(Alphabet::cd);
    if (method == "direct") {
        shown = cd_index_rank2_direct(alpha);
    } else if (method == "recursive") {
        shown = cd_index_rank2(alpha);
    } else {
        NCPolynomial rec = cd_index_rank2(alpha);
        NCPolynomial dir = cd_index_rank2_direct(alpha);
        equal = rec == dir;
        shown = rec;
        j["direct"] = poly_to_json(dir);
        j["equal"] = equal;
    }
    j["cd_index"] = poly_to_json(shown);
    if (format == "json") {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << shown.to_text() << "\n";
        if (method == "both")
            std::cout << "direct and recursive " << (equal ? "agree" : "DISAGREE") << "\n";
    }
    return equal ? 0 : 1;
}

int cmd_table1(bool verify, const std::string& format) {
    using namespace mbp;
    bool all_ok = true;
    json rows = json::array();
    for (const auto& [alpha, expect] : table1()) {
        if (!verify) {
            if (format == "json")
                rows.push_back(json{{"alpha", alpha.to_string()}, {"cd_index", poly_to_json(expect)}});
            else
                std::cout << "(" << alpha.to_string() << ")  " << expect.to_text() << "\n";
            continue;
        }
        NCPolynomial direct = cd_index_rank2_direct(alpha);
        NCPolynomial recursive = cd_index_rank2(alpha);
        bool ok = direct == expect && recursive == expect;
        all_ok = all_ok && ok;
        if (format == "json") {
            rows.push_back(json{{"alpha", alpha.to_string()},
                                {"expected", poly_to_json(expect)},
                                {"direct", poly_to_json(direct)},
                                {"recursive", poly_to_json(recursive)},
                                {"ok", ok}});
        } else {
            std::cout << (ok ? "ok   " : "FAIL ") << "(" << alpha.to_string() << ")  "
                      << expect.to_text() << "\n";
            if (!ok) {
                std::cout << "  direct:    " << direct.to_text() << "\n";
                std::cout << "  recursive: " << recursive.to_text() << "\n";
            }
        }
    }
    if (format == "json") std::cout << rows.dump() << "\n";
    return all_ok ? 0 : 1;
}

int cmd_verify() {
    bool all = true;
    for (const mbp::Criterion& c : mbp::run_acceptance()) {
        std::printf("[%s] %d. %s (%.2fs) — %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    c.seconds, c.detail.c_str());
        all = all && c.pass;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matroid base polytopes: faces, cd-indices, hyperplane splits"};
    app.require_subcommand(1);

    InputOpts in;
    std::string format = "text";
    std::string weights, basis, set_csv, alpha_str, method = "both";
    int k = 0;
    bool verify_cd = false, verify_rows = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* cdindex = app.add_subcommand("cdindex", "cd-index of the base polytope");
    add_input_options(cdindex, in);
    add_format(cdindex);

    CLI::App* faces = app.add_subcommand("faces", "face lattice with per-face matroids");
    add_input_options(faces, in);
    add_format(faces);

    CLI::App* psigma = app.add_subcommand("psigma", "component poset of a face");
    add_input_options(psigma, in);
    add_format(psigma);
    psigma->add_option("--weights", weights, "weight vector selecting the minimizing face, e.g. 0,1/2,1");
    psigma->add_option("--basis", basis, "basis selecting a vertex, e.g. 1,4");

    CLI::App* split = app.add_subcommand("split-check", "decide a hyperplane split");
    add_input_options(split, in);
    add_format(split);
    split->add_option("--set", set_csv, "elements of S, e.g. 1,2")->required();
    split->add_option("--k", k, "right-hand side of sum_{e in S} x_e = k")->required();
    split->add_flag("--verify-cd", verify_cd, "also check the cd-index split identity");

    CLI::App* rank2 = app.add_subcommand("rank2", "cd-index of a rank-2 base polytope");
    rank2->add_option("--alpha", alpha_str, "parallelism-class sizes, e.g. 3,2,1")->required();
    rank2->add_option("--method", method, "computation route")
        ->check(CLI::IsMember({"direct", "recursive", "both"}));
    add_format(rank2);

    CLI::App* table = app.add_subcommand("table1", "published three-class cd-indices");
    table->add_flag("--verify", verify_rows, "recompute each row and diff");
    add_format(table);

    app.add_subcommand("verify", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cdindex->parsed()) return cmd_cdindex(in, format);
        if (faces->parsed()) return cmd_faces(in, format);
        if (psigma->parsed()) return cmd_psigma(in, weights, basis, format);
        if (split->parsed()) return cmd_split_check(in, set_csv, k, verify_cd, format);
        if (rank2->parsed()) return cmd_rank2(alpha_str, method, format);
        if (table->parsed()) return cmd_table1(verify_rows, format);
        return cmd_verify();
    } catch (const mbp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
