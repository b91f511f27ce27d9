#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "nakct/cluster.hpp"
#include "nakct/errors.hpp"
#include "nakct/kupisch.hpp"
#include "nakct/modcat.hpp"
#include "nakct/oracle.hpp"

namespace nakct::cli {

namespace {

using json = nlohmann::ordered_json;

int env_cap(int fallback) {
    const char* v = std::getenv("NAKCT_CAP");
    if (!v) return fallback;
    int parsed = std::atoi(v);
    return parsed > 0 ? parsed : fallback;
}

Coords parse_coords(const std::string& text) {
    Coords out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

json series_json(const KupischSeries& s) {
    return json{{"entries", s.entries()}, {"cyclic", s.cyclic()}, {"text", s.to_text()}};
}

json moduleset_json(const KupischSeries& s, int d, const ModuleSet& c) {
    json mods = json::array();
    for (const Coords& x : c.mods()) mods.push_back(x);
    return json{{"series", s.entries()}, {"cyclic", s.cyclic()}, {"d", d}, {"modules", mods}};
}

struct ParsedSubcat {
    KupischSeries series;
    int d;
    ModuleSet set;
};

ParsedSubcat parse_moduleset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nakct_error("Io", "cannot open " + path);
    json j = json::parse(in);
    KupischSeries s = KupischSeries::validate(j.at("series").get<std::vector<int>>(), j.at("cyclic").get<bool>());
    ModuleSet set;
    ModCat mc(s, j.at("d").get<int>());
    for (const auto& arr : j.at("modules")) set.insert(mc.canonical(arr.get<Coords>()));
    return {s, j.at("d").get<int>(), set};
}

json verdict_json(const Verdict& v) {
    json fails = json::array();
    for (const auto& f : v.failures) {
        json mods = json::array();
        for (const Coords& x : f.modules) mods.push_back(x);
        fails.push_back(json{{"tag", f.tag}, {"modules", mods}, {"k", f.k}});
    }
    return json{{"accepted", v.accepted}, {"failures", fails}, {"notes", v.notes}};
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
    }
}

struct VerifyStats {
    int instances = 0;
    int comparisons = 0;
    int mismatches = 0;
    std::vector<std::string> failures;
};

void verify_instance(const KupischSeries& s, int d, int max_n, int pair_cap, VerifyStats& st, std::ostream& out) {
    ModCat mc(s, d);
    if (static_cast<int>(mc.modules().size()) > pair_cap) return;
    st.instances++;
    oracle::Algebra A = oracle::build_algebra(s, d, env_cap(500));
    const auto& mods = mc.modules();

    std::vector<oracle::QuiverRep> reps;
    for (const Coords& x : mods) reps.push_back(oracle::build_module(A, x));

    bool instance_ok = true;
    for (size_t yi = 0; yi < mods.size(); yi++) {
        oracle::ExtCalculator calc(A, reps[yi], max_n * d);
        for (size_t xi = 0; xi < mods.size(); xi++) {
            int combinatorial = mc.hom_dim(mods[xi], mods[yi]);
            int linear = oracle::hom_dim(reps[xi], reps[yi]);
            st.comparisons++;
            if (combinatorial != linear) {
                st.mismatches++;
                instance_ok = false;
                st.failures.push_back("hom mismatch " + s.to_text() + " d=" + std::to_string(d) + " " +
                                      coords_to_string(mods[xi]) + "->" + coords_to_string(mods[yi]));
            }
            for (int i = 1; i <= max_n * d; i++) {
                int o = calc.ext(reps[xi], i);
                int c = (i % d == 0) ? mc.ext_kd_dim(mods[yi], mods[xi], i / d) : 0;
                st.comparisons++;
                if (o != c) {
                    st.mismatches++;
                    instance_ok = false;
                    st.failures.push_back("ext^" + std::to_string(i) + " mismatch " + s.to_text() + " d=" +
                                          std::to_string(d) + " " + coords_to_string(mods[yi]) + "," +
                                          coords_to_string(mods[xi]));
                }
            }
        }
    }

    if (!s.cyclic() && s.homogeneous() && s.ell() >= 2) {
        GldimResult g = oracle::algebra_gldim(A, 4 * gldim_formula(s.ell(), s.width(), d) + 4);
        int expected = gldim_formula(s.ell(), s.width(), d);
        st.comparisons++;
        if (g.exceeded || g.value != expected) {
            st.mismatches++;
            instance_ok = false;
            st.failures.push_back("gldim mismatch " + s.to_text() + " d=" + std::to_string(d));
        }
    }
    out << (instance_ok ? "ok   " : "FAIL ") << s.to_text() << " d=" << d << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for cluster-tilting subcategories of higher Nakayama algebras"};
    app.require_subcommand(1);

    std::string series_text, series_b_text, subcat_path, subcat_b_path, out_path, format = "json", highlight_path;
    std::string x_text, y_text;
    int d = 1, n = 1, k = 1, power = 1;
    int max_width = 6, max_ell = 3, max_d = 2, max_n = 4;
    std::optional<int> finer_n;

    auto* validate_cmd = app.add_subcommand("validate", "validate a Kupisch series and report its shape");
    validate_cmd->add_option("--series", series_text)->required();

    auto* classify_cmd = app.add_subcommand("classify", "closed-form classification for given n");
    classify_cmd->add_option("--series", series_text)->required();
    classify_cmd->add_option("--d", d)->required();
    classify_cmd->add_option("--n", n)->required();
    classify_cmd->add_option("--out", out_path);

    auto* check_cmd = app.add_subcommand("check", "certify a subcategory from a JSON file");
    check_cmd->add_option("--series", series_text)->required();
    check_cmd->add_option("--d", d)->required();
    check_cmd->add_option("--n", n)->required();
    check_cmd->add_option("--subcat", subcat_path)->required();
    check_cmd->add_flag("--partial", "run the partial check instead of the full certification");
    check_cmd->add_option("--out", out_path);

    auto* search_cmd = app.add_subcommand("search", "exhaustive search over translation-chain candidates");
    search_cmd->add_option("--series", series_text)->required();
    search_cmd->add_option("--d", d)->required();
    search_cmd->add_option("--n", n)->required();
    search_cmd->add_option("--out", out_path);

    auto* ext_cmd = app.add_subcommand("ext", "Ext^{kd}(M(y), M(x)) dimension");
    ext_cmd->add_option("--series", series_text)->required();
    ext_cmd->add_option("--d", d)->required();
    ext_cmd->add_option("--y", y_text)->required();
    ext_cmd->add_option("--x", x_text)->required();
    ext_cmd->add_option("--k", k)->required();
    ext_cmd->add_flag("--oracle", "also compute the value by linear algebra");

    auto* resolve_cmd = app.add_subcommand("resolve", "projective resolution data of a module index");
    resolve_cmd->add_option("--series", series_text)->required();
    resolve_cmd->add_option("--d", d)->required();
    resolve_cmd->add_option("--x", x_text)->required();

    auto* tau_cmd = app.add_subcommand("tau", "apply the nd-translation (negative power for the inverse)");
    tau_cmd->add_option("--series", series_text)->required();
    tau_cmd->add_option("--d", d)->required();
    tau_cmd->add_option("--n", n)->required();
    tau_cmd->add_option("--x", x_text)->required();
    tau_cmd->add_option("--power", power);

    auto* glue_cmd = app.add_subcommand("glue", "glue two series (optionally glue certified subcategories)");
    glue_cmd->add_option("--a", series_text)->required();
    glue_cmd->add_option("--b", series_b_text)->required();
    glue_cmd->add_option("--subcat-a", subcat_path);
    glue_cmd->add_option("--subcat-b", subcat_b_path);
    glue_cmd->add_option("--d", d);
    glue_cmd->add_option("--n", n);
    glue_cmd->add_option("--out", out_path);

    auto* deglue_cmd = app.add_subcommand("deglue", "split into homogeneous pieces and bridges");
    deglue_cmd->add_option("--series", series_text)->required();
    deglue_cmd->add_option("--d", d);
    deglue_cmd->add_option("--finer-n", finer_n);

    auto* ar_cmd = app.add_subcommand("arquiver", "export the AR-quiver of the distinguished subcategory");
    ar_cmd->add_option("--series", series_text)->required();
    ar_cmd->add_option("--d", d)->required();
    ar_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    ar_cmd->add_option("--highlight", highlight_path);
    ar_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "formula-vs-oracle sweep within a budget");
    verify_cmd->add_option("--max-width", max_width);
    verify_cmd->add_option("--max-ell", max_ell);
    verify_cmd->add_option("--max-d", max_d);
    verify_cmd->add_option("--max-n", max_n);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (validate_cmd->parsed()) {
            KupischSeries s = KupischSeries::parse(series_text);
            SeriesShape shape = classify_shape(s);
            json j{{"ok", true}, {"series", series_json(s)}};
            switch (shape.tag) {
                case SeriesShape::Tag::AcyclicHomogeneous:
                    j["shape"] = json{{"tag", "acyclic_homogeneous"}, {"ell", shape.ell}, {"width", shape.width}};
                    break;
                case SeriesShape::Tag::CyclicHomogeneous:
                    j["shape"] = json{{"tag", "cyclic_homogeneous"}, {"ell", shape.ell}, {"width", shape.width}};
                    break;
                case SeriesShape::Tag::AcyclicDecomposable:
                case SeriesShape::Tag::CyclicDecomposable: {
                    json pieces = json::array();
                    for (const auto& p : shape.pieces) pieces.push_back(p.to_text());
                    j["shape"] = json{{"tag", shape.tag == SeriesShape::Tag::AcyclicDecomposable
                                                  ? "acyclic_decomposable"
                                                  : "cyclic_decomposable"},
                                      {"pieces", pieces}};
                    break;
                }
                case SeriesShape::Tag::Obstructed:
                    j["shape"] = json{{"tag", "obstructed"}, {"witness", shape.witness}};
                    break;
            }
            emit(j, out_path, out);
            return 0;
        }

        if (classify_cmd->parsed()) {
            KupischSeries s = KupischSeries::parse(series_text);
            Classification c = classify(s, d, n);
            json j{{"series", series_json(s)}, {"d", d}, {"n", n}};
            j["kind"] = c.kind == Classification::Kind::Exists
                            ? "exists"
                            : (c.kind == Classification::Kind::NotExists ? "not_exists" : "necessary_only");
            j["exists"] = c.exists();
            if (c.kind == Classification::Kind::NecessaryOnly) j["necessary_passes"] = c.necessary_passes;
            j["admissible_n"] = c.admissible_n;
            j["subcategory"] = c.subcategory ? moduleset_json(s, d, *c.subcategory) : json(nullptr);
            j["trace"] = c.trace;
            emit(j, out_path, out);
            if (c.kind == Classification::Kind::NecessaryOnly) return c.necessary_passes ? 0 : 1;
            return c.exists() ? 0 : 1;
        }

        if (check_cmd->parsed()) {
            KupischSeries s = KupischSeries::parse(series_text);
            ParsedSubcat sub = parse_moduleset_file(subcat_path);
            if (!(sub.series == s) || sub.d != d) throw nakct_error("Mismatch", "subcategory file disagrees with --series/--d");
            ModCat mc(s, d);
            Verdict v = check_cmd->count("--partial") ? check_partial(mc, sub.set, n) : check_full(mc, sub.set, n);
            emit(verdict_json(v), out_path, out);
            return v.accepted ? 0 : 1;
        }

        if (search_cmd->parsed()) {
            KupischSeries s = KupischSeries::parse(series_text);
            ModCat mc(s, d);
            auto results = search(mc, n, CheckLevel::Full, env_cap(4000));
            json arr = json::array();
            for (const auto& r : results) arr.push_back(moduleset_json(s, d, r));
            emit(json{{"series", series_json(s)}, {"d", d}, {"n", n}, {"count", results.size()}, {"results", arr}},
                 out_path, out);
            return results.empty() ? 1 : 0;
        }

        if (ext_cmd->parsed()) {
            KupischSeries s = KupischSeries::parse(series_text);
            ModCat mc(s, d);
            Coords x = mc.canonical(parse_coords(x_text));
            Coords y = mc.canonical(parse_coords(y_text));
            json j{{"series", series_json(s)}, {"d", d}, {"k", k}, {"ext_kd_dim", mc.ext_kd_dim(y, x, k)}};
            if (ext_cmd->count("--oracle")) {
                oracle::Algebra A = oracle::build_algebra(s, d, env_cap(500));
                j["oracle"] = oracle::ext_dim(A, oracle::build_module(A, y), oracle::build_module(A, x), k * d);
            }
            emit(j, out_path, out);
            return 0;
        }

        if (resolve_cmd->parsed()) {
            KupischSeries s = KupischSeries::parse(series_text);
            ModCat mc(s, d);
            Coords x = mc.canonical(parse_coords(x_text));
            auto res = mc.proj_resolution(x);
            json projs = json::array();
            for (const Coords& p : res.projectives) projs.push_back(p);
            emit(json{{"x", x}, {"projectives", projs}, {"omega_d", res.omega_d ? json(*res.omega_d) : json(nullptr)}},
                 out_path, out);
            return 0;
        }

        if (tau_cmd->parsed()) {
            KupischSeries s = KupischSeries::parse(series_text);
            ModCat mc(s, d);
            StableIndex cur = mc.canonical(parse_coords(x_text));
            for (int i = 0; i < std::abs(power) && cur; i++)
                cur = power > 0 ? mc.tau_nd(*cur, n) : mc.tau_nd_inv(*cur, n);
            emit(json{{"x", parse_coords(x_text)}, {"n", n}, {"power", power},
                      {"result", cur ? json(*cur) : json(nullptr)}},
                 out_path, out);
            return 0;
        }

        if (glue_cmd->parsed()) {
            KupischSeries a = KupischSeries::parse(series_text);
            KupischSeries b = KupischSeries::parse(series_b_text);
            if (!subcat_path.empty() || !subcat_b_path.empty()) {
                ParsedSubcat ca = parse_moduleset_file(subcat_path);
                ParsedSubcat cb = parse_moduleset_file(subcat_b_path);
                GluedSubcats g = glue_subcats(a, ca.set, b, cb.set, d, n);
                json j{{"series", series_json(g.series)},
                       {"subcategory", moduleset_json(g.series, d, g.subcat)},
                       {"verdict", verdict_json(g.verdict)}};
                emit(j, out_path, out);
                return g.verdict.accepted ? 0 : 1;
            }
            emit(json{{"series", series_json(glue(a, b))}}, out_path, out);
            return 0;
        }

        if (deglue_cmd->parsed()) {
            KupischSeries s = KupischSeries::parse(series_text);
            Degluing dg = deglue_all(s, d, finer_n);
            json j{{"decomposable", dg.decomposable}};
            if (!dg.decomposable) {
                j["witness"] = dg.witness;
            } else {
                json pieces = json::array();
                for (const auto& p : dg.pieces) pieces.push_back(p.to_text());
                json bridges = json::array();
                for (const auto& b : dg.bridges) bridges.push_back(b);
                j["pieces"] = pieces;
                j["bridges"] = bridges;
            }
            emit(j, out_path, out);
            return dg.decomposable ? 0 : 1;
        }

        if (ar_cmd->parsed()) {
            KupischSeries s = KupischSeries::parse(series_text);
            ModCat mc(s, d);
            ArQuiver q = mc.ar_quiver();
            std::vector<Coords> highlight;
            if (!highlight_path.empty()) {
                ParsedSubcat sub = parse_moduleset_file(highlight_path);
                highlight = sub.set.mods();
            }
            if (format == "dot") {
                if (out_path.empty()) {
                    out << q.to_dot(highlight);
                } else {
                    std::ofstream f(out_path);
                    f << q.to_dot(highlight);
                }
            } else {
                json nodes = json::array();
                for (const Coords& x : q.nodes) nodes.push_back(x);
                json edges = json::array();
                for (const auto& [i, j2] : q.edges) edges.push_back(json::array({i, j2}));
                emit(json{{"nodes", nodes}, {"edges", edges}}, out_path, out);
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            VerifyStats st;
            for (int dd = 1; dd <= max_d; dd++) {
                for (int l = 2; l <= max_ell; l++)
                    for (int m = l; m <= max_width; m++) {
                        std::vector<int> e(m);
                        for (int i = 0; i < m; i++) e[i] = std::min(i + 1, l);
                        verify_instance(KupischSeries::validate(e, false), dd, max_n, 300, st, out);
                    }
                for (int l = 2; l <= max_ell; l++)
                    for (int m = 2; m <= max_width; m++)
                        verify_instance(KupischSeries::validate(std::vector<int>(m, l), true), dd, max_n, 300, st, out);
            }
            json j{{"instances", st.instances},
                   {"comparisons", st.comparisons},
                   {"mismatches", st.mismatches},
                   {"failures", st.failures}};
            emit(j, "", out);
            return st.mismatches == 0 ? 0 : 1;
        }
    } catch (const nakct_error& e) {
        err << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace nakct::cli
