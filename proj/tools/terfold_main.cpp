// terfold: construct, verify and render triangular folding curves and their
// plane coverings.  Exit codes: 0 ok, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "terfold/analysis.hpp"
#include "terfold/frontier.hpp"
#include "terfold/json_io.hpp"
#include "terfold/svg.hpp"
#include "terfold/verify.hpp"

using namespace terfold;

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
    f << content;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

FoldSeq parse_window(const std::string& raw, int64_t origin) {
    const std::string text = strip(raw);
    if (!text.empty() && text[0] == '{') {
        return foldseq_from_json(json::parse(text));
    }
    return FoldSeq::parse(text, origin);
}

EPoint parse_point(const std::string& s) {
    size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("points are written 'a,b'");
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
}

int exit_fail(const std::string& what) {
    json err{{"error", what}};
    std::cout << err.dump(2) << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangular folding curves, coverings and their checks"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // ---- gen
    auto* gen = app.add_subcommand("gen", "turn sequence of T_Lambda");
    std::string gen_lambda, gen_out;
    bool gen_json = false;
    gen->add_option("--lambda", gen_lambda, "fold signs, e.g. \"+-+\"")->required();
    gen->add_flag("--json", gen_json, "emit the JSON wrapper");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // ---- delta
    auto* del = app.add_subcommand("delta", "derive a turn sequence");
    std::string del_in, del_out;
    int del_h = 0;
    int64_t del_origin = 1;
    bool del_json = false;
    del->add_option("--input", del_in, "sign string file or '-' (default stdin)");
    del->add_option("--h", del_h, "residue mod 3 of kept positions");
    del->add_option("--origin", del_origin, "absolute index of the first sign");
    del->add_flag("--json", del_json);
    del->add_option("--out", del_out);

    // ---- extract
    auto* ext = app.add_subcommand("extract", "recover Lambda from a window");
    std::string ext_in, ext_out;
    int ext_kmax = -1;
    int64_t ext_origin = 1;
    bool ext_json = false;
    ext->add_option("--input", ext_in);
    ext->add_option("--kmax", ext_kmax, "highest level to test (default: auto)");
    ext->add_option("--origin", ext_origin);
    ext->add_flag("--json", ext_json);
    ext->add_option("--out", ext_out);

    // ---- verify
    auto* ver = app.add_subcommand("verify", "run a property suite");
    std::string ver_suite, ver_report;
    int ver_n = 0, ver_samples = 0;
    uint64_t ver_seed = 12345;
    bool ver_exhaustive = false;
    ver->add_option("suite", ver_suite,
                    "self-avoid|palindrome|residue|diameter|coverage|frontier|"
                    "covering|liso")
        ->required();
    ver->add_option("--n", ver_n, "scale knob (suite dependent)");
    ver->add_option("--samples", ver_samples);
    ver->add_option("--seed", ver_seed);
    ver->add_flag("--exhaustive", ver_exhaustive);
    ver->add_option("--report", ver_report, "write the JSON report here");

    // ---- cover
    auto* cov = app.add_subcommand("cover", "build a covering patch");
    std::string cov_lambda, cov_chain, cov_orient = "E1", cov_star;
    std::string cov_svg, cov_report, cov_dump;
    int64_t cov_radius = 12;
    int cov_level = -1, cov_top = 0;
    bool cov_centered = false;
    cov->add_option("--lambda", cov_lambda,
                    "signs \"+-\" or rule alternating:-1 / constant:+1")
        ->required();
    cov->add_option("--level", cov_level, "level when --lambda is a rule");
    cov->add_option("--chain", cov_chain, "\"a,b;a,b;...\" (level+1 points)");
    cov->add_flag("--centered", cov_centered,
                  "middle-nested chain around the edge (0,0)->(1,0)");
    cov->add_option("--radius", cov_radius);
    cov->add_option("--orientation", cov_orient)->check(CLI::IsMember({"E1", "E2"}));
    cov->add_option("--star", cov_star, "connect the star point: + or -")
        ->check(CLI::IsMember({"+", "-"}));
    cov->add_option("--svg", cov_svg);
    cov->add_option("--top", cov_top, "render only the k most central curves");
    cov->add_option("--report", cov_report);
    cov->add_option("--dump", cov_dump, "write the patch JSON dump");

    // ---- frontier
    auto* fro = app.add_subcommand("frontier", "frontier walks of T_Lambda");
    std::string fro_lambda, fro_out;
    bool fro_check = false;
    fro->add_option("--lambda", fro_lambda)->required();
    fro->add_flag("--check", fro_check, "verify the frontier sign laws");
    fro->add_option("--out", fro_out);

    // ---- classify
    auto* cls = app.add_subcommand("classify", "covering case classification");
    std::string cls_lambda, cls_pseq, cls_chain;
    int cls_horizon = 16;
    cls->add_option("--lambda", cls_lambda)->required();
    cls->add_option("--pseq", cls_pseq, "I/M/S string; a single letter is a rule");
    cls->add_option("--chain", cls_chain);
    cls->add_option("--horizon", cls_horizon);

    // ---- liso
    auto* lis = app.add_subcommand("liso", "local isomorphism witness search");
    std::string lis_x, lis_y, lis_patch, lis_patch_b;
    int lis_n = 1;
    lis->add_option("--n", lis_n)->required();
    lis->add_option("--x", lis_x)->required();
    lis->add_option("--y", lis_y)->required();
    lis->add_option("--patch", lis_patch)->required();
    lis->add_option("--patch-b", lis_patch_b, "second patch (default: --patch)");

    // ---- render
    auto* ren = app.add_subcommand("render", "SVG of curves or a patch dump");
    std::string ren_in, ren_lambda, ren_out;
    int ren_top = 0;
    bool ren_lattice = false;
    ren->add_option("--input", ren_in, "patch dump or curve descriptor JSON");
    ren->add_option("--lambda", ren_lambda, "render realize(gen_T(lambda))");
    ren->add_option("--out", ren_out);
    ren->add_option("--top", ren_top);
    ren->add_flag("--lattice", ren_lattice);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            FoldSeq t = gen_T(Lambda::parse(gen_lambda));
            write_output(gen_out, gen_json ? foldseq_json(t, gen_lambda).dump(2) + "\n"
                                           : t.str() + "\n");
            return 0;
        }
        if (*del) {
            FoldSeq s = parse_window(read_input(del_in), del_origin);
            FoldSeq d = delta_seq(s, del_h);
            write_output(del_out, del_json ? foldseq_json(d).dump(2) + "\n"
                                           : d.str() + "\n");
            return 0;
        }
        if (*ext) {
            FoldSeq s = parse_window(read_input(ext_in), ext_origin);
            int kmax = ext_kmax;
            if (kmax < 0) {
                kmax = 0;
                while (pow3(kmax + 2) <= (int64_t)s.size() + 1) ++kmax;
            }
            try {
                ExtractResult r = extract_lambda(s, kmax);
                write_output(ext_out, ext_json ? to_json(r).dump(2) + "\n"
                                               : r.lambda.str() + "\n");
                return 0;
            } catch (const NotFolding& e) {
                return exit_fail(std::string("NotFolding: ") + e.what());
            } catch (const AmbiguousWindow& e) {
                return exit_fail(std::string("AmbiguousWindow: ") + e.what());
            }
        }
        if (*ver) {
            verify::Suite s =
                verify::run(ver_suite, ver_n, ver_samples, ver_seed, ver_exhaustive);
            const std::string text = s.report.dump(2) + "\n";
            if (!ver_report.empty()) write_output(ver_report, text);
            std::cout << (s.pass ? "PASS " : "FAIL ") << s.name << "\n";
            return s.pass ? 0 : 1;
        }
        if (*cov) {
            LambdaRule rule = LambdaRule::parse(cov_lambda);
            Lambda lam = rule.infinite()
                             ? rule.materialize(cov_level > 0 ? cov_level : 4)
                             : rule.prefix;
            const int level = (int)lam.size();
            XChain chain;
            std::optional<EPoint> center2;
            if (cov_centered) {
                chain = centered_chain(lam, {0, 0}, 0);
                center2 = EPoint{1, 0};
            } else if (!cov_chain.empty()) {
                chain = XChain::parse(cov_chain);
                // a short chain continues with its last point
                while ((int)chain.points.size() < level + 1)
                    chain.points.push_back(chain.points.back());
            } else {
                chain = XChain::constant_at({0, 0}, level);
            }
            CoveringPatch patch =
                build_patch(lam, chain, cov_orient == "E1" ? EField::E1 : EField::E2,
                            HexWindow{{0, 0}, cov_radius});
            patch.center2 = center2;
            if (!cov_star.empty()) star_connect(patch, cov_star[0]);
            ValidateReport rep = validate(patch);
            if (!cov_dump.empty()) write_output(cov_dump, patch_to_json(patch).dump() + "\n");
            if (!cov_svg.empty()) {
                RenderOptions opts;
                opts.top_curves = cov_top;
                write_output(cov_svg, render_patch_svg(patch, opts));
            }
            json out = to_json(rep);
            out["symmetry"] = to_json(symmetry_check(patch));
            write_output(cov_report, out.dump(2) + "\n");
            return rep.pass() ? 0 : 1;
        }
        if (*fro) {
            Lambda lam = Lambda::parse(fro_lambda);
            TCurve curve = realize(gen_T(lam));
            auto [L, R] = split_LR(curve);
            json out{{"lambda", lam.str()},
                     {"left", to_json(L)},
                     {"right", to_json(R)}};
            bool ok = true;
            if (fro_check) {
                FrontierLawReport rep = frontier_law_report(curve, lam);
                out["laws"] = to_json(rep);
                ok = rep.pass;
            }
            write_output(fro_out, out.dump(2) + "\n");
            return ok ? 0 : 1;
        }
        if (*cls) {
            LambdaRule rule = LambdaRule::parse(cls_lambda);
            std::optional<PSeqRule> pseq;
            if (!cls_pseq.empty()) pseq = PSeqRule::parse(cls_pseq);
            std::optional<XChain> chain;
            if (!cls_chain.empty()) chain = XChain::parse(cls_chain);
            try {
                CaseTag tag = classify(rule, pseq, chain, cls_horizon);
                std::cout << to_json(tag).dump(2) << "\n";
                return 0;
            } catch (const InconsistentInput& e) {
                return exit_fail(std::string("InconsistentInput: ") + e.what());
            }
        }
        if (*lis) {
            CoveringPatch a = patch_from_json(json::parse(read_input(lis_patch)));
            CoveringPatch b = lis_patch_b.empty()
                                  ? a
                                  : patch_from_json(json::parse(read_input(lis_patch_b)));
            LisoResult res =
                liso_search(a, parse_point(lis_x), b, parse_point(lis_y), lis_n);
            std::cout << to_json(res).dump(2) << "\n";
            return res.found ? 0 : 1;
        }
        if (*ren) {
            RenderOptions opts;
            opts.top_curves = ren_top;
            opts.lattice_underlay = ren_lattice;
            std::string svg;
            if (!ren_lambda.empty()) {
                svg = render_svg({realize(gen_T(Lambda::parse(ren_lambda)))}, opts);
            } else {
                json j = json::parse(read_input(ren_in));
                if (j.contains("format"))
                    svg = render_patch_svg(patch_from_json(j), opts);
                else
                    svg = render_svg({tcurve_from_json(j)}, opts);
            }
            write_output(ren_out, svg);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
