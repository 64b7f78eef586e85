#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "terfold/analysis.hpp"
#include "terfold/frontier.hpp"
#include "terfold/json_io.hpp"
#include "terfold/svg.hpp"
#include "terfold/verify.hpp"

namespace py = pybind11;
using namespace terfold;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

EPoint from_pair(std::pair<int64_t, int64_t> p) { return {p.first, p.second}; }
std::pair<int64_t, int64_t> to_pair(EPoint p) { return {p.a, p.b}; }

XChain chain_from_list(const std::vector<std::pair<int64_t, int64_t>>& pts) {
    XChain c;
    for (auto p : pts) c.points.push_back(from_pair(p));
    return c;
}

}  // namespace

PYBIND11_MODULE(_terfold, m) {
    m.doc() = "triangular folding curves, coverings and exact lattice checks";

    py::register_exception<NotFolding>(m, "NotFolding");
    py::register_exception<AmbiguousWindow>(m, "AmbiguousWindow");
    py::register_exception<BadResidue>(m, "BadResidue");
    py::register_exception<BadChain>(m, "BadChain");
    py::register_exception<WindowTooSmall>(m, "WindowTooSmall");
    py::register_exception<NoStarPoint>(m, "NoStarPoint");
    py::register_exception<InconsistentInput>(m, "InconsistentInput");
    py::register_exception<OutOfRegion>(m, "OutOfRegion");
    py::register_exception<RegionTooSmall>(m, "RegionTooSmall");
    py::register_exception<TooShort>(m, "TooShort");
    py::register_exception<NotSimple>(m, "NotSimple");

    m.def("gen_t", [](const std::string& lam) { return gen_T(Lambda::parse(lam)).str(); },
          py::arg("lam"), "turn sequence of T_Lambda as a sign string");
    m.def("bar", [](const std::string& s) { return bar(FoldSeq::parse(s)).str(); });
    m.def("delta_seq",
          [](const std::string& s, int64_t origin, int h) {
              FoldSeq d = delta_seq(FoldSeq::parse(s, origin), h);
              return py::make_tuple(d.str(), d.origin_index);
          },
          py::arg("signs"), py::arg("origin") = 1, py::arg("h") = 0);
    m.def("residue_check",
          [](const std::string& s, int64_t origin, int kmax) {
              return json_to_py(to_json(residue_check(FoldSeq::parse(s, origin), kmax)));
          },
          py::arg("signs"), py::arg("origin") = 1, py::arg("kmax") = 2);
    m.def("extract_lambda",
          [](const std::string& s, int64_t origin, int kmax) {
              return json_to_py(to_json(extract_lambda(FoldSeq::parse(s, origin), kmax)));
          },
          py::arg("signs"), py::arg("origin") = 1, py::arg("kmax") = 8);
    m.def("classify_window",
          [](const std::string& s, int64_t origin, int horizon) {
              return json_to_py(to_json(classify_window(FoldSeq::parse(s, origin), horizon)));
          },
          py::arg("signs"), py::arg("origin") = 1, py::arg("horizon") = 2);

    py::class_<TCurve>(m, "TCurve")
        .def(py::init([](const std::string& turns, std::pair<int64_t, int64_t> origin,
                         int dir0) {
                 return realize(FoldSeq::parse(turns), from_pair(origin), dir0);
             }),
             py::arg("turns"), py::arg("origin") = std::make_pair(0, 0),
             py::arg("dir0") = 0)
        .def_property_readonly("turns", [](const TCurve& c) { return c.turns.str(); })
        .def_property_readonly("scale_exp", [](const TCurve& c) { return c.scale_exp; })
        .def_property_readonly("origin", [](const TCurve& c) { return to_pair(c.origin); })
        .def_property_readonly("dir0", [](const TCurve& c) { return c.dir0; })
        .def("vertices",
             [](const TCurve& c) {
                 std::vector<std::pair<int64_t, int64_t>> out;
                 for (EPoint v : c.vertices()) out.push_back(to_pair(v));
                 return out;
             })
        .def("endpoint", [](const TCurve& c) { return to_pair(c.endpoint()); })
        .def("is_self_avoiding",
             [](const TCurve& c) { return !check_self_avoiding(c).has_value(); })
        .def("first_collision",
             [](const TCurve& c) -> py::object {
                 auto col = check_self_avoiding(c);
                 if (!col) return py::none();
                 py::dict d;
                 d["segment_index"] = col->segment_index;
                 d["edge"] = py::make_tuple(col->edge.base.a, col->edge.base.b,
                                            col->edge.axis);
                 return d;
             })
        .def("delta", [](const TCurve& c, int h) { return delta_curve(c, h); },
             py::arg("h") = 0)
        .def("diameter_sq", [](const TCurve& c) { return diameter_sq(c); })
        .def("max_covered_triangle",
             [](const TCurve& c) {
                 auto t = max_covered_triangle(c.edge_set());
                 py::dict d;
                 d["size"] = t.size;
                 d["corner"] = to_pair(t.corner);
                 d["up"] = t.up;
                 return d;
             })
        .def("svg", [](const TCurve& c) { return render_svg({c}); });

    m.def("gen_curve",
          [](const std::string& lam, std::pair<int64_t, int64_t> origin, int dir0) {
              return realize(gen_T(Lambda::parse(lam)), from_pair(origin), dir0);
          },
          py::arg("lam"), py::arg("origin") = std::make_pair(0, 0), py::arg("dir0") = 0,
          "realize the n-folding curve of Lambda");

    m.def("frontier",
          [](const TCurve& c) {
              auto [L, R] = split_LR(c);
              py::dict d;
              d["left"] = json_to_py(to_json(L));
              d["right"] = json_to_py(to_json(R));
              return d;
          });
    m.def("frontier_laws",
          [](const TCurve& c, const std::string& lam) {
              return json_to_py(to_json(frontier_law_report(c, Lambda::parse(lam))));
          });

    py::class_<CoveringPatch>(m, "Patch")
        .def_property_readonly("level", [](const CoveringPatch& p) { return p.level; })
        .def_property_readonly("lambda_str",
                               [](const CoveringPatch& p) { return p.lambda.str(); })
        .def_property_readonly("guaranteed_radius",
                               [](const CoveringPatch& p) { return p.guaranteed_radius(); })
        .def_property_readonly("curve_count",
                               [](const CoveringPatch& p) { return p.curves.size(); })
        .def("validate",
             [](const CoveringPatch& p) { return json_to_py(to_json(validate(p))); })
        .def("level_lattices",
             [](const CoveringPatch& p, int k) {
                 return json_to_py(to_json(level_lattices(p, k)));
             },
             py::arg("k") = 2)
        .def("star_connect",
             [](CoveringPatch& p, const std::string& mode) {
                 star_connect(p, mode.at(0));
             })
        .def("symmetry",
             [](const CoveringPatch& p) { return json_to_py(to_json(symmetry_check(p))); })
        .def("curves_through",
             [](const CoveringPatch& p, std::pair<int64_t, int64_t> pt) {
                 int64_t count = 0;
                 for (const auto& [id, c] : p.curves)
                     for (EPoint v : p.curve_vertices(id))
                         if (v == from_pair(pt)) {
                             ++count;
                             break;
                         }
                 return count;
             })
        .def("svg",
             [](const CoveringPatch& p, int top) {
                 RenderOptions opts;
                 opts.top_curves = top;
                 return render_patch_svg(p, opts);
             },
             py::arg("top") = 0)
        .def("dumps", [](const CoveringPatch& p) { return patch_to_json(p).dump(); });

    m.def("build_patch",
          [](const std::string& lam_str,
             std::optional<std::vector<std::pair<int64_t, int64_t>>> chain,
             int64_t radius, const std::string& orientation, bool centered) {
              Lambda lam = Lambda::parse(lam_str);
              XChain xc;
              std::optional<EPoint> c2;
              if (centered) {
                  xc = centered_chain(lam, {0, 0}, 0);
                  c2 = EPoint{1, 0};
              } else if (chain) {
                  xc = chain_from_list(*chain);
              } else {
                  xc = XChain::constant_at({0, 0}, (int)lam.size());
              }
              CoveringPatch p = build_patch(
                  lam, xc, orientation == "E2" ? EField::E2 : EField::E1,
                  HexWindow{{0, 0}, radius});
              p.center2 = c2;
              return p;
          },
          py::arg("lam"), py::arg("chain") = py::none(), py::arg("radius") = 12,
          py::arg("orientation") = "E1", py::arg("centered") = false);
    m.def("load_patch",
          [](const std::string& text) { return patch_from_json(json::parse(text)); });

    m.def("liso_search",
          [](const CoveringPatch& a, std::pair<int64_t, int64_t> x,
             const CoveringPatch& b, std::pair<int64_t, int64_t> y, int n) {
              return json_to_py(to_json(liso_search(a, from_pair(x), b, from_pair(y), n)));
          });
    m.def("lisop_self",
          [](const CoveringPatch& p, int n, int samples, uint64_t seed) {
              return json_to_py(to_json(lisop_self(p, n, samples, seed)));
          },
          py::arg("patch"), py::arg("n") = 1, py::arg("samples") = 10,
          py::arg("seed") = 12345);

    m.def("classify",
          [](const std::string& lam, std::optional<std::string> pseq,
             std::optional<std::vector<std::pair<int64_t, int64_t>>> chain,
             int horizon) {
              std::optional<PSeqRule> pr;
              if (pseq) pr = PSeqRule::parse(*pseq);
              std::optional<XChain> xc;
              if (chain) xc = chain_from_list(*chain);
              return json_to_py(to_json(classify(LambdaRule::parse(lam), pr, xc, horizon)));
          },
          py::arg("lam"), py::arg("pseq") = py::none(), py::arg("chain") = py::none(),
          py::arg("horizon") = 16);

    m.def("verify_suite",
          [](const std::string& name, int n, int samples, uint64_t seed,
             bool exhaustive) {
              return json_to_py(verify::run(name, n, samples, seed, exhaustive).report);
          },
          py::arg("name"), py::arg("n") = 0, py::arg("samples") = 0,
          py::arg("seed") = 12345, py::arg("exhaustive") = false);
}
