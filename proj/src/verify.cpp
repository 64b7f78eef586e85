#include "terfold/verify.hpp"

#include <algorithm>
#include <random>

#include "terfold/analysis.hpp"
#include "terfold/frontier.hpp"
#include "terfold/svg.hpp"

namespace terfold::verify {

namespace {

struct Checks {
    json list = json::array();
    bool pass = true;

    void add(const std::string& name, bool ok, json detail = {}) {
        json row{{"name", name}, {"pass", ok}};
        if (!detail.is_null() && !detail.empty()) row["detail"] = std::move(detail);
        list.push_back(std::move(row));
        pass = pass && ok;
    }
};

Suite finish(const std::string& name, Checks& c, json params) {
    Suite s;
    s.name = name;
    s.pass = c.pass;
    s.report = {{"suite", name},
                {"pass", c.pass},
                {"params", std::move(params)},
                {"checks", std::move(c.list)}};
    return s;
}

std::vector<Lambda> all_lambdas(int n) {
    std::vector<Lambda> out;
    out.reserve((size_t)1 << n);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        Lambda l;
        for (int i = 0; i < n; ++i)
            l.entries.push_back((mask >> i) & 1 ? +1 : -1);
        out.push_back(std::move(l));
    }
    return out;
}

Lambda random_lambda(std::mt19937_64& rng, int n) {
    Lambda l;
    for (int i = 0; i < n; ++i) l.entries.push_back(rng() & 1 ? +1 : -1);
    return l;
}

}  // namespace

Suite palindrome(int max_n) {
    Checks c;
    bool length_ok = true, prefix_ok = true, bar_ok = true, balance_ok = true,
         position_ok = true;
    for (int n = 1; n <= max_n; ++n) {
        for (const Lambda& lam : all_lambdas(n)) {
            FoldSeq t = gen_T(lam);
            length_ok &= (int64_t)t.size() == pow3(n) - 1;
            Lambda head{std::vector<int8_t>(lam.entries.begin(),
                                            lam.entries.end() - 1)};
            FoldSeq tp = gen_T(head);
            prefix_ok &= std::equal(tp.signs.begin(), tp.signs.end(),
                                    t.signs.begin());
            bar_ok &= bar(t).signs == t.signs;
            int64_t sum = 0;
            for (int8_t s : t.signs) sum += s;
            balance_ok &= sum == 0;
            for (int k = 0; k < n; ++k) {
                const int64_t step = pow3(k), period = 3 * step;
                for (int64_t p = step; p <= (int64_t)t.size(); p += period) {
                    position_ok &= t.at_abs(p) == lam.at1((size_t)k + 1);
                    if (p + step <= (int64_t)t.size())
                        position_ok &= t.at_abs(p + step) == -lam.at1((size_t)k + 1);
                }
            }
        }
    }
    c.add("length_3n_minus_1", length_ok);
    c.add("prefix_property", prefix_ok);
    c.add("bar_invariance", bar_ok);
    c.add("balanced_signs", balance_ok);
    c.add("position_law", position_ok);
    return finish("palindrome", c, {{"max_n", max_n}});
}

Suite self_avoid(int max_exhaustive, int rand_n, int rand_samples, uint64_t seed) {
    Checks c;
    bool exhaustive_ok = true;
    for (int n = 1; n <= max_exhaustive; ++n)
        for (const Lambda& lam : all_lambdas(n))
            exhaustive_ok &= !check_self_avoiding(realize(gen_T(lam))).has_value();
    c.add("exhaustive", exhaustive_ok, {{"max_n", max_exhaustive}});

    std::mt19937_64 rng(seed);
    bool random_ok = true;
    for (int i = 0; i < rand_samples; ++i) {
        Lambda lam = random_lambda(rng, rand_n);
        random_ok &= !check_self_avoiding(realize(gen_T(lam))).has_value();
    }
    c.add("randomized", random_ok, {{"n", rand_n}, {"samples", rand_samples}});
    return finish("self-avoid", c,
                  {{"max_exhaustive", max_exhaustive},
                   {"rand_n", rand_n},
                   {"rand_samples", rand_samples},
                   {"seed", seed}});
}

Suite residue(int max_n) {
    Checks c;
    bool extract_ok = true, delta_seq_ok = true, delta_curve_ok = true,
         norm_ratio_ok = true;
    for (int n = 1; n <= max_n; ++n) {
        for (const Lambda& lam : all_lambdas(n)) {
            FoldSeq t = gen_T(lam);
            extract_ok &= extract_lambda(t, n).lambda == lam;

            Lambda tail{std::vector<int8_t>(lam.entries.begin() + 1,
                                            lam.entries.end())};
            delta_seq_ok &= delta_seq(t).signs == gen_T(tail).signs;

            TCurve cur = realize(t);
            TCurve dc = delta_curve(cur);
            TCurve expect = realize(dc.turns, dc.origin, dc.dir0);
            // Frame mapping: scale the unit realization by theta about origin.
            auto got = dc.vertices();
            auto unit = expect.vertices();
            bool same = dc.turns.signs == delta_seq(t).signs &&
                        got.size() == unit.size();
            for (size_t i = 0; same && i < got.size(); ++i)
                same = got[i] == dc.origin + kTheta * (unit[i] - dc.origin);
            delta_curve_ok &= same;
            // Every third vertex of the source curve.
            auto src = cur.vertices();
            for (size_t i = 0; delta_curve_ok && i < got.size(); ++i)
                delta_curve_ok &= got[i] == src[3 * i];

            norm_ratio_ok &= cur.endpoint().norm_sq() == pow3(n);
            // Delta keeps the endpoints; its unit-frame norm drops by 3 exactly.
            norm_ratio_ok &= dc.endpoint() == cur.endpoint();
            norm_ratio_ok &= cur.endpoint().norm_sq() ==
                             3 * (expect.endpoint() - dc.origin).norm_sq();
        }
    }
    c.add("extract_round_trip", extract_ok);
    c.add("delta_seq_vs_tail", delta_seq_ok);
    c.add("delta_commutation", delta_curve_ok);
    c.add("endpoint_norms", norm_ratio_ok);
    return finish("residue", c, {{"max_n", max_n}});
}

Suite diameter(int max_exhaustive, int rand_n, int rand_samples, uint64_t seed) {
    Checks c;
    bool bound_ok = true;
    for (int n = 1; n <= max_exhaustive; ++n) {
        RootThree r = rho(n);
        for (const Lambda& lam : all_lambdas(n))
            bound_ok &= le_rho_sq(diameter_sq(realize(gen_T(lam))), r);
    }
    c.add("bound_exhaustive", bound_ok, {{"max_n", max_exhaustive}});

    bool attained = true;
    for (const Lambda& lam : all_lambdas(1))
        attained &= eq_rho_sq(diameter_sq(realize(gen_T(lam))), rho(1));
    c.add("rho1_attained", attained);

    std::mt19937_64 rng(seed);
    bool rand_ok = true;
    RootThree r = rho(rand_n);
    for (int i = 0; i < rand_samples; ++i)
        rand_ok &=
            le_rho_sq(diameter_sq(realize(gen_T(random_lambda(rng, rand_n)))), r);
    c.add("bound_randomized", rand_ok, {{"n", rand_n}, {"samples", rand_samples}});
    return finish("diameter", c,
                  {{"max_exhaustive", max_exhaustive},
                   {"rand_n", rand_n},
                   {"rand_samples", rand_samples},
                   {"seed", seed}});
}

Suite coverage(int max_pairs) {
    Checks c;
    std::vector<int64_t> minima;
    for (int n = 1; n <= max_pairs; ++n) {
        int64_t min_k = INT64_MAX;
        for (const Lambda& lam : all_lambdas(2 * n)) {
            TCurve cur = realize(gen_T(lam));
            min_k = std::min(min_k, max_covered_triangle(cur.edge_set()).size);
        }
        minima.push_back(min_k);
    }
    c.add("k1_exact", minima.size() >= 1 && minima[0] == 1, {{"k1", minima[0]}});
    if (max_pairs >= 2) c.add("k2_at_least_3", minima[1] >= 3, {{"k2", minima[1]}});
    bool pow_ok = true, chain_ok = true;
    for (int n = 1; n <= max_pairs; ++n) {
        pow_ok &= minima[(size_t)n - 1] >= (int64_t)1 << (n - 1);
        if (n >= 3)
            chain_ok &= minima[(size_t)n - 1] >= 3 * minima[(size_t)n - 2] - 3;
    }
    c.add("covers_2_pow", pow_ok, {{"minima", minima}});
    c.add("growth_chain", chain_ok);
    return finish("coverage", c, {{"max_pairs", max_pairs}});
}

Suite frontier(int max_exhaustive, int max_rand_n, int rand_samples, uint64_t seed) {
    Checks c;
    bool laws_ok = true;
    for (int n = 1; n <= max_exhaustive; ++n)
        for (const Lambda& lam : all_lambdas(n))
            laws_ok &= frontier_law_report(realize(gen_T(lam)), lam).pass;
    c.add("sign_laws_exhaustive", laws_ok, {{"max_n", max_exhaustive}});

    std::mt19937_64 rng(seed);
    bool rand_ok = true, oracle_ok = true;
    for (int i = 0; i < rand_samples; ++i) {
        int n = max_exhaustive + 1 + (int)(rng() % (uint64_t)std::max(
                                               1, max_rand_n - max_exhaustive));
        Lambda lam = random_lambda(rng, n);
        TCurve cur = realize(gen_T(lam));
        rand_ok &= frontier_law_report(cur, lam).pass;
        // region() cross-checks the apex rule internally and throws on mismatch.
        oracle_ok &= region(cur).boundary == frontier_edges(cur);
    }
    c.add("sign_laws_randomized", rand_ok,
          {{"max_n", max_rand_n}, {"samples", rand_samples}});
    c.add("apex_vs_region_boundary", oracle_ok);
    return finish("frontier", c,
                  {{"max_exhaustive", max_exhaustive},
                   {"max_rand_n", max_rand_n},
                   {"rand_samples", rand_samples},
                   {"seed", seed}});
}

namespace {

XChain random_chain(std::mt19937_64& rng, int level) {
    auto small = [&](int64_t r) {
        return EPoint{(int64_t)(rng() % (uint64_t)(2 * r + 1)) - r,
                      (int64_t)(rng() % (uint64_t)(2 * r + 1)) - r};
    };
    XChain chain;
    chain.points.push_back(small(3));
    for (int k = 0; k < level; ++k)
        chain.points.push_back(chain.points.back() + theta_pow(k) * small(1));
    return chain;
}

}  // namespace

Suite covering(int level, int64_t radius, int num_random, uint64_t seed) {
    Checks c;
    std::mt19937_64 rng(seed);
    bool valid_ok = true, extract_ok = true, lattice_ok = true, ends_ok = true;
    for (int i = 0; i < num_random; ++i) {
        Lambda lam = random_lambda(rng, level);
        XChain chain = random_chain(rng, level);
        CoveringPatch patch =
            build_patch(lam, chain, EField::E1, HexWindow{{0, 0}, radius});
        valid_ok &= validate(patch).pass();
        lattice_ok &= level_lattices(patch, 2).consistent;
        const FoldSeq expected = gen_T(lam);
        int64_t complete = 0;
        for (const auto& [id, cv] : patch.curves) {
            if (cv.level != level) continue;
            ++complete;
            FoldSeq turns = patch.curve_turns(id);
            extract_ok &= turns.signs == expected.signs;
            extract_ok &= extract_lambda(turns, level - 1).lambda == lam;
        }
        valid_ok &= complete > 0;
        // Six curve ends around every interior top-level lattice point.
        const EPoint anchor = chain.points.back();
        const int64_t safe = patch.guaranteed_radius() -
                             hex_margin(level == 0 ? RootThree{1, 0} : rho(level));
        std::unordered_map<EPoint, int, EPointHash> ends;
        for (const auto& [id, cv] : patch.curves) {
            if (cv.level != level) continue;
            ends[cv.start] += 1;
            ends[cv.end] += 1;
        }
        for (const auto& [p, cnt] : ends)
            if (hex_norm(p - patch.window.center) <= safe &&
                SublatticeFrame{anchor, level}.contains(p))
                ends_ok &= cnt == 6;
    }
    c.add("patch_valid", valid_ok);
    c.add("reextracted_lambda", extract_ok);
    c.add("level_lattices_agree", lattice_ok);
    c.add("six_ends_per_vertex", ends_ok);
    return finish("covering", c,
                  {{"level", level},
                   {"radius", radius},
                   {"num_random", num_random},
                   {"seed", seed}});
}

Suite covering_cases(int level, int64_t radius, uint64_t seed) {
    Checks c;
    std::mt19937_64 rng(seed);

    // Star case.
    {
        Lambda lam = random_lambda(rng, level);
        CoveringPatch plus = build_patch(lam, XChain::constant_at({0, 0}, level),
                                         EField::E1, HexWindow{{0, 0}, radius});
        CoveringPatch minus = plus;
        star_connect(plus, '+');
        star_connect(minus, '-');
        auto through = [&](const CoveringPatch& p) {
            int64_t count = 0;
            for (const auto& [id, cv] : p.curves) {
                for (EPoint v : p.curve_vertices(id))
                    if (v == EPoint{0, 0}) {
                        ++count;
                        break;
                    }
            }
            return count;
        };
        c.add("star_three_curves",
              through(plus) == 3 && through(minus) == 3 &&
                  validate(plus).pass() && validate(minus).pass());
        c.add("star_rotation_invariant", symmetry_check(plus).rotation_ok);
        bool differ = false;
        for (const auto& [e, s] : plus.segments) {
            const Segment& t = minus.segments.at(e);
            if (s.next.has_value() != t.next.has_value() ||
                (s.next && !(*s.next == *t.next)))
                differ = true;
        }
        c.add("star_modes_differ_at_pairings", differ);
    }

    // Separated case: alternating Lambda around a centered chain.
    {
        LambdaRule alt;
        alt.kind = LambdaRule::Alternating;
        alt.first = -1;
        Lambda lam = alt.materialize(level);
        XChain chain = centered_chain(lam, {0, 0}, 0);
        CoveringPatch patch =
            build_patch(lam, chain, EField::E1, HexWindow{{0, 0}, radius});
        patch.center2 = EPoint{1, 0};  // 2 * tail + u_0
        PSeqRule pm;
        pm.kind = PSeqRule::ConstantRule;
        pm.constant = Mark::M;
        CaseTag tag = classify(alt, pm, std::nullopt, 16);
        c.add("separated_classified", tag.kind == CaseTag::ThreeSeparated,
              to_json(tag));
        SymmetryReport sym = symmetry_check(patch);
        c.add("separated_centrally_symmetric", sym.central_ok, to_json(sym));
        c.add("separated_patch_valid", validate(patch).pass());
    }
    return finish("covering-cases", c,
                  {{"level", level}, {"radius", radius}, {"seed", seed}});
}

Suite liso(uint64_t seed, bool smoke_n2) {
    Checks c;
    std::mt19937_64 rng(seed);
    const Lambda lam4 = Lambda::parse("+-+-");
    const HexWindow w60{{0, 0}, 60};
    CoveringPatch A = build_patch(lam4, XChain::constant_at({0, 0}, 4), EField::E1, w60);
    CoveringPatch B = build_patch(lam4, XChain::constant_at({1, 0}, 4), EField::E1, w60);
    CoveringPatch splus = A, sminus = A;
    star_connect(splus, '+');
    star_connect(sminus, '-');

    auto sample_in = [&](const CoveringPatch& p, int64_t shrink) {
        const int64_t r = p.guaranteed_radius() - shrink;
        while (true) {
            int64_t a = (int64_t)(rng() % (uint64_t)(2 * r + 1)) - r;
            int64_t b = (int64_t)(rng() % (uint64_t)(2 * r + 1)) - r;
            if (hex_norm({a, b}) <= r) return p.window.center + EPoint{a, b};
        }
    };

    {
        LisoSelfReport self = lisop_self(A, 1, 20, rng());
        c.add("self_witnesses", self.all_ok, to_json(self));
        LisoSelfReport star_self = lisop_self(splus, 1, 10, rng());
        c.add("star_self_witnesses", star_self.all_ok, to_json(star_self));
    }
    {
        bool ok = true;
        int64_t worst = 0;
        for (int i = 0; i < 15; ++i) {
            EPoint x = sample_in(A, 3);
            EPoint y = sample_in(B, 18);
            LisoResult res = liso_search(A, x, B, y, 1);
            ok &= res.found && hex_norm(res.witness - y) <= 15;
            worst = std::max(worst, res.found ? hex_norm(res.witness - y) : -1);
        }
        c.add("different_chain_witnesses", ok, {{"max_ring", worst}});
    }
    {
        bool ok = true;
        for (int i = 0; i < 15; ++i) {
            EPoint x = sample_in(splus, 3);
            EPoint y = sample_in(sminus, 18);
            LisoResult res = liso_search(splus, x, sminus, y, 1);
            ok &= res.found && hex_norm(res.witness - y) <= 15;
        }
        c.add("star_plus_minus_witnesses", ok);
    }
    {
        // Opposite orientation never matches: direction parities differ.
        CoveringPatch A2 =
            build_patch(lam4, XChain::constant_at({0, 0}, 4), EField::E2, w60);
        bool all_exhaust = true;
        for (int i = 0; i < 5; ++i) {
            EPoint x = sample_in(A, 3);
            EPoint y = sample_in(A2, 18);
            all_exhaust &= !liso_search(A, x, A2, y, 1).found;
        }
        c.add("opposite_orientation_exhausts", all_exhaust);
    }

    if (smoke_n2) {
        const Lambda lam6p = Lambda::parse("++++++");
        const HexWindow w200{{0, 0}, 200};
        CoveringPatch P =
            build_patch(lam6p, XChain::constant_at({0, 0}, 6), EField::E1, w200);
        {
            CoveringPatch Q =
                build_patch(lam6p, XChain::constant_at({1, 0}, 6), EField::E1, w200);
            bool ok = true;
            for (int i = 0; i < 5; ++i) {
                EPoint x = sample_in(P, 9);
                EPoint y = sample_in(Q, 63);
                LisoResult res = liso_search(P, x, Q, y, 2);
                ok &= res.found && hex_norm(res.witness - y) <= 45;
            }
            c.add("n2_smoke_witnesses", ok);
        }
        {
            Lambda lam6m = Lambda::parse("-+++++");
            CoveringPatch R =
                build_patch(lam6m, XChain::constant_at({0, 0}, 6), EField::E1, w200);
            int exhausted = 0;
            for (int i = 0; i < 5; ++i) {
                EPoint x = i == 0 ? EPoint{0, 0} : sample_in(P, 9);
                EPoint y = i == 0 ? EPoint{0, 0} : sample_in(R, 63);
                if (!liso_search(P, x, R, y, 2).found) ++exhausted;
            }
            c.add("different_lambda_fails", exhausted >= 1,
                  {{"exhausted", exhausted}});
        }
    }
    return finish("liso", c, {{"seed", seed}, {"smoke_n2", smoke_n2}});
}

Suite run(const std::string& name, int n, int samples, uint64_t seed,
          bool exhaustive) {
    if (name == "palindrome") return palindrome(n > 0 ? n : 8);
    if (name == "self-avoid")
        return self_avoid(exhaustive ? (n > 0 ? n : 8) : std::min(n, 8), 12,
                          samples > 0 ? samples : 200, seed);
    if (name == "residue") return residue(n > 0 ? n : 8);
    if (name == "diameter")
        return diameter(8, n > 0 ? n : 10, samples > 0 ? samples : 50, seed);
    if (name == "coverage") return coverage(n > 0 ? std::min(n, 3) : 3);
    if (name == "frontier")
        return frontier(n > 0 ? std::min(n, 7) : 7, 9,
                        samples > 0 ? samples : 30, seed);
    if (name == "covering") {
        Suite a = covering(4, 40, samples > 0 ? samples : 10, seed);
        Suite b = covering_cases(4, 40, seed);
        Suite merged;
        merged.name = "covering";
        merged.pass = a.pass && b.pass;
        merged.report = {{"suite", "covering"},
                         {"pass", merged.pass},
                         {"validity", a.report},
                         {"cases", b.report}};
        return merged;
    }
    if (name == "liso") return liso(seed, n >= 2);
    throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace terfold::verify
