#include "doctest.h"
#include "terfold/frontier.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace terfold;

namespace {
Lambda lam(const char* s) { return Lambda::parse(s); }

std::vector<EdgeKey> sorted(std::vector<EdgeKey> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Apex-rule oracle that enumerates candidate sides over a bounding box
// instead of walking the vertex set.
std::vector<EdgeKey> oracle_frontier(const TCurve& c) {
    auto vs = c.vertices();
    std::set<std::pair<int64_t, int64_t>> on;
    int64_t lo_a = 0, hi_a = 0, lo_b = 0, hi_b = 0;
    for (EPoint v : vs) {
        on.insert({v.a, v.b});
        lo_a = std::min(lo_a, v.a), hi_a = std::max(hi_a, v.a);
        lo_b = std::min(lo_b, v.b), hi_b = std::max(hi_b, v.b);
    }
    auto has = [&](EPoint p) { return on.count({p.a, p.b}) != 0; };
    std::vector<EdgeKey> out;
    for (int64_t a = lo_a - 1; a <= hi_a + 1; ++a)
        for (int64_t b = lo_b - 1; b <= hi_b + 1; ++b)
            for (int axis = 0; axis < 3; ++axis) {
                EPoint p{a, b};
                if (!has(p) || !has(p + dir_unit(axis))) continue;
                auto [l, r] = apexes(p, axis);
                if ((int)has(l) + (int)has(r) == 1) out.push_back({p, axis});
            }
    return sorted(out);
}
}  // namespace

TEST_CASE("frontier_edges of the 1-folding curve") {
    TCurve c = realize(gen_T(lam("+")));
    auto fe = sorted(frontier_edges(c));
    std::vector<EdgeKey> expect = {
        edge_key({0, 0}, 1),  // [0, w]
        edge_key({0, 1}, 0),  // [w, 1+w]
        edge_key({0, 0}, 0),  // [0, 1]
        edge_key({1, 0}, 1),  // [1, 1+w]
    };
    CHECK(fe == sorted(expect));
    // the interior diagonal [(1,0),(0,1)] is excluded: both apexes on the curve
    CHECK(!std::count(fe.begin(), fe.end(), edge_key({1, 0}, 2)));
    CHECK_THROWS_AS(frontier_edges(realize(FoldSeq::parse("+"))), TooShort);
}

TEST_CASE("frontier against the bounding-box oracle") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 1 + (int)(rng() % 5);
        Lambda l;
        for (int i = 0; i < n; ++i) l.entries.push_back(rng() & 1 ? 1 : -1);
        TCurve c = realize(gen_T(l));
        CHECK(sorted(frontier_edges(c)) == oracle_frontier(c));
    }
    // a short non-folding t-curve path
    TCurve zig = realize(FoldSeq::parse("+-+-"), {0, 0}, 0);
    CHECK(sorted(frontier_edges(zig)) == oracle_frontier(zig));
}

TEST_CASE("region") {
    TCurve c = realize(gen_T(lam("+")));
    Region reg = region(c);
    CHECK(reg.triangles.size() == 2);
    CHECK(reg.boundary.size() == 4);
    CHECK(reg.simple);
    CHECK(reg.boundary == sorted(frontier_edges(c)));

    // closed triangle path: one triangle, boundary of 3 sides
    TCurve tri = realize(FoldSeq::parse("++"));
    Region rt = region(tri);
    CHECK(rt.triangles.size() == 1);
    CHECK(rt.boundary.size() == 3);

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 5 + (int)(rng() % 5);  // up to 9-folding
        Lambda l;
        for (int i = 0; i < n; ++i) l.entries.push_back(rng() & 1 ? 1 : -1);
        TCurve cur = realize(gen_T(l));
        CHECK(region(cur).boundary == sorted(frontier_edges(cur)));
    }
}

TEST_CASE("split_LR anchors and the mirror symmetry") {
    TCurve plus = realize(gen_T(lam("+")));
    auto [L, R] = split_LR(plus);
    CHECK(L.vertices == std::vector<EPoint>{{0, 0}, {0, 1}, {1, 1}});
    CHECK(R.vertices == std::vector<EPoint>{{0, 0}, {1, 0}, {1, 1}});
    CHECK(L.angles == std::vector<int8_t>{-1});
    CHECK(R.angles == std::vector<int8_t>{+1});
    CHECK(L.split_index == 1);

    // mirror curve: F_L(-) is the reflection (a,b) -> (a+b,-b) of F_R(+)
    auto [Lm, Rm] = split_LR(realize(gen_T(lam("-"))));
    std::vector<EPoint> reflected;
    for (EPoint v : R.vertices) reflected.push_back({v.a + v.b, -v.b});
    CHECK(Lm.vertices == reflected);

    auto [L3, R3] = split_LR(realize(gen_T(lam("+-+"))));
    CHECK(L3.edge_count() == 8);
    CHECK(R3.edge_count() == 8);

    CHECK_THROWS_AS(split_LR(realize(FoldSeq::parse("++"))), NotSimple);
}

TEST_CASE("F_L and F_R meet only at the endpoints (2-folding)") {
    for (uint32_t mask = 0; mask < 4; ++mask) {
        Lambda l;
        l.entries.push_back(mask & 1 ? 1 : -1);
        l.entries.push_back(mask & 2 ? 1 : -1);
        TCurve c = realize(gen_T(l));
        auto [L, R] = split_LR(c);
        CHECK(L.edge_count() == 4);
        CHECK(R.edge_count() == 4);
        std::set<std::pair<int64_t, int64_t>> meet;
        std::set<std::pair<int64_t, int64_t>> lset;
        for (EPoint v : L.vertices) lset.insert({v.a, v.b});
        for (EPoint v : R.vertices)
            if (lset.count({v.a, v.b})) meet.insert({v.a, v.b});
        CHECK(meet.size() == 2);
    }
}

TEST_CASE("decompose") {
    TCurve one = realize(gen_T(lam("+")));
    auto d1 = decompose(one, lam("+"));
    CHECK(d1.split_index == 1);
    CHECK(d1.verified);

    // lambda_2 = +1: F_LI(C) = F_LI(C^I) . F_LS(C^M) as vertex lists
    {
        Lambda l = lam("-+");
        TCurve c = realize(gen_T(l));
        auto [L, R] = split_LR(c);
        auto d = decompose(c, l);
        CHECK(d.verified);
        auto vs = c.vertices();
        auto dirs = c.directions();
        TCurve ci = realize(gen_T(lam("-")), vs[0], dirs[0]);
        TCurve cm = realize(gen_T(lam("-")), vs[3], dirs[3]);
        auto [Li, Ri] = split_LR(ci);
        auto [Lm, Rm] = split_LR(cm);
        // the two half paths share the junction vertex
        REQUIRE(Li.vertices[(size_t)Li.split_index] ==
                Lm.vertices[(size_t)Lm.split_index]);
        std::vector<EPoint> expect(Li.vertices.begin(),
                                   Li.vertices.begin() + Li.split_index + 1);
        expect.insert(expect.end(), Lm.vertices.begin() + Lm.split_index + 1,
                      Lm.vertices.end());
        std::vector<EPoint> got(L.vertices.begin(),
                                L.vertices.begin() + d.split_index + 1);
        CHECK(got == expect);
    }
    // lambda_2 = -1: F_LI(C) = F_L(C^I)
    {
        Lambda l = lam("+-");
        TCurve c = realize(gen_T(l));
        auto [L, R] = split_LR(c);
        auto d = decompose(c, l);
        CHECK(d.verified);
        TCurve ci = realize(gen_T(lam("+")), {0, 0}, 0);
        auto [Li, Ri] = split_LR(ci);
        std::vector<EPoint> head(L.vertices.begin(),
                                 L.vertices.begin() + d.split_index + 1);
        CHECK(head == Li.vertices);
    }
}

TEST_CASE("frontier sign laws") {
    // n=2, Lambda=(+,+): alpha_1 = lambda_2 = +1, alpha_2 = -1, alpha_3 = -1
    TCurve c = realize(gen_T(lam("++")));
    auto [L, R] = split_LR(c);
    CHECK(L.angles == std::vector<int8_t>{+1, -1, -1});
    CHECK(frontier_law_report(c, lam("++")).pass);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 1 + (int)(rng() % 7);
        Lambda l;
        for (int i = 0; i < n; ++i) l.entries.push_back(rng() & 1 ? 1 : -1);
        CHECK(frontier_law_report(realize(gen_T(l)), l).pass);
    }
}

TEST_CASE("frontier residue scan") {
    Lambda l;
    std::mt19937_64 rng(41);
    for (int i = 0; i < 10; ++i) l.entries.push_back(rng() & 1 ? 1 : -1);
    TCurve c = realize(gen_T(l));
    auto [L, R] = split_LR(c);
    auto res = frontier_residue_scan(L, 5);
    CHECK(res.found_all);
    CHECK(res.nested);
    for (int k = 1; k <= 5; ++k) {
        REQUIRE(!res.levels[(size_t)k].residues.empty());
        CHECK(res.levels[(size_t)k].residues.front() == (int64_t)1 << (k - 1));
    }

    // synthetic staircase: signs alternate but there is no W structure
    FrontierPath fake;
    fake.side = 'L';
    fake.anchor = {0, 0};
    EPoint v{0, 0};
    int d = 0;
    for (int i = 0; i <= 64; ++i) {
        fake.vertices.push_back(v);
        v = v + dir_unit(d);
        d = (i % 2 == 0) ? 1 : 0;
    }
    fake.angles = std::vector<int8_t>(63);
    for (size_t i = 0; i < fake.angles.size(); ++i)
        fake.angles[i] = (i % 2 == 0) ? 1 : -1;
    auto bad = frontier_residue_scan(fake, 4);
    CHECK(!bad.found_all);
    // ... but its k=0 row exists: the signs alternate totally
    REQUIRE(!bad.levels.empty());
    CHECK(bad.levels[0].residues == std::vector<int64_t>{0});
}

TEST_CASE("inside/outside law for region sides") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + (int)(rng() % 6);
        Lambda l;
        for (int i = 0; i < n; ++i) l.entries.push_back(rng() & 1 ? 1 : -1);
        TCurve c = realize(gen_T(l));
        Region reg = region(c);
        EdgeSet support = c.edge_set();
        std::set<std::pair<int64_t, int64_t>> on;
        for (EPoint v : c.vertices()) on.insert({v.a, v.b});
        std::unordered_map<EdgeKey, int, EdgeKeyHash> count;
        for (const TriKey& t : reg.triangles) {
            if (t.up) {
                ++count[EdgeKey{t.p, 0}];
                ++count[EdgeKey{t.p, 1}];
                ++count[EdgeKey{t.p + dir_unit(0), 2}];
            } else {
                EPoint q = t.p + dir_unit(5);
                ++count[EdgeKey{t.p, 0}];
                ++count[EdgeKey{q, 1}];
                ++count[EdgeKey{q, 2}];
            }
        }
        for (auto [a, b] : on) {
            for (int axis = 0; axis < 3; ++axis) {
                EdgeKey e{{a, b}, axis};
                EPoint o = e.other_end();
                if (!on.count({o.a, o.b})) continue;
                auto it = count.find(e);
                int cnt = it == count.end() ? 0 : it->second;
                if (cnt == 2) CHECK(support.count(e));   // strictly inside
                if (cnt == 0) CHECK(!support.count(e));  // detached from it
            }
        }
    }
}
