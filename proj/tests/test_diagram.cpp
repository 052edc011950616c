#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "cubeflow/braid.hpp"
#include "cubeflow/diagram.hpp"

using namespace cubeflow;

namespace {

LinkDiagram right_trefoil() {
    return LinkDiagram({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}, "trefoil_r");
}
LinkDiagram left_trefoil() {
    // mirror: reverse each tuple's rotation keeping the under-strand first
    return LinkDiagram({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, "trefoil_l");
}

}  // namespace

TEST_CASE("pd validation") {
    CHECK_THROWS(LinkDiagram({{1, 2, 3, 4}}));                 // labels occur once
    CHECK_NOTHROW(right_trefoil());
    CHECK(right_trefoil().connected());
}

TEST_CASE("0-crossing unknot") {
    LinkDiagram u({}, "unknot");
    CHECK(u.resolve(0).circle_count() == 1);
    CHECK(u.circle_count(0) == 1);
    auto [np, nn] = std::pair{0, 0};
    CHECK(np == 0);
    CHECK(nn == 0);
}

TEST_CASE("trefoil resolution circle counts") {
    LinkDiagram t = right_trefoil();
    // D(010) has one circle
    CHECK(t.resolve(0b010).circle_count() == 1);
    int expect[8] = {2, 1, 1, 2, 1, 2, 2, 3};  // indexed by mask
    for (CubeVertex v = 0; v < 8; ++v) {
        CHECK(t.circle_count(v) == expect[v]);
        CHECK(int(t.resolve(v).circle_count()) == expect[v]);
    }
}

TEST_CASE("every cube edge changes circle count by one") {
    for (auto d : {right_trefoil(), left_trefoil()}) {
        for (CubeVertex v = 0; v < 8; ++v)
            for (int k = 0; k < 3; ++k) {
                if ((v >> k) & 1) continue;
                int c0 = d.circle_count(v);
                int c1 = d.circle_count(v | (1u << k));
                CHECK(std::abs(c0 - c1) == 1);
                auto e = d.cube_edge(v, k);
                CHECK(e.merge == (c1 == c0 - 1));
            }
    }
}

TEST_CASE("cube counts") {
    LinkDiagram kink({{1, 2, 2, 1}});  // unknot with one negative kink
    auto cu = kink.cube();
    CHECK(cu.circle_counts.size() == 2);
    CHECK(cu.edges.size() == 1);

    auto tc = right_trefoil().cube();
    CHECK(tc.circle_counts.size() == 8);
    CHECK(tc.edges.size() == 12);
}

TEST_CASE("crossing signs") {
    auto [p1, n1] = right_trefoil().crossing_signs();
    CHECK(p1 == 3);
    CHECK(n1 == 0);
    auto [p2, n2] = left_trefoil().crossing_signs();
    CHECK(p2 == 0);
    CHECK(n2 == 3);
}

TEST_CASE("kink signs") {
    LinkDiagram pos_kink({{1, 1, 2, 2}});
    LinkDiagram neg_kink({{1, 2, 2, 1}});
    CHECK(pos_kink.crossing_signs() == std::pair{1, 0});
    CHECK(neg_kink.crossing_signs() == std::pair{0, 1});
}

TEST_CASE("resolve independent of crossing order up to circle relabeling") {
    LinkDiagram t = right_trefoil();
    std::vector<std::array<int, 4>> pd = t.pd();
    std::vector<int> perm = {2, 0, 1};
    std::vector<std::array<int, 4>> pd2;
    for (int i : perm) pd2.push_back(pd[i]);
    LinkDiagram t2(pd2);
    for (CubeVertex v = 0; v < 8; ++v) {
        // permute digits accordingly: digit i of v2 corresponds to crossing perm[i]
        CubeVertex v2 = 0;
        for (int i = 0; i < 3; ++i)
            if ((v >> perm[i]) & 1) v2 |= 1u << i;
        auto canon = [](const ResolvedDiagram& r) {
            std::set<std::multiset<int>> s;
            for (auto& c : r.circles) s.insert(std::multiset<int>(c.begin(), c.end()));
            return s;
        };
        CHECK(canon(t.resolve(v)) == canon(t2.resolve(v2)));
    }
}

TEST_CASE("faces satisfy Euler formula") {
    for (auto d : {right_trefoil(), left_trefoil()}) {
        auto fd = d.faces();
        CHECK(fd.nfaces == d.crossings() + 2);
    }
}

TEST_CASE("braid closure diagrams") {
    BraidWord tref{2, {1, 1, 1}};
    LinkDiagram d = braid_closure_diagram(tref, "t23");
    CHECK(d.crossings() == 3);
    CHECK(component_count(d) == 1);
    CHECK(d.connected());
    auto [np, nn] = d.crossing_signs();
    CHECK(np == 3);
    CHECK(nn == 0);
    CHECK(is_alternating(d));

    BraidWord tref_l{2, {-1, -1, -1}};
    auto [np2, nn2] = braid_closure_diagram(tref_l).crossing_signs();
    CHECK(np2 == 0);
    CHECK(nn2 == 3);

    BraidWord fig8{3, {1, -2, 1, -2}};
    LinkDiagram f = braid_closure_diagram(fig8, "fig8");
    CHECK(f.crossings() == 4);
    CHECK(component_count(f) == 1);
    CHECK(is_alternating(f));
    auto [fp, fn] = f.crossing_signs();
    CHECK(fp == 2);
    CHECK(fn == 2);

    BraidWord t34{3, {1, 2, 1, 2, 1, 2, 1, 2}};
    LinkDiagram t = braid_closure_diagram(t34, "t34");
    CHECK(component_count(t) == 1);
    CHECK(!is_alternating(t));
}

TEST_CASE("rational diagrams") {
    LinkDiagram t3 = rational_diagram({3}, "b(3,1)");
    CHECK(t3.crossings() == 3);
    CHECK(component_count(t3) == 1);
    CHECK(is_alternating(t3));
    // one full twist region: the trefoil
    CHECK(t3.connected());

    LinkDiagram f8 = rational_diagram({2, 2}, "b(5,2)");
    CHECK(f8.crossings() == 4);
    CHECK(component_count(f8) == 1);
    CHECK(is_alternating(f8));

    LinkDiagram hopf = rational_diagram({2}, "hopf");
    CHECK(component_count(hopf) == 2);
}

TEST_CASE("connect sum") {
    LinkDiagram g = connect_sum(right_trefoil(), right_trefoil(), "granny");
    CHECK(g.crossings() == 6);
    CHECK(component_count(g) == 1);
    CHECK(g.connected());
    auto [np, nn] = g.crossing_signs();
    CHECK(np + nn == 6);
}
