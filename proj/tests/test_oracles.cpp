#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubeflow/braid.hpp"
#include "cubeflow/oracles.hpp"

using namespace cubeflow;
using namespace cubeflow::oracles;

namespace {

LinkDiagram right_trefoil() {
    return LinkDiagram({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}, "trefoil_r");
}
LinkDiagram left_trefoil() {
    return LinkDiagram({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, "trefoil_l");
}

LaurentPoly q_poly(std::initializer_list<std::pair<int, int>> terms) {
    // exponent given in plain q units; stored in q^(1/2) units
    LaurentPoly p;
    for (auto [c, e] : terms) p.add(c, 2 * e);
    return p;
}

}  // namespace

TEST_CASE("jones of unknots and trefoils") {
    CHECK(kauffman_jones(LinkDiagram(std::vector<std::array<int,4>>{})) == q_poly({{1, 0}}));
    CHECK(kauffman_jones(LinkDiagram({{1, 1, 2, 2}})) == q_poly({{1, 0}}));  // kinked unknot
    // V(right trefoil) = q + q^3 - q^4
    CHECK(kauffman_jones(right_trefoil()) == q_poly({{1, 1}, {1, 3}, {-1, 4}}));
    CHECK(kauffman_jones(left_trefoil()) == q_poly({{1, -1}, {1, -3}, {-1, -4}}));
    CHECK(std::abs(kauffman_jones(right_trefoil()).eval_q_minus_one()) == 3);
}

TEST_CASE("jones of figure eight") {
    LinkDiagram f8 = braid_closure_diagram({3, {1, -2, 1, -2}}, "fig8");
    // V(4_1) = q^-2 - q^-1 + 1 - q + q^2
    CHECK(kauffman_jones(f8) == q_poly({{1, -2}, {-1, -1}, {1, 0}, {-1, 1}, {1, 2}}));
    CHECK(std::abs(kauffman_jones(f8).eval_q_minus_one()) == 5);
}

TEST_CASE("reduced Frobenius Khovanov: unknot and trefoils") {
    RankTable u = frobenius_kh_reduced(LinkDiagram(std::vector<std::array<int,4>>{}));
    CHECK(u.total() == 1);
    CHECK(u.ranks.at({0, 0}) == 1);

    RankTable t = frobenius_kh_reduced(right_trefoil());
    CHECK(t.total() == 3);
    // thin: all classes on delta = q/2 - t = 1
    for (auto& [tq, r] : t.ranks) CHECK(tq.second - 2 * tq.first == 2);
    CHECK(t.ranks.count({0, 2}) == 1);
    CHECK(t.ranks.count({2, 6}) == 1);
    CHECK(t.ranks.count({3, 8}) == 1);

    RankTable tl = frobenius_kh_reduced(left_trefoil());
    CHECK(tl.total() == 3);
    for (auto& [tq, r] : tl.ranks) CHECK(tq.second - 2 * tq.first == -2);
}

TEST_CASE("graded Euler characteristic equals Jones") {
    for (auto d : {right_trefoil(), left_trefoil(),
                   braid_closure_diagram({3, {1, -2, 1, -2}}, "fig8"),
                   rational_diagram({2, 1, 2}, "b(8?,..)"),
                   braid_closure_diagram({3, {1, 2, 1, 2, 1, 2, 1, 2}}, "t34")}) {
        if (component_count(d) != 1) continue;
        RankTable kh = frobenius_kh_reduced(d);
        CHECK(kh.poincare().jones_specialization() == kauffman_jones(d));
    }
}

TEST_CASE("basepoint independence over F2") {
    for (auto d : {right_trefoil(), braid_closure_diagram({3, {1, -2, 1, -2}}, "fig8")}) {
        RankTable ref = frobenius_kh_reduced(d);
        for (int e = 0; e < d.edge_count(); ++e)
            CHECK(frobenius_kh_reduced(d, d.edge_label(e)) == ref);
    }
}

TEST_CASE("seifert signature anchors") {
    auto s = seifert_signature(right_trefoil());
    CHECK(s.sigma == 2);
    CHECK(s.det == 3);
    CHECK(s.nullity == 0);

    auto sl = seifert_signature(left_trefoil());
    CHECK(sl.sigma == -2);
    CHECK(sl.det == 3);

    auto f8 = seifert_signature(braid_closure_diagram({3, {1, -2, 1, -2}}, "fig8"));
    CHECK(f8.sigma == 0);
    CHECK(f8.det == 5);
    CHECK(f8.nullity == 0);
}

TEST_CASE("seifert signature torus knots") {
    // positive torus knots with the paper's convention sigma(T(2,3)) = +2
    auto t25 = seifert_signature(braid_closure_diagram({2, {1, 1, 1, 1, 1}}, "t25"));
    CHECK(t25.sigma == 4);
    CHECK(t25.det == 5);
    auto t27 = seifert_signature(braid_closure_diagram({2, std::vector<int>(7, 1)}, "t27"));
    CHECK(t27.sigma == 6);
    CHECK(t27.det == 7);
    auto t34 = seifert_signature(braid_closure_diagram({3, {1, 2, 1, 2, 1, 2, 1, 2}}, "t34"));
    CHECK(t34.sigma == 6);
    CHECK(t34.det == 3);
    auto t35 = seifert_signature(braid_closure_diagram({3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}, "t35"));
    CHECK(t35.sigma == 8);
    CHECK(t35.det == 1);
    std::vector<int> w37;
    for (int i = 0; i < 7; ++i) { w37.push_back(1); w37.push_back(2); }
    auto t37 = seifert_signature(braid_closure_diagram({3, w37}, "t37"));
    CHECK(t37.sigma == 8);
    CHECK(t37.det == 1);
}

TEST_CASE("seifert signature of connect sums") {
    LinkDiagram granny = connect_sum(right_trefoil(), right_trefoil(), "granny");
    auto g = seifert_signature(granny);
    CHECK(g.sigma == 4);
    CHECK(g.det == 9);
    LinkDiagram square = connect_sum(right_trefoil(), left_trefoil(), "square");
    auto s = seifert_signature(square);
    CHECK(s.sigma == 0);
    CHECK(s.det == 9);
}

TEST_CASE("vogel braid conversion is invariant-preserving") {
    for (auto d : {right_trefoil(), left_trefoil(),
                   rational_diagram({2, 2}, "fig8r"),
                   rational_diagram({3, 2}, "b52"),
                   rational_diagram({2, 1, 2}, "b?"),
                   rational_diagram({4, 3}, "b?2")}) {
        if (component_count(d) != 1) continue;
        BraidWord w = to_braid(d);
        LinkDiagram redrawn = braid_closure_diagram(w, "redrawn");
        CHECK(kauffman_jones(redrawn) == kauffman_jones(d));
    }
}

TEST_CASE("oracle self-consistency: |V(-1)| = det") {
    for (auto d : {right_trefoil(), rational_diagram({2, 2}, "f8"),
                   rational_diagram({3, 1, 2}, "bx"),
                   braid_closure_diagram({3, {1, 2, 1, 2, 1, 2, 1, 2}}, "t34")}) {
        if (component_count(d) != 1) continue;
        long long vm1 = std::abs(kauffman_jones(d).eval_q_minus_one());
        CHECK(BigInt(vm1) == seifert_signature(d).det);
    }
}
