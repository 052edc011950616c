#include "cubeflow/oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubeflow/braid.hpp"

namespace cubeflow::oracles {

namespace {

// Labels of one resolution: bit i set = circle i carries x.
// Basis of the reduced subcomplex at a vertex: marked circle always x.
struct VertexBasis {
    int circles = 0;
    int marked = 0;
    std::vector<uint32_t> states;  // each includes the marked bit
};

int find_marked(const ResolvedDiagram& r, int basepoint_label) {
    for (int i = 0; i < int(r.circles.size()); ++i)
        for (int e : r.circles[i])
            if (e == basepoint_label) return i;
    // 0-crossing unknot: single circle with no recorded edges
    if (r.circles.size() == 1) return 0;
    throw std::invalid_argument("basepoint edge not found in resolution");
}

}  // namespace

RankTable frobenius_kh_reduced(const LinkDiagram& d, int basepoint_edge) {
    const int l = d.crossings();
    if (l > LinkDiagram::default_max_crossings())
        throw std::invalid_argument("crossing bound exceeded");
    if (basepoint_edge < 0) basepoint_edge = l ? d.edge_label(0) : 0;
    auto [np, nn] = l ? d.crossing_signs() : std::pair{0, 0};

    std::vector<ResolvedDiagram> res(std::size_t(1) << l);
    std::vector<VertexBasis> bases(std::size_t(1) << l);
    for (CubeVertex v = 0; v < (CubeVertex(1) << l); ++v) {
        res[v] = d.resolve(v);
        VertexBasis& b = bases[v];
        b.circles = int(res[v].circle_count());
        b.marked = find_marked(res[v], basepoint_edge);
        for (uint32_t s = 0; s < (uint32_t(1) << b.circles); ++s)
            if (s & (uint32_t(1) << b.marked)) b.states.push_back(s);
    }

    // Global (t, q) grading; group basis elements by (t, q).
    auto grading = [&](CubeVertex v, uint32_t state) {
        int w = vertex_weight(v);
        int k = __builtin_popcount(state);
        int deg = bases[v].circles - 2 * k;
        int t = w - nn;
        int q = deg + w + np - 2 * nn + 1;
        return std::pair{t, q};
    };

    std::map<std::pair<int, int>, std::vector<std::pair<CubeVertex, uint32_t>>> slices;
    std::map<std::pair<CubeVertex, uint32_t>, int> index_in_slice;
    for (CubeVertex v = 0; v < (CubeVertex(1) << l); ++v)
        for (uint32_t s : bases[v].states) {
            auto g = grading(v, s);
            index_in_slice[{v, s}] = int(slices[g].size());
            slices[g].push_back({v, s});
        }

    // Differential of one state along one cube edge, as a list of target states.
    auto edge_images = [&](const CubeEdgeData& e, uint32_t state) {
        std::vector<uint32_t> out;
        const VertexBasis& fb = bases[e.from];
        auto carry = [&](uint32_t tgt_bits_from_untouched, uint32_t extra) {
            out.push_back(tgt_bits_from_untouched | extra);
        };
        uint32_t carried = 0;
        for (int i = 0; i < int(fb.circles); ++i) {
            if (e.untouched[i] >= 0 && (state & (uint32_t(1) << i)))
                carried |= uint32_t(1) << e.untouched[i];
        }
        if (e.merge) {
            bool xa = state & (uint32_t(1) << e.a), xb = state & (uint32_t(1) << e.b);
            if (xa && xb) return out;                       // m(x,x) = 0
            carry(carried, (xa || xb) ? (uint32_t(1) << e.c) : 0);  // m(x,1)=x, m(1,1)=1
        } else {
            bool xc = state & (uint32_t(1) << e.c);
            if (xc) {
                carry(carried, (uint32_t(1) << e.a) | (uint32_t(1) << e.b));  // x -> x (x) x
            } else {
                carry(carried, uint32_t(1) << e.a);  // 1 -> 1 (x) x + x (x) 1
                carry(carried, uint32_t(1) << e.b);
            }
        }
        return out;
    };

    // Precompute edges out of each vertex.
    std::vector<std::vector<CubeEdgeData>> out_edges(std::size_t(1) << l);
    for (CubeVertex v = 0; v < (CubeVertex(1) << l); ++v)
        for (int k = 0; k < l; ++k)
            if (!((v >> k) & 1))
                out_edges[v].push_back(d.cube_edge(res[v], res[v | (CubeVertex(1) << k)], k));

    // Rank of d restricted to each slice; homology rank per (t, q).
    std::map<std::pair<int, int>, std::size_t> dranks;
    for (auto& [g, basis] : slices) {
        auto tgt_it = slices.find({g.first + 1, g.second});
        if (tgt_it == slices.end()) continue;
        F2Matrix m(tgt_it->second.size(), basis.size());
        for (std::size_t col = 0; col < basis.size(); ++col) {
            auto [v, s] = basis[col];
            for (const auto& e : out_edges[v])
                for (uint32_t img : edge_images(e, s)) {
                    // reduced subcomplex: image keeps the marked circle at x
                    m.flip(std::size_t(index_in_slice.at({e.to, img})), col);
                }
        }
        dranks[g] = rank(m);
    }

    RankTable table;
    for (auto& [g, basis] : slices) {
        long long h = (long long)basis.size();
        auto out_it = dranks.find(g);
        if (out_it != dranks.end()) h -= (long long)out_it->second;
        auto in_it = dranks.find({g.first - 1, g.second});
        if (in_it != dranks.end()) h -= (long long)in_it->second;
        table.add(g.first, g.second, h);
    }
    return table;
}

LaurentPoly kauffman_jones(const LinkDiagram& d) {
    const int l = d.crossings();
    // Bracket in the Kauffman variable A.  The A-smoothing of (a,b,c,d) is
    // the one pairing slots {0,1},{2,3} (digit 0); this is frozen by the
    // requirement V(right trefoil) = q + q^3 - q^4 (see tests).
    LaurentPoly loopfactor;  // -A^2 - A^(-2)
    loopfactor.add(-1, 2);
    loopfactor.add(-1, -2);
    LaurentPoly bracket;
    for (CubeVertex v = 0; v < (CubeVertex(1) << l); ++v) {
        int a_count = l - vertex_weight(v);
        int c = d.circle_count(v);
        LaurentPoly term = LaurentPoly::term(1, a_count - (l - a_count));
        for (int i = 0; i < c - 1; ++i) term = term * loopfactor;
        bracket = bracket + term;
    }
    int writhe = 0;
    if (l) {
        auto [np, nn] = d.crossing_signs();
        writhe = np - nn;
    }
    // f = (-A)^(-3w) * bracket
    LaurentPoly f = bracket.shifted(-3 * writhe);
    if (writhe % 2) {
        LaurentPoly neg;
        for (auto& [e, c] : f.coeffs()) neg.add(-c, e);
        f = neg;
    }
    // Substitute q = A^(-4); report in powers of q^(1/2), i.e. exponent -e/2.
    LaurentPoly jones;
    for (auto& [e, c] : f.coeffs()) {
        if (e % 2) throw std::logic_error("odd bracket exponent");
        jones.add(c, -e / 2);
    }
    return jones;
}

SeifertData seifert_data(const LinkDiagram& d) {
    BraidWord w = to_braid(d);
    SeifertData out;
    out.strands = w.strands;
    out.braid_word = w.letters;
    out.sym = braid_symmetric_seifert_form(w);
    return out;
}

LinkSignature seifert_signature(const LinkDiagram& d) {
    SeifertData sd = seifert_data(d);
    FormInvariants inv = signature_det_nullity(sd.sym);
    LinkSignature s;
    s.sigma = -inv.signature;
    s.det = inv.determinant < 0 ? BigInt(-inv.determinant) : inv.determinant;
    s.nullity = inv.nullity;
    return s;
}

}  // namespace cubeflow::oracles
