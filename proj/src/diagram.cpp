#include "cubeflow/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cubeflow {

namespace {

// Smoothing arcs at a crossing: digit 0 pairs rotation slots {0,1},{2,3},
// digit 1 pairs {1,2},{3,0}.  (Frozen so that the right-handed trefoil's
// resolution at 010 has one circle; see tests.)
int arc_partner(int slot, int digit) {
    if (digit == 0) return slot ^ 1;             // 0<->1, 2<->3
    static const int p[4] = {3, 2, 1, 0};        // 1<->2, 3<->0
    return p[slot];
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

}  // namespace

int LinkDiagram::default_max_crossings() {
    if (const char* s = std::getenv("CUBEFLOW_MAX_CROSSINGS")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 24;
}

LinkDiagram::LinkDiagram(std::vector<std::array<int, 4>> pd, std::string name)
    : name_(std::move(name)), pd_(std::move(pd)) {
    validate();
}

void LinkDiagram::validate() {
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int c = 0; c < int(pd_.size()); ++c)
        for (int s = 0; s < 4; ++s) occ[pd_[c][s]].push_back({c, s});
    labels_.clear();
    occ_.clear();
    for (auto& [label, where] : occ) {
        if (where.size() != 2)
            throw std::invalid_argument("malformed PD code: edge " + std::to_string(label) +
                                        " occurs " + std::to_string(where.size()) + " times");
        labels_.push_back(label);
        occ_.push_back({where[0], where[1]});
    }
    pd_idx_.assign(pd_.size(), {});
    for (int c = 0; c < int(pd_.size()); ++c)
        for (int s = 0; s < 4; ++s) pd_idx_[c][s] = edge_index(pd_[c][s]);
}

int LinkDiagram::edge_index(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw std::invalid_argument("unknown edge label");
    return int(it - labels_.begin());
}

bool LinkDiagram::connected() const {
    if (pd_.empty()) return true;
    UnionFind uf(int(pd_.size()));
    for (int e = 0; e < edge_count(); ++e) uf.unite(occ_[e][0].first, occ_[e][1].first);
    int root = uf.find(0);
    for (int c = 1; c < int(pd_.size()); ++c)
        if (uf.find(c) != root) return false;
    return true;
}

int LinkDiagram::circle_count(CubeVertex v) const {
    const int l = crossings();
    if (l == 0) return 1;
    UnionFind uf(4 * l);
    for (int c = 0; c < l; ++c) {
        int digit = (v >> c) & 1;
        uf.unite(4 * c + 0, 4 * c + arc_partner(0, digit));
        uf.unite(4 * c + 2, 4 * c + arc_partner(2, digit));
    }
    for (int e = 0; e < edge_count(); ++e) {
        auto [c0, s0] = occ_[e][0];
        auto [c1, s1] = occ_[e][1];
        uf.unite(4 * c0 + s0, 4 * c1 + s1);
    }
    int count = 0;
    for (int p = 0; p < 4 * l; ++p)
        if (uf.find(p) == p) ++count;
    return count;
}

ResolvedDiagram LinkDiagram::resolve(CubeVertex v) const {
    const int l = crossings();
    ResolvedDiagram out;
    out.vertex = v;
    out.visits.assign(l, {});
    std::vector<int> visit_slot(l, 0);
    if (l == 0) {
        out.circles.push_back({});  // 0-crossing unknot: one circle, no edges
        return out;
    }
    if (int(sizeof(CubeVertex)) * 8 <= l) throw std::invalid_argument("too many crossings");

    std::vector<char> edge_done(edge_count(), 0);
    for (int start = 0; start < edge_count(); ++start) {
        if (edge_done[start]) continue;
        // Begin at this edge's occurrence with the smaller (crossing, slot).
        auto [o0, o1] = std::pair{occ_[start][0], occ_[start][1]};
        if (o1 < o0) std::swap(o0, o1);
        std::vector<int> circle;
        const int ci = int(out.circles.size());
        int e = start;
        std::pair<int, int> at = o0;  // arriving here along e
        while (true) {
            circle.push_back(labels_[e]);
            edge_done[e] = 1;
            auto [c, s] = at;
            int digit = (v >> c) & 1;
            int s2 = arc_partner(s, digit);
            ResolvedDiagram::SiteVisit sv;
            sv.crossing = c;
            sv.circle = ci;
            sv.pos = int(circle.size()) - 1;
            sv.enter_slot = s;
            sv.exit_slot = s2;
            sv.forward = (s2 == (s + 1) % 4);
            if (visit_slot[c] > 1) throw std::logic_error("site visited more than twice");
            out.visits[c][visit_slot[c]++] = sv;
            // Leave along the edge at (c, s2) to its other occurrence.
            int e2 = pd_idx_[c][s2];
            auto other = (occ_[e2][0] == std::pair{c, s2}) ? occ_[e2][1] : occ_[e2][0];
            e = e2;
            at = other;
            if (e == start && at == o0) break;
        }
        out.circles.push_back(std::move(circle));
    }
    for (int c = 0; c < l; ++c)
        if (visit_slot[c] != 2) throw std::logic_error("site not visited twice");
    return out;
}

CubeEdgeData LinkDiagram::cube_edge(const ResolvedDiagram& from, const ResolvedDiagram& to,
                                    int crossing) const {
    CubeEdgeData e;
    e.from = from.vertex;
    e.to = to.vertex;
    e.crossing = crossing;
    const auto key = [](const std::vector<int>& c) {
        std::vector<int> k = c;
        std::sort(k.begin(), k.end());
        return k;
    };
    std::map<std::vector<int>, int> to_index;
    for (int j = 0; j < int(to.circles.size()); ++j) to_index[key(to.circles[j])] = j;

    e.untouched.assign(from.circles.size(), -1);
    std::vector<int> from_left, to_used(to.circles.size(), 0);
    for (int i = 0; i < int(from.circles.size()); ++i) {
        auto it = to_index.find(key(from.circles[i]));
        if (it != to_index.end()) {
            e.untouched[i] = it->second;
            to_used[it->second] = 1;
        } else {
            from_left.push_back(i);
        }
    }
    std::vector<int> to_left;
    for (int j = 0; j < int(to.circles.size()); ++j)
        if (!to_used[j]) to_left.push_back(j);

    if (from_left.size() == 2 && to_left.size() == 1) {
        e.merge = true;
        e.a = from_left[0];
        e.b = from_left[1];
        e.c = to_left[0];
    } else if (from_left.size() == 1 && to_left.size() == 2) {
        e.merge = false;
        e.c = from_left[0];
        e.a = to_left[0];
        e.b = to_left[1];
    } else {
        throw std::logic_error("cube edge does not change circles by a merge or split");
    }
    return e;
}

CubeEdgeData LinkDiagram::cube_edge(CubeVertex from, int crossing) const {
    ResolvedDiagram rf = resolve(from);
    ResolvedDiagram rt = resolve(from | (CubeVertex(1) << crossing));
    return cube_edge(rf, rt, crossing);
}

DiagramCube LinkDiagram::cube(int max_crossings) const {
    const int l = crossings();
    if (l > max_crossings)
        throw std::invalid_argument("crossing bound exceeded (set CUBEFLOW_MAX_CROSSINGS)");
    DiagramCube cu;
    cu.l = l;
    cu.circle_counts.resize(std::size_t(1) << l);
    std::vector<ResolvedDiagram> res(std::size_t(1) << l);
    for (CubeVertex v = 0; v < (CubeVertex(1) << l); ++v) {
        res[v] = resolve(v);
        cu.circle_counts[v] = int(res[v].circle_count());
    }
    for (CubeVertex v = 0; v < (CubeVertex(1) << l); ++v)
        for (int k = 0; k < l; ++k)
            if (!((v >> k) & 1)) cu.edges.push_back(cube_edge(res[v], res[v | (CubeVertex(1) << k)], k));
    return cu;
}

std::vector<int> LinkDiagram::edge_heads() const {
    const int l = crossings();
    // Which occurrence of each edge is its arrival end: slot 0 is always an
    // arrival (incoming under-strand) and slot 2 a departure.
    std::vector<int> head(edge_count(), -1);
    auto set_head = [&](int e, int oi) {
        if (head[e] == oi) return;
        if (head[e] != -1) throw std::invalid_argument("orientation inconsistency in PD code");
        head[e] = oi;
    };
    for (int c = 0; c < l; ++c) {
        int ea = pd_idx_[c][0], ec = pd_idx_[c][2];
        for (int oi = 0; oi < 2; ++oi) {
            if (occ_[ea][oi] == std::pair{c, 0}) set_head(ea, oi);
            if (occ_[ec][oi] == std::pair{c, 2}) set_head(ec, 1 - oi);
        }
    }
    // Propagate through the over-strands: when one over edge of a crossing is
    // oriented, the other one is forced.
    auto occ_index = [&](int e, int c, int s) {
        if (occ_[e][0] == std::pair{c, s}) return 0;
        if (occ_[e][1] == std::pair{c, s}) return 1;
        throw std::logic_error("occurrence lookup");
    };
    auto propagate = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int c = 0; c < l; ++c) {
                int eb = pd_idx_[c][1], ed = pd_idx_[c][3];
                int ob = occ_index(eb, c, 1), od = occ_index(ed, c, 3);
                if (head[eb] != -1 && head[ed] == -1) {
                    // over-strand arrives at b iff it departs at d
                    set_head(ed, head[eb] == ob ? 1 - od : od);
                    changed = true;
                } else if (head[ed] != -1 && head[eb] == -1) {
                    set_head(eb, head[ed] == od ? 1 - ob : ob);
                    changed = true;
                }
            }
        }
    };
    propagate();

    // Crossings where both over edges are still unknown: orient by
    // consecutive labels within a component (standard PD numbering).
    UnionFind comp(edge_count());
    for (int c = 0; c < l; ++c) {
        comp.unite(pd_idx_[c][0], pd_idx_[c][2]);
        comp.unite(pd_idx_[c][1], pd_idx_[c][3]);
    }
    std::map<int, std::vector<int>> comps;
    for (int e = 0; e < edge_count(); ++e) comps[comp.find(e)].push_back(e);
    for (int c = 0; c < l; ++c) {
        int eb = pd_idx_[c][1], ed = pd_idx_[c][3];
        if (head[eb] != -1 || head[ed] != -1) continue;
        auto& mates = comps[comp.find(eb)];
        int lb = labels_[eb], ld = labels_[ed];
        int minl = labels_[mates.front()], maxl = labels_[mates.front()];
        for (int e : mates) { minl = std::min(minl, labels_[e]); maxl = std::max(maxl, labels_[e]); }
        bool d_follows_b = (ld == lb + 1) || (lb == maxl && ld == minl);
        bool b_follows_d = (lb == ld + 1) || (ld == maxl && lb == minl);
        if (d_follows_b == b_follows_d)
            throw std::invalid_argument("orientation inconsistency in PD code");
        if (d_follows_b) {
            set_head(eb, occ_index(eb, c, 1));
            set_head(ed, 1 - occ_index(ed, c, 3));
        } else {
            set_head(ed, occ_index(ed, c, 3));
            set_head(eb, 1 - occ_index(eb, c, 1));
        }
        propagate();
    }
    for (int e = 0; e < edge_count(); ++e)
        if (head[e] == -1) throw std::invalid_argument("orientation inconsistency in PD code");
    return head;
}

int LinkDiagram::crossing_sign(int c) const {
    std::vector<int> head = edge_heads();
    int eb = pd_idx_[c][1], ed = pd_idx_[c][3];
    bool over_in_at_d = occ_[ed][head[ed]] == std::pair{c, 3};
    bool over_in_at_b = occ_[eb][head[eb]] == std::pair{c, 1};
    if (over_in_at_d == over_in_at_b)
        throw std::invalid_argument("orientation inconsistency at crossing " + std::to_string(c));
    return over_in_at_d ? +1 : -1;
}

std::pair<int, int> LinkDiagram::crossing_signs() const {
    std::vector<int> head = edge_heads();
    int np = 0, nn = 0;
    for (int c = 0; c < crossings(); ++c) {
        int eb = pd_idx_[c][1], ed = pd_idx_[c][3];
        bool over_in_at_d = occ_[ed][head[ed]] == std::pair{c, 3};
        bool over_in_at_b = occ_[eb][head[eb]] == std::pair{c, 1};
        if (over_in_at_d == over_in_at_b)
            throw std::invalid_argument("orientation inconsistency at crossing " + std::to_string(c));
        (over_in_at_d ? np : nn)++;
    }
    return {np, nn};
}

FaceData LinkDiagram::faces() const {
    const int l = crossings();
    FaceData fd;
    if (l == 0) return fd;
    // Dart 2e+oi points *towards* occurrence oi of edge e.
    const int ndarts = 2 * edge_count();
    std::vector<int> next(ndarts, -1);
    for (int e = 0; e < edge_count(); ++e) {
        for (int oi = 0; oi < 2; ++oi) {
            auto [c, s] = occ_[e][oi];
            int s2 = (s + 1) % 4;
            int e2 = pd_idx_[c][s2];
            int towards = (occ_[e2][0] == std::pair{c, s2}) ? 1 : 0;
            next[2 * e + oi] = 2 * e2 + towards;
        }
    }
    fd.face_of_dart.assign(ndarts, -1);
    for (int d = 0; d < ndarts; ++d) {
        if (fd.face_of_dart[d] != -1) continue;
        int f = fd.nfaces++;
        int x = d;
        while (fd.face_of_dart[x] == -1) {
            fd.face_of_dart[x] = f;
            x = next[x];
        }
    }
    fd.corner_face.assign(l, {-1, -1, -1, -1});
    for (int e = 0; e < edge_count(); ++e)
        for (int oi = 0; oi < 2; ++oi) {
            auto [c, s] = occ_[e][oi];
            fd.corner_face[c][s] = fd.face_of_dart[2 * e + oi];
        }
    if (connected() && fd.nfaces != l + 2)
        throw std::logic_error("face count violates Euler formula; PD code not planar?");
    return fd;
}

}  // namespace cubeflow
