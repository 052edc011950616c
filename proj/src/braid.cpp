#include "cubeflow/braid.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cubeflow {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(b)] = find(a); }
};

}  // namespace

LinkDiagram ProtoDiagram::finalize(std::string name) const {
    if (ncross_ == 0) return LinkDiagram({}, std::move(name));
    const int nport = 4 * ncross_;
    std::vector<int> arc_at_port(nport, -1);
    for (int i = 0; i < int(arcs_.size()); ++i) {
        auto [p, q] = arcs_[i];
        if (p < 0 || q < 0 || p >= nport || q >= nport || p == q)
            throw std::invalid_argument("ProtoDiagram: bad arc");
        if (arc_at_port[p] != -1 || arc_at_port[q] != -1)
            throw std::invalid_argument("ProtoDiagram: port used twice");
        arc_at_port[p] = i;
        arc_at_port[q] = i;
    }
    for (int p = 0; p < nport; ++p)
        if (arc_at_port[p] == -1) throw std::invalid_argument("ProtoDiagram: open port");

    // Orient each component and label arcs 1.. along the walk.
    std::vector<int> label(arcs_.size(), 0);
    std::vector<char> arrival(nport, 0);
    int next_label = 1;
    for (int start = 0; start < int(arcs_.size()); ++start) {
        if (label[start]) continue;
        int a = start;
        int headport = arcs_[start].second;
        while (true) {
            label[a] = next_label++;
            arrival[headport] = 1;
            int c = headport / 4, s = headport % 4;
            int outport = 4 * c + (s + 2) % 4;
            int a2 = arc_at_port[outport];
            int other = (arcs_[a2].first == outport) ? arcs_[a2].second : arcs_[a2].first;
            if (a2 == start) break;
            if (label[a2]) throw std::logic_error("ProtoDiagram: walk rejoined mid-component");
            a = a2;
            headport = other;
        }
    }

    std::vector<std::array<int, 4>> pd(ncross_);
    for (int c = 0; c < ncross_; ++c) {
        bool at0 = arrival[4 * c + 0], at2 = arrival[4 * c + 2];
        if (at0 == at2) throw std::logic_error("ProtoDiagram: under-strand orientation");
        int rot = at0 ? 0 : 2;
        for (int k = 0; k < 4; ++k) pd[c][k] = label[arc_at_port[4 * c + (rot + k) % 4]];
    }
    return LinkDiagram(std::move(pd), std::move(name));
}

LinkDiagram braid_closure_diagram(const BraidWord& w, std::string name) {
    const int n = w.strands;
    if (n < 1) throw std::invalid_argument("braid: strands < 1");
    ProtoDiagram proto;
    std::vector<int> bottom(n, -1), first_top(n, -1);
    for (int letter : w.letters) {
        int i = std::abs(letter);
        if (i < 1 || i >= n) throw std::invalid_argument("braid: bad letter");
        int c = proto.add_crossing();
        // Ports: positive letters put the strand entering at position i+1 on
        // top; slots are CCW with the under-strand on {0,2}.
        int topL, topR, botL, botR;
        if (letter > 0) {
            topL = ProtoDiagram::port(c, 0); botL = ProtoDiagram::port(c, 1);
            botR = ProtoDiagram::port(c, 2); topR = ProtoDiagram::port(c, 3);
        } else {
            topR = ProtoDiagram::port(c, 0); topL = ProtoDiagram::port(c, 1);
            botL = ProtoDiagram::port(c, 2); botR = ProtoDiagram::port(c, 3);
        }
        auto feed = [&](int pos, int top_port, int bot_port) {
            if (bottom[pos] == -1) first_top[pos] = top_port;
            else proto.connect(bottom[pos], top_port);
            bottom[pos] = bot_port;
        };
        feed(i - 1, topL, botL);
        feed(i, topR, botR);
    }
    for (int p = 0; p < n; ++p) {
        if (bottom[p] == -1) throw std::invalid_argument("braid: unused strand");
        proto.connect(bottom[p], first_top[p]);
    }
    return proto.finalize(std::move(name));
}

LinkDiagram rational_diagram(const std::vector<int>& twists, std::string name) {
    ProtoDiagram proto;
    // Corner attachments: NW=0, NE=1, SW=2, SE=3.  Negative values -1-k mean
    // "bare strand to corner k"; non-negative values are open ports.
    // Start from two vertical strands NW-SW and NE-SE; with the port
    // conventions below this makes the first right-twist batch act as
    // horizontal twists in Conway's sense (numerator of the integer tangle n
    // is the (2,n) torus link).
    int att[4] = {-1 - 2, -1 - 3, -1 - 0, -1 - 1};
    auto attach = [&](int corner, int port) {
        if (att[corner] >= 0)
            proto.connect(att[corner], port);
        else {
            int other = -1 - att[corner];
            if (other == corner) throw std::logic_error("rational: corner loop");
            att[other] = port;
        }
    };
    auto bottom_twist = [&](int sign) {
        int c = proto.add_crossing();
        if (sign > 0) {
            attach(2, ProtoDiagram::port(c, 0));   // SW -> TL
            attach(3, ProtoDiagram::port(c, 3));   // SE -> TR
            att[2] = ProtoDiagram::port(c, 1);     // BL
            att[3] = ProtoDiagram::port(c, 2);     // BR
        } else {
            attach(2, ProtoDiagram::port(c, 1));
            attach(3, ProtoDiagram::port(c, 0));
            att[2] = ProtoDiagram::port(c, 2);
            att[3] = ProtoDiagram::port(c, 3);
        }
    };
    auto right_twist = [&](int sign) {
        int c = proto.add_crossing();
        if (sign > 0) {
            attach(1, ProtoDiagram::port(c, 0));   // NE -> LT
            attach(3, ProtoDiagram::port(c, 1));   // SE -> LB
            att[1] = ProtoDiagram::port(c, 3);     // RT
            att[3] = ProtoDiagram::port(c, 2);     // RB
        } else {
            attach(1, ProtoDiagram::port(c, 3));
            attach(3, ProtoDiagram::port(c, 0));
            att[1] = ProtoDiagram::port(c, 2);
            att[3] = ProtoDiagram::port(c, 1);
        }
    };
    // Right twists first: bottom twists of the 0-tangle are isotopically inert.
    bool bottom = false;
    for (int a : twists) {
        int s = a >= 0 ? 1 : -1;
        for (int k = 0; k < std::abs(a); ++k) {
            if (bottom) bottom_twist(s); else right_twist(s);
        }
        bottom = !bottom;
    }
    auto close = [&](int x, int y) {
        if (att[x] < 0) {
            if (-1 - att[x] == y) throw std::invalid_argument("rational: trivial closure component");
            throw std::logic_error("rational: dangling corner");
        }
        if (att[y] < 0) throw std::logic_error("rational: dangling corner");
        proto.connect(att[x], att[y]);
    };
    close(0, 1);  // NW-NE
    close(2, 3);  // SW-SE
    return proto.finalize(std::move(name));
}

LinkDiagram connect_sum(const LinkDiagram& a, const LinkDiagram& b, std::string name) {
    if (a.crossings() == 0) return LinkDiagram(b.pd(), std::move(name));
    if (b.crossings() == 0) return LinkDiagram(a.pd(), std::move(name));
    int off = 4 * a.crossings();
    int cut_a = a.edge_count() - 1, cut_b = b.edge_count() - 1;
    auto build = [&](bool swapped) {
        ProtoDiagram proto;
        for (int c = 0; c < a.crossings() + b.crossings(); ++c) proto.add_crossing();
        auto add_arcs = [&](const LinkDiagram& d, int port_off, int skip) {
            for (int e = 0; e < d.edge_count(); ++e) {
                if (e == skip) continue;
                auto occ = d.occurrences(e);
                proto.connect(port_off + 4 * occ[0].first + occ[0].second,
                              port_off + 4 * occ[1].first + occ[1].second);
            }
        };
        add_arcs(a, 0, cut_a);
        add_arcs(b, off, cut_b);
        auto oa = a.occurrences(cut_a), ob = b.occurrences(cut_b);
        int p0 = 4 * oa[0].first + oa[0].second, p1 = 4 * oa[1].first + oa[1].second;
        int q0 = off + 4 * ob[0].first + ob[0].second, q1 = off + 4 * ob[1].first + ob[1].second;
        proto.connect(p0, swapped ? q1 : q0);
        proto.connect(p1, swapped ? q0 : q1);
        return proto.finalize(name);
    };
    // Exactly one of the two splices keeps the rotation system planar.
    for (bool swapped : {false, true}) {
        try {
            LinkDiagram d = build(swapped);
            d.faces();
            return d;
        } catch (const std::exception&) {
            if (swapped) throw;
        }
    }
    throw std::logic_error("connect_sum: unreachable");
}

int component_count(const LinkDiagram& d) {
    if (d.crossings() == 0) return 1;
    UnionFind uf(d.edge_count());
    for (int c = 0; c < d.crossings(); ++c) {
        auto& t = d.pd()[c];
        uf.unite(d.edge_index(t[0]), d.edge_index(t[2]));
        uf.unite(d.edge_index(t[1]), d.edge_index(t[3]));
    }
    int n = 0;
    for (int e = 0; e < d.edge_count(); ++e)
        if (uf.find(e) == e) ++n;
    return n;
}

bool is_alternating(const LinkDiagram& d) {
    for (int e = 0; e < d.edge_count(); ++e) {
        auto occ = d.occurrences(e);
        bool u0 = occ[0].second == 0 || occ[0].second == 2;
        bool u1 = occ[1].second == 0 || occ[1].second == 2;
        if (u0 == u1) return false;
    }
    return d.crossings() > 0;
}

namespace {

struct SeifertPicture {
    CubeVertex vertex = 0;
    ResolvedDiagram res;
    std::vector<int> head;            // arrival occurrence per edge
    std::vector<int> circle_of_edge;  // by edge index
    std::vector<int> face_root;       // smoothed-region root per original face
    FaceData fd;
    // flow-side faces per edge (smoothed roots)
    std::vector<int> left_face, right_face;
};

SeifertPicture seifert_picture(const LinkDiagram& d) {
    SeifertPicture sp;
    const int l = d.crossings();
    sp.head = d.edge_orientations();
    CubeVertex v = 0;
    for (int c = 0; c < l; ++c)
        if (d.crossing_sign(c) < 0) v |= CubeVertex(1) << c;
    sp.vertex = v;
    sp.res = d.resolve(v);
    sp.circle_of_edge.assign(d.edge_count(), -1);
    for (int ci = 0; ci < int(sp.res.circles.size()); ++ci)
        for (int e : sp.res.circles[ci]) sp.circle_of_edge[d.edge_index(e)] = ci;
    sp.fd = d.faces();
    UnionFind uf(sp.fd.nfaces);
    for (int c = 0; c < l; ++c) {
        int digit = (v >> c) & 1;
        if (digit == 0)
            uf.unite(sp.fd.corner_face[c][1], sp.fd.corner_face[c][3]);
        else
            uf.unite(sp.fd.corner_face[c][0], sp.fd.corner_face[c][2]);
    }
    sp.face_root.resize(sp.fd.nfaces);
    for (int f = 0; f < sp.fd.nfaces; ++f) sp.face_root[f] = uf.find(f);
    sp.left_face.resize(d.edge_count());
    sp.right_face.resize(d.edge_count());
    for (int e = 0; e < d.edge_count(); ++e) {
        sp.right_face[e] = sp.face_root[sp.fd.face_of_dart[2 * e + sp.head[e]]];
        sp.left_face[e] = sp.face_root[sp.fd.face_of_dart[2 * e + (1 - sp.head[e])]];
    }
    return sp;
}

// One Vogel move: slide edge x over edge y across the face they both border
// with the same flow side.  `left` is true when the face lies on the left of
// both flows.
LinkDiagram vogel_move(const LinkDiagram& d, int x, int y, bool left,
                       const std::vector<int>& head) {
    ProtoDiagram proto;
    const int l = d.crossings();
    for (int c = 0; c < l + 2; ++c) proto.add_crossing();
    for (int e = 0; e < d.edge_count(); ++e) {
        if (e == x || e == y) continue;
        auto occ = d.occurrences(e);
        proto.connect(4 * occ[0].first + occ[0].second, 4 * occ[1].first + occ[1].second);
    }
    auto port_of = [&](int e, int oi) {
        auto occ = d.occurrences(e);
        return 4 * occ[oi].first + occ[oi].second;
    };
    int tail_x = port_of(x, 1 - head[x]), head_x = port_of(x, head[x]);
    int tail_y = port_of(y, 1 - head[y]), head_y = port_of(y, head[y]);
    const int C1 = l, C2 = l + 1;
    // y runs under both new crossings, through C2 then C1 (antiparallel to x).
    proto.connect(tail_y, ProtoDiagram::port(C2, 0));
    proto.connect(ProtoDiagram::port(C2, 2), ProtoDiagram::port(C1, 0));
    proto.connect(ProtoDiagram::port(C1, 2), head_y);
    if (left) {
        proto.connect(tail_x, ProtoDiagram::port(C1, 3));
        proto.connect(ProtoDiagram::port(C1, 1), ProtoDiagram::port(C2, 1));
        proto.connect(ProtoDiagram::port(C2, 3), head_x);
    } else {
        proto.connect(tail_x, ProtoDiagram::port(C1, 1));
        proto.connect(ProtoDiagram::port(C1, 3), ProtoDiagram::port(C2, 3));
        proto.connect(ProtoDiagram::port(C2, 1), head_x);
    }
    return proto.finalize(d.name());
}

}  // namespace

BraidWord to_braid(const LinkDiagram& d0) {
    if (d0.crossings() == 0) return BraidWord{1, {}};
    if (!d0.connected()) throw std::invalid_argument("to_braid: disconnected diagram");

    LinkDiagram d = d0;
    for (int iter = 0;; ++iter) {
        if (iter > 1000) throw std::runtime_error("to_braid: move cap exceeded");
        SeifertPicture sp = seifert_picture(d);
        // defect: a smoothed face bordered on the same flow side by arcs of
        // two distinct Seifert circles
        struct Entry { int circle, edge; };
        std::map<int, std::array<std::vector<Entry>, 2>> by_face;  // side 0 = left
        for (int e = 0; e < d.edge_count(); ++e) {
            by_face[sp.left_face[e]][0].push_back({sp.circle_of_edge[e], e});
            by_face[sp.right_face[e]][1].push_back({sp.circle_of_edge[e], e});
        }
        int mx = -1, my = -1;
        bool mleft = false;
        for (auto& [f, sides] : by_face) {
            for (int s = 0; s < 2 && mx < 0; ++s) {
                auto& v = sides[s];
                for (std::size_t i = 0; i < v.size() && mx < 0; ++i)
                    for (std::size_t j = i + 1; j < v.size(); ++j)
                        if (v[i].circle != v[j].circle) {
                            mx = v[i].edge;
                            my = v[j].edge;
                            mleft = (s == 0);
                            break;
                        }
            }
            if (mx >= 0) break;
        }
        if (mx < 0) break;  // braided
        LinkDiagram next = vogel_move(d, mx, my, mleft, sp.head);
        next.faces();  // planarity check (throws on failure)
        if (next.resolve(seifert_picture(next).vertex).circle_count() != sp.res.circle_count())
            throw std::logic_error("to_braid: move changed Seifert circles");
        d = next;
    }

    // Read the braided diagram.
    SeifertPicture sp = seifert_picture(d);
    const int ncirc = int(sp.res.circle_count());
    // Each circle must see one region on its left and one on its right.
    std::vector<int> cl(ncirc, -1), cr(ncirc, -1);
    for (int e = 0; e < d.edge_count(); ++e) {
        int ci = sp.circle_of_edge[e];
        if (cl[ci] == -1) { cl[ci] = sp.left_face[e]; cr[ci] = sp.right_face[e]; }
        else if (cl[ci] != sp.left_face[e] || cr[ci] != sp.right_face[e])
            throw std::logic_error("to_braid: circle borders several regions per side");
    }
    // Region path
    std::map<int, std::vector<int>> adj;  // region -> circles
    for (int ci = 0; ci < ncirc; ++ci) {
        adj[cl[ci]].push_back(ci);
        adj[cr[ci]].push_back(ci);
    }
    if (int(adj.size()) != ncirc + 1) throw std::logic_error("to_braid: region graph not a tree");
    int start_region = -1;
    for (auto& [r, cs] : adj)
        if (cs.size() == 1) { start_region = r; break; }
    if (start_region == -1) throw std::logic_error("to_braid: region graph has no endpoint");
    std::vector<int> strand_of_circle(ncirc, -1);
    {
        int region = start_region, prev_circle = -1;
        for (int pos = 1; pos <= ncirc; ++pos) {
            int circle = -1;
            for (int ci : adj[region])
                if (ci != prev_circle) { circle = ci; break; }
            if (circle == -1) throw std::logic_error("to_braid: region path broke");
            strand_of_circle[circle] = pos;
            region = (cl[circle] == region) ? cr[circle] : cl[circle];
            prev_circle = circle;
        }
    }

    // Flow-ordered crossing list per circle.
    std::vector<std::vector<int>> order(ncirc);
    for (int ci = 0; ci < ncirc; ++ci) {
        std::vector<std::pair<int, int>> vis;  // (pos, crossing)
        bool aligned = true;
        for (int c = 0; c < d.crossings(); ++c)
            for (auto& sv : sp.res.visits[c])
                if (sv.circle == ci) {
                    vis.push_back({sv.pos, c});
                    int e = d.edge_index(sp.res.circles[ci][sv.pos]);
                    bool al = d.occurrences(e)[sp.head[e]] ==
                              std::pair{sv.crossing, sv.enter_slot};
                    if (vis.size() == 1) aligned = al;
                    else if (al != aligned)
                        throw std::logic_error("to_braid: incoherent circle flow");
                }
        std::sort(vis.begin(), vis.end());
        for (auto& [p, c] : vis) order[ci].push_back(c);
        if (!aligned) std::reverse(order[ci].begin(), order[ci].end());
    }

    // Merge the cyclic per-circle orders into one global cyclic word.
    std::vector<int> strand_circle(ncirc + 1, -1);
    for (int ci = 0; ci < ncirc; ++ci) strand_circle[strand_of_circle[ci]] = ci;
    std::list<int> word;
    std::map<int, std::list<int>::iterator> where;
    auto crossing_strands = [&](int c) {
        int u = strand_of_circle[sp.res.visits[c][0].circle];
        int v = strand_of_circle[sp.res.visits[c][1].circle];
        if (u > v) std::swap(u, v);
        if (v != u + 1) throw std::logic_error("to_braid: crossing joins non-adjacent strands");
        return std::pair{u, v};
    };
    for (int c : order[strand_circle[1]]) where[c] = word.insert(word.end(), c);
    for (int pos = 2; pos <= ncirc; ++pos) {
        auto& O = order[strand_circle[pos]];
        if (O.empty()) continue;
        // rotate so O starts at a crossing already placed
        std::size_t s0 = 0;
        while (s0 < O.size() && !where.count(O[s0])) ++s0;
        if (s0 == O.size()) throw std::logic_error("to_braid: circle shares no crossing");
        auto anchor = where[O[s0]];
        for (std::size_t k = 1; k <= O.size(); ++k) {
            int c = O[(s0 + k) % O.size()];
            if (where.count(c)) { anchor = where[c]; continue; }
            auto it = std::next(anchor);
            anchor = word.insert(it, c);
            where[c] = anchor;
        }
    }

    BraidWord w;
    w.strands = ncirc;
    for (int c : word) {
        auto [u, v] = crossing_strands(c);
        w.letters.push_back(d.crossing_sign(c) > 0 ? u : -u);
    }
    return w;
}

SymIntMatrix braid_symmetric_seifert_form(const BraidWord& w) {
    const int n = w.strands;
    std::vector<std::vector<int>> pos(n);  // letter positions per index
    for (int k = 0; k < int(w.letters.size()); ++k) {
        int i = std::abs(w.letters[k]);
        pos[i].push_back(k);
    }
    struct Gen { int index, top, bot; };
    std::vector<Gen> gens;
    for (int i = 1; i < n; ++i)
        for (std::size_t j = 0; j + 1 < pos[i].size(); ++j)
            gens.push_back({i, pos[i][j], pos[i][j + 1]});

    auto sign_at = [&](int k) { return w.letters[k] > 0 ? 1 : -1; };

    // Frozen by the anchor knots in the tests (both trefoils, figure-eight,
    // torus knots T(2,n), T(3,4), T(3,5), T(3,7), granny and square knots).
    auto shared_letter_entry = [&](int eps) { return -eps; };
    auto interleave_entry = [&](bool g_starts_first) { return g_starts_first ? 1 : -1; };

    SymIntMatrix m(gens.size());
    for (std::size_t a = 0; a < gens.size(); ++a) {
        m.set(a, a, BigInt(-(sign_at(gens[a].top) + sign_at(gens[a].bot))));
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            const Gen &g = gens[a], &h = gens[b];
            BigInt entry = 0;
            if (g.index == h.index) {
                if (g.bot == h.top) entry = shared_letter_entry(sign_at(g.bot));
                else if (h.bot == g.top) entry = shared_letter_entry(sign_at(h.bot));
            } else if (std::abs(g.index - h.index) == 1) {
                bool gh = g.top < h.top && h.top < g.bot && g.bot < h.bot;
                bool hg = h.top < g.top && g.top < h.bot && h.bot < g.bot;
                // orient the rule by the lower braid index
                bool low_first = (g.index < h.index) ? gh : hg;
                if (gh || hg) entry = interleave_entry(low_first);
            }
            if (entry != 0) m.set(a, b, entry);
        }
    }
    return m;
}

}  // namespace cubeflow
