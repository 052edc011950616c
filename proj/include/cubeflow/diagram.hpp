#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cubeflow {

/* A cube vertex for a diagram with l crossings: digit i of the mask is the
 * smoothing (0 or 1) chosen at crossing i. */
using CubeVertex = uint32_t;

inline int vertex_weight(CubeVertex v) { return __builtin_popcount(v); }

struct ResolvedDiagram {
    CubeVertex vertex = 0;

    // Each circle is the cyclic sequence of edge labels in traversal order.
    std::vector<std::vector<int>> circles;

    // One record per traversal of a smoothing site.  After edge `pos` of
    // circle `circle`, the traversal runs through the site of `crossing`
    // entering at `enter_slot` and leaving at `exit_slot`.  `forward` is true
    // when the arc is traversed in rotation order (slot s -> s+1), which puts
    // the channel between the two smoothing arcs on the left of the traversal.
    struct SiteVisit {
        int crossing = -1;
        int circle = -1;
        int pos = -1;
        int enter_slot = -1;
        int exit_slot = -1;
        bool forward = false;
    };
    // visits[k] holds the two traversals of crossing k's site, in traversal
    // discovery order.
    std::vector<std::array<SiteVisit, 2>> visits;

    std::size_t circle_count() const { return circles.size(); }
};

struct CubeEdgeData {
    CubeVertex from = 0, to = 0;
    int crossing = -1;
    bool merge = false;  // merge: c(to) = c(from) - 1; split: +1
    // merge:  circles a, b of `from` map to circle c of `to`
    // split:  circle c of `from` maps to circles a, b of `to`
    int a = -1, b = -1, c = -1;
    // For every circle of `from` not involved above, its image in `to`.
    std::vector<int> untouched;  // untouched[i] = image circle index, -1 for a/b (merge) or c (split)
};

struct DiagramCube {
    int l = 0;
    std::vector<int> circle_counts;  // indexed by vertex mask
    std::vector<CubeEdgeData> edges;
};

struct FaceData {
    int nfaces = 0;
    // corner k of crossing c lies between rotation slots k and k+1 (mod 4)
    std::vector<std::array<int, 4>> corner_face;
    std::vector<int> face_of_dart;  // dart id = 2*edge_index + side
};

/* PD-coded link diagram.  Each crossing is a tuple (a,b,c,d) of edge labels
 * listed counterclockwise starting from the incoming under-strand, so the
 * under-strand runs a -> c. */
class LinkDiagram {
public:
    LinkDiagram() = default;
    explicit LinkDiagram(std::vector<std::array<int, 4>> pd, std::string name = "");

    const std::string& name() const { return name_; }
    int crossings() const { return int(pd_.size()); }
    int edge_count() const { return int(labels_.size()); }
    const std::vector<std::array<int, 4>>& pd() const { return pd_; }

    // Both occurrences (crossing, slot) of the edge with internal index e.
    std::array<std::pair<int, int>, 2> occurrences(int e) const { return occ_[e]; }
    int edge_index(int label) const;
    int edge_label(int e) const { return labels_[e]; }

    bool connected() const;

    ResolvedDiagram resolve(CubeVertex v) const;
    int circle_count(CubeVertex v) const;  // union-find fast path

    DiagramCube cube(int max_crossings = default_max_crossings()) const;
    CubeEdgeData cube_edge(CubeVertex from, int crossing) const;
    CubeEdgeData cube_edge(const ResolvedDiagram& from, const ResolvedDiagram& to, int crossing) const;

    std::pair<int, int> crossing_signs() const;  // (n_plus, n_minus)
    int crossing_sign(int c) const;              // +1 or -1

    // For each edge, which occurrence (0/1) is its arrival end.
    std::vector<int> edge_orientations() const { return edge_heads(); }

    FaceData faces() const;

    static int default_max_crossings();

private:
    void validate();
    // direction[e] = occurrence index (0/1) at which edge e *arrives*.
    std::vector<int> edge_heads() const;

    std::string name_;
    std::vector<std::array<int, 4>> pd_;
    std::vector<int> labels_;                                // sorted distinct labels
    std::vector<std::array<std::pair<int, int>, 2>> occ_;    // per edge index
    std::vector<std::array<int, 4>> pd_idx_;                 // pd with edge indices
};

}  // namespace cubeflow
