#pragma once

#include <string>
#include <vector>

#include "cubeflow/diagram.hpp"
#include "cubeflow/f2.hpp"

namespace cubeflow {

struct BraidWord {
    int strands = 0;
    std::vector<int> letters;  // +i / -i for the i-th elementary braid, 1-based
};

/* Builder for diagrams described by local geometry instead of a finished PD
 * code.  A crossing has four ports in counterclockwise rotation order with
 * the under-strand on the {0,2} diagonal; edges are declared as port pairs.
 * Orientations are chosen per component when the PD code is emitted, and
 * edges are renumbered consecutively along each component. */
class ProtoDiagram {
public:
    int add_crossing() {
        ncross_++;
        return ncross_ - 1;
    }
    static int port(int crossing, int slot) { return 4 * crossing + slot; }
    void connect(int p1, int p2) { arcs_.push_back({p1, p2}); }

    int crossings() const { return ncross_; }
    LinkDiagram finalize(std::string name = "") const;

private:
    int ncross_ = 0;
    std::vector<std::pair<int, int>> arcs_;
};

LinkDiagram braid_closure_diagram(const BraidWord& w, std::string name = "");

/* Numerator closure of the rational tangle built from the twist vector by
 * alternating bottom and right twist batches (Conway's construction). */
LinkDiagram rational_diagram(const std::vector<int>& twists, std::string name = "");

LinkDiagram connect_sum(const LinkDiagram& a, const LinkDiagram& b, std::string name = "");

int component_count(const LinkDiagram& d);
bool is_alternating(const LinkDiagram& d);

/* Vogel's algorithm: repeatedly slide one Seifert-circle arc over another
 * across a face bordered incoherently, until the Seifert circles are
 * coherently nested; then read the diagram as a braid closure. */
BraidWord to_braid(const LinkDiagram& d);

/* V + V^T for the disc-and-band Seifert surface of a braid closure. */
SymIntMatrix braid_symmetric_seifert_form(const BraidWord& w);

}  // namespace cubeflow
