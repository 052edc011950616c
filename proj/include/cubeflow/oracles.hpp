#pragma once

#include <vector>

#include "cubeflow/diagram.hpp"
#include "cubeflow/f2.hpp"
#include "cubeflow/poly.hpp"

namespace cubeflow::oracles {

/* Reduced Khovanov homology over F2 by the rank-one Frobenius algebra,
 * as the subcomplex where the marked circle carries x.  The basepoint sits on
 * `basepoint_edge` (default: the lowest edge label). */
RankTable frobenius_kh_reduced(const LinkDiagram& d, int basepoint_edge = -1);

/* Jones polynomial via the Kauffman bracket state sum, returned in powers of
 * q^(1/2) so that V(unknot) = 1 and V(right trefoil) = q + q^3 - q^4. */
LaurentPoly kauffman_jones(const LinkDiagram& d);

/* Seifert matrix of the diagram, via conversion to a braid (Vogel's
 * algorithm) and the disc-and-band surface of the braid closure. */
struct SeifertData {
    int strands = 0;
    std::vector<int> braid_word;  // +i / -i for the i-th elementary braid
    SymIntMatrix sym;             // V + V^T
};
SeifertData seifert_data(const LinkDiagram& d);

/* (sigma, det, nullity) of the link: sigma(L) = -sigma(V + V^T),
 * det(L) = |det(V + V^T)|, nu(L) = nullity(V + V^T).  The right-handed
 * trefoil gets sigma = +2. */
struct LinkSignature {
    long long sigma = 0;
    BigInt det = 1;
    std::size_t nullity = 0;
};
LinkSignature seifert_signature(const LinkDiagram& d);

}  // namespace cubeflow::oracles
