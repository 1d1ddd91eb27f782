#ifndef WALKMAT_CDC_HPP
#define WALKMAT_CDC_HPP

#include "walkmat/graph.hpp"

namespace walkmat {

/* Canonical double covering: two copies of the vertex set with (u,0)~(v,1)
   iff u~v in the base. Vertices 0..n-1 are layer 0 and n..2n-1 are layer 1,
   so the adjacency matrix has the block shape (O A; A O) under the natural
   ordering. Always bipartite with the layers as parts. */
struct CdcGraph {
    int base_n = 0;
    Graph graph;

    int layer(int v) const { return v < base_n ? 0 : 1; }
};

// Throws std::invalid_argument when 2 * g.n exceeds 64.
CdcGraph cdc(const Graph& g);

} // namespace walkmat

#endif
