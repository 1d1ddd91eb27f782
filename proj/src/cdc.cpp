#include "walkmat/cdc.hpp"

#include <stdexcept>

namespace walkmat {

CdcGraph cdc(const Graph& g) {
    if (2 * g.n > kMaxOrder)
        throw std::invalid_argument("cdc: doubled order exceeds 64");
    Graph d(2 * g.n);
    for (auto [u, v] : g.edges()) {
        d.add_edge(u, g.n + v);
        d.add_edge(v, g.n + u);
    }
    return CdcGraph{g.n, std::move(d)};
}

} // namespace walkmat
