#include "walkmat/corpus.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "walkmat/canon.hpp"

namespace walkmat {

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_graphs: negative order");
    if (n > 12) throw std::invalid_argument("enumerate_graphs: order too large");
    if (n == 0) return {Graph(0)};

    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        // Keyed by certificate so iteration order (and the final corpus
        // order) is independent of how the extensions were produced.
        std::map<Certificate, Graph> seen;
        for (const Graph& g : level) {
            uint64_t subsets = uint64_t{1} << (m - 1);
            for (uint64_t mask = 0; mask < subsets; ++mask) {
                Graph ext = add_isolated(g, 1);
                for (int v = 0; v < m - 1; ++v)
                    if (mask >> v & 1) ext.add_edge(m - 1, v);
                CanonResult canon = canonical_form(ext, {});
                Certificate cert;
                cert.push_back(static_cast<char>(ext.n));
                cert += canon.bits;
                if (seen.find(cert) == seen.end())
                    seen.emplace(std::move(cert), ext.relabeled(canon.order));
            }
        }
        level.clear();
        level.reserve(seen.size());
        for (auto& [cert, g] : seen) level.push_back(std::move(g));
    }
    return level;
}

} // namespace walkmat
