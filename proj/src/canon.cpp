#include "walkmat/canon.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "walkmat/cdc.hpp"

namespace walkmat {

namespace {

using Cells = std::vector<std::vector<int>>;

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/* Individualization-refinement search for the canonical labeling: the leaf
   minimizing (per-level cell-size trace, adjacency bitstring). Equal leaves
   yield automorphism generators, which prune sibling branches through the
   orbits of the prefix-pointwise stabilizer. All branching choices depend
   only on partition structure, never on vertex labels, so the winning leaf
   is the same for every relabeling of the input. */
class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.n) {}

    CanonResult run(Cells cells) {
        std::vector<int> indiv;
        dfs(std::move(cells), 0, indiv);
        return CanonResult{std::move(best_order_), std::move(best_bits_)};
    }

private:
    const Graph& g_;
    int n_;

    std::vector<std::vector<int>> trace_; // reference path, cell sizes per level
    bool have_leaf_ = false;
    std::string best_bits_;
    std::vector<int> best_order_;
    std::vector<std::vector<int>> gens_; // automorphisms as vertex maps

    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t si = 0; si < cells.size() && !changed; ++si) {
                uint64_t smask = 0;
                for (int v : cells[si]) smask |= uint64_t(1) << v;
                for (size_t ci = 0; ci < cells.size(); ++ci) {
                    if (cells[ci].size() <= 1) continue;
                    std::map<int, std::vector<int>> frag; // neighbor count -> members
                    for (int v : cells[ci])
                        frag[std::popcount(g_.adj[v] & smask)].push_back(v);
                    if (frag.size() <= 1) continue;
                    Cells parts;
                    parts.reserve(frag.size());
                    for (auto& [cnt, vs] : frag) parts.push_back(std::move(vs));
                    cells.erase(cells.begin() + ci);
                    cells.insert(cells.begin() + ci,
                                 std::make_move_iterator(parts.begin()),
                                 std::make_move_iterator(parts.end()));
                    changed = true;
                    break;
                }
            }
        }
    }

    static std::vector<int> sizes(const Cells& cells) {
        std::vector<int> s;
        s.reserve(cells.size());
        for (const auto& c : cells) s.push_back(static_cast<int>(c.size()));
        return s;
    }

    std::string leaf_bits(const std::vector<int>& order) const {
        const int nbits = n_ * (n_ - 1) / 2;
        std::string bits((nbits + 7) / 8, '\0');
        int b = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i, ++b)
                if (g_.has_edge(order[i], order[j]))
                    bits[b >> 3] |= static_cast<char>(0x80u >> (b & 7));
        return bits;
    }

    bool fixes(const std::vector<int>& gen, const std::vector<int>& points) const {
        for (int p : points)
            if (gen[p] != p) return false;
        return true;
    }

    void dfs(Cells cells, int depth, std::vector<int>& indiv) {
        refine(cells);
        auto inv = sizes(cells);
        if (depth < static_cast<int>(trace_.size())) {
            if (inv > trace_[depth]) return; // worse than the reference path
            if (inv < trace_[depth]) {
                // better path: it becomes the new reference, old leaf is void
                trace_.resize(depth);
                trace_.push_back(std::move(inv));
                have_leaf_ = false;
                best_bits_.clear();
                best_order_.clear();
            }
        } else {
            trace_.push_back(std::move(inv));
        }

        // target: first smallest non-singleton cell
        int target = -1;
        for (size_t ci = 0; ci < cells.size(); ++ci) {
            if (cells[ci].size() < 2) continue;
            if (target < 0 || cells[ci].size() < cells[target].size())
                target = static_cast<int>(ci);
        }

        if (target < 0) { // discrete: a leaf
            std::vector<int> order;
            order.reserve(n_);
            for (const auto& c : cells) order.push_back(c[0]);
            std::string bits = leaf_bits(order);
            if (!have_leaf_ || bits < best_bits_) {
                have_leaf_ = true;
                best_bits_ = std::move(bits);
                best_order_ = std::move(order);
            } else if (bits == best_bits_) {
                // two labelings of the same form: an automorphism
                std::vector<int> sigma(n_);
                bool identity = true;
                for (int k = 0; k < n_; ++k) {
                    sigma[best_order_[k]] = order[k];
                    identity = identity && best_order_[k] == order[k];
                }
                if (!identity) gens_.push_back(std::move(sigma));
            }
            return;
        }

        std::vector<int> tried;
        const std::vector<int> candidates = cells[target];
        for (int v : candidates) {
            if (!tried.empty()) {
                Dsu orbits(n_);
                for (const auto& gen : gens_)
                    if (fixes(gen, indiv))
                        for (int x = 0; x < n_; ++x) orbits.unite(x, gen[x]);
                bool seen = false;
                for (int u : tried)
                    if (orbits.find(u) == orbits.find(v)) { seen = true; break; }
                if (seen) continue;
            }
            tried.push_back(v);

            Cells child;
            child.reserve(cells.size() + 1);
            for (size_t ci = 0; ci < cells.size(); ++ci) {
                if (static_cast<int>(ci) != target) {
                    child.push_back(cells[ci]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                rest.reserve(cells[ci].size() - 1);
                for (int u : cells[ci])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            indiv.push_back(v);
            dfs(std::move(child), depth + 1, indiv);
            indiv.pop_back();
        }
    }
};

std::vector<int> inverse_perm(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

bool is_permutation(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int x : p) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

} // namespace

CanonResult canonical_form(const Graph& g, const std::vector<int>& colors) {
    if (g.n == 0) return CanonResult{{}, ""};
    Cells cells;
    if (colors.empty()) {
        std::vector<int> all(g.n);
        for (int v = 0; v < g.n; ++v) all[v] = v;
        cells.push_back(std::move(all));
    } else {
        if (static_cast<int>(colors.size()) != g.n)
            throw std::invalid_argument("canonical_form: one color per vertex required");
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < g.n; ++v) by_color[colors[v]].push_back(v);
        for (auto& [c, vs] : by_color) cells.push_back(std::move(vs));
    }
    return CanonSearch(g).run(std::move(cells));
}

Certificate certificate(const Graph& g) {
    if (g.n > 20)
        throw std::invalid_argument("certificate: only n <= 20 supported");
    CanonResult r = canonical_form(g, {});
    Certificate cert;
    cert.reserve(1 + r.bits.size());
    cert.push_back(static_cast<char>(g.n));
    cert += r.bits;
    return cert;
}

std::string certificate_hex(const Certificate& c) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * c.size());
    for (unsigned char b : c) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

std::optional<std::vector<int>> isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n) return std::nullopt;
    if (g.n > 20)
        throw std::invalid_argument("isomorphic: only n <= 20 supported");
    CanonResult rg = canonical_form(g, {});
    CanonResult rh = canonical_form(h, {});
    if (rg.bits != rh.bits) return std::nullopt;
    std::vector<int> sigma(g.n);
    for (int k = 0; k < g.n; ++k) sigma[rg.order[k]] = rh.order[k];
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.has_edge(u, v) != h.has_edge(sigma[u], sigma[v]))
                throw std::logic_error("isomorphic: witness failed verification");
    return sigma;
}

std::optional<TfWitness> tf_isomorphism(const Graph& g, const Graph& h) {
    if (g.n != h.n)
        throw std::invalid_argument("tf_isomorphism: order mismatch");
    if (g.n > 10)
        throw std::invalid_argument("tf_isomorphism: only n <= 10 supported");

    if (certificate(cdc(g).graph) != certificate(cdc(h).graph)) return std::nullopt;

    // Pair isolated vertices off; the CDCs of the cores stay isomorphic
    // because stripping isolated vertices removes exactly the isolated CDC
    // vertices on both sides.
    std::vector<int> gcore_verts, giso, hcore_verts, hiso;
    for (int v = 0; v < g.n; ++v) (g.degree(v) ? gcore_verts : giso).push_back(v);
    for (int v = 0; v < h.n; ++v) (h.degree(v) ? hcore_verts : hiso).push_back(v);
    if (giso.size() != hiso.size())
        throw std::logic_error("tf_isomorphism: CDC certificates match but isolated counts differ");

    const Graph gc = induced_subgraph(g, gcore_verts);
    const Graph hc = induced_subgraph(h, hcore_verts);
    const int nc = gc.n;

    std::vector<int> q(g.n, -1), r(g.n, -1);
    if (nc > 0) {
        // Layer-colored canonical forms of the core CDCs. Isolated-free
        // graphs with isomorphic CDCs always admit a layer-preserving CDC
        // isomorphism, so the colored forms must coincide.
        std::vector<int> layer_colors(2 * nc, 0);
        for (int v = nc; v < 2 * nc; ++v) layer_colors[v] = 1;
        CanonResult cg = canonical_form(cdc(gc).graph, layer_colors);
        CanonResult ch = canonical_form(cdc(hc).graph, layer_colors);
        if (cg.bits != ch.bits)
            throw std::logic_error("tf_isomorphism: no layer-preserving CDC isomorphism found");

        // pi: CDC(gc) -> CDC(hc), layer preserving by construction
        std::vector<int> pos = inverse_perm(cg.order);
        std::vector<int> pi(2 * nc);
        for (int x = 0; x < 2 * nc; ++x) pi[x] = ch.order[pos[x]];
        std::vector<int> phi0(nc), phi1(nc);
        for (int u = 0; u < nc; ++u) {
            if (pi[u] >= nc || pi[nc + u] < nc)
                throw std::logic_error("tf_isomorphism: isomorphism is not layer preserving");
            phi0[u] = pi[u];
            phi1[u] = pi[nc + u] - nc;
        }

        // Straight P has zero off-diagonal blocks, so Q = (P11+P21)^T = P11^T
        // and R = P22+P12 = P22; as index maps these are the inverses of the
        // two layer actions.
        std::vector<int> q_core = inverse_perm(phi0);
        std::vector<int> r_core = inverse_perm(phi1);
        for (int i = 0; i < nc; ++i) {
            q[hcore_verts[i]] = gcore_verts[q_core[i]];
            r[hcore_verts[i]] = gcore_verts[r_core[i]];
        }
    }
    for (size_t t = 0; t < hiso.size(); ++t) {
        q[hiso[t]] = giso[t];
        r[hiso[t]] = giso[t];
    }

    TfWitness w{std::move(q), std::move(r)};
    if (!verify_tf(g, h, w))
        throw std::logic_error("tf_isomorphism: extracted witness failed verification");
    return w;
}

bool verify_tf(const Graph& g, const Graph& h, const TfWitness& w) {
    if (g.n != h.n)
        throw std::invalid_argument("verify_tf: order mismatch");
    if (!is_permutation(w.q, g.n) || !is_permutation(w.r, g.n)) return false;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (h.has_edge(i, j) != g.has_edge(w.q[i], w.r[j])) return false;
    return true;
}

} // namespace walkmat
