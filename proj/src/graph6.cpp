#include "walkmat/graph6.hpp"

#include <fstream>
#include <stdexcept>

namespace walkmat {

namespace {
constexpr int kBias = 63;
} // namespace

Graph parse_graph6(const std::string& line) {
    if (line.empty())
        throw std::invalid_argument("graph6: empty record");
    const unsigned char size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte < kBias || size_byte > 126)
        throw std::invalid_argument("graph6: size byte out of range");
    if (size_byte == 126)
        throw std::invalid_argument("graph6: long form (n > 62) not supported");
    const int n = size_byte - kBias;

    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + nbytes)
        throw std::invalid_argument("graph6: payload length mismatch");

    Graph g(n);
    int bit = 0;
    int u = 0, v = 1; // current upper-triangle position, column major
    for (int k = 0; k < nbytes; ++k) {
        const unsigned char byte = static_cast<unsigned char>(line[1 + k]);
        if (byte < kBias || byte > 126)
            throw std::invalid_argument("graph6: data byte out of range");
        const unsigned val = byte - kBias;
        for (int b = 5; b >= 0; --b, ++bit) {
            const unsigned on = (val >> b) & 1;
            if (bit < nbits) {
                if (on) g.add_edge(u, v);
                if (++u == v) { u = 0; ++v; }
            } else if (on) {
                throw std::invalid_argument("graph6: nonzero padding bits");
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    if (g.n > 62)
        throw std::invalid_argument("graph6: only n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(g.n + kBias));
    unsigned val = 0;
    int nb = 0;
    for (int v = 1; v < g.n; ++v) {
        for (int u = 0; u < v; ++u) {
            val = (val << 1) | (g.has_edge(u, v) ? 1u : 0u);
            if (++nb == 6) {
                out.push_back(static_cast<char>(val + kBias));
                val = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>((val << (6 - nb)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::vector<Graph> graphs;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return graphs;
}

} // namespace walkmat
