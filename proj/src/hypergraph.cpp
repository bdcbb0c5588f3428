#include "lramsey/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lramsey {

Hypergraph Hypergraph::make(int n, int uniformity, std::vector<Edge> edges) {
    if (uniformity < 1) throw std::invalid_argument("hypergraph uniformity must be >= 1");
    if (n < 0) throw std::invalid_argument("hypergraph vertex count must be >= 0");
    for (Edge& e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != uniformity)
            throw std::invalid_argument("edge arity differs from uniformity");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("edge has repeated vertices");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edges");
    Hypergraph h;
    h.uniformity = uniformity;
    h.n = n;
    h.edges = std::move(edges);
    return h;
}

Hypergraph complete_hypergraph(int n, int ell) {
    if (ell < 1) throw std::invalid_argument("uniformity 0 is rejected");
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<Edge> edges;
    if (n >= ell) {
        Edge cur(ell);
        for (int i = 0; i < ell; ++i) cur[i] = i;
        while (true) {
            edges.push_back(cur);
            int i = ell - 1;
            while (i >= 0 && cur[i] == n - ell + i) --i;
            if (i < 0) break;
            ++cur[i];
            for (int j = i + 1; j < ell; ++j) cur[j] = cur[j - 1] + 1;
        }
    }
    return Hypergraph::make(n, ell, std::move(edges));
}

Hypergraph star_pattern(int r) {
    if (r < 1) throw std::invalid_argument("star size must be >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= r; ++i) edges.push_back({0, i});
    return Hypergraph::make(r + 1, 2, std::move(edges));
}

Hypergraph matching_pattern(int r) {
    if (r < 1) throw std::invalid_argument("matching size must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i) edges.push_back({2 * i, 2 * i + 1});
    return Hypergraph::make(2 * r, 2, std::move(edges));
}

Hypergraph clique_pattern(int r, int ell) {
    return complete_hypergraph(r, ell);
}

Hypergraph path_pattern(int edges) {
    if (edges < 1) throw std::invalid_argument("path needs at least one edge");
    std::vector<Edge> es;
    for (int i = 0; i < edges; ++i) es.push_back({i, i + 1});
    return Hypergraph::make(edges + 1, 2, std::move(es));
}

int edge_index(const Hypergraph& h, const Edge& e) {
    auto it = std::lower_bound(h.edges.begin(), h.edges.end(), e);
    if (it == h.edges.end() || *it != e) return -1;
    return static_cast<int>(it - h.edges.begin());
}

std::vector<int> degrees(const Hypergraph& h) {
    std::vector<int> deg(h.n, 0);
    for (const Edge& e : h.edges)
        for (int v : e) ++deg[v];
    return deg;
}

std::string to_string(const Hypergraph& h) {
    std::ostringstream os;
    os << h.uniformity << "-graph n=" << h.n << " e=" << h.edges.size() << " {";
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        if (i) os << ",";
        for (std::size_t j = 0; j < h.edges[i].size(); ++j) {
            if (j) os << " ";
            os << h.edges[i][j];
        }
    }
    os << "}";
    return os.str();
}

}  // namespace lramsey
