#ifndef LRAMSEY_HYPERGRAPH_HPP
#define LRAMSEY_HYPERGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

namespace lramsey {

// An edge is a sorted tuple of distinct vertices in [0, n).
using Edge = std::vector<int>;

// Uniform hypergraph on vertices [0, n). Edges are canonically sorted
// (within each edge and lexicographically across edges) and unique.
// Instances are treated as immutable after construction.
struct Hypergraph {
    int uniformity = 2;
    int n = 0;
    std::vector<Edge> edges;

    // Validating factory: sorts, canonicalizes, rejects malformed input.
    static Hypergraph make(int n, int uniformity, std::vector<Edge> edges);

    std::size_t edge_count() const { return edges.size(); }
    bool operator==(const Hypergraph&) const = default;
};

// All ell-subsets of [n]. n < ell yields an empty edge set; ell = 0 is rejected.
Hypergraph complete_hypergraph(int n, int ell);

// Pattern families used throughout: K_{1,r}, rK_2, K_r^{(ell)}, path P_{r+1}.
Hypergraph star_pattern(int r);
Hypergraph matching_pattern(int r);
Hypergraph clique_pattern(int r, int ell = 2);
Hypergraph path_pattern(int edges);

// Index of a (sorted) edge in h.edges, or -1.
int edge_index(const Hypergraph& h, const Edge& e);

// Vertex degrees (number of edges at each vertex).
std::vector<int> degrees(const Hypergraph& h);

// An injective placement of a pattern into a colored host; every image
// edge carries `color`.
struct Embedding {
    Hypergraph pattern;
    std::vector<int> vertex_map;  // pattern vertex -> host vertex
    int color = 0;
};

std::string to_string(const Hypergraph& h);

}  // namespace lramsey

#endif
