#ifndef LRAMSEY_DECOMP_HPP
#define LRAMSEY_DECOMP_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lramsey/hypergraph.hpp"

namespace lramsey {

enum class PieceKind { PerfectMatching, HamiltonCycle, Cycle, CliqueBlock, BipartiteBlock, Other };

std::string to_string(PieceKind k);
PieceKind piece_kind_from_string(const std::string& s);

// An ordered family of edge-disjoint subgraphs partitioning the host's
// edge set. Pieces live on the host's vertex set.
struct Decomposition {
    Hypergraph host;
    std::vector<Hypergraph> pieces;
    std::vector<PieceKind> kinds;
};

struct DecompReport {
    bool edge_disjoint = false;
    bool covers = false;
    std::vector<int> membership;  // per vertex: pieces holding an edge at it

    bool ok() const { return edge_disjoint && covers; }
    int max_membership() const;
};

// Thrown when the rotational base-cycle search exhausts without success;
// distinct from parameter errors so callers never mistake one for the other.
struct CycleSearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// K_n (n even) into one perfect matching and (n-2)/2 Hamilton cycles.
Decomposition walecki(int n);

// K_n (n odd) into cycles of length m by the rotational difference method:
// difference classes are grouped, each group realized by a base m-cycle in
// Z_n whose rotation orbit covers the group's edges exactly.
Decomposition cycle_decompose(int n, int m);

// K_{(r-1)k} into r-1 clique blocks K_k and binom(r-1,2) bipartite blocks
// K_{k,k} on a balanced vertex partition.
Decomposition star_block_partition(int r, int k);

DecompReport verify_decomposition(const Decomposition& d);

// Builds the cycle graph through the given vertex sequence.
Hypergraph cycle_graph(int n, const std::vector<int>& sequence);

}  // namespace lramsey

#endif
