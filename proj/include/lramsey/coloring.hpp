#ifndef LRAMSEY_COLORING_HPP
#define LRAMSEY_COLORING_HPP

#include <cstdint>
#include <vector>

#include "lramsey/hypergraph.hpp"

namespace lramsey {

// Colors are abstract non-negative integer labels; only identity matters.

// A full coloring of a host's edges; colors[i] colors host.edges[i].
struct EdgeColoring {
    Hypergraph host;
    std::vector<int> colors;

    static EdgeColoring make(Hypergraph host, std::vector<int> colors);
    int color_of(const Edge& e) const;
};

// A list of exactly k admissible colors per host edge; lists[i] belongs
// to host.edges[i] and is sorted with distinct entries.
struct ListAssignment {
    Hypergraph host;
    int k = 0;
    std::vector<std::vector<int>> lists;

    static ListAssignment make(Hypergraph host, int k, std::vector<std::vector<int>> lists);
    static ListAssignment uniform(Hypergraph host, int k);  // every list = {0..k-1}
    std::vector<int> universe() const;                      // sorted union of all lists
};

// True iff c(e) is in L_e for every edge. Host mismatch is an error.
bool verify_list_coloring(const ListAssignment& L, const EdgeColoring& c);

// Largest number of same-colored edges at a single vertex (uniformity 2 hosts
// use this to witness star-freeness: max color degree <= r-1).
int max_color_degree(const EdgeColoring& c);

// Seeded random k-lists over universe [0, universe_size), independent per
// edge; deterministic in (seed).
ListAssignment random_lists(const Hypergraph& host, int k, int universe_size, std::uint64_t seed);

}  // namespace lramsey

#endif
