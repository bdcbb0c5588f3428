#ifndef LRAMSEY_CANONICAL_HPP
#define LRAMSEY_CANONICAL_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "lramsey/hypergraph.hpp"

namespace lramsey {

// A k-list pattern on a host, reduced modulo color renaming and host
// automorphisms. Lists are index-aligned with host.edges; the canonical
// key is the lexicographically least flat encoding over the orbit.
//
// Enumeration emits "normal forms": colors are numbered by first
// appearance along the edge order, new colors within one list taken
// consecutively. Every renaming class is visited; exact dedup against
// renaming ties and automorphisms is a separate canonicity test.

using Lists = std::vector<std::vector<int>>;

// Vertex permutations fixing the edge set; S_n for complete hosts,
// brute force otherwise (tiny n only).
std::vector<std::vector<int>> host_automorphisms(const Hypergraph& host);

// Edge permutation induced by a vertex permutation.
std::vector<int> edge_permutation(const Hypergraph& host, const std::vector<int>& vperm);

std::vector<int> encode_lists(const Lists& lists);

// True iff `lists` (a normal form) is the least element of its orbit.
// `edge_perms` are precomputed edge permutations of the automorphisms.
bool is_canonical(const Lists& lists, int k, const std::vector<std::vector<int>>& edge_perms);

// Least orbit element, for cross-checks.
Lists canonical_form(const Lists& lists, int k, const std::vector<std::vector<int>>& edge_perms);

enum class EnumStatus { Completed, Stopped, BudgetExceeded };

// Streams normal forms (lists reusing existing colors first, so the
// uniform pattern comes out first). `visit` returns false to stop.
// `max_patterns` bounds the number of visits.
EnumStatus enumerate_normal_forms(std::size_t edge_count, int k, std::uint64_t max_patterns,
                                  const std::function<bool(const Lists&)>& visit);

}  // namespace lramsey

#endif
