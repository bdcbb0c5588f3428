#ifndef LRAMSEY_MONO_HPP
#define LRAMSEY_MONO_HPP

#include <optional>

#include "lramsey/coloring.hpp"
#include "lramsey/hypergraph.hpp"

namespace lramsey {

enum class PatternKind { Star, Matching, Clique, Generic };

struct PatternClass {
    PatternKind kind = PatternKind::Generic;
    int r = 0;  // star arm count / matching size / clique order
};

// Recognizes K_{1,r}, rK_2 and K_r^{(ell)} so detection can take the
// specialized path; anything else goes through the generic embedder.
PatternClass classify_pattern(const Hypergraph& pattern);

// Finds a monochromatic copy of `pattern` in the colored host, or nothing.
// Star patterns use color-degree thresholds, matchings exact maximum
// matching per class, cliques a per-class clique search; the fallback is
// a backtracking subgraph embedding over each color class.
std::optional<Embedding> find_monochromatic(const Hypergraph& pattern, const EdgeColoring& coloring);

// Invariant check for a claimed embedding: injective map, image edges
// present and all of the stated color.
bool validate_embedding(const Embedding& emb, const EdgeColoring& coloring);

// Generic path exposed for equivalence testing against the specialized ones.
std::optional<Embedding> find_monochromatic_generic(const Hypergraph& pattern,
                                                    const EdgeColoring& coloring);

}  // namespace lramsey

#endif
