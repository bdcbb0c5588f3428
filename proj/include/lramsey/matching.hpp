#ifndef LRAMSEY_MATCHING_HPP
#define LRAMSEY_MATCHING_HPP

#include <map>
#include <utility>
#include <vector>

#include "lramsey/coloring.hpp"

namespace lramsey {

// Exact maximum matching in a general graph (Edmonds' blossom algorithm,
// augmenting-path form). Color classes of complete-graph colorings are
// non-bipartite, so bipartite-only matching is not enough here.
class BlossomMatcher {
public:
    BlossomMatcher(int n, const std::vector<std::pair<int, int>>& edges);

    int solve();                                     // matching size
    std::vector<std::pair<int, int>> matched_pairs() const;

    // Adds one edge and tries a single augmentation; returns new size.
    // Additions are undone in LIFO order via remove_last_edge plus a
    // restore of the saved match state.
    int add_edge_and_augment(int u, int v);
    void remove_last_edge(int u, int v);
    std::vector<int> save_state() const { return match_; }
    void restore_state(std::vector<int> state) { match_ = std::move(state); }
    int current_size() const;

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, blossom_;

    int lowest_common_ancestor(int a, int b) const;
    void mark_path(int v, int b, int child);
    int find_augmenting_path(int root);
    void augment_along(int exposed);
};

int max_matching(int n, const std::vector<std::pair<int, int>>& edges);

// Exact maximum matching size of every color class (uniformity-2 hosts only).
std::map<int, int> max_matching_per_color(const EdgeColoring& c);

}  // namespace lramsey

#endif
