#include "lramsey/matching.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace lramsey {

BlossomMatcher::BlossomMatcher(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), adj_(n), match_(n, -1), parent_(n, -1), base_(n), used_(n, false), blossom_(n, false) {
    for (auto [u, v] : edges) {
        if (u == v) continue;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

int BlossomMatcher::lowest_common_ancestor(int a, int b) const {
    std::vector<bool> seen(n_, false);
    while (true) {
        a = base_[a];
        seen[a] = true;
        if (match_[a] == -1) break;
        a = parent_[match_[a]];
    }
    while (true) {
        b = base_[b];
        if (seen[b]) return b;
        b = parent_[match_[b]];
    }
}

void BlossomMatcher::mark_path(int v, int b, int child) {
    while (base_[v] != b) {
        blossom_[base_[v]] = true;
        blossom_[base_[match_[v]]] = true;
        parent_[v] = child;
        child = match_[v];
        v = parent_[match_[v]];
    }
}

int BlossomMatcher::find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;

    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int to : adj_[v]) {
            if (base_[v] == base_[to] || match_[v] == to) continue;
            if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                // Odd cycle found: contract the blossom.
                int cur_base = lowest_common_ancestor(v, to);
                std::fill(blossom_.begin(), blossom_.end(), false);
                mark_path(v, cur_base, to);
                mark_path(to, cur_base, v);
                for (int i = 0; i < n_; ++i) {
                    if (blossom_[base_[i]]) {
                        base_[i] = cur_base;
                        if (!used_[i]) {
                            used_[i] = true;
                            q.push(i);
                        }
                    }
                }
            } else if (parent_[to] == -1) {
                parent_[to] = v;
                if (match_[to] == -1) return to;  // exposed vertex: augmenting path
                used_[match_[to]] = true;
                q.push(match_[to]);
            }
        }
    }
    return -1;
}

void BlossomMatcher::augment_along(int exposed) {
    int v = exposed;
    while (v != -1) {
        int pv = parent_[v];
        int next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
    }
}

int BlossomMatcher::current_size() const {
    int size = 0;
    for (int v = 0; v < n_; ++v)
        if (match_[v] > v) ++size;
    return size;
}

int BlossomMatcher::solve() {
    // Greedy warm start cuts the number of augmentation phases.
    for (int v = 0; v < n_; ++v) {
        if (match_[v] != -1) continue;
        for (int to : adj_[v]) {
            if (match_[to] == -1) {
                match_[v] = to;
                match_[to] = v;
                break;
            }
        }
    }
    for (int v = 0; v < n_; ++v) {
        if (match_[v] != -1) continue;
        int exposed = find_augmenting_path(v);
        if (exposed != -1) augment_along(exposed);
    }
    return current_size();
}

std::vector<std::pair<int, int>> BlossomMatcher::matched_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n_; ++v)
        if (match_[v] > v) pairs.push_back({v, match_[v]});
    return pairs;
}

int BlossomMatcher::add_edge_and_augment(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    // One new edge raises the maximum by at most one; a single search
    // from any exposed vertex decides it.
    for (int w = 0; w < n_; ++w) {
        if (match_[w] != -1) continue;
        int exposed = find_augmenting_path(w);
        if (exposed != -1) {
            augment_along(exposed);
            break;
        }
    }
    return current_size();
}

void BlossomMatcher::remove_last_edge(int u, int v) {
    adj_[u].pop_back();
    adj_[v].pop_back();
}

int max_matching(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 1 || edges.empty()) return 0;
    return BlossomMatcher(n, edges).solve();
}

std::map<int, int> max_matching_per_color(const EdgeColoring& c) {
    if (c.host.uniformity != 2)
        throw std::invalid_argument("matching per color needs a uniformity-2 host");
    std::map<int, std::vector<std::pair<int, int>>> classes;
    for (std::size_t i = 0; i < c.host.edges.size(); ++i)
        classes[c.colors[i]].push_back({c.host.edges[i][0], c.host.edges[i][1]});
    std::map<int, int> result;
    for (auto& [color, edges] : classes) result[color] = max_matching(c.host.n, edges);
    return result;
}

}  // namespace lramsey
