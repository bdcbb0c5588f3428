#include "lramsey/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lramsey/rng.hpp"

namespace lramsey {

EdgeColoring EdgeColoring::make(Hypergraph host, std::vector<int> colors) {
    if (colors.size() != host.edges.size())
        throw std::invalid_argument("coloring must cover every host edge");
    for (int c : colors)
        if (c < 0) throw std::invalid_argument("colors are non-negative integers");
    return EdgeColoring{std::move(host), std::move(colors)};
}

int EdgeColoring::color_of(const Edge& e) const {
    int idx = edge_index(host, e);
    if (idx < 0) throw std::invalid_argument("edge not in host");
    return colors[idx];
}

ListAssignment ListAssignment::make(Hypergraph host, int k, std::vector<std::vector<int>> lists) {
    if (k < 1) throw std::invalid_argument("list size must be positive");
    if (lists.size() != host.edges.size())
        throw std::invalid_argument("every host edge needs a list");
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        if (static_cast<int>(l.size()) != k)
            throw std::invalid_argument("list size differs from k");
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            throw std::invalid_argument("list has repeated colors");
        if (l.front() < 0) throw std::invalid_argument("colors are non-negative integers");
    }
    return ListAssignment{std::move(host), k, std::move(lists)};
}

ListAssignment ListAssignment::uniform(Hypergraph host, int k) {
    std::vector<int> base(k);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> lists(host.edges.size(), base);
    return make(std::move(host), k, std::move(lists));
}

std::vector<int> ListAssignment::universe() const {
    std::set<int> u;
    for (const auto& l : lists) u.insert(l.begin(), l.end());
    return std::vector<int>(u.begin(), u.end());
}

bool verify_list_coloring(const ListAssignment& L, const EdgeColoring& c) {
    if (L.host != c.host) throw std::invalid_argument("list assignment and coloring disagree on host");
    for (std::size_t i = 0; i < L.lists.size(); ++i)
        if (!std::binary_search(L.lists[i].begin(), L.lists[i].end(), c.colors[i]))
            return false;
    return true;
}

int max_color_degree(const EdgeColoring& c) {
    std::map<std::pair<int, int>, int> deg;  // (vertex, color) -> count
    int best = 0;
    for (std::size_t i = 0; i < c.host.edges.size(); ++i)
        for (int v : c.host.edges[i])
            best = std::max(best, ++deg[{v, c.colors[i]}]);
    return best;
}

std::vector<int> sample_sorted_subset(SplitMix64& rng, int universe, int k) {
    if (k > universe) throw std::invalid_argument("subset larger than universe");
    // Floyd's sampling: k distinct values without building [0, universe).
    std::set<int> chosen;
    for (int j = universe - k; j < universe; ++j) {
        int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return std::vector<int>(chosen.begin(), chosen.end());
}

ListAssignment random_lists(const Hypergraph& host, int k, int universe_size, std::uint64_t seed) {
    if (universe_size < k) throw std::invalid_argument("universe smaller than list size");
    std::vector<std::vector<int>> lists;
    lists.reserve(host.edges.size());
    SplitMix64 rng = SplitMix64::stream(seed, 0);
    for (std::size_t i = 0; i < host.edges.size(); ++i)
        lists.push_back(sample_sorted_subset(rng, universe_size, k));
    return ListAssignment::make(host, k, std::move(lists));
}

}  // namespace lramsey
