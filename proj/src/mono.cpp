#include "lramsey/mono.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lramsey/matching.hpp"

namespace lramsey {

PatternClass classify_pattern(const Hypergraph& pattern) {
    const auto deg = degrees(pattern);
    const int e = static_cast<int>(pattern.edges.size());
    const bool no_isolated = std::all_of(deg.begin(), deg.end(), [](int d) { return d > 0; });

    if (pattern.uniformity == 2 && e >= 1 && no_isolated) {
        // K_{1,r}: one center on every edge, r leaves of degree 1.
        if (pattern.n == e + 1) {
            int center = -1;
            for (int v = 0; v < pattern.n; ++v)
                if (deg[v] == e) center = v;
            if (center >= 0) {
                bool leaves_ok = true;
                for (int v = 0; v < pattern.n; ++v)
                    if (v != center && deg[v] != 1) leaves_ok = false;
                if (leaves_ok) return {PatternKind::Star, e};
            }
        }
        // rK_2: all degrees exactly one.
        if (pattern.n == 2 * e && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; }))
            return {PatternKind::Matching, e};
    }
    if (e >= 1 && no_isolated && pattern == complete_hypergraph(pattern.n, pattern.uniformity))
        return {PatternKind::Clique, pattern.n};
    return {PatternKind::Generic, 0};
}

bool validate_embedding(const Embedding& emb, const EdgeColoring& coloring) {
    if (emb.pattern.uniformity != coloring.host.uniformity) return false;
    if (static_cast<int>(emb.vertex_map.size()) != emb.pattern.n) return false;
    std::set<int> image(emb.vertex_map.begin(), emb.vertex_map.end());
    if (static_cast<int>(image.size()) != emb.pattern.n) return false;
    for (int v : emb.vertex_map)
        if (v < 0 || v >= coloring.host.n) return false;
    for (const Edge& pe : emb.pattern.edges) {
        Edge he;
        for (int v : pe) he.push_back(emb.vertex_map[v]);
        std::sort(he.begin(), he.end());
        int idx = edge_index(coloring.host, he);
        if (idx < 0 || coloring.colors[idx] != emb.color) return false;
    }
    return true;
}

namespace {

std::map<int, std::vector<int>> color_classes(const EdgeColoring& c) {
    std::map<int, std::vector<int>> by_color;  // color -> host edge indices
    for (std::size_t i = 0; i < c.colors.size(); ++i) by_color[c.colors[i]].push_back(static_cast<int>(i));
    return by_color;
}

// Completes a partial embedding by placing pattern vertices that carry no
// edges; any unused host vertices do.
bool fill_isolated(const Hypergraph& pattern, int host_n, std::vector<int>& vmap) {
    std::vector<bool> taken(host_n, false);
    for (int v : vmap)
        if (v >= 0) taken[v] = true;
    int next = 0;
    for (int pv = 0; pv < pattern.n; ++pv) {
        if (vmap[pv] >= 0) continue;
        while (next < host_n && taken[next]) ++next;
        if (next >= host_n) return false;
        taken[next] = true;
        vmap[pv] = next;
    }
    return true;
}

std::optional<Embedding> star_detect(const Hypergraph& pattern, int r, const EdgeColoring& c) {
    std::map<std::pair<int, int>, std::vector<int>> incident;  // (vertex,color) -> edge idx
    for (std::size_t i = 0; i < c.host.edges.size(); ++i)
        for (int v : c.host.edges[i]) incident[{v, c.colors[i]}].push_back(static_cast<int>(i));
    for (const auto& [key, edge_idxs] : incident) {
        if (static_cast<int>(edge_idxs.size()) < r) continue;
        auto [center, color] = key;
        // Pattern vertex 0 is the center; leaves follow in edge order.
        std::vector<int> vmap(pattern.n, -1);
        vmap[0] = center;
        for (int j = 0; j < r; ++j) {
            const Edge& e = c.host.edges[edge_idxs[j]];
            vmap[j + 1] = e[0] == center ? e[1] : e[0];
        }
        Embedding emb{pattern, std::move(vmap), color};
        return emb;
    }
    return std::nullopt;
}

std::optional<Embedding> matching_detect(const Hypergraph& pattern, int r, const EdgeColoring& c) {
    for (const auto& [color, idxs] : color_classes(c)) {
        if (static_cast<int>(idxs.size()) < r) continue;
        std::vector<std::pair<int, int>> es;
        for (int i : idxs) es.push_back({c.host.edges[i][0], c.host.edges[i][1]});
        BlossomMatcher matcher(c.host.n, es);
        if (matcher.solve() < r) continue;
        auto pairs = matcher.matched_pairs();
        std::vector<int> vmap(pattern.n);
        for (int j = 0; j < r; ++j) {
            vmap[2 * j] = pairs[j].first;
            vmap[2 * j + 1] = pairs[j].second;
        }
        return Embedding{pattern, std::move(vmap), color};
    }
    return std::nullopt;
}

// Searches an r-set of vertices whose every ell-subset lies in the class.
struct CliqueSearch {
    int n, ell, r;
    const std::vector<Edge>* class_edges;  // sorted
    std::vector<int> chosen;

    bool edge_in_class(Edge e) const {
        std::sort(e.begin(), e.end());
        return std::binary_search(class_edges->begin(), class_edges->end(), e);
    }

    bool feasible_with(int v) const {
        // Every ell-subset of chosen+v that includes v must be present.
        if (static_cast<int>(chosen.size()) + 1 < ell) return true;
        std::vector<int> sub(ell - 1);
        std::vector<int> idx(ell - 1);
        std::iota(idx.begin(), idx.end(), 0);
        int m = static_cast<int>(chosen.size());
        if (ell == 1) return edge_in_class({v});
        while (true) {
            Edge e;
            for (int i : idx) e.push_back(chosen[i]);
            e.push_back(v);
            if (!edge_in_class(std::move(e))) return false;
            int i = ell - 2;
            while (i >= 0 && idx[i] == m - (ell - 1) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < ell - 1; ++j) idx[j] = idx[j - 1] + 1;
        }
        return true;
    }

    bool extend(int from) {
        if (static_cast<int>(chosen.size()) == r) return true;
        for (int v = from; v < n; ++v) {
            if (n - v < r - static_cast<int>(chosen.size())) return false;
            if (!feasible_with(v)) continue;
            chosen.push_back(v);
            if (extend(v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

std::optional<Embedding> clique_detect(const Hypergraph& pattern, int r, const EdgeColoring& c) {
    const int ell = pattern.uniformity;
    for (const auto& [color, idxs] : color_classes(c)) {
        // A clique needs binom(r, ell) edges; quick size cut.
        std::vector<Edge> class_edges;
        for (int i : idxs) class_edges.push_back(c.host.edges[i]);
        CliqueSearch search{c.host.n, ell, r, &class_edges, {}};
        if (static_cast<int>(class_edges.size()) < static_cast<int>(complete_hypergraph(r, ell).edges.size()))
            continue;
        if (search.extend(0)) {
            std::vector<int> vmap(search.chosen.begin(), search.chosen.end());
            return Embedding{pattern, std::move(vmap), color};
        }
    }
    return std::nullopt;
}

// Backtracking embedder of an arbitrary pattern into one color class.
struct GenericEmbed {
    const Hypergraph* pattern;
    const Hypergraph* host;
    const std::vector<Edge>* class_edges;  // sorted
    std::vector<int> order;                // support vertices, most-attached first
    std::vector<int> vmap;
    std::vector<bool> used;

    bool edge_in_class(Edge e) const {
        std::sort(e.begin(), e.end());
        return std::binary_search(class_edges->begin(), class_edges->end(), e);
    }

    bool consistent(int pv) const {
        // Check pattern edges fully mapped once pv is placed.
        for (const Edge& pe : pattern->edges) {
            bool touches = false, complete = true;
            for (int v : pe) {
                if (v == pv) touches = true;
                if (vmap[v] < 0) complete = false;
            }
            if (!touches || !complete) continue;
            Edge he;
            for (int v : pe) he.push_back(vmap[v]);
            if (!edge_in_class(std::move(he))) return false;
        }
        return true;
    }

    bool place(std::size_t pos) {
        if (pos == order.size()) return true;
        int pv = order[pos];
        for (int hv = 0; hv < host->n; ++hv) {
            if (used[hv]) continue;
            vmap[pv] = hv;
            used[hv] = true;
            if (consistent(pv) && place(pos + 1)) return true;
            used[hv] = false;
            vmap[pv] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_monochromatic_generic(const Hypergraph& pattern,
                                                    const EdgeColoring& coloring) {
    if (pattern.n > coloring.host.n) return std::nullopt;
    if (pattern.edges.empty()) {
        std::vector<int> vmap(pattern.n);
        std::iota(vmap.begin(), vmap.end(), 0);
        return Embedding{pattern, std::move(vmap), 0};
    }
    const auto deg = degrees(pattern);
    std::vector<int> support;
    for (int v = 0; v < pattern.n; ++v)
        if (deg[v] > 0) support.push_back(v);
    // Place high-degree pattern vertices first: constraints bind early.
    std::sort(support.begin(), support.end(),
              [&](int a, int b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });

    for (const auto& [color, idxs] : color_classes(coloring)) {
        if (idxs.size() < pattern.edges.size()) continue;
        std::vector<Edge> class_edges;
        for (int i : idxs) class_edges.push_back(coloring.host.edges[i]);
        GenericEmbed embed{&pattern, &coloring.host, &class_edges, support,
                           std::vector<int>(pattern.n, -1), std::vector<bool>(coloring.host.n, false)};
        if (embed.place(0) && fill_isolated(pattern, coloring.host.n, embed.vmap))
            return Embedding{pattern, std::move(embed.vmap), color};
    }
    return std::nullopt;
}

std::optional<Embedding> find_monochromatic(const Hypergraph& pattern, const EdgeColoring& coloring) {
    if (pattern.uniformity != coloring.host.uniformity)
        throw std::invalid_argument("pattern and host uniformity differ");
    if (pattern.n > coloring.host.n) return std::nullopt;
    const PatternClass pc = classify_pattern(pattern);
    switch (pc.kind) {
        case PatternKind::Star:
            return star_detect(pattern, pc.r, coloring);
        case PatternKind::Matching:
            return matching_detect(pattern, pc.r, coloring);
        case PatternKind::Clique:
            return clique_detect(pattern, pc.r, coloring);
        case PatternKind::Generic:
            return find_monochromatic_generic(pattern, coloring);
    }
    return std::nullopt;
}

}  // namespace lramsey
