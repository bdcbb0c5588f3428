#include "lramsey/decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lramsey {

std::string to_string(PieceKind k) {
    switch (k) {
        case PieceKind::PerfectMatching: return "perfect-matching";
        case PieceKind::HamiltonCycle: return "hamilton-cycle";
        case PieceKind::Cycle: return "cycle";
        case PieceKind::CliqueBlock: return "clique-block";
        case PieceKind::BipartiteBlock: return "bipartite-block";
        case PieceKind::Other: return "other";
    }
    return "other";
}

PieceKind piece_kind_from_string(const std::string& s) {
    if (s == "perfect-matching") return PieceKind::PerfectMatching;
    if (s == "hamilton-cycle") return PieceKind::HamiltonCycle;
    if (s == "cycle") return PieceKind::Cycle;
    if (s == "clique-block") return PieceKind::CliqueBlock;
    if (s == "bipartite-block") return PieceKind::BipartiteBlock;
    if (s == "other") return PieceKind::Other;
    throw std::invalid_argument("unknown piece kind: " + s);
}

int DecompReport::max_membership() const {
    int best = 0;
    for (int m : membership) best = std::max(best, m);
    return best;
}

Hypergraph cycle_graph(int n, const std::vector<int>& sequence) {
    std::vector<Edge> edges;
    const int len = static_cast<int>(sequence.size());
    for (int i = 0; i < len; ++i) {
        int a = sequence[i], b = sequence[(i + 1) % len];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Hypergraph::make(n, 2, std::move(edges));
}

Decomposition walecki(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("walecki needs an even n >= 2");
    Hypergraph host = complete_hypergraph(n, 2);
    if (n == 2) {
        return Decomposition{host, {host}, {PieceKind::PerfectMatching}};
    }
    // Zigzag Hamilton decomposition of K_{n-1} on Z_{2m} plus a fixed
    // vertex, extended by a hub: the middle edge of each rotated zigzag is
    // rerouted through the hub, and the removed middle edges together with
    // hub-infinity form the perfect matching.
    const int m = n / 2;           // cycles-to-be + 1
    const int k = m - 1;           // Hamilton cycles of K_{n-1}
    const int two_k = 2 * k;       // finite vertices 0..2k-1
    const int inf = n - 2;         // the "infinity" vertex of K_{n-1}
    const int hub = n - 1;         // appended hub

    std::vector<int> zig(two_k);   // x_0=0, x_{2i-1}=i, x_{2i}=2k-i
    zig[0] = 0;
    for (int i = 1; i <= k; ++i) {
        if (2 * i - 1 < two_k) zig[2 * i - 1] = i;
        if (2 * i < two_k) zig[2 * i] = two_k - i;
    }

    std::vector<Hypergraph> pieces;
    std::vector<PieceKind> kinds;
    std::vector<Edge> matching_edges;
    for (int j = 0; j < k; ++j) {
        std::vector<int> seq;
        seq.push_back(inf);
        for (int t = 0; t < two_k; ++t) seq.push_back((zig[t] + j) % two_k);
        // Middle edge (positions k-1, k of the zigzag) detours via the hub.
        int a = seq[k], b = seq[k + 1];
        matching_edges.push_back({std::min(a, b), std::max(a, b)});
        seq.insert(seq.begin() + k + 1, hub);
        pieces.push_back(cycle_graph(n, seq));
        kinds.push_back(PieceKind::HamiltonCycle);
    }
    matching_edges.push_back({inf, hub});
    pieces.insert(pieces.begin(), Hypergraph::make(n, 2, std::move(matching_edges)));
    kinds.insert(kinds.begin(), PieceKind::PerfectMatching);
    return Decomposition{std::move(host), std::move(pieces), std::move(kinds)};
}

namespace {

// Backtracking search for a base cycle realizing the given difference
// classes, each exactly once, with the first step fixed to +min(classes).
struct BaseCycleSearch {
    int n;
    std::vector<int> classes;  // ascending
    std::vector<int> steps;    // chosen signed steps
    std::vector<bool> used;    // per class index
    std::vector<int> walk;     // partial sums from 0
    std::vector<bool> visited;

    bool extend() {
        const int m = static_cast<int>(classes.size());
        const int depth = static_cast<int>(steps.size());
        if (depth == m) return walk.back() == 0;
        for (int ci = 0; ci < m; ++ci) {
            if (used[ci]) continue;
            for (int sign : {+1, -1}) {
                int step = sign * classes[ci];
                int next = ((walk.back() + step) % n + n) % n;
                bool closing = depth == m - 1;
                if (closing ? next != 0 : visited[next]) continue;
                used[ci] = true;
                steps.push_back(step);
                walk.push_back(next);
                if (!closing) visited[next] = true;
                if (extend()) return true;
                if (!closing) visited[next] = false;
                walk.pop_back();
                steps.pop_back();
                used[ci] = false;
            }
        }
        return false;
    }

    // Returns the vertex sequence of the base cycle, or empty on failure.
    std::vector<int> run() {
        const int m = static_cast<int>(classes.size());
        used.assign(m, false);
        visited.assign(n, false);
        walk = {0};
        visited[0] = true;
        // Symmetry: reflections and rotations make the first step's sign
        // and class choice free; pin +smallest.
        used[0] = true;
        steps = {classes[0]};
        int first = classes[0] % n;
        walk.push_back(first);
        visited[first] = true;
        if (!extend()) return {};
        walk.pop_back();  // drop the closing 0
        return walk;
    }
};

}  // namespace

Decomposition cycle_decompose(int n, int m) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("cycle decomposition needs odd n >= 3");
    if (m < 4 || m > n) throw std::invalid_argument("cycle length must satisfy 4 <= m <= n");
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (total % m != 0) throw std::invalid_argument("cycle length must divide n(n-1)/2");

    Hypergraph host = complete_hypergraph(n, 2);
    const int num_classes = (n - 1) / 2;

    // Classes whose rotational order is exactly m can be covered by
    // uniform-step cycles (0, d, 2d, ...) and their gcd(n,d) shifts.
    std::vector<int> uniform_candidates;
    for (int d = 1; d <= num_classes; ++d)
        if (n / std::gcd(n, d) == m) uniform_candidates.push_back(d);

    // Pick a subset of uniform candidates making the rest divisible by m;
    // subsets scanned smallest-first for determinism.
    const int uc = static_cast<int>(uniform_candidates.size());
    std::vector<int> chosen_uniform;
    bool found_split = false;
    if (uc <= 20) {
        for (std::uint32_t mask = 0; mask < (1u << uc); ++mask) {
            int picked = __builtin_popcount(mask);
            if ((num_classes - picked) % m == 0) {
                for (int i = 0; i < uc; ++i)
                    if (mask & (1u << i)) chosen_uniform.push_back(uniform_candidates[i]);
                found_split = true;
                break;
            }
        }
    }
    if (!found_split)
        throw CycleSearchError("no rotational split of difference classes for n=" + std::to_string(n) +
                               ", m=" + std::to_string(m));

    std::set<int> uniform_set(chosen_uniform.begin(), chosen_uniform.end());
    std::vector<int> rest;
    for (int d = 1; d <= num_classes; ++d)
        if (!uniform_set.count(d)) rest.push_back(d);

    std::vector<Hypergraph> pieces;
    std::vector<PieceKind> kinds;
    const PieceKind kind = m == n ? PieceKind::HamiltonCycle : PieceKind::Cycle;

    for (int d : chosen_uniform) {
        const int orbit = std::gcd(n, d);
        for (int shift = 0; shift < orbit; ++shift) {
            std::vector<int> seq(m);
            for (int t = 0; t < m; ++t) seq[t] = (shift + static_cast<long long>(t) * d) % n;
            pieces.push_back(cycle_graph(n, seq));
            kinds.push_back(kind);
        }
    }

    for (std::size_t g = 0; g < rest.size(); g += m) {
        std::vector<int> group(rest.begin() + g, rest.begin() + g + m);
        BaseCycleSearch search{n, group, {}, {}, {}, {}};
        std::vector<int> base = search.run();
        if (base.empty())
            throw CycleSearchError("base-cycle search exhausted for n=" + std::to_string(n) +
                                   ", m=" + std::to_string(m) + " on a class group");
        for (int j = 0; j < n; ++j) {
            std::vector<int> seq(m);
            for (int t = 0; t < m; ++t) seq[t] = (base[t] + j) % n;
            pieces.push_back(cycle_graph(n, seq));
            kinds.push_back(kind);
        }
    }

    return Decomposition{std::move(host), std::move(pieces), std::move(kinds)};
}

Decomposition star_block_partition(int r, int k) {
    if (r < 2 || k < 1) throw std::invalid_argument("star block partition needs r >= 2, k >= 1");
    const int n = (r - 1) * k;
    Hypergraph host = complete_hypergraph(n, 2);

    std::vector<Hypergraph> pieces;
    std::vector<PieceKind> kinds;
    for (int i = 0; i < r - 1; ++i) {
        std::vector<Edge> es;
        for (int a = i * k; a < (i + 1) * k; ++a)
            for (int b = a + 1; b < (i + 1) * k; ++b) es.push_back({a, b});
        pieces.push_back(Hypergraph::make(n, 2, std::move(es)));
        kinds.push_back(PieceKind::CliqueBlock);
    }
    for (int i = 0; i < r - 1; ++i) {
        for (int j = i + 1; j < r - 1; ++j) {
            std::vector<Edge> es;
            for (int a = i * k; a < (i + 1) * k; ++a)
                for (int b = j * k; b < (j + 1) * k; ++b) es.push_back({a, b});
            pieces.push_back(Hypergraph::make(n, 2, std::move(es)));
            kinds.push_back(PieceKind::BipartiteBlock);
        }
    }
    return Decomposition{std::move(host), std::move(pieces), std::move(kinds)};
}

DecompReport verify_decomposition(const Decomposition& d) {
    DecompReport report;
    report.membership.assign(d.host.n, 0);
    std::set<Edge> seen;
    bool disjoint = true;
    for (const Hypergraph& piece : d.pieces) {
        std::set<int> touched;
        for (const Edge& e : piece.edges) {
            if (!seen.insert(e).second) disjoint = false;
            for (int v : e) touched.insert(v);
        }
        for (int v : touched)
            if (v < static_cast<int>(report.membership.size())) ++report.membership[v];
    }
    report.edge_disjoint = disjoint;
    std::set<Edge> host_edges(d.host.edges.begin(), d.host.edges.end());
    report.covers = seen == host_edges;
    return report;
}

}  // namespace lramsey
