// Brute-force oracles, independent of the search engine: they enumerate raw
// maps/subsets/permutations straight from the definitions and are only used
// to cross-check the real implementations.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "vtc/graph.hpp"

namespace oracle {

// Tries every one of |V(y)|^|V(x)| maps.
inline bool hom_exists(const vtc::Graph& x, const vtc::Graph& y) {
    const int n = x.vertex_count(), t = y.vertex_count();
    if (n == 0) return true;
    if (t == 0) return false;
    auto edges = x.edges();
    std::vector<int> map(n, 0);
    for (;;) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!y.adjacent(map[u], map[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
        int i = 0;
        while (i < n && ++map[i] == t) map[i++] = 0;
        if (i == n) return false;
    }
}

struct BruteCore {
    int size = 0;
    std::vector<int> vertices;
};

// Smallest k and first subset S (size-major, then lexicographic) such that a
// homomorphism x -> x[S] exists; every subset and every map is examined.
inline BruteCore core(const vtc::Graph& x) {
    const int n = x.vertex_count();
    for (int k = 1; k < n; ++k) {
        std::vector<int> subset(k);
        std::iota(subset.begin(), subset.end(), 0);
        for (;;) {
            if (hom_exists(x, vtc::induced_subgraph(x, subset)))
                return {k, subset};
            // next k-combination of {0..n-1}
            int i = k - 1;
            while (i >= 0 && subset[i] == n - k + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return {n, all};
}

// Counts adjacency-and-nonadjacency-preserving bijections over all n!.
inline long long automorphism_count(const vtc::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// All labeled connected graphs on exactly n vertices.
inline std::vector<vtc::Graph> connected_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<vtc::Graph> out;
    for (long long mask = 0; mask < (1LL << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) es.push_back(pairs[i]);
        vtc::Graph g(n, es);
        if (vtc::is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace oracle
