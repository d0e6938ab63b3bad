#include "vtc/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace vtc {

namespace {

std::vector<std::pair<int, int>> checked_edges(
    int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " +
                                        std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " +
                                        std::to_string(u));
        out.emplace_back(std::min(u, v), std::max(u, v));
    }
    return out;
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) {
    auto es = checked_edges(n, edges);
    n_ = n;
    words_ = std::max(1, (n + 63) / 64);
    adj_.assign(n, {});
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (auto [u, v] : es) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = adj_[v];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (int w : a)
            bits_[static_cast<std::size_t>(v) * words_ + (w >> 6)] |=
                std::uint64_t{1} << (w & 63);
    }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(),
                                                    edges.size())) {}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph Graph::empty(int n) { return Graph(n, std::span<const std::pair<int, int>>{}); }

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph requires n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph(n, es);
}

int Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return static_cast<int>(twice / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void validate_partition(const VertexPartition& p, int n) {
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (const auto& block : p.blocks) {
        if (block.empty()) throw std::invalid_argument("empty partition block");
        for (int v : block) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("partition vertex out of range");
            if (seen[v])
                throw std::invalid_argument("partition blocks overlap at " +
                                            std::to_string(v));
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n)
        throw std::invalid_argument("partition does not cover the vertex set");
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    auto es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + na, v + na);
    return Graph(na + b.vertex_count(), es);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    const int n = g.vertex_count();
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= n)
            throw std::invalid_argument("induced subgraph vertex out of range");
        if (pos[v] != -1)
            throw std::invalid_argument("induced subgraph vertex repeated");
        pos[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (pos[w] > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), pos[w]);
    return Graph(static_cast<int>(vertices.size()), es);
}

Graph lexicographic_product(const Graph& x, const Graph& y) {
    const int nx = x.vertex_count(), ny = y.vertex_count();
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : x.edges())
        for (int i = 0; i < ny; ++i)
            for (int j = 0; j < ny; ++j) es.emplace_back(a * ny + i, b * ny + j);
    for (int a = 0; a < nx; ++a)
        for (auto [i, j] : y.edges()) es.emplace_back(a * ny + i, a * ny + j);
    return Graph(nx * ny, es);
}

Graph multiple(const Graph& x, int m) {
    if (m < 1) throw std::invalid_argument("multiple requires m >= 1");
    return lexicographic_product(x, Graph::empty(m));
}

LineGraphResult line_graph(const Graph& g) {
    auto es = g.edges();
    if (es.empty())
        throw std::invalid_argument("line graph requires at least one edge");
    const int m = static_cast<int>(es.size());
    std::vector<std::pair<int, int>> ledges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) ledges.emplace_back(i, j);
        }
    return LineGraphResult{Graph(m, ledges), std::move(es)};
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n;
}

std::optional<int> regular_valency(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

}  // namespace vtc
