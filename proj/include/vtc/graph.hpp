#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace vtc {

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency is kept both as sorted neighbor
/// lists and as packed bit rows so the search engines get O(1) membership
/// tests and word-wide candidate pruning.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::span<const std::pair<int, int>> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    static Graph complete(int n);
    static Graph empty(int n);
    static Graph cycle(int n);  // n >= 3

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
                (v & 63)) & 1u;
    }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    std::vector<std::pair<int, int>> edges() const;  // (u,v) with u < v, lex order

    // Packed adjacency row of v; row_words() 64-bit words per row.
    const std::uint64_t* row_bits(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }
    int row_words() const { return words_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    int words_ = 1;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

/// Ordered list of nonempty, pairwise disjoint vertex blocks covering 0..n-1.
struct VertexPartition {
    std::vector<std::vector<int>> blocks;
};

/// Throws std::invalid_argument unless p is a partition of {0..n-1}.
void validate_partition(const VertexPartition& p, int n);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Subgraph induced by `vertices` (distinct, in range); result vertex i is
/// vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// X[Y]: pairs (x,y), adjacent iff x ~ x', or x = x' and y ~ y'.
/// Pair (x,y) is encoded as x * |V(Y)| + y.
Graph lexicographic_product(const Graph& x, const Graph& y);

/// X[complement(K_m)]: every vertex blown up into an independent m-set.
Graph multiple(const Graph& x, int m);  // m >= 1

struct LineGraphResult {
    Graph graph;
    std::vector<std::pair<int, int>> vertex_edge;  // vertex i = this edge of g
};

/// Line graph: vertices are the edges of g (lex order), adjacent when the
/// edges share an endpoint. Requires at least one edge.
LineGraphResult line_graph(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);

/// Common valency when g is regular, nullopt otherwise.
std::optional<int> regular_valency(const Graph& g);

}  // namespace vtc
