#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "vtc/graph.hpp"

namespace vtc {

/// Vertex/element bijection as an image table: p[i] is the image of i.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
Permutation compose(const Permutation& p, const Permutation& q);  // p after q
Permutation inverse_permutation(const Permutation& p);

/// Group closure grew past the configured order cap.
struct OrderCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultGroupOrderCap = 10080;

/// Finite group stored as a full multiplication table over element indices.
///
/// Identity laws and inverses are always verified on construction;
/// associativity is verified on all triples up to order 64 and on
/// 10*order sampled triples above that.
class FiniteGroup {
public:
    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);   // n >= 3, order 2n
    static FiniteGroup symmetric(int n);  // 1 <= n <= 5, elements in lex rank order
    static FiniteGroup from_permutations(std::span<const Permutation> generators,
                                         int order_cap = kDefaultGroupOrderCap);
    static FiniteGroup from_table(std::vector<std::vector<int>> table);

    int order() const { return order_; }
    int mul(int a, int b) const {
        return table_[static_cast<std::size_t>(a) * order_ + b];
    }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return identity_; }
    bool is_abelian() const;

    /// Permutation images of the elements; empty for table-only groups.
    const std::vector<Permutation>& element_perms() const { return perms_; }
    /// Indices of the defining generators (from_permutations only).
    const std::vector<int>& generator_elements() const { return generators_; }
    /// Element index of a permutation, -1 if absent or not realized.
    int element_of(const Permutation& p) const;

private:
    FiniteGroup() = default;
    void finish();  // derive identity/inverses, validate the table

    int order_ = 0;
    int identity_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<int> inv_;
    std::vector<Permutation> perms_;
    std::vector<int> generators_;
};

/// Inverse-closed set of non-identity element indices.
struct ConnectionSet {
    std::vector<int> elements;
};

/// Throws std::invalid_argument when c contains the identity, an
/// out-of-range index, or is not closed under inverse.
void validate_connection_set(const FiniteGroup& g, const ConnectionSet& c);

/// X(G,C): vertex i ~ vertex j iff inv(i)*j is in C. |C|-regular.
Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& c);

/// True iff conjugation by every group element fixes C setwise.
bool is_normal_connection_set(const FiniteGroup& g, const ConnectionSet& c);

Permutation left_translation(const FiniteGroup& g, int a);   // x -> a*x
Permutation right_translation(const FiniteGroup& g, int a);  // x -> x*a

/// True when the vertex bijection maps every edge to an edge.
bool preserves_adjacency(const Graph& g, const Permutation& p);

/// One permutation per line in cycle notation, e.g. "(0 1)(2 3)".
/// Blank lines and "#" comments are skipped; all permutations are padded
/// to a common degree. Throws InputError on malformed input.
std::vector<Permutation> parse_generator_file(std::string_view text);

/// Connection set spec: comma-separated element indices ("1,3,5") or words
/// in the generators ("g0,g1*g0^-1"). Result is sorted and deduplicated.
std::vector<int> parse_connection_spec(const FiniteGroup& g,
                                       std::string_view spec);

}  // namespace vtc
