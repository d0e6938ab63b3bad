#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vtc/exact_cover.hpp"
#include "vtc/exact_spectrum.hpp"
#include "vtc/group.hpp"
#include "vtc/hom_search.hpp"
#include "vtc/symmetry.hpp"

namespace vtc {

/// Block-to-block neighbor counts of an equitable partition.
struct QuotientMatrix {
    std::vector<std::vector<int>> entries;
};

/// Quotient matrix when the partition is equitable, nullopt otherwise.
std::optional<QuotientMatrix> equitable_check(const Graph& x,
                                              const VertexPartition& p);

struct SpectrumCheck {
    long long d = 0;               // valency eigenvalue of the quotient
    long long two_d1_minus_d = 0;  // the other quotient eigenvalue
    bool d_is_eigenvalue = false;
    bool second_is_eigenvalue = false;
};

/// Eigenvalues of the 2x2 half-size quotient, each certified against the
/// adjacency spectrum by an exact singularity test of (A - lambda I).
SpectrumCheck quotient_spectrum_check(const Graph& x, const QuotientMatrix& q);

// ---------------------------------------------------------------------------

struct CorePartitionReport {
    VertexPartition partition;       // blocks ordered by fibre element
    Graph core;
    std::vector<int> core_vertices;  // image of the retraction, sorted
    Retraction retraction;
    int base_image_vertex = 0;       // least-index image vertex y
    std::vector<int> fibre;          // A = preimage of y
    bool verified = false;  // blocks partition V and each induces a core copy
};

struct CorePartitionResult {
    SearchStatus status;
    std::optional<CorePartitionReport> report;
    std::uint64_t nodes = 0;
};

/// Partition of a normal Cayley graph into copies of its core: the blocks
/// are the right translates of the core's vertex set by the inverses of one
/// fibre. Throws std::invalid_argument for a non-normal connection set.
CorePartitionResult core_partition_normal_cayley(const FiniteGroup& g,
                                                 const ConnectionSet& c,
                                                 Budget* budget = nullptr);

struct DisjointnessReport {
    int base_image_vertex = 0;
    std::vector<int> fibre;
    std::vector<std::vector<int>> translates;  // one per fibre element, sorted
    bool disjoint = false;
};

/// Verifies pairwise disjointness of the translate sets V(Y)a^{-1} for a in
/// the fibre of y, for an endomorphism of X(G,C) onto a core.
DisjointnessReport check_cayley_lemma_disjointness(const FiniteGroup& g,
                                                   const ConnectionSet& c,
                                                   const Homomorphism& endo,
                                                   int y,
                                                   Budget* budget = nullptr);

// ---------------------------------------------------------------------------

struct HalfSizeReport {
    std::vector<int> x1;             // core vertex set
    std::vector<int> x2;             // complement
    std::vector<int> iso_x2_to_x1;   // on x vertex ids: v in x2 -> its image
    Retraction retraction;
    Graph cross;                     // bipartite graph of the cross edges
    int d = 0, d1 = 0;               // valencies of x and the core
    int cross_degree = 0;            // d - d1
    bool conclusion_isomorphic = false;       // X1 ~= X2 (independent search)
    bool conclusion_restriction_iso = false;  // retraction|_{X2} is an iso
    bool conclusion_cross_form = false;  // cross edges are {x, phi(y)}, x ~ y
    bool cross_regular = false;          // every vertex meets d - d1 cross edges
    QuotientMatrix quotient;             // [[d1, d-d1], [d-d1, d1]]
    SpectrumCheck spectrum;
    std::optional<bool> cross_vertex_transitive;  // probe; nullopt on overflow
};

struct HalfSizeResult {
    SearchStatus status;
    std::optional<HalfSizeReport> report;
    std::uint64_t nodes = 0;
};

/// The half-size-core structure: certifies the three conclusions, the
/// equitable 2-block partition and its quotient spectrum. Throws
/// std::invalid_argument when x is not vertex transitive or the core is not
/// exactly half size.
HalfSizeResult half_size_structure(const Graph& x, Budget* budget = nullptr,
                                   int aut_cap = kDefaultAutomorphismCap);

// ---------------------------------------------------------------------------

struct SelfCoreReport {
    bool certified = false;  // certified self-core; otherwise inconclusive
    std::vector<std::string> reasons;
    std::vector<long long> tested;  // integer eigenvalue candidates examined
    int valency = 0;
    // the eigenvalue reading in force: lambda = d itself is excluded, since
    // it is always an eigenvalue of a connected regular graph
    std::string interpretation;
};

/// Spectral self-core certificate for a connected vertex transitive graph on
/// 2p vertices (p prime): non-bipartite and no integer eigenvalue lambda with
/// 0 <= lambda < d and lambda = d (mod 2) certifies the graph is its own
/// core. Never claims "not a core". Throws std::invalid_argument when |V| is
/// not twice a prime or x is not vertex transitive.
SelfCoreReport self_core_by_spectral_test(const Graph& x,
                                          int aut_cap = kDefaultAutomorphismCap);

// ---------------------------------------------------------------------------

struct LineGraphCounterexampleReport {
    int n = 0;  // parameter: the graph is L(K_{2n})
    Graph graph;
    std::vector<std::pair<int, int>> vertex_edge;  // line-graph labeling
    int core_order = 0;                            // 2n - 1
    std::vector<int> clique;     // star at vertex 0 of K_{2n}
    std::vector<int> coloring;   // proper (2n-1)-coloring
    bool clique_ok = false;
    bool coloring_ok = false;
    std::vector<std::vector<int>> max_cliques;  // all cliques of size 2n-1
    std::vector<int> star_centers;              // common endpoint per clique
    bool all_stars = false;
    bool pairwise_intersecting = false;
    bool no_larger_clique = false;
    std::optional<bool> exact_cover_infeasible;   // n == 3 only
    std::optional<bool> core_by_search_matches;   // n == 3 only
    bool verified = false;
};

/// L(K_{2n}) cannot be partitioned into copies of its core K_{2n-1}:
/// certifies the core by clique + coloring, shows every maximum clique is a
/// vertex star and any two stars intersect, and for n = 3 additionally
/// proves infeasibility by exact-cover search and cross-checks the core by
/// search. Requires n >= 3 (for n = 2 the octahedron L(K_4) has non-star
/// triangles and the argument fails).
LineGraphCounterexampleReport verify_line_graph_counterexample(
    int n, Budget* budget = nullptr);

// ---------------------------------------------------------------------------

struct PartitionSearchResult {
    SearchStatus status;  // found / none (definitive) / inconclusive
    std::optional<VertexPartition> partition;
    Graph core;
    std::uint64_t nodes = 0;
};

/// Partition of V(x) into blocks each inducing a copy of the core, by exact
/// cover over all induced core copies, or a definitive "none".
PartitionSearchResult core_partition_search(const Graph& x,
                                            Budget* budget = nullptr);

// ---------------------------------------------------------------------------

enum class ArcClassification { disjoint_copies, lexicographic, not_applicable };

struct ArcClassifyReport {
    SearchStatus status = SearchStatus::found;
    ArcClassification kind = ArcClassification::not_applicable;
    std::string reason;  // when not applicable or inconclusive
    int d = 0, d1 = 0;
    Graph core;
    std::vector<int> core_vertices;
    std::vector<int> iso_to_product;  // x -> multiple(core, 2), lexicographic case
    bool certified = false;
};

/// Arc transitive graphs with half-size cores are either two disjoint copies
/// of the core (d = d1) or the core blown up by complement(K_2) (d = 2d1).
/// Throws std::logic_error if the valency divisibility or the dichotomy is
/// violated (an implementation bug signal).
ArcClassifyReport arc_transitive_half_size_classify(
    const Graph& x, Budget* budget = nullptr,
    int aut_cap = kDefaultAutomorphismCap);

// ---------------------------------------------------------------------------

struct SabidussiResult {
    int m = 0;  // order of the stabilizer of vertex 0
    FiniteGroup group;
    ConnectionSet connection;
    std::vector<int> iso;  // group element -> vertex of multiple(x, m)
    Graph cayley;
    Graph blown_up;        // multiple(x, m)
    bool verified = false;
};

/// Sabidussi: the automorphism group of a vertex transitive x, with
/// connection set {s : s(0) ~ 0}, is a Cayley graph isomorphic to
/// multiple(x, m) where m is the stabilizer order. The isomorphism sends g
/// to (g(0), rank of g within its coset). Throws AutomorphismOverflow or
/// OrderCapExceeded when Aut(x) is too large, std::invalid_argument when x
/// is not vertex transitive.
SabidussiResult sabidussi_multiple(const Graph& x,
                                   int aut_cap = kDefaultAutomorphismCap);

/// Lifts an endomorphism of x onto a core to the endomorphism
/// (v, i) -> (endo(v), 0) of multiple(x, m); fibres scale by m.
Homomorphism lift_endomorphism_to_multiple(const Graph& x,
                                           const Homomorphism& endo, int m);

}  // namespace vtc
