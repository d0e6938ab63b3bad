#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "vtc/graph.hpp"

namespace vtc {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Node-count budget shared across the searches of a composite operation.
struct Budget {
    std::uint64_t limit = kDefaultNodeBudget;
    std::uint64_t used = 0;

    /// Charges one search node; false once the limit is spent.
    bool spend() { return used++ < limit; }
    bool exceeded() const { return used > limit; }
};

/// A search either found what it was asked for, proved there is none, or
/// ran out of budget. Inconclusive is a first-class outcome, distinct from
/// a definitive "none".
enum class SearchStatus { found, none, inconclusive };

/// Total vertex map between graphs, adjacency-preserving.
/// The constructor checks every edge and throws std::invalid_argument.
class Homomorphism {
public:
    Homomorphism(Graph source, Graph target, std::vector<int> map);

    const Graph& source() const { return source_; }
    const Graph& target() const { return target_; }
    const std::vector<int>& map() const { return map_; }
    int operator()(int v) const { return map_[v]; }
    bool is_endomorphism() const { return source_ == target_; }
    std::vector<int> image() const;  // sorted, distinct

private:
    Graph source_;
    Graph target_;
    std::vector<int> map_;
};

/// Endomorphism that is the identity on its image.
class Retraction {
public:
    Retraction(Graph g, std::vector<int> map);  // validates idempotence

    const Homomorphism& hom() const { return hom_; }
    const Graph& graph() const { return hom_.source(); }
    const std::vector<int>& map() const { return hom_.map(); }
    const std::vector<int>& image() const { return image_; }

private:
    Homomorphism hom_;
    std::vector<int> image_;
};

/// Fibres of a homomorphism, keyed by image vertex (ascending).
struct FibrePartition {
    std::vector<std::pair<int, std::vector<int>>> fibres;
};

FibrePartition fibres(const Homomorphism& h);

// ---------------------------------------------------------------------------
// Backtracking engine.
//
// Deterministic order: fixed vertices first, then by descending degree with
// ties by index; candidate targets ascending. Forward checking prunes the
// neighbor candidate sets after every assignment.

struct HomOptions {
    bool injective = false;
    bool induced = false;           // preserve non-adjacency as well
    std::vector<int> fixed;         // per-source-vertex forced target, -1 = free
    // Extra per-pair admissibility filter applied to the initial domains.
    std::function<bool(int, int)> domain_filter;
};

struct EnumStats {
    std::uint64_t solutions = 0;
    bool complete = false;  // search space fully explored
};

/// Enumerates valid maps, calling emit for each; emit returns false to stop.
EnumStats enumerate_homomorphisms(
    const Graph& source, const Graph& target, const HomOptions& opts,
    Budget& budget, const std::function<bool(std::span<const int>)>& emit);

// ---------------------------------------------------------------------------
// Search operations.

struct HomResult {
    SearchStatus status;
    std::optional<Homomorphism> hom;
    std::uint64_t nodes = 0;
};

HomResult find_homomorphism(const Graph& x, const Graph& y,
                            Budget* budget = nullptr);

struct RetractionResult {
    SearchStatus status;
    std::optional<Retraction> retraction;
    std::uint64_t nodes = 0;
};

/// Retraction of x fixing `image` pointwise, with range exactly `image`.
RetractionResult find_retraction_to(const Graph& x, std::span<const int> image,
                                    Budget* budget = nullptr);

struct CoreResult {
    SearchStatus status;  // found, or inconclusive with the best retract so far
    Graph core;
    std::vector<int> core_vertices;      // within x, sorted
    std::optional<Retraction> witness;   // retraction of x onto core_vertices
    std::uint64_t nodes = 0;
};

/// Vertex-minimal retract: descends one vertex at a time, searching for a
/// homomorphism into each single-vertex-deleted subgraph, and normalizes the
/// composite into a retraction.
CoreResult find_core(const Graph& x, Budget* budget = nullptr);

/// nullopt when the budget ran out before a definitive answer.
std::optional<bool> is_core(const Graph& x, Budget* budget = nullptr);
std::optional<bool> homomorphically_equivalent(const Graph& x, const Graph& y,
                                               Budget* budget = nullptr);

struct IsoResult {
    SearchStatus status;
    std::optional<std::vector<int>> iso;  // vertex of a -> vertex of b
    std::uint64_t nodes = 0;
};

/// Backtracking isomorphism search with degree-sequence and
/// neighborhood-degree-multiset pruning.
IsoResult find_isomorphism(const Graph& a, const Graph& b,
                           Budget* budget = nullptr);

/// All vertex subsets of `host` inducing a subgraph isomorphic to `pattern`,
/// deduplicated and sorted; nullopt on budget exhaustion.
std::optional<std::vector<std::vector<int>>> induced_copies(
    const Graph& pattern, const Graph& host, Budget* budget = nullptr);

struct FibreReport {
    std::vector<std::pair<int, int>> sizes;  // (image vertex, fibre size)
    bool equal = false;
    int expected = 0;  // |V(X)| / |image| when that divides evenly, else 0
};

/// Fibre-size report for an endomorphism of x onto a core.
/// Throws std::invalid_argument when h is not such an endomorphism.
FibreReport verify_equal_fibres(const Graph& x, const Homomorphism& h,
                                Budget* budget = nullptr);

/// Turns an arbitrary endomorphism map into a retraction onto a retract
/// contained in its image (iterate until the image is stable, then undo the
/// residual permutation of the image).
Retraction normalize_to_retraction(const Graph& x, std::vector<int> endo_map);

}  // namespace vtc
