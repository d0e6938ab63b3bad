#pragma once

#include <stdexcept>
#include <vector>

#include "vtc/group.hpp"
#include "vtc/hom_search.hpp"

namespace vtc {

inline constexpr int kDefaultAutomorphismCap = 100000;

/// The automorphism count exceeded the cap, so a transitivity or orbital
/// question cannot be decided from the (truncated) list.
struct AutomorphismOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AutomorphismList {
    std::vector<Permutation> perms;
    bool complete = false;  // false when the cap was hit (perms truncated)
};

/// Complete automorphism list via the homomorphism engine with bijectivity
/// and non-adjacency constraints added.
AutomorphismList automorphism_group(const Graph& g,
                                    int cap = kDefaultAutomorphismCap);

/// True iff the orbit of vertex 0 under the full automorphism group is V.
/// Throws AutomorphismOverflow when the group does not fit under the cap.
bool is_vertex_transitive(const Graph& g, int cap = kDefaultAutomorphismCap);

/// True iff the orbit of one arc covers all ordered adjacent pairs.
/// Requires at least one edge.
bool is_arc_transitive(const Graph& g, int cap = kDefaultAutomorphismCap);

struct OrbitalViolation {
    int w, z;          // pair inside the core
    int a, b;          // collapsed pair it was mapped to
    int automorphism;  // index into the automorphism list
};

struct OrbitalsReport {
    std::vector<OrbitalViolation> violations;
    std::uint64_t checked = 0;  // (automorphism, core pair) combinations
    bool passed = false;
};

/// For every pair {w,z} inside the core and every automorphism s, checks that
/// {s(w),s(z)} is not collapsed by the endomorphism. A violation falsifies
/// the implementation, not the statement it is testing.
OrbitalsReport check_lemma_orbitals(const Graph& x, const Homomorphism& endo,
                                    const Retraction& core_retraction,
                                    int cap = kDefaultAutomorphismCap,
                                    Budget* budget = nullptr);

}  // namespace vtc
