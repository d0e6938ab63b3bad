#pragma once

#include <vector>

#include "vtc/graph.hpp"

namespace vtc {

/// Exact determinant-zero test via fraction-free (Bareiss) elimination over
/// arbitrary-precision integers. No floating point.
bool integer_matrix_singular(const std::vector<std::vector<long long>>& m);

/// True iff lambda is an eigenvalue of the adjacency matrix of g,
/// i.e. A - lambda*I is singular.
bool is_adjacency_eigenvalue(const Graph& g, long long lambda);

}  // namespace vtc
