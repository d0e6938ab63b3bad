#include "vtc/exact_spectrum.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace vtc {

bool integer_matrix_singular(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("matrix is not square");
    if (n == 0) return false;  // empty determinant is 1

    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);

    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return true;  // zero column below, determinant 0
        if (pivot != k) std::swap(a[pivot], a[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return a[n - 1][n - 1] == 0;
}

bool is_adjacency_eigenvalue(const Graph& g, long long lambda) {
    const int n = g.vertex_count();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j : g.neighbors(i)) m[i][j] = 1;
        m[i][i] -= lambda;
    }
    return integer_matrix_singular(m);
}

}  // namespace vtc
