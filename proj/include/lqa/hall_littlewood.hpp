#pragma once

#include "lqa/character.hpp"
#include "lqa/partition.hpp"
#include "lqa/qseries.hpp"

#include <vector>

namespace lqa {

/// Q'_mu on the universal so/sp basis: lambda -> K_{lambda,mu}(q) mod q^{D+1}.
/// Complete in that window, since K_{lambda,mu} starts in degree (|lambda|-|mu|)/2.
CharExpansion qprime_expansion(Family family, const Partition& mu, int D);

/// Square matrix of truncated series indexed by all partitions of weight <= B,
/// ordered by weight descending and then reverse-lexicographically, so that a
/// K-matrix (row lambda, column mu) is upper unitriangular.
struct TruncatedKMatrix {
    Family family = Family::so;
    int degree = 0;
    int bound = 0;
    std::vector<Partition> index;
    std::vector<std::vector<QSeries>> entries;

    std::size_t size() const { return index.size(); }
    const QSeries& at(std::size_t row, std::size_t col) const { return entries[row][col]; }
    bool is_upper_unitriangular() const;
};

/// Partitions of weight <= B in matrix order.
std::vector<Partition> matrix_index(int B);

TruncatedKMatrix k_matrix(Family family, int B, int D);

/// Inverse of the K-matrix mod q^{D+1}: column mu holds P_mu on the s basis.
TruncatedKMatrix p_basis_matrix(Family family, int B, int D);

TruncatedKMatrix multiply(const TruncatedKMatrix& a, const TruncatedKMatrix& b);

/// Indices (row, col) where the product differs from the identity, restricted to
/// columns mu with |mu| + 2D <= B.
std::vector<std::pair<std::size_t, std::size_t>> identity_defects(const TruncatedKMatrix& m);

} // namespace lqa
