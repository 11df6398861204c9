#include "lqa/hall_littlewood.hpp"

#include "lqa/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace lqa {

CharExpansion qprime_expansion(Family family, const Partition& mu, int D)
{
    if (D < 0)
        throw std::invalid_argument("truncation degree must be nonnegative");
    CharExpansion e;
    e.basis = basis_of(family);
    for (const auto& lambda : enumerate_partitions(mu.weight() + 2 * D))
        e.add(lambda, k_limit(family, lambda, mu, D));
    return e;
}

std::vector<Partition> matrix_index(int B)
{
    std::vector<Partition> out;
    for (int w = B; w >= 0; --w) {
        auto level = partitions_of(w);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

bool TruncatedKMatrix::is_upper_unitriangular() const
{
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const QSeries& e = entries[i][j];
            if (i == j ? e.terms() != QSeries::constant(1).terms() : !e.is_zero())
                return false;
        }
    return true;
}

TruncatedKMatrix k_matrix(Family family, int B, int D)
{
    TruncatedKMatrix m;
    m.family = family;
    m.degree = D;
    m.bound = B;
    m.index = matrix_index(B);
    const std::size_t n = m.index.size();
    m.entries.assign(n, std::vector<QSeries>(n, QSeries(D)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.entries[i][j] = k_limit(family, m.index[i], m.index[j], D);
    return m;
}

TruncatedKMatrix p_basis_matrix(Family family, int B, int D)
{
    const TruncatedKMatrix k = k_matrix(family, B, D);
    if (!k.is_upper_unitriangular())
        throw std::logic_error("K-matrix is not upper unitriangular");
    TruncatedKMatrix inv = k;
    const std::size_t n = k.size();
    for (auto& row : inv.entries)
        std::fill(row.begin(), row.end(), QSeries(D));
    // back substitution, column by column
    for (std::size_t j = 0; j < n; ++j) {
        inv.entries[j][j] = QSeries::constant(1, D);
        for (std::size_t i = j; i-- > 0;) {
            QSeries acc(D);
            for (std::size_t t = i + 1; t <= j; ++t)
                if (!k.entries[i][t].is_zero() && !inv.entries[t][j].is_zero())
                    acc += k.entries[i][t] * inv.entries[t][j];
            inv.entries[i][j] = -acc;
        }
    }
    return inv;
}

TruncatedKMatrix multiply(const TruncatedKMatrix& a, const TruncatedKMatrix& b)
{
    if (a.index != b.index)
        throw std::invalid_argument("matrix index sets differ");
    TruncatedKMatrix out = a;
    out.degree = std::min(a.degree, b.degree);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QSeries acc(out.degree);
            for (std::size_t t = 0; t < n; ++t)
                if (!a.entries[i][t].is_zero() && !b.entries[t][j].is_zero())
                    acc += a.entries[i][t] * b.entries[t][j];
            out.entries[i][j] = std::move(acc);
        }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> identity_defects(const TruncatedKMatrix& m)
{
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    const std::size_t n = m.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (m.index[j].weight() + 2 * m.degree > m.bound)
            continue;
        for (std::size_t i = 0; i < n; ++i) {
            const QSeries& e = m.entries[i][j];
            const bool ok = i == j ? e.terms() == QSeries::constant(1).terms() : e.is_zero();
            if (!ok)
                bad.emplace_back(i, j);
        }
    }
    return bad;
}

} // namespace lqa
