#include "doctest.h"

#include "lqa/hall_littlewood.hpp"
#include "lqa/recurrence.hpp"

using namespace lqa;

TEST_CASE("matrix index order")
{
    const auto idx = matrix_index(2);
    CHECK(idx == std::vector<Partition>{{2}, {1, 1}, {1}, Partition()});
}

TEST_CASE("K-matrices are unitriangular with dominance support")
{
    for (Family f : {Family::so, Family::sp}) {
        const auto K = k_matrix(f, 6, 4);
        CHECK(K.is_upper_unitriangular());
        for (std::size_t i = 0; i < K.size(); ++i)
            for (std::size_t j = 0; j < K.size(); ++j)
                if (!K.at(i, j).is_zero())
                    REQUIRE(stable_dominates(K.index[i], K.index[j]));
    }
}

TEST_CASE("P-basis matrix inverts the K-matrix on the closed window")
{
    for (Family f : {Family::so, Family::sp})
        for (int D = 0; D <= 3; ++D) {
            const int B = 6;
            const auto product = multiply(p_basis_matrix(f, B, D), k_matrix(f, B, D));
            CHECK(identity_defects(product).empty());
        }
}

TEST_CASE("matrix duality on the empty column")
{
    const auto so = k_matrix(Family::so, 6, 6);
    const auto sp = k_matrix(Family::sp, 6, 6);
    const std::size_t last = so.size() - 1;
    REQUIRE(so.index[last].empty());
    for (std::size_t i = 0; i < so.size(); ++i) {
        const auto it = std::find(sp.index.begin(), sp.index.end(), conjugate(so.index[i]));
        REQUIRE(it != sp.index.end());
        const auto j = static_cast<std::size_t>(it - sp.index.begin());
        CHECK(so.at(i, last) == sp.at(j, last));
    }
}

TEST_CASE("Q-prime expansions collect a column of K")
{
    const CharExpansion e = qprime_expansion(Family::sp, Partition{1, 1}, 4);
    CHECK(e.basis == Basis::sp);
    CHECK(e.coefficient(Partition{1, 1}).to_string() == "1");
    for (const auto& [lam, c] : e.terms)
        CHECK(c == k_limit(Family::sp, lam, Partition{1, 1}, 4));
}
