#include "doctest.h"
#include "oracles.hpp"

#include "lqa/branching.hpp"
#include "lqa/errors.hpp"
#include "lqa/kostant.hpp"
#include "lqa/recurrence.hpp"

using namespace lqa;

namespace {

// q^a / prod_{i=1}^{l} (1 - q^{2i}) mod q^{D+1}
QSeries row_column_series(int a, int l, int D)
{
    QSeries s = QSeries::monomial(a, 1, D);
    for (int i = 1; i <= l; ++i)
        s = div_one_minus_qm(s, 2 * i, D);
    return s;
}

Partition column(int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), 1)); }

} // namespace

TEST_CASE("recurrence frames")
{
    const auto f = build_frame(Partition{2, 1}, Partition());
    REQUIRE(f.p == 2);
    CHECK(f.terms[0].R == 2);
    CHECK(f.terms[0].gamma == Partition{1});
    CHECK(f.terms[1].R == 0);
    CHECK(f.terms[1].gamma == Partition{3});
    const auto g = build_frame(Partition{3, 1}, Partition{2});
    REQUIRE(g.p == 1);
    CHECK(g.terms[0].R == 1);
}

TEST_CASE("finite recurrence matches the direct sum on small cases")
{
    for (RootType t : {RootType::B, RootType::C, RootType::D})
        for (int n = 2; n <= 3; ++n) {
            RootSystem rs(t, n);
            for (const auto& nu : enumerate_partitions_fitting(4, n))
                for (const auto& mu : enumerate_partitions_fitting(nu.weight(), n))
                    REQUIRE_MESSAGE(k_recurrence_finite(rs, nu, mu) == k_direct(rs, nu, mu),
                                    rs.name() << " " << nu.to_string() << " / " << mu.to_string());
        }
    CHECK(k_recurrence_finite(RootSystem(RootType::C, 2), Partition{2}, Partition()).to_string() == "q + q^3");
}

TEST_CASE("finite recurrence errors")
{
    CHECK_THROWS_AS(k_recurrence_finite(RootSystem(RootType::C, 2), Partition{1, 1, 1}, Partition()), out_of_regime);
    CHECK_THROWS_AS(k_recurrence_finite(RootSystem(RootType::C, 2), Partition{3}, Partition{1, 1, 1}), invalid_weight);
}

TEST_CASE("rows and columns in the limit")
{
    const int D = 12;
    for (int l = 1; l <= 3; ++l) {
        const Partition row{2 * l};
        CHECK(k_limit(Family::so, row, Partition(), D) == row_column_series(2 * l, l, D));
        CHECK(k_limit(Family::so, column(2 * l), Partition(), D) == row_column_series(l, l, D));
        CHECK(k_limit(Family::sp, row, Partition(), D) == row_column_series(l, l, D));
        CHECK(k_limit(Family::sp, column(2 * l), Partition(), D) == row_column_series(2 * l, l, D));
    }
    CHECK(k_limit(Family::sp, Partition{2}, Partition(), 5).to_string() == "q + q^3 + q^5");
    CHECK(k_limit(Family::so, Partition{1}, Partition(), 5).is_zero());
    CHECK(k_limit(Family::so, Partition(), Partition(), 5).to_string() == "1");
}

TEST_CASE("limit agrees with stable harmonic multiplicities")
{
    for (Family f : {Family::so, Family::sp})
        for (const auto& lam : enumerate_partitions(5)) {
            const QSeries K = k_limit(f, lam, Partition(), 5);
            for (int k = 0; k <= 5; ++k)
                REQUIRE(K.coefficient(k) == harmonic_coeff_stable(f, k, lam));
        }
}

TEST_CASE("symplectic column reduction")
{
    for (int m = 0; m <= 8; ++m)
        for (int p = 0; p <= m; ++p)
            REQUIRE(k_limit(Family::sp, column(m), column(p), 10) ==
                    k_limit(Family::sp, column(m - p), Partition(), 10));
}

TEST_CASE("limit is the stabilized finite coefficient")
{
    for (const auto& nu : enumerate_partitions(4))
        for (const auto& mu : enumerate_partitions(nu.weight()))
            for (int k = 0; k <= 1; ++k) {
                const int n = std::max({2 * k + mu.length(), nu.length(), 2});
                if (n > 4)
                    continue;
                const Integer so = k_limit(Family::so, nu, mu, k).coefficient(k);
                const Integer sp = k_limit(Family::sp, nu, mu, k).coefficient(k);
                CHECK(k_direct(RootSystem(RootType::B, n), nu, mu).coefficient(k) == so);
                CHECK(k_direct(RootSystem(RootType::D, n), nu, mu).coefficient(k) == so);
                CHECK(k_direct(RootSystem(RootType::C, n), nu, mu).coefficient(k) == sp);
            }
}

TEST_CASE("degree bounds and filtration dimensions")
{
    RootSystem c2(RootType::C, 2);
    const auto d = degree_bounds(c2, Partition{2}, Partition());
    CHECK(d.lower == 1);
    CHECK(d.upper == 3);
    CHECK(brylinski_dims(c2, Partition{2}, Partition(), -1) == 0);
    CHECK(brylinski_dims(c2, Partition{2}, Partition(), 1) == 1);
    CHECK(brylinski_dims(c2, Partition{2}, Partition(), 3) == weight_multiplicity(c2, Partition{2}, Partition()));
    CHECK_THROWS(brylinski_dims(c2, Partition{2}, Partition(), -2));
}

TEST_CASE("type B vector representation at the zero weight")
{
    for (int n = 2; n <= 4; ++n)
        CHECK(k_direct(RootSystem(RootType::B, n), Partition{1}, Partition()) == QSeries::monomial(n));
}
