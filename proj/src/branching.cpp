#include "lqa/branching.hpp"

#include "lqa/errors.hpp"
#include "lqa/lr.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace lqa {

namespace {

PartitionClass restriction_class(Family f)
{
    return f == Family::so ? PartitionClass::even_rows : PartitionClass::even_columns;
}

// S(so) = sum over nu with even columns, S(sp) = sum over nu with even rows.
PartitionClass symmetric_class(Family f)
{
    return f == Family::so ? PartitionClass::even_columns : PartitionClass::even_rows;
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : v)
            h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 0x100000001b3ULL;
        return h;
    }
};

using WeightChar = std::unordered_map<std::vector<int>, std::vector<Integer>, VecHash>;

// Weight multiplicities of S^0..S^kmax of the adjoint module.
WeightChar symmetric_weight_char(const RootSystem& rs, int kmax)
{
    const int n = rs.rank;
    const auto len = static_cast<std::size_t>(kmax + 1);
    WeightChar f;
    f[std::vector<int>(static_cast<std::size_t>(n), 0)] = [&] {
        std::vector<Integer> v(len);
        v[0] = 1;
        return v;
    }();
    std::vector<std::vector<int>> roots;
    for (const auto& r : positive_roots_integral(rs)) {
        roots.push_back(r);
        std::vector<int> neg(r);
        for (int& x : neg)
            x = -x;
        roots.push_back(std::move(neg));
    }
    for (const auto& alpha : roots) {
        WeightChar g;
        for (const auto& [beta, v] : f) {
            int low = 0;
            while (low <= kmax && v[static_cast<std::size_t>(low)] == 0)
                ++low;
            std::vector<int> target = beta;
            for (int j = 0; j + low <= kmax; ++j) {
                auto& out = g[target];
                if (out.empty())
                    out.resize(len);
                for (int t = 0; t + j <= kmax; ++t)
                    if (v[static_cast<std::size_t>(t)] != 0)
                        out[static_cast<std::size_t>(t + j)] += v[static_cast<std::size_t>(t)];
                for (int i = 0; i < n; ++i)
                    target[static_cast<std::size_t>(i)] += alpha[static_cast<std::size_t>(i)];
            }
        }
        f = std::move(g);
    }
    // the zero weight has multiplicity n: multiply by (1 - t)^{-n}
    std::vector<Integer> binom(len);
    for (int j = 0; j <= kmax; ++j) {
        Integer c = 1;
        for (int i = 1; i <= j; ++i)
            c = c * (n + i - 1) / i;
        binom[static_cast<std::size_t>(j)] = c;
    }
    for (auto& [beta, v] : f) {
        std::vector<Integer> w(len);
        for (int t = 0; t <= kmax; ++t)
            for (int j = 0; t + j <= kmax; ++j)
                w[static_cast<std::size_t>(t + j)] += v[static_cast<std::size_t>(t)] * binom[static_cast<std::size_t>(j)];
        v = std::move(w);
    }
    return f;
}

std::vector<Decomposition> decompose(const RootSystem& rs, const WeightChar& f, int kmax)
{
    std::vector<Decomposition> out(static_cast<std::size_t>(kmax + 1));
    for (const auto& [lambda, unused] : f) {
        if (!is_dominant(rs, lambda))
            continue;
        std::vector<Integer> total(static_cast<std::size_t>(kmax + 1));
        for_each_weyl(rs, [&](const SignedPermutation& w, int sign) {
            auto it = f.find(dot_action(w, lambda, rs));
            if (it == f.end())
                return;
            for (int a = 0; a <= kmax; ++a) {
                if (sign > 0)
                    total[static_cast<std::size_t>(a)] += it->second[static_cast<std::size_t>(a)];
                else
                    total[static_cast<std::size_t>(a)] -= it->second[static_cast<std::size_t>(a)];
            }
        });
        for (int a = 0; a <= kmax; ++a)
            if (total[static_cast<std::size_t>(a)] != 0)
                out[static_cast<std::size_t>(a)].emplace(lambda, total[static_cast<std::size_t>(a)]);
    }
    return out;
}

struct FiniteCache {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::vector<Decomposition>> table;
};

FiniteCache& finite_cache()
{
    static FiniteCache c;
    return c;
}

struct StableCache {
    std::mutex mutex;
    std::map<std::tuple<int, int, Partition>, Integer> table;
};

StableCache& stable_cache()
{
    static StableCache c;
    return c;
}

// Coefficients of prod_{i>=1} (1 - q^{step*i}) up to degree k.
std::vector<Integer> euler_product(int step, int count, int k)
{
    QSeries prod = QSeries::constant(1, k);
    for (int i = 1; i <= count && step * i <= k; ++i)
        prod *= QSeries::constant(1, k) - QSeries::monomial(step * i, 1, k);
    std::vector<Integer> out(static_cast<std::size_t>(k + 1));
    for (const auto& [d, c] : prod.terms())
        out[static_cast<std::size_t>(d)] = c;
    return out;
}

} // namespace

std::uint64_t branching(Family family, const Partition& nu, const Partition& lambda)
{
    const int size = nu.weight() - lambda.weight();
    if (size < 0 || !nu.contains(lambda))
        return 0;
    std::uint64_t total = 0;
    for (const auto& gamma : partitions_of(size, restriction_class(family)))
        if (nu.contains(gamma))
            total += lr_coefficient(lambda, gamma, nu);
    return total;
}

Integer sym_mult_stable(Family family, int k, const Partition& lambda)
{
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    if (lambda.weight() > 2 * k)
        return 0;
    auto key = std::make_tuple(static_cast<int>(family), k, lambda);
    auto& c = stable_cache();
    {
        std::lock_guard lock(c.mutex);
        auto it = c.table.find(key);
        if (it != c.table.end())
            return it->second;
    }
    Integer total = 0;
    for (const auto& nu : partitions_of(2 * k, symmetric_class(family)))
        total += branching(family, nu, lambda);
    std::lock_guard lock(c.mutex);
    c.table.emplace(std::move(key), total);
    return total;
}

CharExpansion sym_char_stable(Family family, int k)
{
    CharExpansion e;
    e.basis = basis_of(family);
    for (const auto& lambda : enumerate_partitions(2 * k)) {
        Integer m = sym_mult_stable(family, k, lambda);
        if (m != 0)
            e.add(lambda, QSeries::constant(m));
    }
    return e;
}

Integer harmonic_coeff_stable(Family family, int k, const Partition& lambda)
{
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    const auto prod = euler_product(2, k, k);
    Integer total = 0;
    for (int a = (lambda.weight() + 1) / 2; a <= k; ++a) {
        const Integer& e = prod[static_cast<std::size_t>(k - a)];
        if (e != 0)
            total += e * sym_mult_stable(family, a, lambda);
    }
    return total;
}

CharExpansion harmonic_char_stable(Family family, int D)
{
    CharExpansion e;
    e.basis = basis_of(family);
    for (const auto& lambda : enumerate_partitions(2 * D)) {
        QSeries s(D);
        for (int k = (lambda.weight() + 1) / 2; k <= D; ++k)
            s.add_term(k, harmonic_coeff_stable(family, k, lambda));
        e.add(lambda, s);
    }
    return e;
}

std::vector<Decomposition> sym_decompositions_finite(const RootSystem& rs, int kmax)
{
    if (kmax < 0)
        throw std::invalid_argument("k must be nonnegative");
    auto& c = finite_cache();
    const auto key = std::make_pair(static_cast<int>(rs.type), rs.rank);
    {
        std::lock_guard lock(c.mutex);
        auto it = c.table.find(key);
        if (it != c.table.end() && static_cast<int>(it->second.size()) > kmax)
            return std::vector<Decomposition>(it->second.begin(), it->second.begin() + kmax + 1);
    }
    auto decomp = decompose(rs, symmetric_weight_char(rs, kmax), kmax);
    std::lock_guard lock(c.mutex);
    auto& slot = c.table[key];
    if (slot.size() < decomp.size())
        slot = decomp;
    return decomp;
}

Integer sym_mult_finite(const RootSystem& rs, int k, const Partition& lambda)
{
    const auto weight = weight_of(rs, lambda);
    const auto decomp = sym_decompositions_finite(rs, k);
    const auto& level = decomp[static_cast<std::size_t>(k)];
    auto it = level.find(weight);
    return it == level.end() ? Integer(0) : it->second;
}

Decomposition harmonic_decomposition_finite(const RootSystem& rs, int k)
{
    const auto decomp = sym_decompositions_finite(rs, k);
    QSeries prod = QSeries::constant(1, k);
    for (int d : degrees(rs))
        prod *= QSeries::constant(1, k) - QSeries::monomial(d, 1, k);
    Decomposition out;
    for (int a = 0; a <= k; ++a) {
        const Integer e = prod.coefficient(k - a);
        if (e == 0)
            continue;
        for (const auto& [lambda, m] : decomp[static_cast<std::size_t>(a)]) {
            Integer& slot = out[lambda];
            slot += e * m;
            if (slot == 0)
                out.erase(lambda);
        }
    }
    return out;
}

CharExpansion harmonic_char_finite(const RootSystem& rs, int k)
{
    CharExpansion e;
    e.basis = rs.type == RootType::C ? Basis::sp : Basis::so;
    e.rank = rs.rank;
    for (const auto& [weight, m] : harmonic_decomposition_finite(rs, k)) {
        if (weight.back() < 0)
            continue;
        e.add(Partition(weight), QSeries::constant(m));
    }
    return e;
}

CharExpansion phi(const CharExpansion& expansion)
{
    if (expansion.rank)
        throw not_universal("phi is defined on universal characters only");
    if (expansion.basis == Basis::gl)
        throw std::invalid_argument("phi acts on the so and sp bases");
    CharExpansion out;
    out.basis = expansion.basis == Basis::so ? Basis::sp : Basis::so;
    for (const auto& [lambda, c] : expansion.terms)
        out.add(conjugate(lambda), c);
    return out;
}

} // namespace lqa
