#include "lqa/root_system.hpp"

#include "lqa/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace lqa {

char type_letter(RootType t)
{
    switch (t) {
    case RootType::B:
        return 'B';
    case RootType::C:
        return 'C';
    case RootType::D:
        return 'D';
    }
    return '?';
}

RootType parse_root_type(const std::string& s)
{
    if (s == "B" || s == "b")
        return RootType::B;
    if (s == "C" || s == "c")
        return RootType::C;
    if (s == "D" || s == "d")
        return RootType::D;
    throw std::invalid_argument("unknown root system type '" + s + "'");
}

RootSystem::RootSystem(RootType t, int n) : type(t), rank(n)
{
    if (n < 1 || n > 31)
        throw std::invalid_argument("rank must be between 1 and 31");
}

std::size_t RootSystem::positive_root_count() const
{
    const auto n = static_cast<std::size_t>(rank);
    return type == RootType::D ? n * (n - 1) : n * n;
}

std::uint64_t RootSystem::weyl_order() const
{
    std::uint64_t order = 1;
    for (int i = 2; i <= rank; ++i)
        order *= static_cast<std::uint64_t>(i);
    return order << (type == RootType::D ? rank - 1 : rank);
}

std::string RootSystem::name() const { return type_letter(type) + std::to_string(rank); }

Weight Weight::from_integral(const std::vector<int>& coords)
{
    Weight w;
    w.doubled.reserve(coords.size());
    for (int c : coords)
        w.doubled.push_back(2 * c);
    return w;
}

bool Weight::is_integral() const
{
    return std::all_of(doubled.begin(), doubled.end(), [](int x) { return x % 2 == 0; });
}

std::vector<int> Weight::integral() const
{
    if (!is_integral())
        throw invalid_weight("weight has half-integer coordinates");
    std::vector<int> out;
    out.reserve(doubled.size());
    for (int x : doubled)
        out.push_back(x / 2);
    return out;
}

SignedPermutation SignedPermutation::identity(int n)
{
    SignedPermutation w;
    w.perm.resize(static_cast<std::size_t>(n));
    std::iota(w.perm.begin(), w.perm.end(), 0);
    return w;
}

int SignedPermutation::sign() const
{
    // parity of the permutation by cycle count
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int transpositions = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)])
            continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    transpositions += std::popcount(flips);
    return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<int> SignedPermutation::apply(const std::vector<int>& beta) const
{
    std::vector<int> out(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i)
        out[static_cast<std::size_t>(perm[i])] = flipped(static_cast<int>(i)) ? -beta[i] : beta[i];
    return out;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& v) const
{
    SignedPermutation wv;
    wv.perm.resize(v.perm.size());
    for (std::size_t i = 0; i < v.perm.size(); ++i) {
        const int j = v.perm[i];
        wv.perm[i] = perm[static_cast<std::size_t>(j)];
        if (v.flipped(static_cast<int>(i)) != flipped(j))
            wv.flips |= 1u << i;
    }
    return wv;
}

std::vector<std::vector<int>> positive_roots_integral(const RootSystem& rs)
{
    const int n = rs.rank;
    std::vector<std::vector<int>> roots;
    roots.reserve(rs.positive_root_count());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> minus(static_cast<std::size_t>(n), 0), plus(static_cast<std::size_t>(n), 0);
            minus[static_cast<std::size_t>(i)] = 1;
            minus[static_cast<std::size_t>(j)] = -1;
            plus[static_cast<std::size_t>(i)] = 1;
            plus[static_cast<std::size_t>(j)] = 1;
            roots.push_back(std::move(minus));
            roots.push_back(std::move(plus));
        }
    }
    if (rs.type != RootType::D) {
        for (int i = 0; i < n; ++i) {
            std::vector<int> r(static_cast<std::size_t>(n), 0);
            r[static_cast<std::size_t>(i)] = rs.type == RootType::B ? 1 : 2;
            roots.push_back(std::move(r));
        }
    }
    return roots;
}

std::vector<Weight> positive_roots(const RootSystem& rs)
{
    std::vector<Weight> out;
    for (const auto& r : positive_roots_integral(rs))
        out.push_back(Weight::from_integral(r));
    return out;
}

Weight rho(const RootSystem& rs)
{
    // doubled rho = sum of positive roots
    Weight w{std::vector<int>(static_cast<std::size_t>(rs.rank), 0)};
    for (const auto& r : positive_roots_integral(rs))
        for (int i = 0; i < rs.rank; ++i)
            w.doubled[static_cast<std::size_t>(i)] += r[static_cast<std::size_t>(i)];
    return w;
}

std::vector<int> degrees(const RootSystem& rs)
{
    std::vector<int> d;
    const int n = rs.rank;
    if (rs.type == RootType::D) {
        for (int i = 1; i < n; ++i)
            d.push_back(2 * i);
        d.push_back(n);
    } else {
        for (int i = 1; i <= n; ++i)
            d.push_back(2 * i);
    }
    return d;
}

int algebra_dimension(const RootSystem& rs)
{
    return rs.rank + 2 * static_cast<int>(rs.positive_root_count());
}

int weyl_shard_count(const RootSystem& rs)
{
    return rs.type == RootType::D ? 1 << (rs.rank - 1) : 1 << rs.rank;
}

void for_each_weyl(const RootSystem& rs,
                   const std::function<void(const SignedPermutation&, int)>& visit, int shard,
                   int shards)
{
    if (shards < 1 || shard < 0 || shard >= shards)
        throw std::invalid_argument("bad Weyl shard");
    const int n = rs.rank;
    const std::uint32_t masks = 1u << n;
    int index = 0;
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        if (rs.type == RootType::D && std::popcount(mask) % 2 != 0)
            continue;
        if (index++ % shards != shard)
            continue;
        SignedPermutation w = SignedPermutation::identity(n);
        w.flips = mask;
        do {
            visit(w, w.sign());
        } while (std::next_permutation(w.perm.begin(), w.perm.end()));
    }
}

std::vector<int> dot_action(const SignedPermutation& w, const std::vector<int>& lambda,
                            const RootSystem& rs)
{
    if (static_cast<int>(lambda.size()) != rs.rank || w.size() != rs.rank)
        throw invalid_weight("weight length does not match the rank");
    const Weight r = rho(rs);
    std::vector<int> shifted(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        shifted[i] = 2 * lambda[i] + r.doubled[i];
    std::vector<int> moved = w.apply(shifted);
    for (std::size_t i = 0; i < moved.size(); ++i)
        moved[i] = (moved[i] - r.doubled[i]) / 2;
    return moved;
}

bool in_positive_cone(const RootSystem& rs, const std::vector<int>& beta)
{
    const int n = rs.rank;
    long partial = 0;
    const int free_prefix = rs.type == RootType::D ? n - 2 : n;
    for (int k = 0; k < free_prefix; ++k) {
        partial += beta[static_cast<std::size_t>(k)];
        if (partial < 0)
            return false;
    }
    switch (rs.type) {
    case RootType::B:
        return true;
    case RootType::C:
        return partial % 2 == 0;
    case RootType::D: {
        if (n == 1)
            return beta[0] == 0;
        const long s_prev = partial + beta[static_cast<std::size_t>(n - 2)];
        const long last = beta[static_cast<std::size_t>(n - 1)];
        const long c_prev = s_prev - last; // twice the coefficient of e_{n-1} - e_n
        const long c_last = s_prev + last; // twice the coefficient of e_{n-1} + e_n
        return c_prev >= 0 && c_last >= 0 && c_prev % 2 == 0;
    }
    }
    return false;
}

Integer root_height(const RootSystem& rs, const std::vector<int>& beta)
{
    const int n = rs.rank;
    Integer h = 0;
    long partial = 0;
    switch (rs.type) {
    case RootType::B:
        for (int k = 0; k < n; ++k) {
            partial += beta[static_cast<std::size_t>(k)];
            h += partial;
        }
        return h;
    case RootType::C:
        for (int k = 0; k < n - 1; ++k) {
            partial += beta[static_cast<std::size_t>(k)];
            h += partial;
        }
        partial += beta[static_cast<std::size_t>(n - 1)];
        return h + partial / 2;
    case RootType::D:
        if (n == 1)
            return 0;
        for (int k = 0; k < n - 2; ++k) {
            partial += beta[static_cast<std::size_t>(k)];
            h += partial;
        }
        partial += beta[static_cast<std::size_t>(n - 2)];
        // c_{n-1} + c_n = S_{n-1}
        return h + partial;
    }
    return h;
}

Integer weyl_dimension(const RootSystem& rs, const std::vector<int>& lambda)
{
    const Weight r = rho(rs);
    Integer num = 1, den = 1;
    for (const auto& alpha : positive_roots_integral(rs)) {
        long a = 0, b = 0;
        for (int i = 0; i < rs.rank; ++i) {
            a += static_cast<long>(2 * lambda[static_cast<std::size_t>(i)] + r.doubled[static_cast<std::size_t>(i)]) *
                 alpha[static_cast<std::size_t>(i)];
            b += static_cast<long>(r.doubled[static_cast<std::size_t>(i)]) * alpha[static_cast<std::size_t>(i)];
        }
        num *= a;
        den *= b;
    }
    if (num % den != 0)
        throw std::logic_error("Weyl dimension formula gave a non-integer");
    return num / den;
}

bool is_dominant(const RootSystem& rs, const std::vector<int>& lambda)
{
    const int n = rs.rank;
    for (int i = 0; i + 1 < n; ++i)
        if (lambda[static_cast<std::size_t>(i)] < lambda[static_cast<std::size_t>(i + 1)])
            return false;
    if (rs.type == RootType::D) {
        if (n == 1)
            return true;
        return lambda[static_cast<std::size_t>(n - 2)] >= std::abs(lambda[static_cast<std::size_t>(n - 1)]);
    }
    return lambda[static_cast<std::size_t>(n - 1)] >= 0;
}

std::vector<int> weight_of(const RootSystem& rs, const Partition& lambda)
{
    if (lambda.length() > rs.rank)
        throw invalid_weight("partition (" + lambda.to_string() + ") has more than " +
                             std::to_string(rs.rank) + " parts");
    return lambda.padded(rs.rank);
}

} // namespace lqa
