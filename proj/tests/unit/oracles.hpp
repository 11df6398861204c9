#pragma once

// Independent reference computations used only by the tests. None of these
// share code with the library routines they check.

#include "lqa/partition.hpp"
#include "lqa/qseries.hpp"
#include "lqa/root_system.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using lqa::Partition;
using lqa::QSeries;
using lqa::RootType;

// p(n) through p(n, k) = p(n - 1, k - 1) + p(n - k, k), partitions into exactly k parts.
inline std::uint64_t partition_count(int n)
{
    std::vector<std::vector<std::uint64_t>> p(static_cast<std::size_t>(n + 1),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
    p[0][0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k)
            p[m][k] = p[m - 1][k - 1] + p[m - k][k];
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k)
        total += p[n][k];
    return total;
}

// All partitions obtained from lambda by adding a horizontal strip of size a.
inline std::vector<Partition> add_horizontal_strip(const Partition& lambda, int a)
{
    std::vector<Partition> out;
    const int len = lambda.length();
    std::vector<int> rows(static_cast<std::size_t>(len + 1), 0);
    std::function<void(int, int)> go = [&](int i, int left) {
        if (i == len + 1) {
            if (left == 0) {
                std::vector<int> parts;
                for (int x : rows)
                    if (x > 0)
                        parts.push_back(x);
                out.emplace_back(parts);
            }
            return;
        }
        const int base = lambda.part(i);
        const int cap = i == 0 ? base + left : std::min(base + left, lambda.part(i - 1));
        for (int v = base; v <= cap; ++v) {
            rows[i] = v;
            go(i + 1, left - (v - base));
        }
    };
    go(0, a);
    return out;
}

// c^nu_{lambda,gamma} from the Jacobi-Trudi determinant of s_gamma in the h's,
// applied to s_lambda one horizontal strip at a time.
inline std::int64_t lr_via_pieri(const Partition& lambda, const Partition& gamma, const Partition& nu)
{
    const int m = gamma.length();
    std::vector<int> sigma(static_cast<std::size_t>(m));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::int64_t total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (sigma[i] > sigma[j])
                    ++inversions;
        bool ok = true;
        std::vector<int> a;
        for (int i = 0; i < m; ++i) {
            const int v = gamma.part(i) - i + sigma[i];
            if (v < 0)
                ok = false;
            a.push_back(v);
        }
        if (!ok)
            continue;
        std::map<Partition, std::int64_t> state{{lambda, 1}};
        for (int v : a) {
            std::map<Partition, std::int64_t> next;
            for (const auto& [p, c] : state)
                for (const auto& q : add_horizontal_strip(p, v))
                    if (nu.contains(q))
                        next[q] += c;
            state = std::move(next);
        }
        auto it = state.find(nu);
        if (it != state.end())
            total += inversions % 2 == 0 ? it->second : -it->second;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

// Positive roots in ordinary integer coordinates; B short roots e_i, C long 2e_i.
inline std::vector<std::vector<int>> roots(RootType type, int n)
{
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
            a[i] = 1;
            a[j] = -1;
            b[i] = 1;
            b[j] = 1;
            out.push_back(a);
            out.push_back(b);
        }
    if (type != RootType::D)
        for (int i = 0; i < n; ++i) {
            std::vector<int> a(static_cast<std::size_t>(n), 0);
            a[i] = type == RootType::B ? 1 : 2;
            out.push_back(a);
        }
    return out;
}

// Counts multisets of vectors from `rs` summing to beta, graded by size, by
// explicit enumeration with a size cap.
inline QSeries multiset_count(const std::vector<std::vector<int>>& rs, std::vector<int> beta, int max_size)
{
    QSeries out;
    std::function<void(std::size_t, int)> go = [&](std::size_t idx, int size) {
        if (std::all_of(beta.begin(), beta.end(), [](int x) { return x == 0; }))
            out.add_term(size, 1);
        if (size == max_size)
            return;
        for (std::size_t r = idx; r < rs.size(); ++r) {
            for (std::size_t k = 0; k < beta.size(); ++k)
                beta[k] -= rs[r][k];
            // every root has nonnegative partial sums, so a negative one is final
            int partial = 0;
            bool reachable = true;
            for (int b : beta) {
                partial += b;
                if (partial < 0)
                    reachable = false;
            }
            if (reachable)
                go(r, size + 1);
            for (std::size_t k = 0; k < beta.size(); ++k)
                beta[k] += rs[r][k];
        }
    };
    go(0, 0);
    return out;
}

// Signed permutation as an n x n matrix action on coordinates; used for BFS.
struct SignedPerm {
    std::vector<int> image; // image[i] = +-(j+1): e_i -> +-e_j
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.image < b.image; }
};

// Simple reflections in coordinate form: s_i swaps i, i+1; the last one is the
// sign change of e_n (B, C) or e_{n-1} + e_n -> -(...) (D).
inline SignedPerm apply_simple(const SignedPerm& w, int i, RootType type, int n)
{
    SignedPerm out = w;
    for (int& x : out.image) {
        const int j = std::abs(x) - 1;
        const int s = x > 0 ? 1 : -1;
        if (i < n - 1) {
            if (j == i)
                x = s * (i + 2);
            else if (j == i + 1)
                x = s * (i + 1);
        } else if (type != RootType::D) {
            if (j == n - 1)
                x = -x;
        } else {
            if (j == n - 2)
                x = -s * n;
            else if (j == n - 1)
                x = -s * (n - 1);
        }
    }
    return out;
}

// Coxeter length of every element by breadth-first search from the identity.
inline std::map<SignedPerm, int> reduced_lengths(RootType type, int n)
{
    SignedPerm id;
    for (int i = 0; i < n; ++i)
        id.image.push_back(i + 1);
    std::map<SignedPerm, int> dist{{id, 0}};
    std::queue<SignedPerm> todo;
    todo.push(id);
    const int gens = type == RootType::D && n == 1 ? 0 : n;
    while (!todo.empty()) {
        SignedPerm w = todo.front();
        todo.pop();
        for (int i = 0; i < gens; ++i) {
            SignedPerm v = apply_simple(w, i, type, n);
            if (dist.emplace(v, dist[w] + 1).second)
                todo.push(v);
        }
    }
    return dist;
}

inline std::uint64_t binom(int n, int k)
{
    if (k < 0 || n < k)
        return 0;
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i)
        b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return b;
}

// Weight multiplicities of V(l e_1): Sym^l of the defining representation for C,
// harmonic polynomials of degree l for B and D.
inline std::map<std::vector<int>, std::int64_t> vector_power_weights(RootType type, int n, int l)
{
    auto sym = [&](int k) {
        std::map<std::vector<int>, std::int64_t> out;
        if (k < 0)
            return out;
        std::vector<int> x(static_cast<std::size_t>(n), 0);
        std::function<void(int, int)> go = [&](int i, int used) {
            if (i == n) {
                const int rest = k - used;
                std::int64_t mult = 0;
                if (type == RootType::B) {
                    for (int e = 0; 2 * e <= rest; ++e)
                        mult += static_cast<std::int64_t>(binom(e + n - 1, n - 1));
                } else if (rest % 2 == 0) {
                    mult = static_cast<std::int64_t>(binom(rest / 2 + n - 1, n - 1));
                }
                if (mult)
                    out[x] += mult;
                return;
            }
            for (int c = -(k - used); c <= k - used; ++c) {
                x[i] = c;
                go(i + 1, used + std::abs(c));
            }
            x[i] = 0;
        };
        go(0, 0);
        return out;
    };
    auto top = sym(l);
    if (type != RootType::C)
        for (const auto& [w, m] : sym(l - 2))
            top[w] -= m;
    std::erase_if(top, [](const auto& kv) { return kv.second == 0; });
    return top;
}

// Brauer-Klimyk: multiplicities of the dominant constituents of V(gamma) (x) X,
// X given by its weight multiplicities.
inline std::map<std::vector<int>, std::int64_t> brauer_klimyk(RootType type, int n, const std::vector<int>& gamma,
                                                               const std::map<std::vector<int>, std::int64_t>& x)
{
    std::vector<int> rho2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rho2[i] = type == RootType::B ? 2 * (n - i) - 1 : type == RootType::C ? 2 * (n - i) : 2 * (n - 1 - i);
    std::map<std::vector<int>, std::int64_t> out;
    for (const auto& [w, m] : x) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            v[i] = 2 * (gamma[i] + w[i]) + rho2[i];
        int negatives = 0;
        for (int& c : v)
            if (c < 0) {
                c = -c;
                ++negatives;
            }
        bool singular = false;
        int inversions = 0;
        for (int a = 0; a < n; ++a) {
            if (v[a] == 0 && type != RootType::D)
                singular = true;
            for (int b = a + 1; b < n; ++b) {
                if (v[a] == v[b])
                    singular = true;
                if (v[a] < v[b])
                    ++inversions;
            }
        }
        if (singular)
            continue;
        std::sort(v.begin(), v.end(), std::greater<>());
        int sign = inversions % 2 == 0 ? 1 : -1;
        if (type == RootType::D) {
            if (negatives % 2 != 0 && v.back() != 0)
                v.back() = -v.back();
        } else if (negatives % 2 != 0) {
            sign = -sign;
        }
        std::vector<int> lam(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            lam[i] = (v[i] - rho2[i]) / 2;
        out[lam] += sign * m;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// Type-A Kostka-Foulkes polynomial through the Lusztig alternating sum over S_n
// with the q-Kostant function of the roots e_i - e_j.
inline QSeries kostka_foulkes_a(const Partition& lambda, const Partition& mu, int n)
{
    std::vector<std::vector<int>> rs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> a(static_cast<std::size_t>(n), 0);
            a[i] = 1;
            a[j] = -1;
            rs.push_back(a);
        }
    const auto l = lambda.padded(n);
    const auto m = mu.padded(n);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    QSeries total;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (sigma[i] > sigma[j])
                    ++inversions;
        std::vector<int> beta(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            beta[i] = l[sigma[i]] + (n - 1 - sigma[i]) - (n - 1 - i) - m[i];
        int partial = 0;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            partial += beta[i];
            if (partial < 0)
                ok = false;
        }
        if (!ok || partial != 0)
            continue;
        QSeries p = multiset_count(rs, beta, lambda.weight() * n);
        if (inversions % 2 == 0)
            total += p;
        else
            total -= p;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

// Random partition of weight <= max_weight with a fixed generator.
inline Partition random_partition(std::mt19937& rng, int max_weight)
{
    std::uniform_int_distribution<int> wdist(0, max_weight);
    int w = wdist(rng);
    std::vector<int> parts;
    while (w > 0) {
        const int cap = parts.empty() ? w : std::min(w, parts.back());
        std::uniform_int_distribution<int> pd(1, cap);
        const int p = pd(rng);
        parts.push_back(p);
        w -= p;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(parts);
}

inline QSeries random_series(std::mt19937& rng, int max_degree, int terms)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-50, 50);
    QSeries s;
    for (int i = 0; i < terms; ++i)
        s.add_term(deg(rng), coeff(rng));
    return s;
}

} // namespace oracle
