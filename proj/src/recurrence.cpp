#include "lqa/recurrence.hpp"

#include "lqa/errors.hpp"
#include "lqa/kostant.hpp"
#include "lqa/pieri.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace lqa {

namespace {

struct RecurrenceCache {
    std::mutex mutex;
    std::map<std::tuple<int, int, Partition, std::vector<int>, int>, QSeries> finite;
    std::map<std::tuple<int, Partition, Partition, int>, QSeries> limit;
};

RecurrenceCache& cache()
{
    static RecurrenceCache c;
    return c;
}

int measure(const Partition& p) { return p.weight() + drop_first(p).weight(); }

// Sum over s and r + 2a = R_s of the signed q-weighted Pieri terms, calling
// `lower(lambda)` for each lambda; `skip_self` drops the lambda = nu term of s = 1.
template <typename Lower>
QSeries expand_frame(const RecurrenceFrame& frame, bool symplectic, std::optional<int> trunc,
                     bool skip_self, int max_length, Lower&& lower)
{
    QSeries total(trunc);
    for (const auto& term : frame.terms) {
        const int sign = term.s % 2 == 1 ? 1 : -1;
        for (int a = 0; 2 * a <= term.R; ++a) {
            const int r = term.R - 2 * a;
            const int shift = symplectic ? r + a : term.R;
            if (trunc && shift > *trunc)
                continue;
            for (const auto& [lambda, mult] : pieri_expand(term.gamma, r)) {
                if (lambda.length() > max_length)
                    continue;
                if (skip_self && term.s == 1 && a == 0 && lambda == frame.nu)
                    continue;
                QSeries sub = lower(lambda);
                if (sub.is_zero())
                    continue;
                QSeries contribution = sub.shifted(shift).scaled(Integer(mult));
                if (sign > 0)
                    total += contribution;
                else
                    total -= contribution;
            }
        }
    }
    return total;
}

} // namespace

RecurrenceFrame build_frame(const Partition& nu, const Partition& mu)
{
    RecurrenceFrame f{nu, mu, 0, {}};
    const int mu1 = mu.part(0);
    for (int s = 1; s <= nu.length(); ++s) {
        const int R = nu.part(s - 1) - s - mu1 + 1;
        if (R < 0)
            break; // R_s strictly decreases in s
        std::vector<int> g;
        for (int i = 1; i < s; ++i)
            g.push_back(nu.part(i - 1) + 1);
        for (int i = s + 1; i <= nu.length(); ++i)
            g.push_back(nu.part(i - 1));
        f.terms.push_back({s, R, Partition(std::move(g))});
        f.p = s;
    }
    return f;
}

namespace {

// Removes the border strip of length h that starts at the foot of the first
// column; returns the number of columns it spans, or 0 if the result is not a
// partition.
int remove_border_strip(std::vector<int>& rows, int h)
{
    int i = static_cast<int>(rows.size()) - 1;
    int j = 0;
    std::vector<int> cut(rows.size(), 0);
    std::vector<int> first(rows.size(), -1);
    int columns = 0;
    int last_col = -1;
    for (int k = 0; k < h; ++k) {
        if (i < 0)
            return 0;
        if (first[i] < 0)
            first[i] = j;
        ++cut[i];
        if (j != last_col) {
            ++columns;
            last_col = j;
        }
        if (j + 1 < rows[i])
            ++j;
        else
            --i;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (cut[r] == 0)
            continue;
        if (first[r] + cut[r] != rows[r])
            return 0; // strip must end each row at its last box
        rows[r] = first[r];
    }
    while (!rows.empty() && rows.back() == 0)
        rows.pop_back();
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r] > rows[r - 1])
            return 0;
    return columns;
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < k)
        return 0;
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i)
        b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return b;
}

// Multiplicities of V(gamma) (x) V(r e_1) for D_m, m >= 2, by Brauer-Klimyk over
// the weights of the harmonic polynomials of degree r on C^{2m}.
std::map<std::vector<int>, int> tensor_with_harmonics_d(const std::vector<int>& gamma, int r)
{
    const int m = static_cast<int>(gamma.size());
    std::map<std::vector<int>, int> out;
    std::vector<int> x(static_cast<std::size_t>(m), 0);
    auto visit = [&](auto&& self, int i, int used) -> void {
        if (i == m) {
            if ((r - used) % 2 != 0)
                return;
            const int e = (r - used) / 2;
            const auto mult = static_cast<int>(binomial(e + m - 2, m - 2));
            std::vector<int> v(static_cast<std::size_t>(m));
            for (int k = 0; k < m; ++k)
                v[k] = gamma[k] + x[k] + (m - 1 - k);
            int negatives = 0;
            for (int& c : v)
                if (c < 0) {
                    c = -c;
                    ++negatives;
                }
            int inversions = 0;
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b) {
                    if (v[a] == v[b])
                        return; // singular
                    if (v[a] < v[b])
                        ++inversions;
                }
            std::sort(v.begin(), v.end(), std::greater<>());
            if (negatives % 2 != 0 && v.back() != 0)
                v.back() = -v.back();
            for (int k = 0; k < m; ++k)
                v[k] -= m - 1 - k;
            out[v] += inversions % 2 == 0 ? mult : -mult;
            return;
        }
        for (int c = -(r - used); c <= r - used; ++c) {
            x[i] = c;
            self(self, i + 1, used + std::abs(c));
        }
        x[i] = 0;
    };
    visit(visit, 0, 0);
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

struct FiniteRecursion {
    RootType type;
    int base_rank;

    // Signed multiplicities of lower-rank dominant weights in the Pieri product
    // of gamma with the degree-r piece.
    std::map<std::vector<int>, int> lower_terms(int lower_rank, const Partition& gamma, int r) const
    {
        if (type == RootType::D && gamma.length() == lower_rank)
            return tensor_with_harmonics_d(gamma.padded(lower_rank), r);
        std::map<std::vector<int>, int> out;
        for (const auto& [lambda, mult] : pieri_expand(gamma, r))
            for (const auto& [w, c] : specialize_universal(type, lower_rank, lambda))
                out[w] += c * static_cast<int>(mult);
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    }

    // mu is a dominant weight (integer coordinates), nu any partition fitting rank
    QSeries operator()(int rank, const Partition& nu, const std::vector<int>& mu) const
    {
        const RootSystem rs(type, rank);
        if (rank <= base_rank)
            return k_direct_weights(rs, nu.padded(rank), mu);
        if (nu.empty()) {
            const bool zero = std::all_of(mu.begin(), mu.end(), [](int x) { return x == 0; });
            return QSeries::constant(zero ? 1 : 0);
        }
        auto key = std::make_tuple(static_cast<int>(type), rank, nu, mu, base_rank);
        auto& c = cache();
        {
            std::lock_guard lock(c.mutex);
            auto it = c.finite.find(key);
            if (it != c.finite.end())
                return it->second;
        }
        const std::vector<int> mu_flat(mu.begin() + 1, mu.end());
        const RecurrenceFrame frame = build_frame(nu, weight_shape(mu));
        QSeries result;
        for (const auto& term : frame.terms) {
            for (int a = 0; 2 * a <= term.R; ++a) {
                const int r = term.R - 2 * a;
                const int shift = type == RootType::C ? r + a : term.R;
                for (const auto& [w, coeff] : lower_terms(rank - 1, term.gamma, r)) {
                    std::vector<int> m = mu_flat;
                    if (w.back() < 0)
                        m.back() = -m.back(); // diagram automorphism
                    QSeries sub = (*this)(rank - 1, weight_shape(w), m);
                    const int sign = term.s % 2 == 1 ? coeff : -coeff;
                    result += sub.shifted(shift).scaled(Integer(sign));
                }
            }
        }
        std::lock_guard lock(c.mutex);
        c.finite.emplace(std::move(key), result);
        return result;
    }

    static Partition weight_shape(const std::vector<int>& w)
    {
        std::vector<int> parts(w.begin(), w.end());
        if (!parts.empty() && parts.back() < 0)
            parts.back() = -parts.back();
        return Partition(std::move(parts));
    }
};

} // namespace

std::map<std::vector<int>, int> specialize_universal(RootType type, int rank, const Partition& lambda)
{
    if (rank < 1)
        throw std::invalid_argument("rank must be >= 1");
    std::vector<int> rows = lambda.parts();
    int sign = 1;
    while (static_cast<int>(rows.size()) > rank) {
        const int l = static_cast<int>(rows.size());
        int h = 2 * l - 2 * rank;
        if (type == RootType::B)
            h -= 1;
        else if (type == RootType::C)
            h -= 2;
        if (h <= 0)
            return {};
        const int columns = remove_border_strip(rows, h);
        if (columns == 0)
            return {};
        const int exponent = type == RootType::C ? columns : columns - 1;
        if (exponent % 2 != 0)
            sign = -sign;
    }
    std::vector<int> w = Partition(rows).padded(rank);
    std::map<std::vector<int>, int> out;
    out[w] += sign;
    if (type == RootType::D && w.back() > 0) {
        w.back() = -w.back();
        out[w] += sign;
    }
    return out;
}

int default_base_rank(RootType type) { return type == RootType::D ? 2 : 1; }

QSeries k_recurrence_finite(const RootSystem& rs, const Partition& nu, const Partition& mu,
                            int base_rank)
{
    if (mu.length() > rs.rank)
        throw invalid_weight("mu = (" + mu.to_string() + ") does not fit rank " +
                             std::to_string(rs.rank));
    if (nu.length() > rs.rank)
        throw out_of_regime("the recurrence needs rank >= length of nu (" + nu.to_string() + ")");
    if (base_rank <= 0)
        base_rank = default_base_rank(rs.type);
    return FiniteRecursion{rs.type, base_rank}(rs.rank, nu, mu.padded(rs.rank));
}

QSeries k_limit(Family family, const Partition& nu, const Partition& mu, int D)
{
    if (D < 0)
        throw std::invalid_argument("truncation degree must be nonnegative");
    const int diff = nu.weight() - mu.weight();
    if (diff < 0 || diff % 2 != 0 || diff / 2 > D)
        return QSeries(D);
    if (nu.empty())
        return QSeries::constant(1, D);

    auto key = std::make_tuple(static_cast<int>(family), nu, mu, D);
    auto& c = cache();
    {
        std::lock_guard lock(c.mutex);
        auto it = c.limit.find(key);
        if (it != c.limit.end())
            return it->second;
    }
    const Partition mu_flat = drop_first(mu);
    const RecurrenceFrame frame = build_frame(nu, mu);
    const bool self_referential = mu.empty();
    QSeries rest = expand_frame(frame, family == Family::sp, D, self_referential,
                                std::numeric_limits<int>::max(), [&](const Partition& lambda) {
                                    if (self_referential ? measure(lambda) >= measure(nu)
                                                         : lambda.weight() >= nu.weight())
                                        throw std::logic_error("limit recursion does not descend at (" +
                                                               nu.to_string() + ")");
                                    return k_limit(family, lambda, mu_flat, D);
                                });
    QSeries result = self_referential ? div_one_minus_qm(rest, nu.part(0), D) : rest;
    std::lock_guard lock(c.mutex);
    c.limit.emplace(std::move(key), result);
    return result;
}

void recurrence_cache_clear()
{
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    c.finite.clear();
    c.limit.clear();
}

DegreeBounds degree_bounds(const RootSystem& rs, const Partition& nu, const Partition& mu)
{
    const auto a = weight_of(rs, nu);
    const auto b = weight_of(rs, mu);
    std::vector<int> beta(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        beta[i] = a[i] - b[i];
    const int diff = nu.weight() - mu.weight();
    DegreeBounds d{};
    d.lower = diff <= 0 ? 0 : (diff + 1) / 2;
    // root_height floors the half-integer C case, where K vanishes anyway
    d.upper = static_cast<int>(root_height(rs, beta));
    return d;
}

Integer brylinski_dims(const RootSystem& rs, const Partition& lambda, const Partition& mu, int k)
{
    if (k < -1)
        throw std::invalid_argument("filtration index must be >= -1");
    const QSeries K = k_direct(rs, lambda, mu);
    Integer total = 0;
    for (const auto& [deg, c] : K.terms())
        if (deg <= k)
            total += c;
    return total;
}

} // namespace lqa
