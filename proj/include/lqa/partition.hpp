#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lqa {

/// An integer partition: weakly decreasing positive parts, no trailing zeros.
///
/// A partition is identified with its zero-padded weight vector wherever a rank
/// is in play; `part(i)` returns 0 past the last part and `padded(n)` builds the
/// explicit vector.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// 0-based; zero beyond the last part.
    int part(int i) const noexcept
    {
        return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    int operator[](int i) const noexcept { return part(i); }

    std::vector<int> padded(int n) const;

    /// Young-diagram containment.
    bool contains(const Partition& other) const noexcept;

    /// Comma separated parts, empty string for the empty partition.
    std::string to_string() const;
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

Partition conjugate(const Partition& lambda);

/// (mu_2, mu_3, ...).
Partition drop_first(const Partition& mu);

/// True iff alpha is contained in lambda and lambda/alpha has at most one box per
/// column, i.e. lambda_{i+1} <= alpha_i <= lambda_i for every i.
bool is_horizontal_strip(const Partition& alpha, const Partition& lambda);

/// Same test on the conjugates: at most one box per row.
bool is_vertical_strip(const Partition& alpha, const Partition& lambda);

enum class PartitionClass {
    all,
    even_rows,    // every part even
    even_columns, // every column length even
};

bool in_class(const Partition& lambda, PartitionClass cls);

/// Partitions of exactly `weight`, reverse lexicographic order ((3), (2,1), (1,1,1)).
std::vector<Partition> partitions_of(int weight, PartitionClass cls = PartitionClass::all);

/// All partitions in the class of weight <= max_weight (ascending weight, then
/// reverse lexicographic), or of weight exactly `exact_weight` when given.
std::vector<Partition> enumerate_partitions(int max_weight, PartitionClass cls = PartitionClass::all,
                                            std::optional<int> exact_weight = std::nullopt);

/// All partitions of weight <= max_weight with at most max_length parts.
std::vector<Partition> enumerate_partitions_fitting(int max_weight, int max_length);

/// lambda - mu lies in the positive root cone shared by types C_n and D_n for
/// large n: all partial sums of lambda - mu are nonnegative and |lambda| - |mu| is
/// even. This is the support condition for the rank-stable q-analogues.
bool stable_dominates(const Partition& lambda, const Partition& mu);

} // namespace lqa

template <>
struct std::hash<lqa::Partition> {
    std::size_t operator()(const lqa::Partition& p) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};
