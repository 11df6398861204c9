#include "lqa/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace lqa {

namespace {

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

void append_partitions(int remaining, int max_part, std::vector<int>& prefix, PartitionClass cls,
                       std::vector<Partition>& out)
{
    if (remaining == 0) {
        Partition p(prefix);
        if (in_class(p, cls))
            out.push_back(std::move(p));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        if (cls == PartitionClass::even_rows && part % 2 != 0)
            continue;
        prefix.push_back(part);
        append_partitions(remaining - part, part, prefix, cls, out);
        prefix.pop_back();
    }
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = sum_of(parts_);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

std::vector<int> Partition::padded(int n) const
{
    if (n < length())
        throw std::invalid_argument("partition " + to_string() + " does not fit in " +
                                    std::to_string(n) + " coordinates");
    std::vector<int> v(parts_);
    v.resize(static_cast<std::size_t>(n), 0);
    return v;
}

bool Partition::contains(const Partition& other) const noexcept
{
    if (other.length() > length())
        return false;
    for (int i = 0; i < other.length(); ++i)
        if (other.part(i) > part(i))
            return false;
    return true;
}

std::string Partition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    auto trimmed = [](std::string_view sv) {
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t'))
            sv.remove_prefix(1);
        while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t'))
            sv.remove_suffix(1);
        return sv;
    };
    text = trimmed(text);
    if (text.empty())
        return Partition();
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view token = trimmed(text.substr(start, comma == std::string_view::npos
                                                                ? std::string_view::npos
                                                                : comma - start));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("cannot parse partition '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> cols;
    if (lambda.empty())
        return Partition();
    cols.resize(static_cast<std::size_t>(lambda.part(0)), 0);
    for (int row : lambda.parts())
        for (int j = 0; j < row; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

Partition drop_first(const Partition& mu)
{
    if (mu.empty())
        return Partition();
    return Partition(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
}

bool is_horizontal_strip(const Partition& alpha, const Partition& lambda)
{
    if (alpha.length() > lambda.length())
        return false;
    for (int i = 0; i < lambda.length(); ++i) {
        if (alpha.part(i) > lambda.part(i) || alpha.part(i) < lambda.part(i + 1))
            return false;
    }
    return true;
}

bool is_vertical_strip(const Partition& alpha, const Partition& lambda)
{
    if (!lambda.contains(alpha))
        return false;
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda.part(i) - alpha.part(i) > 1)
            return false;
    return true;
}

bool in_class(const Partition& lambda, PartitionClass cls)
{
    switch (cls) {
    case PartitionClass::all:
        return true;
    case PartitionClass::even_rows:
        return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                           [](int x) { return x % 2 == 0; });
    case PartitionClass::even_columns: {
        // every column even <=> parts come in equal consecutive pairs
        const auto& p = lambda.parts();
        if (p.size() % 2 != 0)
            return false;
        for (std::size_t i = 0; i < p.size(); i += 2)
            if (p[i] != p[i + 1])
                return false;
        return true;
    }
    }
    return false;
}

std::vector<Partition> partitions_of(int weight, PartitionClass cls)
{
    std::vector<Partition> out;
    if (weight < 0)
        return out;
    std::vector<int> prefix;
    append_partitions(weight, weight, prefix, cls, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int max_weight, PartitionClass cls,
                                            std::optional<int> exact_weight)
{
    if (max_weight < 0)
        throw std::invalid_argument("max_weight must be nonnegative");
    if (exact_weight)
        return partitions_of(*exact_weight, cls);
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto part = partitions_of(w, cls);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

std::vector<Partition> enumerate_partitions_fitting(int max_weight, int max_length)
{
    std::vector<Partition> out;
    for (auto& p : enumerate_partitions(max_weight))
        if (p.length() <= max_length)
            out.push_back(std::move(p));
    return out;
}

bool stable_dominates(const Partition& lambda, const Partition& mu)
{
    const int d = lambda.weight() - mu.weight();
    if (d < 0 || d % 2 != 0)
        return false;
    const int n = std::max(lambda.length(), mu.length());
    int partial = 0;
    for (int i = 0; i < n; ++i) {
        partial += lambda.part(i) - mu.part(i);
        if (partial < 0)
            return false;
    }
    return true;
}

} // namespace lqa
