#pragma once

#include "lqa/partition.hpp"
#include "lqa/qseries.hpp"

#include <map>
#include <optional>
#include <string>

namespace lqa {

/// The two rank-stable families: so for types B and D, sp for type C.
enum class Family { so, sp };

enum class Basis { gl, so, sp };

std::string family_name(Family f);
Family parse_family(const std::string& s);
Family dual(Family f);
Basis basis_of(Family f);

/// Finitely supported Partition -> QSeries map on one of the character bases.
/// A rank marks a finite-rank expansion; universal expansions carry none.
struct CharExpansion {
    Basis basis = Basis::gl;
    std::optional<int> rank;
    std::map<Partition, QSeries> terms;

    /// Adds to the coefficient of s_lambda, dropping it if it cancels to zero.
    void add(const Partition& lambda, const QSeries& c);
    QSeries coefficient(const Partition& lambda) const;

    friend bool operator==(const CharExpansion&, const CharExpansion&) = default;
};

} // namespace lqa
