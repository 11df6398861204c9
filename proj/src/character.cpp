#include "lqa/character.hpp"

#include "lqa/errors.hpp"

#include <stdexcept>

namespace lqa {

std::string family_name(Family f) { return f == Family::so ? "so" : "sp"; }

Family parse_family(const std::string& s)
{
    if (s == "so")
        return Family::so;
    if (s == "sp")
        return Family::sp;
    throw std::invalid_argument("unknown family '" + s + "' (expected so or sp)");
}

Family dual(Family f) { return f == Family::so ? Family::sp : Family::so; }

Basis basis_of(Family f) { return f == Family::so ? Basis::so : Basis::sp; }

void CharExpansion::add(const Partition& lambda, const QSeries& c)
{
    if (rank && lambda.length() > *rank)
        throw invalid_weight("partition (" + lambda.to_string() + ") does not fit rank " +
                             std::to_string(*rank));
    auto it = terms.find(lambda);
    if (it == terms.end()) {
        if (!c.is_zero())
            terms.emplace(lambda, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms.erase(it);
}

QSeries CharExpansion::coefficient(const Partition& lambda) const
{
    auto it = terms.find(lambda);
    return it == terms.end() ? QSeries() : it->second;
}

} // namespace lqa
