#include "lqa/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace lqa {

std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b)
{
    if (!a)
        return b;
    if (!b)
        return a;
    return std::min(*a, *b);
}

QSeries::QSeries(std::optional<int> truncation) : truncation_(truncation)
{
    if (truncation_ && *truncation_ < 0)
        throw std::invalid_argument("truncation degree must be nonnegative");
}

QSeries QSeries::constant(const Integer& c, std::optional<int> truncation)
{
    return monomial(0, c, truncation);
}

QSeries QSeries::monomial(int degree, const Integer& c, std::optional<int> truncation)
{
    QSeries s(truncation);
    s.add_term(degree, c);
    return s;
}

QSeries QSeries::from_terms(std::vector<Term> terms, std::optional<int> truncation)
{
    QSeries s(truncation);
    s.terms_ = std::move(terms);
    std::sort(s.terms_.begin(), s.terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    s.normalize();
    return s;
}

void QSeries::normalize()
{
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (t.first < 0)
            throw std::invalid_argument("negative q-degree");
        if (truncation_ && t.first > *truncation_)
            continue;
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.second == 0; }),
                 merged.end());
    terms_ = std::move(merged);
}

Integer QSeries::coefficient(int degree) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                               [](const Term& t, int d) { return t.first < d; });
    if (it != terms_.end() && it->first == degree)
        return it->second;
    return 0;
}

QSeries QSeries::truncated(int max_degree) const
{
    QSeries s(min_truncation(truncation_, max_degree));
    for (const auto& t : terms_)
        if (t.first <= *s.truncation_)
            s.terms_.push_back(t);
    return s;
}

void QSeries::add_term(int degree, const Integer& c)
{
    if (degree < 0)
        throw std::invalid_argument("negative q-degree");
    if (c == 0 || (truncation_ && degree > *truncation_))
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                               [](const Term& t, int d) { return t.first < d; });
    if (it != terms_.end() && it->first == degree) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    } else {
        terms_.insert(it, Term(degree, c));
    }
}

namespace {

std::vector<QSeries::Term> merge_terms(const std::vector<QSeries::Term>& a,
                                       const std::vector<QSeries::Term>& b, bool subtract,
                                       std::optional<int> bound)
{
    std::vector<QSeries::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto within = [&](int d) { return !bound || d <= *bound; };
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            if (within(a[i].first))
                out.push_back(a[i]);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            if (within(b[j].first))
                out.emplace_back(b[j].first, subtract ? Integer(-b[j].second) : b[j].second);
            ++j;
        } else {
            Integer c = subtract ? Integer(a[i].second - b[j].second) : Integer(a[i].second + b[j].second);
            if (c != 0 && within(a[i].first))
                out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

QSeries& QSeries::operator+=(const QSeries& other)
{
    truncation_ = min_truncation(truncation_, other.truncation_);
    terms_ = merge_terms(terms_, other.terms_, false, truncation_);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& other)
{
    truncation_ = min_truncation(truncation_, other.truncation_);
    terms_ = merge_terms(terms_, other.terms_, true, truncation_);
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries out(min_truncation(a.truncation_, b.truncation_));
    if (a.is_zero() || b.is_zero())
        return out;
    int top = a.high_degree() + b.high_degree();
    if (out.truncation_)
        top = std::min(top, *out.truncation_);
    const int base = a.low_degree() + b.low_degree();
    if (top < base)
        return out;
    std::vector<Integer> dense(static_cast<std::size_t>(top - base + 1));
    for (const auto& [da, ca] : a.terms_) {
        if (da + b.low_degree() > top)
            break;
        for (const auto& [db, cb] : b.terms_) {
            const int d = da + db;
            if (d > top)
                break;
            dense[static_cast<std::size_t>(d - base)] += ca * cb;
        }
    }
    for (std::size_t k = 0; k < dense.size(); ++k)
        if (dense[k] != 0)
            out.terms_.emplace_back(base + static_cast<int>(k), std::move(dense[k]));
    return out;
}

QSeries operator-(QSeries a)
{
    for (auto& t : a.terms_)
        t.second = -t.second;
    return a;
}

QSeries QSeries::scaled(const Integer& c) const
{
    QSeries s(truncation_);
    if (c == 0)
        return s;
    s.terms_ = terms_;
    for (auto& t : s.terms_)
        t.second *= c;
    return s;
}

QSeries QSeries::shifted(int k) const
{
    if (k < 0)
        throw std::invalid_argument("negative shift");
    QSeries s(truncation_);
    for (const auto& t : terms_)
        if (!truncation_ || t.first + k <= *truncation_)
            s.terms_.emplace_back(t.first + k, t.second);
    return s;
}

Integer QSeries::eval_at_one() const
{
    Integer total = 0;
    for (const auto& t : terms_)
        total += t.second;
    return total;
}

bool QSeries::all_nonnegative() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

std::string QSeries::to_string(bool show_order) const
{
    std::string out;
    for (const auto& [deg, c] : terms_) {
        Integer mag = c < 0 ? Integer(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string mono;
        if (deg == 1)
            mono = "q";
        else if (deg > 1)
            mono = "q^" + std::to_string(deg);
        if (mono.empty())
            out += mag.str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.str() + "*" + mono;
    }
    if (out.empty())
        out = "0";
    if (show_order && truncation_)
        out += " + O(q^" + std::to_string(*truncation_ + 1) + ")";
    return out;
}

QSeries div_one_minus_qm(const QSeries& a, int m, int D)
{
    if (m == 0)
        throw std::domain_error("division by 1 - q^0");
    if (m < 0 || D < 0)
        throw std::invalid_argument("div_one_minus_qm needs m >= 1 and D >= 0");
    const int bound = a.truncation() ? std::min(*a.truncation(), D) : D;
    // running sum c_k = a_k + c_{k-m}, degrees 0..bound
    std::vector<Integer> dense(static_cast<std::size_t>(bound + 1));
    for (const auto& [d, c] : a.terms())
        if (d <= bound)
            dense[static_cast<std::size_t>(d)] = c;
    for (int k = m; k <= bound; ++k)
        dense[static_cast<std::size_t>(k)] += dense[static_cast<std::size_t>(k - m)];
    std::vector<QSeries::Term> terms;
    for (int k = 0; k <= bound; ++k)
        if (dense[static_cast<std::size_t>(k)] != 0)
            terms.emplace_back(k, std::move(dense[static_cast<std::size_t>(k)]));
    return QSeries::from_terms(std::move(terms), bound);
}

} // namespace lqa
