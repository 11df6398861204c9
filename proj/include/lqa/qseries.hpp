#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lqa {

using Integer = boost::multiprecision::cpp_int;

/// Polynomial in q with big-integer coefficients, or a power series known only
/// up to degree `truncation()`. Stored sparsely, ascending degree, no zeros.
class QSeries {
public:
    using Term = std::pair<int, Integer>;

    QSeries() = default;
    explicit QSeries(std::optional<int> truncation);

    static QSeries constant(const Integer& c, std::optional<int> truncation = std::nullopt);
    static QSeries monomial(int degree, const Integer& c = 1,
                            std::optional<int> truncation = std::nullopt);
    /// Build from (degree, coefficient) pairs in any order; repeated degrees add.
    static QSeries from_terms(std::vector<Term> terms, std::optional<int> truncation = std::nullopt);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::optional<int> truncation() const noexcept { return truncation_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_exact() const noexcept { return !truncation_.has_value(); }

    Integer coefficient(int degree) const;
    /// Lowest and highest stored degree; undefined on zero.
    int low_degree() const { return terms_.front().first; }
    int high_degree() const { return terms_.back().first; }

    /// Drop every term above `max_degree` and record the bound (keeps a tighter one).
    QSeries truncated(int max_degree) const;

    void add_term(int degree, const Integer& c);

    QSeries& operator+=(const QSeries& other);
    QSeries& operator-=(const QSeries& other);
    QSeries& operator*=(const QSeries& other) { return *this = *this * other; }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator-(QSeries a);

    QSeries scaled(const Integer& c) const;
    /// Multiply by q^k, k >= 0.
    QSeries shifted(int k) const;

    /// Sum of all coefficients; for a truncated series this is the sum of the known ones.
    Integer eval_at_one() const;

    /// "q + q^3", "1", "0", "2 - q^2", with " + O(q^{D+1})" appended when truncated
    /// and `show_order` is set.
    std::string to_string(bool show_order = false) const;

    bool all_nonnegative() const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    void normalize();

    std::vector<Term> terms_;
    std::optional<int> truncation_;
};

std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b);

/// a * (1 + q^m + q^{2m} + ...) truncated at degree D. Throws std::domain_error for m = 0.
QSeries div_one_minus_qm(const QSeries& a, int m, int D);

// Spelled-out aliases for the ring operations.
inline QSeries series_add(const QSeries& a, const QSeries& b) { return a + b; }
inline QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries series_scale(const QSeries& a, const Integer& c) { return a.scaled(c); }

} // namespace lqa
