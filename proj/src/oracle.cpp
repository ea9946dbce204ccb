#include "qdissect/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qdissect/series.hpp"

namespace qdissect {

namespace {

// Coefficients sorted descending so the largest term prunes first.
std::vector<std::int64_t> descending(const DiagonalForm& form) {
    std::vector<std::int64_t> coefs = form.canonical();
    std::reverse(coefs.begin(), coefs.end());
    return coefs;
}

std::int64_t count_squares_rec(const std::vector<std::int64_t>& coefs, std::size_t i, std::int64_t rem) {
    if (i == coefs.size())
        return rem == 0 ? 1 : 0;
    const std::int64_t a = coefs[i];
    std::int64_t total = 0;
    for (std::int64_t x = 0; a * x * x <= rem; ++x)
        total += (x == 0 ? 1 : 2) * count_squares_rec(coefs, i + 1, rem - a * x * x);
    return total;
}

std::int64_t count_triangular_rec(const std::vector<std::int64_t>& coefs, std::size_t i, std::int64_t rem) {
    if (i == coefs.size())
        return rem == 0 ? 1 : 0;
    const std::int64_t a = coefs[i];
    std::int64_t total = 0;
    for (std::int64_t x = 0; a * x * (x + 1) / 2 <= rem; ++x)
        total += count_triangular_rec(coefs, i + 1, rem - a * x * (x + 1) / 2);
    return total;
}

void bin_values(const std::vector<std::int64_t>& coefs, std::size_t i, std::int64_t acc,
                std::int64_t mult, std::int64_t n_max, CountKind kind,
                std::vector<std::int64_t>& hist) {
    const std::int64_t a = coefs[i];
    const bool last = i + 1 == coefs.size();
    for (std::int64_t x = 0;; ++x) {
        const std::int64_t value = kind == CountKind::Squares ? a * x * x : a * x * (x + 1) / 2;
        if (acc + value > n_max)
            break;
        const std::int64_t m = (kind == CountKind::Squares && x > 0) ? 2 * mult : mult;
        if (last)
            hist[static_cast<std::size_t>(acc + value)] += m;
        else
            bin_values(coefs, i + 1, acc + value, m, n_max, kind, hist);
    }
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

std::int64_t count_squares(const DiagonalForm& form, std::int64_t n) {
    if (n < 0)
        return 0;
    return count_squares_rec(descending(form), 0, n);
}

std::int64_t count_triangular(const DiagonalForm& form, std::int64_t n) {
    if (n < 0)
        return 0;
    return count_triangular_rec(descending(form), 0, n);
}

std::vector<std::int64_t> count_range(const DiagonalForm& form, std::int64_t n_max, CountKind kind) {
    if (n_max < 0)
        throw std::invalid_argument("count_range needs n_max >= 0");
    std::vector<std::int64_t> hist(static_cast<std::size_t>(n_max) + 1, 0);
    bin_values(descending(form), 0, 0, 1, n_max, kind, hist);
    return hist;
}

std::int64_t ach_constant(const DiagonalForm& form) {
    std::int64_t i1 = 0, i3 = 0;
    for (std::int64_t a : form.entries()) {
        if (a == 1)
            ++i1;
        if (a == 3)
            ++i3;
    }
    return binomial(i1, 4) + binomial(i1, 2) + i1 * i3;
}

Rational Rational::reduced(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return g > 0 ? Rational{num / g, den / g} : Rational{0, 1};
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

LinearRelationReport detect_linear_relation(const DiagonalForm& form, std::int64_t n_max) {
    if (n_max < 2)
        throw std::invalid_argument("detect_linear_relation needs n_max >= 2");
    const std::int64_t s = form.sum();
    const auto n_counts = count_range(form, 8 * n_max + s, CountKind::Squares);
    const auto t_counts = count_range(form, n_max, CountKind::Triangular);

    LinearRelationReport report{form, std::nullopt, Rational{}, ach_constant(form), 0, std::nullopt};
    const std::int64_t two_k = checked_mul(1, std::int64_t{1} << form.arity());
    report.predicted = Rational::reduced(two_k * (2 + report.c_value), 2);

    std::optional<Rational> candidate;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const std::int64_t t = t_counts[static_cast<std::size_t>(n)];
        if (t == 0)
            continue;
        ++report.nonzero_samples;
        const Rational ratio = Rational::reduced(n_counts[static_cast<std::size_t>(8 * n + s)], t);
        if (!candidate)
            candidate = ratio;
        else if (!(*candidate == ratio)) {
            report.first_inconsistent_n = n;
            return report;
        }
    }
    if (candidate && report.nonzero_samples >= LinearRelationReport::min_samples)
        report.empirical = candidate;
    return report;
}

} // namespace qdissect
