#include "qdissect/series.hpp"

#include <algorithm>
#include <sstream>

namespace qdissect {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("coefficient overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("coefficient overflow in multiplication");
    return r;
}

TruncatedSeries::TruncatedSeries(std::size_t trunc) : coeffs_(trunc, 0) {
    if (trunc == 0)
        throw std::invalid_argument("truncation order must be positive");
}

TruncatedSeries::TruncatedSeries(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("truncation order must be positive");
}

TruncatedSeries TruncatedSeries::constant(std::int64_t value, std::size_t trunc) {
    TruncatedSeries s(trunc);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t exponent, std::size_t trunc) {
    TruncatedSeries s(trunc);
    if (exponent < trunc)
        s.coeffs_[exponent] = 1;
    return s;
}

bool TruncatedSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

std::string TruncatedSeries::to_string(std::size_t max_terms) const {
    std::ostringstream out;
    std::size_t shown = 0;
    for (std::size_t n = 0; n < coeffs_.size() && shown < max_terms; ++n) {
        if (coeffs_[n] == 0)
            continue;
        if (shown > 0)
            out << (coeffs_[n] > 0 ? " + " : " - ");
        else if (coeffs_[n] < 0)
            out << "-";
        const std::int64_t mag = coeffs_[n] < 0 ? -coeffs_[n] : coeffs_[n];
        if (n == 0)
            out << mag;
        else {
            if (mag != 1)
                out << mag << "*";
            out << "q";
            if (n > 1)
                out << "^" << n;
        }
        ++shown;
    }
    if (shown == 0)
        out << "0";
    out << " (mod q^" << coeffs_.size() << ")";
    return out.str();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t t = std::min(a.trunc(), b.trunc());
    std::vector<std::int64_t> r(t);
    for (std::size_t n = 0; n < t; ++n)
        r[n] = checked_add(a[n], b[n]);
    return TruncatedSeries(std::move(r));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t t = std::min(a.trunc(), b.trunc());
    std::vector<std::int64_t> r(t);
    for (std::size_t n = 0; n < t; ++n)
        r[n] = checked_add(a[n], checked_mul(b[n], -1));
    return TruncatedSeries(std::move(r));
}

TruncatedSeries scale(const TruncatedSeries& a, std::int64_t factor) {
    std::vector<std::int64_t> r(a.trunc());
    for (std::size_t n = 0; n < a.trunc(); ++n)
        r[n] = checked_mul(a[n], factor);
    return TruncatedSeries(std::move(r));
}

namespace {

std::size_t nonzero_count(const TruncatedSeries& s, std::size_t window) {
    std::size_t c = 0;
    for (std::size_t n = 0; n < window; ++n)
        if (s[n] != 0)
            ++c;
    return c;
}

} // namespace

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t t = std::min(a.trunc(), b.trunc());
    // Theta series are sparse; looping over the sparser operand's support
    // keeps triple products at order ~10^4 cheap without an FFT.
    const bool a_outer = nonzero_count(a, t) <= nonzero_count(b, t);
    const TruncatedSeries& outer = a_outer ? a : b;
    const TruncatedSeries& inner = a_outer ? b : a;
    std::vector<std::int64_t> r(t, 0);
    for (std::size_t i = 0; i < t; ++i) {
        const std::int64_t ci = outer[i];
        if (ci == 0)
            continue;
        for (std::size_t j = 0; j < t - i; ++j) {
            if (inner[j] == 0)
                continue;
            r[i + j] = checked_add(r[i + j], checked_mul(ci, inner[j]));
        }
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries shift(const TruncatedSeries& a, std::int64_t m) {
    if (m >= 0) {
        const std::size_t up = static_cast<std::size_t>(m);
        std::vector<std::int64_t> r(a.trunc() + up, 0);
        std::copy(a.coeffs().begin(), a.coeffs().end(), r.begin() + static_cast<std::ptrdiff_t>(up));
        return TruncatedSeries(std::move(r));
    }
    const std::size_t down = static_cast<std::size_t>(-m);
    if (down >= a.trunc())
        throw InsufficientTruncationError("cannot divide by q^" + std::to_string(down) +
                                          ": series only known mod q^" + std::to_string(a.trunc()));
    for (std::size_t n = 0; n < down; ++n)
        if (a[n] != 0)
            throw DivisionByQError("division by q^" + std::to_string(down) +
                                   " with nonzero coefficient at q^" + std::to_string(n));
    std::vector<std::int64_t> r(a.coeffs().begin() + static_cast<std::ptrdiff_t>(down), a.coeffs().end());
    return TruncatedSeries(std::move(r));
}

TruncatedSeries inflate(const TruncatedSeries& a, std::size_t k) {
    if (k == 0)
        throw std::invalid_argument("inflation factor must be positive");
    if (k == 1)
        return a;
    std::vector<std::int64_t> r(k * (a.trunc() - 1) + 1, 0);
    for (std::size_t n = 0; n < a.trunc(); ++n)
        r[k * n] = a[n];
    return TruncatedSeries(std::move(r));
}

TruncatedSeries sign_twist(const TruncatedSeries& a) {
    std::vector<std::int64_t> r(a.coeffs());
    for (std::size_t n = 1; n < r.size(); n += 2)
        r[n] = checked_mul(r[n], -1);
    return TruncatedSeries(std::move(r));
}

TruncatedSeries extract_ap(const TruncatedSeries& a, std::size_t m, std::size_t r) {
    if (m == 0 || r >= m)
        throw std::invalid_argument("extract_ap needs m >= 1 and 0 <= r < m");
    if (r >= a.trunc())
        throw InsufficientTruncationError("series only known mod q^" + std::to_string(a.trunc()) +
                                          ": no coefficient at residue " + std::to_string(r));
    const std::size_t t = (a.trunc() - r + m - 1) / m;
    std::vector<std::int64_t> out(t);
    for (std::size_t n = 0; n < t; ++n)
        out[n] = a[m * n + r];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries even_part(const TruncatedSeries& a) {
    std::vector<std::int64_t> r(a.coeffs());
    for (std::size_t n = 1; n < r.size(); n += 2)
        r[n] = 0;
    return TruncatedSeries(std::move(r));
}

TruncatedSeries odd_part(const TruncatedSeries& a) {
    std::vector<std::int64_t> r(a.coeffs());
    for (std::size_t n = 0; n < r.size(); n += 2)
        r[n] = 0;
    return TruncatedSeries(std::move(r));
}

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order) {
    if (order == 0)
        throw std::invalid_argument("truncation order must be positive");
    if (order > a.trunc())
        throw InsufficientTruncationError("cannot widen a series from trunc " +
                                          std::to_string(a.trunc()) + " to " + std::to_string(order));
    if (order == a.trunc())
        return a;
    return TruncatedSeries(std::vector<std::int64_t>(a.coeffs().begin(),
                                                     a.coeffs().begin() + static_cast<std::ptrdiff_t>(order)));
}

std::optional<CoeffMismatch> first_mismatch(const TruncatedSeries& a,
                                            const TruncatedSeries& b,
                                            std::size_t order) {
    if (order > a.trunc() || order > b.trunc())
        throw InsufficientTruncationError("comparison to order " + std::to_string(order) +
                                          " exceeds truncation " +
                                          std::to_string(std::min(a.trunc(), b.trunc())));
    for (std::size_t n = 0; n < order; ++n)
        if (a[n] != b[n])
            return CoeffMismatch{n, a[n], b[n]};
    return std::nullopt;
}

bool eq_upto(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t order) {
    return !first_mismatch(a, b, order).has_value();
}

} // namespace qdissect
