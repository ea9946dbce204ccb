#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdissect/errors.hpp"

namespace qdissect {

/// A formal power series over the integers, known modulo q^trunc.
///
/// Coefficients are exact 64-bit integers with checked arithmetic: any
/// operation that would wrap raises OverflowError instead of producing a
/// silently wrong coefficient. Values are immutable after construction and
/// safe to share between threads.
class TruncatedSeries {
public:
    // Zero series known to the given order (trunc >= 1).
    explicit TruncatedSeries(std::size_t trunc);

    // Takes ownership of the coefficient vector; trunc = coeffs.size() >= 1.
    explicit TruncatedSeries(std::vector<std::int64_t> coeffs);

    static TruncatedSeries constant(std::int64_t value, std::size_t trunc);

    // q^exponent (the zero series if exponent >= trunc).
    static TruncatedSeries monomial(std::size_t exponent, std::size_t trunc);

    std::size_t trunc() const noexcept { return coeffs_.size(); }
    std::int64_t operator[](std::size_t n) const { return coeffs_[n]; }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;

    // "1 + 2*q + ..." up to the first few nonzero terms; for diagnostics.
    std::string to_string(std::size_t max_terms = 8) const;

private:
    std::vector<std::int64_t> coeffs_;
};

// Checked 64-bit helpers used by every coefficient computation.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Coefficient-wise sum/difference; result trunc = min of the operands'.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

// Integer scaling, trunc unchanged.
TruncatedSeries scale(const TruncatedSeries& a, std::int64_t factor);

// Cauchy product truncated to min(a.trunc, b.trunc).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplies by q^m (m > 0, trunc grows by m) or divides by q^-m (m < 0,
/// trunc shrinks). Division demands the low-order coefficients be zero and
/// raises DivisionByQError otherwise.
TruncatedSeries shift(const TruncatedSeries& a, std::int64_t m);

// Substitutes q -> q^k: coefficient c(n) moves to exponent k*n.
// Result trunc = k*(a.trunc - 1) + 1.
TruncatedSeries inflate(const TruncatedSeries& a, std::size_t k);

// Substitutes q -> -q: negates odd-exponent coefficients.
TruncatedSeries sign_twist(const TruncatedSeries& a);

/// Selects the arithmetic progression m*n + r: returns sum c(m*n + r) q^n,
/// i.e. extracts, strips q^r and deflates q^m -> q in one step.
/// Result trunc = ceil((a.trunc - r) / m); requires a.trunc > r.
TruncatedSeries extract_ap(const TruncatedSeries& a, std::size_t m, std::size_t r);

// Even/odd part with exponents kept in place: even_part(a) + odd_part(a) = a.
TruncatedSeries even_part(const TruncatedSeries& a);
TruncatedSeries odd_part(const TruncatedSeries& a);

// Prefix of the first `order` coefficients (order <= a.trunc, order >= 1).
TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order);

struct CoeffMismatch {
    std::size_t index;
    std::int64_t lhs;
    std::int64_t rhs;
};

/// First index n < order where the series disagree, or nullopt if they agree.
/// Raises InsufficientTruncationError when order exceeds either trunc.
std::optional<CoeffMismatch> first_mismatch(const TruncatedSeries& a,
                                            const TruncatedSeries& b,
                                            std::size_t order);

bool eq_upto(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t order);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(std::int64_t c, const TruncatedSeries& a) { return scale(a, c); }

} // namespace qdissect
