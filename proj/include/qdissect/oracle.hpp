#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdissect/form.hpp"

namespace qdissect {

enum class CountKind { Squares, Triangular };

/// Number of integer vectors x with sum a_i * x_i^2 = n, by direct
/// enumeration with partial-sum pruning. Ground truth for square_gf.
std::int64_t count_squares(const DiagonalForm& form, std::int64_t n);

/// Number of nonnegative-integer vectors x with sum a_i * x_i(x_i+1)/2 = n.
std::int64_t count_triangular(const DiagonalForm& form, std::int64_t n);

/// Histogram of all lattice values <= n_max in one enumeration pass;
/// element n equals the pointwise counter.
std::vector<std::int64_t> count_range(const DiagonalForm& form, std::int64_t n_max, CountKind kind);

/// The combinatorial constant C = binom(i1,4) + binom(i1,2) + i1*i3, where
/// i_j counts entries equal to j. Computed exactly as this formula reads;
/// detect_linear_relation audits it against enumeration.
std::int64_t ach_constant(const DiagonalForm& form);

/// An exact fraction num/den in lowest terms with den >= 1.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational reduced(std::int64_t num, std::int64_t den);
    std::string to_string() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct LinearRelationReport {
    DiagonalForm form;
    /// The constant c with N(form; 8n + sum) = c * T(form; n) across every
    /// sampled n with T(n) != 0, when one exists; nullopt when the ratios
    /// disagree or fewer than min_samples nonzero indices were available.
    std::optional<Rational> empirical;
    /// What the closed-form prediction 2^k * (2 + C) / 2 says c should be.
    Rational predicted;
    std::int64_t c_value = 0;          // the constant C itself
    std::size_t nonzero_samples = 0;   // indices with T(n) != 0 examined
    std::optional<std::int64_t> first_inconsistent_n;
    bool agrees() const { return empirical.has_value() && *empirical == predicted; }

    static constexpr std::size_t min_samples = 10;
};

/// Samples n = 0..n_max and reports the empirical proportionality constant
/// between N(8n + sum) and T(n) next to the predicted one. Disagreement is
/// data, not an error: both values are always reported side by side.
LinearRelationReport detect_linear_relation(const DiagonalForm& form, std::int64_t n_max);

} // namespace qdissect
