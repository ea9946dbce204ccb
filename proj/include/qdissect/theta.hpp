#pragma once

#include <cstddef>
#include <string>

#include "qdissect/form.hpp"
#include "qdissect/series.hpp"

namespace qdissect {

enum class ThetaKind { Phi, Psi };

/// A theta atom phi(s * q^k) or psi(s * q^k) with s = +1 or -1 and k >= 1.
struct ThetaSpec {
    ThetaKind kind;
    int sign;              // +1 or -1
    std::size_t inflation; // the k in q^k
};

std::string to_string(const ThetaSpec& spec);

/// phi(sign * q^k): coefficient 1 at exponent 0 and 2 * sign^(n^2) at k*n^2
/// for n >= 1. Generated directly from the exponent formula, independent of
/// the series ring operations, so it doubles as a cross-check path.
TruncatedSeries phi_series(int sign, std::size_t k, std::size_t trunc);

/// psi(sign * q^k): coefficient sign^(n(n+1)/2) at exponent k*n(n+1)/2.
TruncatedSeries psi_series(int sign, std::size_t k, std::size_t trunc);

TruncatedSeries theta_series(const ThetaSpec& spec, std::size_t trunc);

/// Generating function of N(a1,...,ak; n): the product of phi(q^ai).
TruncatedSeries square_gf(const DiagonalForm& form, std::size_t trunc);

/// Generating function of T(a1,...,ak; n): the product of psi(q^ai).
TruncatedSeries triangular_gf(const DiagonalForm& form, std::size_t trunc);

} // namespace qdissect
