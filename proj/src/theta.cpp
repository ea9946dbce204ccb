#include "qdissect/theta.hpp"

#include <stdexcept>

namespace qdissect {

std::string to_string(const ThetaSpec& spec) {
    std::string out = spec.kind == ThetaKind::Phi ? "phi(" : "psi(";
    if (spec.sign < 0)
        out += "-";
    out += "q";
    if (spec.inflation != 1)
        out += "^" + std::to_string(spec.inflation);
    out += ")";
    return out;
}

namespace {

void check_theta_args(int sign, std::size_t k, std::size_t trunc) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("theta sign must be +1 or -1");
    if (k == 0)
        throw std::invalid_argument("theta inflation must be positive");
    if (trunc == 0)
        throw std::invalid_argument("truncation order must be positive");
}

} // namespace

TruncatedSeries phi_series(int sign, std::size_t k, std::size_t trunc) {
    check_theta_args(sign, k, trunc);
    std::vector<std::int64_t> c(trunc, 0);
    c[0] = 1;
    // The two-sided sum over n in Z folds to n >= 1 with doubled terms.
    for (std::size_t n = 1; k * n * n < trunc; ++n) {
        const bool odd = (n * n) % 2 == 1;
        c[k * n * n] = (sign < 0 && odd) ? -2 : 2;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries psi_series(int sign, std::size_t k, std::size_t trunc) {
    check_theta_args(sign, k, trunc);
    std::vector<std::int64_t> c(trunc, 0);
    for (std::size_t n = 0;; ++n) {
        const std::size_t t = n * (n + 1) / 2;
        if (k * t >= trunc)
            break;
        c[k * t] = (sign < 0 && t % 2 == 1) ? -1 : 1;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries theta_series(const ThetaSpec& spec, std::size_t trunc) {
    return spec.kind == ThetaKind::Phi ? phi_series(spec.sign, spec.inflation, trunc)
                                       : psi_series(spec.sign, spec.inflation, trunc);
}

TruncatedSeries square_gf(const DiagonalForm& form, std::size_t trunc) {
    TruncatedSeries acc = phi_series(1, static_cast<std::size_t>(form.entries()[0]), trunc);
    for (std::size_t i = 1; i < form.arity(); ++i)
        acc = mul(acc, phi_series(1, static_cast<std::size_t>(form.entries()[i]), trunc));
    return acc;
}

TruncatedSeries triangular_gf(const DiagonalForm& form, std::size_t trunc) {
    TruncatedSeries acc = psi_series(1, static_cast<std::size_t>(form.entries()[0]), trunc);
    for (std::size_t i = 1; i < form.arity(); ++i)
        acc = mul(acc, psi_series(1, static_cast<std::size_t>(form.entries()[i]), trunc));
    return acc;
}

} // namespace qdissect
