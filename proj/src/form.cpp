#include "qdissect/form.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qdissect {

DiagonalForm::DiagonalForm(std::vector<std::int64_t> entries) : display_(std::move(entries)) {
    if (display_.empty())
        throw std::invalid_argument("diagonal form needs at least one coefficient");
    for (std::int64_t a : display_)
        if (a < 1)
            throw std::invalid_argument("diagonal form coefficients must be positive");
    sorted_ = display_;
    std::sort(sorted_.begin(), sorted_.end());
}

DiagonalForm::DiagonalForm(std::initializer_list<std::int64_t> entries)
    : DiagonalForm(std::vector<std::int64_t>(entries)) {}

std::optional<DiagonalForm> DiagonalForm::parse(std::string_view text) {
    std::vector<std::int64_t> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view piece = text.substr(pos, comma - pos);
        while (!piece.empty() && piece.front() == ' ')
            piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ')
            piece.remove_suffix(1);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || ptr != piece.data() + piece.size() || value < 1)
            return std::nullopt;
        entries.push_back(value);
        if (comma == text.size())
            break;
        pos = comma + 1;
    }
    if (entries.empty())
        return std::nullopt;
    return DiagonalForm(std::move(entries));
}

std::int64_t DiagonalForm::sum() const noexcept {
    return std::accumulate(display_.begin(), display_.end(), std::int64_t{0});
}

std::string DiagonalForm::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < display_.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(display_[i]);
    }
    return out;
}

} // namespace qdissect
