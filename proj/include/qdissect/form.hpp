#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdissect {

/// The coefficient tuple (a1, ..., ak) of a diagonal quadratic/triangular
/// counting problem. Entries are positive; the canonical (nondecreasing)
/// order is stored alongside the order given, which is kept for display.
class DiagonalForm {
public:
    explicit DiagonalForm(std::vector<std::int64_t> entries);
    DiagonalForm(std::initializer_list<std::int64_t> entries);

    // "1,1,3" -> form; nullopt on malformed input.
    static std::optional<DiagonalForm> parse(std::string_view text);

    const std::vector<std::int64_t>& entries() const noexcept { return display_; }
    const std::vector<std::int64_t>& canonical() const noexcept { return sorted_; }
    std::size_t arity() const noexcept { return display_.size(); }
    std::int64_t sum() const noexcept;
    std::string to_string() const;

    friend bool operator==(const DiagonalForm& a, const DiagonalForm& b) {
        return a.sorted_ == b.sorted_;
    }
    friend bool operator<(const DiagonalForm& a, const DiagonalForm& b) {
        return a.sorted_ < b.sorted_;
    }

private:
    std::vector<std::int64_t> display_;
    std::vector<std::int64_t> sorted_;
};

} // namespace qdissect
