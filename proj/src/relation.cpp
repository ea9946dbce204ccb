#include "qdissect/relation.hpp"

#include <array>
#include <functional>
#include <stdexcept>

#include "qdissect/oracle.hpp"
#include "qdissect/series.hpp"
#include "qdissect/theta.hpp"

namespace qdissect {

std::string to_string(RelationKind kind) { return kind == RelationKind::A ? "A" : "B"; }

std::string to_string(Parity parity) {
    switch (parity) {
    case Parity::All: return "all";
    case Parity::EvenOnly: return "even";
    default: return "odd";
    }
}

std::optional<RelationKind> parse_kind(std::string_view text) {
    if (text == "A" || text == "a")
        return RelationKind::A;
    if (text == "B" || text == "b")
        return RelationKind::B;
    return std::nullopt;
}

std::optional<Parity> parse_parity(std::string_view text) {
    if (text == "all")
        return Parity::All;
    if (text == "even")
        return Parity::EvenOnly;
    if (text == "odd")
        return Parity::OddOnly;
    return std::nullopt;
}

std::string SunRelation::to_string() const {
    return "(" + form.to_string() + ") kind " + qdissect::to_string(kind) +
           ", parity " + qdissect::to_string(parity);
}

std::string to_string(Route route) { return route == Route::Series ? "series" : "oracle"; }

namespace {

SunRelation rel(std::int64_t a, std::int64_t b, std::int64_t c, RelationKind kind, Parity parity) {
    return SunRelation{DiagonalForm{a, b, c}, kind, parity};
}

std::vector<CatalogEntry> build_theorems() {
    std::vector<CatalogEntry> out;
    const auto add = [&](std::int64_t a, std::int64_t b, std::int64_t c, RelationKind k, Parity p,
                         const char* src) { out.push_back({rel(a, b, c, k, p), src}); };
    add(1, 1, 3, RelationKind::A, Parity::All, "theorem 1");
    add(1, 1, 4, RelationKind::A, Parity::All, "theorem 1");
    add(1, 1, 6, RelationKind::A, Parity::All, "theorem 1");
    add(1, 2, 2, RelationKind::A, Parity::All, "theorem 1");
    add(1, 3, 3, RelationKind::A, Parity::All, "theorem 1");
    add(1, 3, 9, RelationKind::A, Parity::All, "theorem 1");
    add(2, 3, 3, RelationKind::A, Parity::All, "theorem 1");
    add(5, 21, 35, RelationKind::A, Parity::All, "theorem 1");
    add(3, 6, 45, RelationKind::A, Parity::EvenOnly, "theorem 2(i)");
    add(3, 10, 45, RelationKind::A, Parity::EvenOnly, "theorem 2(i)");
    add(1, 6, 7, RelationKind::A, Parity::OddOnly, "theorem 2(ii)");
    add(1, 7, 42, RelationKind::A, Parity::OddOnly, "theorem 2(ii)");
    add(2, 3, 21, RelationKind::A, Parity::OddOnly, "theorem 2(ii)");
    add(2, 9, 15, RelationKind::A, Parity::OddOnly, "theorem 2(ii)");
    add(3, 5, 6, RelationKind::A, Parity::OddOnly, "theorem 2(ii)");
    add(3, 5, 10, RelationKind::A, Parity::OddOnly, "theorem 2(ii)");
    add(3, 7, 15, RelationKind::B, Parity::All, "theorem 3");
    add(1, 6, 15, RelationKind::B, Parity::EvenOnly, "theorem 4(i)");
    add(1, 10, 15, RelationKind::B, Parity::EvenOnly, "theorem 4(i)");
    add(1, 2, 7, RelationKind::B, Parity::OddOnly, "theorem 4(ii)");
    add(1, 7, 14, RelationKind::B, Parity::OddOnly, "theorem 4(ii)");
    add(2, 3, 5, RelationKind::B, Parity::OddOnly, "theorem 4(ii)");
    add(3, 5, 30, RelationKind::B, Parity::OddOnly, "theorem 4(ii)");
    return out;
}

std::vector<CatalogEntry> build_conjectures() {
    std::vector<CatalogEntry> out;
    const auto add = [&](std::int64_t a, std::int64_t b, std::int64_t c, RelationKind k, Parity p,
                         const char* src) { out.push_back({rel(a, b, c, k, p), src}); };
    for (auto [a, b, c] : std::initializer_list<std::array<std::int64_t, 3>>{
             {1, 1, 3}, {1, 1, 4}, {1, 1, 6}, {1, 1, 7}, {1, 1, 15}, {1, 2, 2}, {1, 2, 5},
             {1, 3, 3}, {1, 3, 9}, {1, 5, 10}, {1, 6, 9}, {1, 7, 7}, {1, 7, 15}, {1, 9, 15},
             {1, 15, 15}, {1, 15, 25}, {2, 3, 3}})
        add(a, b, c, RelationKind::A, Parity::All, "conjecture 6.1");
    for (auto [a, b, c] : std::initializer_list<std::array<std::int64_t, 3>>{
             {1, 2, 15}, {1, 15, 18}, {1, 15, 30}, {3, 10, 45}})
        add(a, b, c, RelationKind::A, Parity::EvenOnly, "conjecture 6.2(i)");
    for (auto [a, b, c] : std::initializer_list<std::array<std::int64_t, 3>>{
             {1, 6, 7}, {1, 7, 42}, {2, 3, 21}, {2, 9, 15}, {3, 5, 6}, {3, 5, 10}, {5, 21, 35}})
        add(a, b, c, RelationKind::A, Parity::OddOnly, "conjecture 6.2(ii)");
    for (auto [a, b, c] : std::initializer_list<std::array<std::int64_t, 3>>{
             {1, 3, 5}, {1, 3, 7}, {1, 3, 15}, {1, 3, 21}, {1, 5, 15}, {1, 7, 21}, {3, 5, 9},
             {3, 5, 15}, {3, 7, 21}})
        add(a, b, c, RelationKind::B, Parity::All, "conjecture 6.3");
    for (auto [a, b, c] : std::initializer_list<std::array<std::int64_t, 3>>{{1, 6, 15}, {1, 10, 15}})
        add(a, b, c, RelationKind::B, Parity::EvenOnly, "conjecture 6.4(i)");
    for (auto [a, b, c] : std::initializer_list<std::array<std::int64_t, 3>>{
             {1, 2, 7}, {1, 7, 14}, {2, 3, 5}, {3, 5, 10}})
        add(a, b, c, RelationKind::B, Parity::OddOnly, "conjecture 6.4(ii)");
    return out;
}

// Shared verdict loop: `t_of` and `n_of` supply T(n) and N(m) values.
RelationReport check_relation(const SunRelation& relation, std::int64_t n_max, Route route,
                              const std::function<std::int64_t(std::int64_t)>& t_of,
                              const std::function<std::int64_t(std::int64_t)>& n_of) {
    if (n_max < 1)
        throw std::invalid_argument("relation check needs n_max >= 1");
    RelationReport report{relation, route, n_max, 0, true, std::nullopt, std::nullopt, false};
    const auto sides = [&](std::int64_t n) {
        const std::int64_t m = relation.shifted_arg(n);
        const std::int64_t lhs = checked_mul(16, t_of(n));
        const std::int64_t rhs = relation.kind == RelationKind::A
                                     ? n_of(4 * m) - n_of(m)
                                     : checked_mul(3, n_of(m)) - n_of(4 * m);
        return RelationFailure{n, lhs, rhs};
    };
    if (relation.admissible(0)) {
        report.n0 = sides(0);
        report.n0_holds = report.n0->lhs == report.n0->rhs;
    }
    for (std::int64_t n = 1; n <= n_max; ++n) {
        if (!relation.admissible(n))
            continue;
        ++report.checked;
        const RelationFailure values = sides(n);
        if (values.lhs != values.rhs && !report.first_failure) {
            report.first_failure = values;
            report.pass = false;
        }
    }
    return report;
}

} // namespace

const std::vector<CatalogEntry>& theorem_catalog() {
    static const std::vector<CatalogEntry> catalog = build_theorems();
    return catalog;
}

const std::vector<CatalogEntry>& conjecture_catalog() {
    static const std::vector<CatalogEntry> catalog = build_conjectures();
    return catalog;
}

RelationReport verify_relation_series(const SunRelation& relation, std::int64_t n_max) {
    const std::size_t t_order = static_cast<std::size_t>(n_max) + 1;
    const std::size_t n_order = static_cast<std::size_t>(4 * relation.shifted_arg(n_max)) + 1;
    const TruncatedSeries t_series = triangular_gf(relation.form, t_order);
    const TruncatedSeries n_series = square_gf(relation.form, n_order);
    return check_relation(
        relation, n_max, Route::Series,
        [&](std::int64_t n) { return t_series[static_cast<std::size_t>(n)]; },
        [&](std::int64_t m) { return n_series[static_cast<std::size_t>(m)]; });
}

RelationReport verify_relation_oracle(const SunRelation& relation, std::int64_t n_max) {
    const auto t_counts = count_range(relation.form, n_max, CountKind::Triangular);
    const auto n_counts = count_range(relation.form, 4 * relation.shifted_arg(n_max), CountKind::Squares);
    return check_relation(
        relation, n_max, Route::Oracle,
        [&](std::int64_t n) { return t_counts[static_cast<std::size_t>(n)]; },
        [&](std::int64_t m) { return n_counts[static_cast<std::size_t>(m)]; });
}

bool reports_agree(const RelationReport& a, const RelationReport& b) {
    if (a.n_max != b.n_max || a.checked != b.checked || a.pass != b.pass)
        return false;
    if (a.first_failure.has_value() != b.first_failure.has_value())
        return false;
    if (a.first_failure &&
        (a.first_failure->n != b.first_failure->n || a.first_failure->lhs != b.first_failure->lhs ||
         a.first_failure->rhs != b.first_failure->rhs))
        return false;
    if (a.n0.has_value() != b.n0.has_value() || a.n0_holds != b.n0_holds)
        return false;
    return true;
}

std::optional<std::int64_t> parity_sharpness_witness(const SunRelation& relation, std::int64_t limit) {
    if (relation.parity == Parity::All)
        return std::nullopt;
    SunRelation opposite = relation;
    opposite.parity = relation.parity == Parity::EvenOnly ? Parity::OddOnly : Parity::EvenOnly;
    const RelationReport report = verify_relation_oracle(opposite, limit);
    if (report.first_failure)
        return report.first_failure->n;
    return std::nullopt;
}

} // namespace qdissect
