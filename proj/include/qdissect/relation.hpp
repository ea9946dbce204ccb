#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdissect/form.hpp"

namespace qdissect {

enum class RelationKind { A, B };

enum class Parity { All, EvenOnly, OddOnly };

std::string to_string(RelationKind kind);
std::string to_string(Parity parity);
std::optional<RelationKind> parse_kind(std::string_view text);   // "A" | "B"
std::optional<Parity> parse_parity(std::string_view text);       // "all" | "even" | "odd"

/// A conjectured/proved relation between triangular and square counts on the
/// progression M(n) = 8n + a + b + c:
///   kind A:  16 T(n) = N(4M) - N(M)
///   kind B:  16 T(n) = 3 N(M) - N(4M)
/// restricted to all n, even n only, or odd n only.
struct SunRelation {
    DiagonalForm form; // exactly three entries
    RelationKind kind;
    Parity parity;

    std::int64_t shifted_arg(std::int64_t n) const { return 8 * n + form.sum(); }
    bool admissible(std::int64_t n) const {
        return parity == Parity::All || (n % 2 == 0) == (parity == Parity::EvenOnly);
    }
    std::string to_string() const;
};

struct CatalogEntry {
    SunRelation relation;
    std::string source; // list the triplet is quoted from
};

/// The twenty proved relations, in statement order.
const std::vector<CatalogEntry>& theorem_catalog();

/// The forty-three conjectured relations, in statement order. (5,21,35) and
/// (3,5,10) appear here with claims the theorem catalog supersedes or
/// contradicts; the scanner's audit adjudicates those empirically.
const std::vector<CatalogEntry>& conjecture_catalog();

enum class Route { Series, Oracle };

std::string to_string(Route route);

struct RelationFailure {
    std::int64_t n;
    std::int64_t lhs; // 16 T(n)
    std::int64_t rhs; // the kind-appropriate N combination
};

struct RelationReport {
    SunRelation relation;
    Route route = Route::Oracle;
    std::int64_t n_max = 0;
    std::size_t checked = 0; // admissible indices in 1..n_max
    bool pass = false;
    std::optional<RelationFailure> first_failure;
    /// The n = 0 instance, reported separately from the verdict; absent when
    /// n = 0 is not admissible for the relation's parity class.
    std::optional<RelationFailure> n0;
    bool n0_holds = false;
};

/// Checks the relation for every admissible n in 1..n_max with T and N read
/// off theta-product generating functions.
RelationReport verify_relation_series(const SunRelation& relation, std::int64_t n_max);

/// Same verdict structure with every count taken from lattice enumeration.
RelationReport verify_relation_oracle(const SunRelation& relation, std::int64_t n_max);

/// True when the two reports agree verdict-for-verdict (route tags aside).
bool reports_agree(const RelationReport& a, const RelationReport& b);

/// For a parity-restricted relation: the first n <= limit of the *opposite*
/// parity where the identity fails, or nullopt if it never does. Witnesses
/// that the restriction is sharp.
std::optional<std::int64_t> parity_sharpness_witness(const SunRelation& relation, std::int64_t limit);

} // namespace qdissect
