#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qdissect/relation.hpp"

namespace qdissect {

enum class ParityVerdict { All, EvenOnly, OddOnly, None };

std::string to_string(ParityVerdict verdict);

/// True when the claimed parity class is covered by the empirical verdict
/// (All covers every claim).
bool verdict_covers(ParityVerdict verdict, Parity claimed);

struct ScanResult {
    DiagonalForm form;
    RelationKind kind;
    ParityVerdict verdict;
    std::int64_t n_max;
    std::optional<std::int64_t> first_even_failure;
    std::optional<std::int64_t> first_odd_failure;
};

struct ScanOptions {
    std::int64_t c_max = 9;
    std::int64_t n_max = 150;
    bool kind_a = true;
    bool kind_b = true;
    /// 0 = decide from QDISSECT_THREADS, falling back to the hardware count.
    unsigned threads = 0;
};

/// Classifies every nondecreasing triplet a <= b <= c <= c_max against the
/// requested kinds using oracle counts, and returns the hits (verdict !=
/// None) sorted by (kind, a, b, c). A restricted verdict is only emitted
/// when its parity class contains at least 20 indices with T(n) != 0, so
/// short ranges cannot manufacture even-only/odd-only claims.
std::vector<ScanResult> scan(const ScanOptions& options);

std::string scan_csv_header();
std::string to_csv_row(const ScanResult& result);

/// One audited (triplet, kind) pair: every list that claims it, next to the
/// verdict enumeration produces.
struct AuditEntry {
    DiagonalForm form;
    RelationKind kind;
    std::vector<std::pair<std::string, Parity>> claims; // (source, claimed parity)
    ParityVerdict empirical;
    std::optional<std::int64_t> first_even_failure;
    std::optional<std::int64_t> first_odd_failure;
    bool consistent; // all claims covered by the empirical verdict
};

struct AuditReport {
    std::int64_t n_max;
    std::vector<AuditEntry> entries;
    /// Data-driven remarks: claims a verdict upgrades, contradicts, or that
    /// conflict between lists. Nothing here is precommitted.
    std::vector<std::string> notes;
};

/// Runs the oracle verdict for every triplet mentioned in either catalog and
/// cross-references the claims.
AuditReport audit_paper_lists(std::int64_t n_max);

} // namespace qdissect
