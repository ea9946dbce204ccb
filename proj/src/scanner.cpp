#include "qdissect/scanner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

#include "qdissect/oracle.hpp"

namespace qdissect {

std::string to_string(ParityVerdict verdict) {
    switch (verdict) {
    case ParityVerdict::All: return "ALL";
    case ParityVerdict::EvenOnly: return "EVEN_ONLY";
    case ParityVerdict::OddOnly: return "ODD_ONLY";
    default: return "NONE";
    }
}

bool verdict_covers(ParityVerdict verdict, Parity claimed) {
    if (verdict == ParityVerdict::All)
        return true;
    if (verdict == ParityVerdict::EvenOnly)
        return claimed == Parity::EvenOnly;
    if (verdict == ParityVerdict::OddOnly)
        return claimed == Parity::OddOnly;
    return false;
}

namespace {

constexpr std::size_t kMinNonzeroSamples = 20;

struct Classification {
    ParityVerdict verdict;
    std::optional<std::int64_t> first_even_failure;
    std::optional<std::int64_t> first_odd_failure;
};

// Failure sweep over 1..n_max from precomputed count tables.
Classification classify(const std::vector<std::int64_t>& t_counts,
                        const std::vector<std::int64_t>& n_counts,
                        RelationKind kind, std::int64_t sum, std::int64_t n_max) {
    Classification out{ParityVerdict::None, std::nullopt, std::nullopt};
    std::size_t even_nonzero = 0, odd_nonzero = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const std::int64_t m = 8 * n + sum;
        const std::int64_t t = t_counts[static_cast<std::size_t>(n)];
        const std::int64_t rhs = kind == RelationKind::A
                                     ? n_counts[static_cast<std::size_t>(4 * m)] - n_counts[static_cast<std::size_t>(m)]
                                     : 3 * n_counts[static_cast<std::size_t>(m)] - n_counts[static_cast<std::size_t>(4 * m)];
        const bool even = n % 2 == 0;
        if (t != 0)
            (even ? even_nonzero : odd_nonzero) += 1;
        if (16 * t != rhs) {
            if (even && !out.first_even_failure)
                out.first_even_failure = n;
            if (!even && !out.first_odd_failure)
                out.first_odd_failure = n;
        }
    }
    if (!out.first_even_failure && !out.first_odd_failure)
        out.verdict = ParityVerdict::All;
    else if (!out.first_even_failure && even_nonzero >= kMinNonzeroSamples)
        out.verdict = ParityVerdict::EvenOnly;
    else if (!out.first_odd_failure && odd_nonzero >= kMinNonzeroSamples)
        out.verdict = ParityVerdict::OddOnly;
    return out;
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("QDISSECT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

} // namespace

std::vector<ScanResult> scan(const ScanOptions& options) {
    if (options.c_max < 1 || options.n_max < 10)
        throw std::invalid_argument("scan needs c_max >= 1 and n_max >= 10");
    std::vector<DiagonalForm> triplets;
    for (std::int64_t a = 1; a <= options.c_max; ++a)
        for (std::int64_t b = a; b <= options.c_max; ++b)
            for (std::int64_t c = b; c <= options.c_max; ++c)
                triplets.push_back(DiagonalForm{a, b, c});

    std::vector<std::vector<ScanResult>> hits(triplets.size());
    const auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const DiagonalForm& form = triplets[i];
            const std::int64_t sum = form.sum();
            const auto t_counts = count_range(form, options.n_max, CountKind::Triangular);
            const auto n_counts = count_range(form, 4 * (8 * options.n_max + sum), CountKind::Squares);
            for (RelationKind kind : {RelationKind::A, RelationKind::B}) {
                if ((kind == RelationKind::A && !options.kind_a) ||
                    (kind == RelationKind::B && !options.kind_b))
                    continue;
                const Classification c = classify(t_counts, n_counts, kind, sum, options.n_max);
                if (c.verdict != ParityVerdict::None)
                    hits[i].push_back({form, kind, c.verdict, options.n_max,
                                       c.first_even_failure, c.first_odd_failure});
            }
        }
    };

    const unsigned threads = std::min<unsigned>(resolve_threads(options.threads),
                                                static_cast<unsigned>(triplets.size()));
    if (threads <= 1) {
        work(0, triplets.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (triplets.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(triplets.size(), begin + chunk);
            if (begin < end)
                pool.emplace_back(work, begin, end);
        }
        for (std::thread& th : pool)
            th.join();
    }

    std::vector<ScanResult> results;
    for (auto& bucket : hits)
        for (auto& result : bucket)
            results.push_back(std::move(result));
    std::sort(results.begin(), results.end(), [](const ScanResult& x, const ScanResult& y) {
        if (x.kind != y.kind)
            return x.kind < y.kind;
        return x.form < y.form;
    });
    return results;
}

std::string scan_csv_header() {
    return "a,b,c,kind,parity_verdict,n_max,first_even_failure,first_odd_failure";
}

std::string to_csv_row(const ScanResult& result) {
    const auto opt = [](const std::optional<std::int64_t>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    return result.form.to_string() + "," + to_string(result.kind) + "," + to_string(result.verdict) +
           "," + std::to_string(result.n_max) + "," + opt(result.first_even_failure) + "," +
           opt(result.first_odd_failure);
}

AuditReport audit_paper_lists(std::int64_t n_max) {
    if (n_max < 150)
        throw std::invalid_argument("audit needs n_max >= 150");
    // Collect claims per (canonical triplet, kind).
    std::map<std::pair<DiagonalForm, RelationKind>, std::vector<std::pair<std::string, Parity>>> claims;
    const auto collect = [&](const std::vector<CatalogEntry>& catalog) {
        for (const CatalogEntry& entry : catalog)
            claims[{entry.relation.form, entry.relation.kind}].push_back(
                {entry.source, entry.relation.parity});
    };
    collect(conjecture_catalog());
    collect(theorem_catalog());

    AuditReport report{n_max, {}, {}};
    for (const auto& [key, claim_list] : claims) {
        const auto& [form, kind] = key;
        const std::int64_t sum = form.sum();
        const auto t_counts = count_range(form, n_max, CountKind::Triangular);
        const auto n_counts = count_range(form, 4 * (8 * n_max + sum), CountKind::Squares);
        const Classification c = classify(t_counts, n_counts, kind, sum, n_max);
        AuditEntry entry{form, kind, claim_list, c.verdict,
                         c.first_even_failure, c.first_odd_failure, true};
        for (const auto& [source, parity] : claim_list) {
            const bool covered = verdict_covers(c.verdict, parity);
            entry.consistent = entry.consistent && covered;
            if (!covered)
                report.notes.push_back("(" + form.to_string() + ") kind " + to_string(kind) +
                                       ": " + source + " claims parity " + to_string(parity) +
                                       " but enumeration up to n=" + std::to_string(n_max) +
                                       " gives " + to_string(c.verdict));
            else if (c.verdict == ParityVerdict::All && parity != Parity::All)
                report.notes.push_back("(" + form.to_string() + ") kind " + to_string(kind) +
                                       ": " + source + " claims parity " + to_string(parity) +
                                       " only, but the relation holds for all n <= " +
                                       std::to_string(n_max));
        }
        // A triplet+kind claimed by several lists with different parities is
        // itself worth flagging.
        for (std::size_t i = 1; i < claim_list.size(); ++i)
            if (claim_list[i].second != claim_list[0].second)
                report.notes.push_back("(" + form.to_string() + ") kind " + to_string(kind) +
                                       ": " + claim_list[0].first + " and " + claim_list[i].first +
                                       " claim different parities");
        report.entries.push_back(std::move(entry));
    }
    std::sort(report.notes.begin(), report.notes.end());
    report.notes.erase(std::unique(report.notes.begin(), report.notes.end()), report.notes.end());
    return report;
}

} // namespace qdissect
