#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdissect/expr.hpp"

namespace qdissect {

struct ScriptAssertion {
    std::string citation;
    ExprPtr lhs;
    ExprPtr rhs;
};

/// An ordered derivation: named series definitions followed by the chain of
/// equalities to check. Scripts are plain data; run_script does the work.
struct ProofScript {
    std::string name;
    Definitions definitions;
    std::vector<ScriptAssertion> assertions;
};

/// Parses the declarative one-entry-per-line format:
///
///   script <name>
///   def <label> <expr>
///   assert "<citation>" <expr> <expr>
///
/// Expressions use prefix notation: (phi 5), (psi -3), (q 7), integers,
/// (+ ...), (- ...), (* ...), (E x), (O x), (ap x m r), (inflate x k),
/// (twist x), and bare labels for earlier definitions. '#' starts a comment.
/// Raises ScriptParseError on malformed input or a reference to a label that
/// has not been defined on an earlier line.
ProofScript parse_script(std::string_view text);

ProofScript load_script_file(const std::string& path);

/// The six embedded derivation scripts, one per worked dissection proof.
const std::vector<ProofScript>& builtin_scripts();

/// Lookup by name; "(", ")" are ignored so thm1-(5,21,35) and thm1-5,21,35
/// both resolve.
const ProofScript* find_script(std::string_view name);

struct AssertionOutcome {
    std::string citation;
    bool pass = false;
    std::optional<CoeffMismatch> mismatch;
};

struct ScriptReport {
    std::string name;
    std::size_t order = 0;
    bool pass = false;
    std::vector<AssertionOutcome> assertions;
};

/// Evaluates every assertion at the requested order. All checks are numeric,
/// so a passing report states agreement to O(q^order), nothing stronger.
ScriptReport run_script(const ProofScript& script, std::size_t order);

} // namespace qdissect
