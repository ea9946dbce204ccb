#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdissect/expr.hpp"

namespace qdissect {

/// One registered two-sided series identity, stored as expression trees so
/// it can be checked at any order and under any argument substitution.
struct IdentityEntry {
    std::string id;     // stable name, e.g. "eq11"
    ExprPtr lhs;
    ExprPtr rhs;
    std::string source; // where the identity is catalogued
};

/// q -> sign * q^power applied to both sides before comparing.
struct ArgSubstitution {
    int sign = 1;
    std::size_t power = 1;
};

struct IdentityReport {
    std::string id;
    std::size_t order = 0;
    std::optional<ArgSubstitution> substitution;
    bool pass = false;
    std::optional<CoeffMismatch> mismatch;
};

/// The registry: twelve catalogued two-term/three-term theta identities plus
/// the two auxiliary four-term ones, in a fixed order.
const std::vector<IdentityEntry>& builtin_identities();

const IdentityEntry* find_identity(std::string_view id);

IdentityReport verify_identity(const IdentityEntry& entry, std::size_t order,
                               std::optional<ArgSubstitution> substitution = std::nullopt);

} // namespace qdissect
