#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qdissect/series.hpp"
#include "qdissect/theta.hpp"

namespace qdissect {

class SeriesExpr;
using ExprPtr = std::shared_ptr<const SeriesExpr>;

struct ThetaNode { ThetaSpec spec; };
struct MonomialNode { std::size_t exponent; };
struct ScalarNode { std::int64_t value; };
struct SumNode { std::vector<ExprPtr> terms; };
struct ProductNode { std::vector<ExprPtr> factors; };
struct EvenPartNode { ExprPtr child; };
struct OddPartNode { ExprPtr child; };
struct ExtractNode { ExprPtr child; std::size_t modulus; std::size_t residue; };
struct InflateNode { ExprPtr child; std::size_t factor; };
struct SignTwistNode { ExprPtr child; };
struct RefNode { std::string label; };

/// Immutable expression tree over the series primitives. Evaluation widens
/// internal truncations automatically, so a requested order is always the
/// order actually delivered.
class SeriesExpr {
public:
    using Node = std::variant<ThetaNode, MonomialNode, ScalarNode, SumNode, ProductNode,
                              EvenPartNode, OddPartNode, ExtractNode, InflateNode,
                              SignTwistNode, RefNode>;

    explicit SeriesExpr(Node node) : node_(std::move(node)) {}
    const Node& node() const noexcept { return node_; }

private:
    Node node_;
};

// Builders. phi/psi take a signed inflation: ex_phi(-6) means phi(-q^6).
ExprPtr ex_phi(std::int64_t signed_inflation);
ExprPtr ex_psi(std::int64_t signed_inflation);
ExprPtr ex_mono(std::size_t exponent);
ExprPtr ex_scalar(std::int64_t value);
ExprPtr ex_sum(std::vector<ExprPtr> terms);
ExprPtr ex_product(std::vector<ExprPtr> factors);
ExprPtr ex_even(ExprPtr child);
ExprPtr ex_odd(ExprPtr child);
ExprPtr ex_extract(ExprPtr child, std::size_t modulus, std::size_t residue);
ExprPtr ex_inflate(ExprPtr child, std::size_t factor);
ExprPtr ex_twist(ExprPtr child);
ExprPtr ex_ref(std::string label);

/// Ordered (label, expression) pairs; later entries may reference earlier ones.
using Definitions = std::vector<std::pair<std::string, ExprPtr>>;

/// Bottom-up evaluator with top-down order widening and per-(label, order)
/// memoization of named definitions.
class ExprEvaluator {
public:
    ExprEvaluator() = default;
    explicit ExprEvaluator(const Definitions& definitions);

    TruncatedSeries eval(const ExprPtr& expr, std::size_t order);

private:
    TruncatedSeries eval_ref(const std::string& label, std::size_t order);

    std::map<std::string, ExprPtr, std::less<>> definitions_;
    std::map<std::pair<std::string, std::size_t>, TruncatedSeries> cache_;
    std::vector<std::string> in_progress_;
};

TruncatedSeries eval_expr(const ExprPtr& expr, std::size_t order);
TruncatedSeries eval_expr(const ExprPtr& expr, std::size_t order, const Definitions& definitions);

/// Rewrites the expression under the argument substitution q -> sign * q^power.
/// Supported for atoms, monomials, scalars, sums, products, inflations and
/// sign twists; parity projections and progression extractions do not commute
/// with the substitution and are rejected with std::invalid_argument.
ExprPtr substitute_arg(const ExprPtr& expr, int sign, std::size_t power);

/// Round-trippable prefix form, e.g. "(* 2 (q 1) (psi 8))".
std::string to_string(const ExprPtr& expr);

} // namespace qdissect
