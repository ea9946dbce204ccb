#include "qdissect/expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "qdissect/errors.hpp"

namespace qdissect {

namespace {

ExprPtr make(SeriesExpr::Node node) {
    return std::make_shared<const SeriesExpr>(std::move(node));
}

ThetaSpec signed_spec(ThetaKind kind, std::int64_t signed_inflation) {
    if (signed_inflation == 0)
        throw std::invalid_argument("theta inflation must be nonzero");
    const int sign = signed_inflation < 0 ? -1 : 1;
    const std::size_t k = static_cast<std::size_t>(signed_inflation < 0 ? -signed_inflation : signed_inflation);
    return ThetaSpec{kind, sign, k};
}

} // namespace

ExprPtr ex_phi(std::int64_t signed_inflation) { return make(ThetaNode{signed_spec(ThetaKind::Phi, signed_inflation)}); }
ExprPtr ex_psi(std::int64_t signed_inflation) { return make(ThetaNode{signed_spec(ThetaKind::Psi, signed_inflation)}); }
ExprPtr ex_mono(std::size_t exponent) { return make(MonomialNode{exponent}); }
ExprPtr ex_scalar(std::int64_t value) { return make(ScalarNode{value}); }

ExprPtr ex_sum(std::vector<ExprPtr> terms) {
    if (terms.empty())
        throw std::invalid_argument("sum needs at least one term");
    return terms.size() == 1 ? terms[0] : make(SumNode{std::move(terms)});
}

ExprPtr ex_product(std::vector<ExprPtr> factors) {
    if (factors.empty())
        throw std::invalid_argument("product needs at least one factor");
    return factors.size() == 1 ? factors[0] : make(ProductNode{std::move(factors)});
}

ExprPtr ex_even(ExprPtr child) { return make(EvenPartNode{std::move(child)}); }
ExprPtr ex_odd(ExprPtr child) { return make(OddPartNode{std::move(child)}); }

ExprPtr ex_extract(ExprPtr child, std::size_t modulus, std::size_t residue) {
    if (modulus == 0 || residue >= modulus)
        throw std::invalid_argument("extraction needs m >= 1 and 0 <= r < m");
    return make(ExtractNode{std::move(child), modulus, residue});
}

ExprPtr ex_inflate(ExprPtr child, std::size_t factor) {
    if (factor == 0)
        throw std::invalid_argument("inflation factor must be positive");
    return make(InflateNode{std::move(child), factor});
}

ExprPtr ex_twist(ExprPtr child) { return make(SignTwistNode{std::move(child)}); }
ExprPtr ex_ref(std::string label) { return make(RefNode{std::move(label)}); }

ExprEvaluator::ExprEvaluator(const Definitions& definitions) {
    for (const auto& [label, expr] : definitions)
        definitions_.insert_or_assign(label, expr);
}

TruncatedSeries ExprEvaluator::eval_ref(const std::string& label, std::size_t order) {
    const auto key = std::make_pair(label, order);
    if (const auto hit = cache_.find(key); hit != cache_.end())
        return hit->second;
    const auto def = definitions_.find(label);
    if (def == definitions_.end())
        throw UndefinedLabelError("undefined label '" + label + "'");
    if (std::find(in_progress_.begin(), in_progress_.end(), label) != in_progress_.end())
        throw UndefinedLabelError("cyclic definition of label '" + label + "'");
    in_progress_.push_back(label);
    TruncatedSeries value = eval(def->second, order);
    in_progress_.pop_back();
    cache_.emplace(key, value);
    return value;
}

TruncatedSeries ExprEvaluator::eval(const ExprPtr& expr, std::size_t order) {
    if (!expr)
        throw std::invalid_argument("null expression");
    if (order == 0)
        throw std::invalid_argument("evaluation order must be positive");
    struct Visitor {
        ExprEvaluator& self;
        std::size_t order;

        TruncatedSeries operator()(const ThetaNode& n) const { return theta_series(n.spec, order); }
        TruncatedSeries operator()(const MonomialNode& n) const { return TruncatedSeries::monomial(n.exponent, order); }
        TruncatedSeries operator()(const ScalarNode& n) const { return TruncatedSeries::constant(n.value, order); }
        TruncatedSeries operator()(const SumNode& n) const {
            TruncatedSeries acc = self.eval(n.terms[0], order);
            for (std::size_t i = 1; i < n.terms.size(); ++i)
                acc = add(acc, self.eval(n.terms[i], order));
            return acc;
        }
        TruncatedSeries operator()(const ProductNode& n) const {
            TruncatedSeries acc = self.eval(n.factors[0], order);
            for (std::size_t i = 1; i < n.factors.size(); ++i)
                acc = mul(acc, self.eval(n.factors[i], order));
            return acc;
        }
        TruncatedSeries operator()(const EvenPartNode& n) const { return even_part(self.eval(n.child, order)); }
        TruncatedSeries operator()(const OddPartNode& n) const { return odd_part(self.eval(n.child, order)); }
        TruncatedSeries operator()(const ExtractNode& n) const {
            // Coefficient m*(order-1) + r is the deepest one needed.
            const std::size_t child_order = n.modulus * (order - 1) + n.residue + 1;
            return extract_ap(self.eval(n.child, child_order), n.modulus, n.residue);
        }
        TruncatedSeries operator()(const InflateNode& n) const {
            const std::size_t child_order = (order - 1 + n.factor - 1) / n.factor + 1;
            return truncate(inflate(self.eval(n.child, child_order), n.factor), order);
        }
        TruncatedSeries operator()(const SignTwistNode& n) const { return sign_twist(self.eval(n.child, order)); }
        TruncatedSeries operator()(const RefNode& n) const { return self.eval_ref(n.label, order); }
    };
    return std::visit(Visitor{*this, order}, expr->node());
}

TruncatedSeries eval_expr(const ExprPtr& expr, std::size_t order) {
    ExprEvaluator evaluator;
    return evaluator.eval(expr, order);
}

TruncatedSeries eval_expr(const ExprPtr& expr, std::size_t order, const Definitions& definitions) {
    ExprEvaluator evaluator(definitions);
    return evaluator.eval(expr, order);
}

namespace {

int pow_sign(int sign, std::size_t exponent) {
    return (sign < 0 && exponent % 2 == 1) ? -1 : 1;
}

} // namespace

ExprPtr substitute_arg(const ExprPtr& expr, int sign, std::size_t power) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("substitution sign must be +1 or -1");
    if (power == 0)
        throw std::invalid_argument("substitution power must be positive");
    struct Visitor {
        int sign;
        std::size_t power;

        ExprPtr operator()(const ThetaNode& n) const {
            // theta(s*q^k) at q -> sign*q^p becomes theta(s * sign^k * q^(k*p)).
            return std::make_shared<const SeriesExpr>(ThetaNode{ThetaSpec{
                n.spec.kind, n.spec.sign * pow_sign(sign, n.spec.inflation), n.spec.inflation * power}});
        }
        ExprPtr operator()(const MonomialNode& n) const {
            ExprPtr mono = ex_mono(n.exponent * power);
            return pow_sign(sign, n.exponent) < 0 ? ex_product({ex_scalar(-1), mono}) : mono;
        }
        ExprPtr operator()(const ScalarNode& n) const { return ex_scalar(n.value); }
        ExprPtr operator()(const SumNode& n) const {
            std::vector<ExprPtr> terms;
            terms.reserve(n.terms.size());
            for (const auto& t : n.terms)
                terms.push_back(substitute_arg(t, sign, power));
            return ex_sum(std::move(terms));
        }
        ExprPtr operator()(const ProductNode& n) const {
            std::vector<ExprPtr> factors;
            factors.reserve(n.factors.size());
            for (const auto& f : n.factors)
                factors.push_back(substitute_arg(f, sign, power));
            return ex_product(std::move(factors));
        }
        ExprPtr operator()(const InflateNode& n) const {
            // e(q^k) at q -> sign*q^p is e(sign^k * q^(k*p)).
            return substitute_arg(n.child, pow_sign(sign, n.factor), n.factor * power);
        }
        ExprPtr operator()(const SignTwistNode& n) const {
            return substitute_arg(n.child, -sign, power);
        }
        ExprPtr operator()(const EvenPartNode&) const {
            throw std::invalid_argument("argument substitution does not commute with even-part");
        }
        ExprPtr operator()(const OddPartNode&) const {
            throw std::invalid_argument("argument substitution does not commute with odd-part");
        }
        ExprPtr operator()(const ExtractNode&) const {
            throw std::invalid_argument("argument substitution does not commute with extraction");
        }
        ExprPtr operator()(const RefNode&) const {
            throw std::invalid_argument("argument substitution across named references is not supported");
        }
    };
    return std::visit(Visitor{sign, power}, expr->node());
}

std::string to_string(const ExprPtr& expr) {
    struct Visitor {
        std::string operator()(const ThetaNode& n) const {
            const std::string head = n.spec.kind == ThetaKind::Phi ? "phi" : "psi";
            const std::string k = std::to_string(static_cast<std::int64_t>(n.spec.inflation) * n.spec.sign);
            return "(" + head + " " + k + ")";
        }
        std::string operator()(const MonomialNode& n) const { return "(q " + std::to_string(n.exponent) + ")"; }
        std::string operator()(const ScalarNode& n) const { return std::to_string(n.value); }
        std::string operator()(const SumNode& n) const { return nary("+", n.terms); }
        std::string operator()(const ProductNode& n) const { return nary("*", n.factors); }
        std::string operator()(const EvenPartNode& n) const { return "(E " + to_string(n.child) + ")"; }
        std::string operator()(const OddPartNode& n) const { return "(O " + to_string(n.child) + ")"; }
        std::string operator()(const ExtractNode& n) const {
            return "(ap " + to_string(n.child) + " " + std::to_string(n.modulus) + " " +
                   std::to_string(n.residue) + ")";
        }
        std::string operator()(const InflateNode& n) const {
            return "(inflate " + to_string(n.child) + " " + std::to_string(n.factor) + ")";
        }
        std::string operator()(const SignTwistNode& n) const { return "(twist " + to_string(n.child) + ")"; }
        std::string operator()(const RefNode& n) const { return n.label; }

        static std::string nary(const std::string& head, const std::vector<ExprPtr>& items) {
            std::string out = "(" + head;
            for (const auto& item : items)
                out += " " + to_string(item);
            return out + ")";
        }
    };
    return std::visit(Visitor{}, expr->node());
}

} // namespace qdissect
