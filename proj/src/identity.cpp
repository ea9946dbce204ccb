#include "qdissect/identity.hpp"

namespace qdissect {

namespace {

ExprPtr qp(std::size_t e) { return ex_mono(e); }

ExprPtr prod(std::vector<ExprPtr> fs) { return ex_product(std::move(fs)); }
ExprPtr sum(std::vector<ExprPtr> ts) { return ex_sum(std::move(ts)); }
ExprPtr times(std::int64_t c, std::vector<ExprPtr> fs) {
    std::vector<ExprPtr> all;
    all.push_back(ex_scalar(c));
    for (auto& f : fs)
        all.push_back(std::move(f));
    return ex_product(std::move(all));
}

std::vector<IdentityEntry> build_registry() {
    std::vector<IdentityEntry> reg;

    // phi(q) = phi(q^4) + 2q psi(q^8)
    reg.push_back({"eq05", ex_phi(1),
                   sum({ex_phi(4), times(2, {qp(1), ex_psi(8)})}),
                   "2-dissection of phi"});
    // phi(q)^2 = phi(q^2)^2 + 4q psi(q^4)^2
    reg.push_back({"eq37", prod({ex_phi(1), ex_phi(1)}),
                   sum({prod({ex_phi(2), ex_phi(2)}), times(4, {qp(1), ex_psi(4), ex_psi(4)})}),
                   "2-dissection of phi^2"});
    // psi(q)^2 = psi(q^2) phi(q^4) + 2q psi(q^2) psi(q^8)
    reg.push_back({"eq38", prod({ex_psi(1), ex_psi(1)}),
                   sum({prod({ex_psi(2), ex_phi(4)}), times(2, {qp(1), ex_psi(2), ex_psi(8)})}),
                   "2-dissection of psi^2"});
    // psi(q) psi(q^3) = psi(q^4) phi(q^6) + q phi(q^2) psi(q^12)
    reg.push_back({"eq19", prod({ex_psi(1), ex_psi(3)}),
                   sum({prod({ex_psi(4), ex_phi(6)}), prod({qp(1), ex_phi(2), ex_psi(12)})}),
                   "2-dissection of psi psi3"});
    // phi(q) phi(q^3) = phi(q^4) phi(q^12) + 2q psi(q^2) psi(q^6) + 4q^4 psi(q^8) psi(q^24)
    reg.push_back({"eq20", prod({ex_phi(1), ex_phi(3)}),
                   sum({prod({ex_phi(4), ex_phi(12)}),
                        times(2, {qp(1), ex_psi(2), ex_psi(6)}),
                        times(4, {qp(4), ex_psi(8), ex_psi(24)})}),
                   "4-dissection of phi phi3"});
    // psi(q) psi(q^7) = psi(q^8) phi(q^28) + q psi(q^2) psi(q^14) + q^6 phi(q^4) psi(q^56)
    reg.push_back({"eq35", prod({ex_psi(1), ex_psi(7)}),
                   sum({prod({ex_psi(8), ex_phi(28)}),
                        prod({qp(1), ex_psi(2), ex_psi(14)}),
                        prod({qp(6), ex_phi(4), ex_psi(56)})}),
                   "dissection of psi psi7"});
    // psi(q) psi(q^15) = psi(q^6) psi(q^10) + q phi(q^20) psi(q^24) + q^3 phi(q^12) psi(q^40)
    reg.push_back({"eq03", prod({ex_psi(1), ex_psi(15)}),
                   sum({prod({ex_psi(6), ex_psi(10)}),
                        prod({qp(1), ex_phi(20), ex_psi(24)}),
                        prod({qp(3), ex_phi(12), ex_psi(40)})}),
                   "dissection of psi psi15"});
    // psi(q^3) psi(q^5) = psi(q^8) phi(q^60) + q^3 psi(q^2) psi(q^30) + q^14 phi(q^4) psi(q^120)
    reg.push_back({"eq08", prod({ex_psi(3), ex_psi(5)}),
                   sum({prod({ex_psi(8), ex_phi(60)}),
                        prod({qp(3), ex_psi(2), ex_psi(30)}),
                        prod({qp(14), ex_phi(4), ex_psi(120)})}),
                   "dissection of psi3 psi5"});
    // phi(q) phi(q^15) = phi(-q^6) phi(-q^10) + 2q psi(q^3) psi(q^5)
    reg.push_back({"eq11", prod({ex_phi(1), ex_phi(15)}),
                   sum({prod({ex_phi(-6), ex_phi(-10)}), times(2, {qp(1), ex_psi(3), ex_psi(5)})}),
                   "level-15 product split"});
    // phi(q^3) phi(q^5) = phi(-q^2) phi(-q^30) + 2q^2 psi(q) psi(q^15)
    reg.push_back({"eq12", prod({ex_phi(3), ex_phi(5)}),
                   sum({prod({ex_phi(-2), ex_phi(-30)}), times(2, {qp(2), ex_psi(1), ex_psi(15)})}),
                   "level-15 product split"});
    // 2 psi(q^6) psi(q^10) = psi(q) psi(q^15) + psi(-q) psi(-q^15)
    reg.push_back({"eq13", times(2, {ex_psi(6), ex_psi(10)}),
                   sum({prod({ex_psi(1), ex_psi(15)}), prod({ex_psi(-1), ex_psi(-15)})}),
                   "even part of psi psi15"});
    // 2q^3 psi(q^2) psi(q^30) = psi(q^3) psi(q^5) - psi(-q^3) psi(-q^5)
    reg.push_back({"eq10", times(2, {qp(3), ex_psi(2), ex_psi(30)}),
                   sum({prod({ex_psi(3), ex_psi(5)}), times(-1, {ex_psi(-3), ex_psi(-5)})}),
                   "odd part of psi3 psi5"});
    // phi(q) phi(q^15) - phi(q^6) phi(q^10) + 4q^4 psi(q^2) psi(q^30)
    //   - 4q^4 psi(q^12) psi(q^20) = 2q psi(q^3) psi(q^5)
    reg.push_back({"aux-sec6-i",
                   sum({prod({ex_phi(1), ex_phi(15)}),
                        times(-1, {ex_phi(6), ex_phi(10)}),
                        times(4, {qp(4), ex_psi(2), ex_psi(30)}),
                        times(-4, {qp(4), ex_psi(12), ex_psi(20)})}),
                   times(2, {qp(1), ex_psi(3), ex_psi(5)}),
                   "auxiliary four-term identity (i)"});
    // -phi(q^2) phi(q^30) + phi(q^3) phi(q^5) + 4q^2 psi(q^6) psi(q^10)
    //   - 4q^8 psi(q^4) psi(q^60) = 2q^2 psi(q) psi(q^15)
    reg.push_back({"aux-sec6-ii",
                   sum({times(-1, {ex_phi(2), ex_phi(30)}),
                        prod({ex_phi(3), ex_phi(5)}),
                        times(4, {qp(2), ex_psi(6), ex_psi(10)}),
                        times(-4, {qp(8), ex_psi(4), ex_psi(60)})}),
                   times(2, {qp(2), ex_psi(1), ex_psi(15)}),
                   "auxiliary four-term identity (ii)"});
    return reg;
}

} // namespace

const std::vector<IdentityEntry>& builtin_identities() {
    static const std::vector<IdentityEntry> registry = build_registry();
    return registry;
}

const IdentityEntry* find_identity(std::string_view id) {
    for (const IdentityEntry& entry : builtin_identities())
        if (entry.id == id)
            return &entry;
    return nullptr;
}

IdentityReport verify_identity(const IdentityEntry& entry, std::size_t order,
                               std::optional<ArgSubstitution> substitution) {
    IdentityReport report{entry.id, order, substitution, false, std::nullopt};
    ExprPtr lhs = entry.lhs;
    ExprPtr rhs = entry.rhs;
    if (substitution) {
        lhs = substitute_arg(lhs, substitution->sign, substitution->power);
        rhs = substitute_arg(rhs, substitution->sign, substitution->power);
    }
    const TruncatedSeries left = eval_expr(lhs, order);
    const TruncatedSeries right = eval_expr(rhs, order);
    report.mismatch = first_mismatch(left, right, order);
    report.pass = !report.mismatch.has_value();
    return report;
}

} // namespace qdissect
