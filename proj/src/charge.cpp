#include "kkblocks/charge.hpp"

namespace kkb {

std::string InvKappaExpr::str(const std::string& var) const {
    if (r == 0) return rat_to_string(s);
    // r/kappa printed as p/k or p/(q*k) in lowest terms
    std::string inv;
    Int num = numerator(r) < 0 ? Int(-numerator(r)) : numerator(r);
    if (denominator(r) == 1) {
        inv = num.str() + "/" + var;
    } else {
        inv = num.str() + "/(" + denominator(r).str() + var + ")";
    }
    std::string sign = r < 0 ? "-" : "";
    if (s == 0) return sign + inv;
    return rat_to_string(s) + (r < 0 ? "-" : "+") + inv;
}

Rat casimir_eigenvalue(const RootSystem& rs, const Weight& lam) {
    return rs.inner(lam, lam) - rs.inner(rs.rho(), rs.rho());
}

InvKappaExpr phi(const RootSystem& rs, const Weight& lam) {
    return InvKappaExpr{casimir_eigenvalue(rs, lam), Rat(0)};
}

Rat phi_value(const RootSystem& rs, const Level& level, const Weight& lam) {
    return phi(rs, lam).eval(level.value());
}

InvKappaExpr conformal_weight(const RootSystem& rs, const Weight& lam) {
    Rat numer = rs.inner(lam, lam + 2 * rs.rho()) / 2;
    return InvKappaExpr{numer, Rat(0)};
}

Rat conformal_weight_value(const RootSystem& rs, const Level& level, const Weight& lam) {
    return conformal_weight(rs, lam).eval(level.value());
}

AffineWeight affine_highest_weight(const RootSystem& rs, const Level& level, const Weight& lam) {
    if (level.is_rational() && level.value() == 0) throw std::invalid_argument("critical level");
    AffineWeight out;
    out.finite_part = lam;
    out.level_coeff = LevelLinear{Rat(-rs.dual_coxeter()), Rat(1)};
    out.delta_coeff = InvKappaExpr{-(rs.inner(lam, lam + 2 * rs.rho()) / 2), Rat(0)};
    return out;
}

Rat l0_eigenvalue_prediction(const RootSystem& rs, const Level& level, const Weight& chi_lam, long long depth) {
    return phi_value(rs, level, chi_lam) + Rat(depth);
}

} // namespace kkb
