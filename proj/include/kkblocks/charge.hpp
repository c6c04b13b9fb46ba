#pragma once

#include "kkblocks/kappa_poly.hpp"
#include "kkblocks/level.hpp"
#include "kkblocks/root_system.hpp"

#include <string>

namespace kkb {

// Degree-one polynomial c0 + c1*kappa, kept formal so generic levels print
// symbolically and rational levels evaluate exactly.
struct LevelLinear {
    Rat c0, c1;
    Rat eval(const Rat& kappa) const { return c0 + c1 * kappa; }
    std::string str(const std::string& var = "k") const { return KPoly::linear(c0, c1).str(var); }
};

// s + r/kappa with exact rational r, s.
struct InvKappaExpr {
    Rat r, s;
    Rat eval(const Rat& kappa) const { return s + r / kappa; }
    std::string str(const std::string& var = "k") const;
    friend bool operator==(const InvKappaExpr& a, const InvKappaExpr& b) { return a.r == b.r && a.s == b.s; }
};

struct AffineWeight {
    Weight finite_part;
    LevelLinear level_coeff; // always kappa - h_vee for highest weights built here
    InvKappaExpr delta_coeff;
};

// chi_lambda(Omega) = |lambda|^2 - |rho|^2.
Rat casimir_eigenvalue(const RootSystem& rs, const Weight& lam);

// phi(lambda) = (|lambda|^2 - |rho|^2)/kappa, formal in 1/kappa.
InvKappaExpr phi(const RootSystem& rs, const Weight& lam);
Rat phi_value(const RootSystem& rs, const Level& level, const Weight& lam);

// (lambda, lambda + 2 rho) / (2 kappa): the conformal weight of the highest
// weight vector. This is the convention the direct Sugawara evaluation
// selects; phi at the shifted parameter lambda + rho equals exactly twice it
// and is kept only as the documented alias.
InvKappaExpr conformal_weight(const RootSystem& rs, const Weight& lam);
Rat conformal_weight_value(const RootSystem& rs, const Level& level, const Weight& lam);

AffineWeight affine_highest_weight(const RootSystem& rs, const Level& level, const Weight& lam);

// phi(chi_lam) + depth: the grading prediction for an induced module whose
// inducing character has Harish-Chandra parameter chi_lam.
Rat l0_eigenvalue_prediction(const RootSystem& rs, const Level& level, const Weight& chi_lam, long long depth);

} // namespace kkb
