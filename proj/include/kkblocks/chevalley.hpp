#pragma once

#include "kkblocks/root_system.hpp"

#include <optional>
#include <vector>

namespace kkb {

// Finite-dimensional simple Lie algebra in a Chevalley basis with integer
// structure constants. Basis layout: [0, r) Cartan elements h_i = alpha_i^vee,
// [r, r+N) root vectors e_gamma for positive roots in root-system order,
// [r+N, r+2N) the opposite root vectors f_gamma.
class ChevalleyAlgebra {
public:
    explicit ChevalleyAlgebra(const RootSystem& rs);

    struct Term {
        std::size_t index;
        long long coeff;
    };

    const RootSystem& root_system() const { return *rs_; }
    std::size_t rank() const { return rank_; }
    std::size_t num_positive() const { return n_pos_; }
    std::size_t dim() const { return rank_ + 2 * n_pos_; }

    bool is_cartan(std::size_t a) const { return a < rank_; }
    bool is_raising(std::size_t a) const { return a >= rank_ && a < rank_ + n_pos_; }
    bool is_lowering(std::size_t a) const { return a >= rank_ + n_pos_; }
    std::size_t e_index(std::size_t pos_root) const { return rank_ + pos_root; }
    std::size_t f_index(std::size_t pos_root) const { return rank_ + n_pos_ + pos_root; }
    std::size_t h_index(std::size_t i) const { return i; }

    // Chevalley anti-involution: e <-> f, h fixed.
    std::size_t transpose(std::size_t a) const {
        if (is_cartan(a)) return a;
        return is_raising(a) ? a + n_pos_ : a - n_pos_;
    }

    // Finite h*-weight of the basis element under the adjoint action.
    const Weight& weight_of(std::size_t a) const { return weights_[a]; }

    const std::vector<Term>& bracket(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }

    // Invariant form normalized so long roots have squared length 2.
    const Rat& form(std::size_t a, std::size_t b) const { return form_[a * dim() + b]; }

    // Dual basis element of basis vector a with respect to the form, as a
    // linear combination of basis vectors (exact rational coefficients).
    const std::vector<std::pair<std::size_t, Rat>>& dual_of(std::size_t a) const { return dual_[a]; }

    std::string name_of(std::size_t a) const;

    // Structure constant N_{x,y} for arbitrary signed roots (0 if x+y is not a root).
    Rat n_constant(const Weight& x, const Weight& y) const;

private:
    std::optional<std::size_t> signed_root_basis_index(const Weight& root) const;

    const RootSystem* rs_;
    std::size_t rank_ = 0, n_pos_ = 0;
    std::vector<Weight> weights_;
    std::vector<std::vector<Term>> table_;
    std::vector<Rat> form_;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> dual_;
    std::vector<std::vector<long long>> n_pos_table_; // N for positive pairs by root index
};

} // namespace kkb
