#pragma once

#include "kkblocks/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kkb {

// Integer matrix acting on fundamental-weight coordinates.
struct WeylElement {
    std::vector<std::vector<long long>> mat; // mat[i][j]: contribution of coord j to coord i

    Weight apply(const Weight& w) const {
        Weight out(w.rank());
        for (std::size_t i = 0; i < mat.size(); ++i) {
            Rat acc = 0;
            for (std::size_t j = 0; j < mat[i].size(); ++j)
                if (mat[i][j] != 0) acc += Rat(mat[i][j]) * w.coords[j];
            out.coords[i] = acc;
        }
        return out;
    }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.mat == b.mat; }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.mat < b.mat; }
};

struct RootSystemLimits {
    std::size_t max_rank = 6;
    std::size_t max_weyl_order = 100000;
};

// Exact model of a finite irreducible root system, with the invariant form
// normalized so that long roots have squared length 2.
class RootSystem {
public:
    static RootSystem build(char series, std::size_t rank, RootSystemLimits limits = {});
    static RootSystem build(const std::string& code, RootSystemLimits limits = {}); // "A1", "B2", ...

    char series() const { return series_; }
    std::size_t rank() const { return rank_; }
    std::string code() const { return std::string(1, series_) + std::to_string(rank_); }

    // cartan[i][j] = <alpha_j, alpha_i^vee>; column j holds the coordinates of alpha_j.
    const std::vector<std::vector<long long>>& cartan_matrix() const { return cartan_; }
    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Weight>& roots() const { return roots_; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const std::vector<std::vector<Rat>>& form_gram() const { return simple_gram_; }
    const Weight& rho() const { return rho_; }
    long long dual_coxeter() const { return dual_coxeter_; }
    const Weight& highest_root() const { return highest_root_; }
    const std::vector<WeylElement>& weyl_elements() const { return weyl_; }

    // Invariant bilinear form on h*, evaluated in fundamental-weight coordinates.
    Rat inner(const Weight& x, const Weight& y) const;
    Rat norm_sq(const Weight& x) const { return inner(x, x); }

    bool is_root(const Weight& x) const;
    std::optional<std::size_t> root_index(const Weight& x) const; // index into roots()

    Weight coroot(const Weight& beta) const;                     // 2*beta/(beta,beta); beta must be a root
    Weight reflect(const Weight& lam, const Weight& beta) const; // lam - (lam, beta^vee)*beta

    // (x, alpha_i^vee) is just coordinate i in this basis; kept for readability.
    const Rat& pair_simple_coroot(const Weight& x, std::size_t i) const { return x.coords[i]; }

    bool in_root_lattice(const Weight& x) const;
    // Membership in s * Q^vee; the default scale 1 is the plain coroot lattice.
    bool in_coroot_lattice(const Weight& x, const Rat& scale = Rat(1)) const;
    bool is_integral(const Weight& x) const;

    std::vector<Rat> simple_root_coords(const Weight& x) const;   // x in the alpha basis
    std::vector<Rat> simple_coroot_coords(const Weight& x) const; // x in the alpha^vee basis
    Rat height(const Weight& x) const;                            // sum of alpha-coordinates

    std::vector<Weight> weyl_orbit(const Weight& lam) const; // sorted, deduplicated

    Weight weight_from_coords(std::vector<Rat> coords) const;
    Weight zero_weight() const { return Weight(rank_); }
    Weight fundamental_weight(std::size_t i) const;

    // Squared length of each simple root (2 for long roots).
    const std::vector<Rat>& simple_norms() const { return simple_norm_sq_; }

private:
    std::vector<Rat> simple_root_coords_impl(const Weight& x) const;

    char series_ = 'A';
    std::size_t rank_ = 0;
    std::vector<std::vector<long long>> cartan_;
    std::vector<Weight> simple_roots_;
    std::vector<Weight> roots_;
    std::vector<Weight> positive_roots_;
    std::vector<std::vector<Rat>> simple_gram_;  // (alpha_i, alpha_j)
    std::vector<std::vector<Rat>> weight_gram_;  // Gram of the fundamental-weight basis
    std::vector<std::vector<Rat>> alpha_coords_; // rows: expansion of e_i (coord basis) in alpha basis
    std::vector<Rat> simple_norm_sq_;
    Weight rho_;
    Weight highest_root_;
    long long dual_coxeter_ = 0;
    std::vector<WeylElement> weyl_;
};

} // namespace kkb
