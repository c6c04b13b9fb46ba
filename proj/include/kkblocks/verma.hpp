#pragma once

#include "kkblocks/linalg.hpp"
#include "kkblocks/pbw.hpp"

#include <map>
#include <stdexcept>

namespace kkb {

// Truncated Verma module over the affine algebra with highest weight lam_hw
// and K acting by kappa - h_vee. Scalar S is Rat for a rational level or KRat
// for the generic one; all arithmetic is exact either way.
//
// States are finite linear combinations of canonical PBW words; the action of
// any affine generator is computed by straightening against the bracket
// relations [x t^n, y t^m] = [x,y] t^{n+m} + n delta_{n,-m} (x,y) K.
template <class S>
class VermaOracle {
public:
    using Traits = scalar_traits<S>;
    using State = std::map<Word, S>;

    VermaOracle(const ChevalleyAlgebra& chev, PBWLattice& lattice, S kappa, Weight lam_hw)
        : chev_(&chev), lattice_(&lattice), kappa_(std::move(kappa)), lam_(std::move(lam_hw)) {
        k_scalar_ = kappa_ - Traits::from_rat(Rat(chev.root_system().dual_coxeter()));
        half_inv_kappa_ = Traits::one() / (kappa_ + kappa_);
    }

    const ChevalleyAlgebra& algebra() const { return *chev_; }
    PBWLattice& lattice() const { return *lattice_; }
    const Weight& highest_weight() const { return lam_; }

    bool is_lowering_gen(const AffineGen& g) const {
        return g.loop < 0 || (g.loop == 0 && chev_->is_lowering(static_cast<std::size_t>(g.base)));
    }

    // Normal form of g acting on the canonical word w (applied to the highest
    // weight vector). Memoized; recursion terminates because every recursive
    // call shortens the total word except the final canonical prepend.
    const State& act(const AffineGen& g, const Word& w) {
        auto key = std::make_pair(g, w);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        State out = act_impl(g, w);
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    State act_state(const AffineGen& g, const State& state) {
        State out;
        for (const auto& [w, c] : state) {
            for (const auto& [v, c2] : act(g, w)) add_term(out, v, c * c2);
        }
        prune(out);
        return out;
    }

    // Raising side of the truncation: the finite raising vectors at t^0 and
    // every basis element at t^n, 1 <= n <= depth.
    std::vector<AffineGen> raising_generators(long long depth) const {
        std::vector<AffineGen> out;
        for (std::size_t k = 0; k < chev_->num_positive(); ++k)
            out.push_back({static_cast<int>(chev_->e_index(k)), 0});
        for (long long n = 1; n <= depth; ++n)
            for (std::size_t b = 0; b < chev_->dim(); ++b)
                out.push_back({static_cast<int>(b), static_cast<int>(n)});
        return out;
    }

    CellKey target_cell(const CellKey& key, const AffineGen& g) const {
        CellKey out;
        out.depth = key.depth - (g.loop > 0 ? g.loop : 0);
        Weight disp = chev_->weight_of(static_cast<std::size_t>(g.base));
        auto d = lattice_->eta_from_weight(disp);
        out.eta = key.eta;
        for (std::size_t j = 0; j < out.eta.size(); ++j) out.eta[j] -= d[j];
        return out;
    }

    std::vector<S> coordinates(const State& state, const CellKey& key) const {
        const auto& basis = lattice_->cell_basis(key);
        std::map<Word, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
        std::vector<S> out(basis.size(), Traits::zero());
        for (const auto& [w, c] : state) {
            auto it = index.find(w);
            if (it == index.end()) throw std::logic_error("state leaves its graded cell");
            out[it->second] = c;
        }
        return out;
    }

    // Stacked raising-operator matrix on a cell: one block of rows per raising
    // generator, mapping the cell basis into the target cell basis.
    Matrix<S> raising_matrix(const CellKey& key) {
        const auto& basis = lattice_->cell_basis(key);
        auto gens = raising_generators(key.depth);
        std::vector<std::pair<AffineGen, CellKey>> blocks;
        std::size_t total_rows = 0;
        for (const auto& g : gens) {
            CellKey target = target_cell(key, g);
            if (target.depth < 0) continue;
            std::size_t rows = lattice_->cell_basis(target).size();
            if (rows == 0) continue;
            blocks.emplace_back(g, target);
            total_rows += rows;
        }
        Matrix<S> out(total_rows, basis.size());
        std::size_t row0 = 0;
        for (const auto& [g, target] : blocks) {
            std::size_t rows = lattice_->cell_basis(target).size();
            for (std::size_t j = 0; j < basis.size(); ++j) {
                auto img = coordinates(act(g, basis[j]), target);
                for (std::size_t i = 0; i < rows; ++i) out.at(row0 + i, j) = img[i];
            }
            row0 += rows;
        }
        return out;
    }

    // Kernel of the stacked raising matrix: the singular vectors of the cell.
    std::vector<std::vector<S>> singular_kernel(const CellKey& key) {
        const auto& basis = lattice_->cell_basis(key);
        if (basis.empty()) return {};
        return kernel_basis(raising_matrix(key));
    }

    // Every reported kernel vector must die under every raising generator.
    bool check_singular_vector(const CellKey& key, const std::vector<S>& coeffs) {
        const auto& basis = lattice_->cell_basis(key);
        State state;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!Traits::is_zero(coeffs[i])) state[basis[i]] = coeffs[i];
        for (const auto& g : raising_generators(key.depth))
            if (!act_state(g, state).empty()) return false;
        return true;
    }

    // Contravariant form on a cell: <u v, u' v> via the anti-involution
    // x t^n -> x^T t^{-n} and projection onto the highest weight line.
    Matrix<S> shapovalov_matrix(const CellKey& key) {
        const auto& basis = lattice_->cell_basis(key);
        Matrix<S> out(basis.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                State cur;
                cur[basis[j]] = Traits::one();
                for (const auto& u : basis[i]) {
                    AffineGen omega{static_cast<int>(chev_->transpose(static_cast<std::size_t>(u.base))), -u.loop};
                    cur = act_state(omega, cur);
                    if (cur.empty()) break;
                }
                auto it = cur.find(Word{});
                out.at(i, j) = it == cur.end() ? Traits::zero() : it->second;
            }
        }
        return out;
    }

    // L_0 by the normally ordered quadratic expression, truncated to the loop
    // range that can act on the state; exact on every graded piece.
    State sugawara_l0_apply(const State& state) {
        long long max_depth = 0;
        for (const auto& [w, c] : state) max_depth = std::max(max_depth, PBWLattice::word_depth(w));
        State total;
        for (std::size_t a = 0; a < chev_->dim(); ++a) {
            State zero_mode;
            for (const auto& [b, c] : chev_->dual_of(a)) {
                AffineGen g{static_cast<int>(b), 0};
                for (const auto& [v, c2] : act_state(g, state)) add_term(zero_mode, v, Traits::from_rat(c) * c2);
            }
            prune(zero_mode);
            for (const auto& [v, c2] : act_state({static_cast<int>(a), 0}, zero_mode)) add_term(total, v, c2);
            for (long long j = 1; j <= max_depth; ++j) {
                State up;
                for (const auto& [b, c] : chev_->dual_of(a)) {
                    AffineGen g{static_cast<int>(b), static_cast<int>(j)};
                    for (const auto& [v, c2] : act_state(g, state)) add_term(up, v, Traits::from_rat(c) * c2);
                }
                prune(up);
                if (up.empty()) continue;
                AffineGen g{static_cast<int>(a), static_cast<int>(-j)};
                for (const auto& [v, c2] : act_state(g, up)) {
                    add_term(total, v, c2);
                    add_term(total, v, c2); // the j and -j summands contribute equally
                }
            }
        }
        prune(total);
        State scaled;
        for (const auto& [w, c] : total) scaled[w] = c * half_inv_kappa_;
        return scaled;
    }

    // Eigenvalue of L_0 on a state; throws if the state is not an eigenvector.
    S sugawara_l0_eigenvalue(const State& state) {
        if (state.empty()) throw std::invalid_argument("L0 eigenvalue of the zero vector");
        State image = sugawara_l0_apply(state);
        auto it = state.begin();
        S scalar = Traits::zero();
        if (auto jt = image.find(it->first); jt != image.end()) scalar = jt->second / it->second;
        // exact check of proportionality
        for (const auto& [w, c] : state) {
            auto jt = image.find(w);
            S got = jt == image.end() ? Traits::zero() : jt->second;
            if (!(got == scalar * c)) throw std::logic_error("state is not an L0 eigenvector");
        }
        for (const auto& [w, c] : image)
            if (state.find(w) == state.end() && !Traits::is_zero(c))
                throw std::logic_error("state is not an L0 eigenvector");
        return scalar;
    }

    S sugawara_l0_on_cell(const CellKey& key) {
        const auto& basis = lattice_->cell_basis(key);
        if (basis.empty()) throw std::invalid_argument("empty cell");
        State state;
        state[basis.front()] = Traits::one();
        return sugawara_l0_eigenvalue(state);
    }

    State highest_weight_state() const {
        State s;
        s[Word{}] = Traits::one();
        return s;
    }

    const S& kappa() const { return kappa_; }
    const S& central_scalar() const { return k_scalar_; }

private:
    static void add_term(State& state, const Word& w, S value) {
        auto [it, inserted] = state.try_emplace(w, std::move(value));
        if (!inserted) it->second = it->second + value;
    }
    static void prune(State& state) {
        for (auto it = state.begin(); it != state.end();) {
            if (Traits::is_zero(it->second))
                it = state.erase(it);
            else
                ++it;
        }
    }

    State act_impl(const AffineGen& g, const Word& w) {
        State out;
        if (w.empty()) {
            if (is_lowering_gen(g)) {
                out[Word{g}] = Traits::one();
            } else if (g.loop == 0 && chev_->is_cartan(static_cast<std::size_t>(g.base))) {
                Rat c = lam_.coords[static_cast<std::size_t>(g.base)];
                if (c != 0) out[Word{}] = Traits::from_rat(c);
            }
            return out; // raising generators annihilate the highest weight vector
        }
        const AffineGen w1 = w.front();
        if (is_lowering_gen(g) && !(w1 < g)) {
            Word nw;
            nw.reserve(w.size() + 1);
            nw.push_back(g);
            nw.insert(nw.end(), w.begin(), w.end());
            out[std::move(nw)] = Traits::one();
            return out;
        }
        Word rest(w.begin() + 1, w.end());
        // g w1 = w1 g + [g, w1]
        for (const auto& [u, c] : act(g, rest)) {
            for (const auto& [v, c2] : act(w1, u)) add_term(out, v, c * c2);
        }
        AffineBracket br = affine_bracket(*chev_, g, w1);
        for (const auto& [nb, coeff] : br.terms) {
            for (const auto& [v, c2] : act(nb, rest)) add_term(out, v, Traits::from_rat(Rat(coeff)) * c2);
        }
        if (br.central != 0) add_term(out, rest, Traits::from_rat(br.central) * k_scalar_);
        prune(out);
        return out;
    }

    const ChevalleyAlgebra* chev_;
    PBWLattice* lattice_;
    S kappa_;
    S k_scalar_;
    S half_inv_kappa_;
    Weight lam_;
    std::map<std::pair<AffineGen, Word>, State> memo_;
};

} // namespace kkb
