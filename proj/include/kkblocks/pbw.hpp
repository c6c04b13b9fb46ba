#pragma once

#include "kkblocks/chevalley.hpp"

#include <map>
#include <vector>

namespace kkb {

// One affine generator x_base t^loop of the loop algebra.
struct AffineGen {
    int base = 0; // index into the ChevalleyAlgebra basis
    int loop = 0; // power of t

    friend bool operator==(const AffineGen& a, const AffineGen& b) { return a.base == b.base && a.loop == b.loop; }
    // Canonical PBW order: deeper loop factors first, then basis index.
    friend bool operator<(const AffineGen& a, const AffineGen& b) {
        if (a.loop != b.loop) return a.loop < b.loop;
        return a.base < b.base;
    }
};

// A PBW monomial: nondecreasing word in the lowering alphabet.
using Word = std::vector<AffineGen>;

// Cell label for a graded piece of the induced module: loop depth and the
// displacement from the highest weight, recorded in simple-root coordinates.
struct CellKey {
    long long depth = 0;
    std::vector<long long> eta; // lam_hw - nu in the alpha basis

    friend bool operator==(const CellKey& a, const CellKey& b) { return a.depth == b.depth && a.eta == b.eta; }
    friend bool operator<(const CellKey& a, const CellKey& b) {
        if (a.depth != b.depth) return a.depth < b.depth;
        return a.eta < b.eta;
    }
};

std::string gen_name(const ChevalleyAlgebra& chev, const AffineGen& g);
std::string word_name(const ChevalleyAlgebra& chev, const Word& w);

// [x t^n, y t^m] = [x,y] t^{n+m} + n delta_{n,-m} (x,y) K.
struct AffineBracket {
    std::vector<std::pair<AffineGen, long long>> terms; // finite bracket at loop n+m
    Rat central;                                        // coefficient of K
};

AffineBracket affine_bracket(const ChevalleyAlgebra& chev, const AffineGen& a, const AffineGen& b);

// Materialized bracket table on the loop window |n| <= depth_cap.
class AffineAlgebra {
public:
    AffineAlgebra(const ChevalleyAlgebra& chev, long long depth_cap);

    const ChevalleyAlgebra& finite() const { return *chev_; }
    long long depth_cap() const { return depth_cap_; }
    std::vector<AffineGen> generators() const; // every x_b t^n with |n| <= cap
    AffineBracket bracket(const AffineGen& a, const AffineGen& b) const;
    static long long grading(const AffineGen& g) { return -g.loop; } // deg x t^n = -n

private:
    const ChevalleyAlgebra* chev_;
    long long depth_cap_;
};

// Enumeration of the PBW bases of the graded pieces. The lowering alphabet is
// x t^{-n} for n >= 1 together with the finite lowering vectors at t^0; a cell
// is cut out by total loop depth and exact displacement, so every cell is
// finite-dimensional and the enumeration is exhaustive.
class PBWLattice {
public:
    explicit PBWLattice(const ChevalleyAlgebra& chev) : chev_(&chev) {}

    const ChevalleyAlgebra& algebra() const { return *chev_; }

    // Loop depth of a generator (0 for t^0 factors) and of a word.
    static long long gen_depth(const AffineGen& g) { return g.loop < 0 ? -g.loop : 0; }
    static long long word_depth(const Word& w);

    // Displacement of a word in the alpha basis (integer coordinates).
    std::vector<long long> word_displacement(const Word& w) const;

    Weight eta_weight(const std::vector<long long>& eta) const; // back to fw coordinates
    std::vector<long long> eta_from_weight(const Weight& eta) const;

    const std::vector<Word>& cell_basis(const CellKey& key) const;

    // All nonempty cells with depth <= depth_cap and displacement height
    // (= sum of alpha coordinates) <= height_cap.
    std::vector<CellKey> cells(long long depth_cap, const Rat& height_cap) const;

private:
    const ChevalleyAlgebra* chev_;
    mutable std::map<CellKey, std::vector<Word>> cache_;
};

} // namespace kkb
