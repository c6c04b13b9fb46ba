#pragma once

#include "kkblocks/level.hpp"
#include "kkblocks/root_system.hpp"

#include <map>
#include <optional>
#include <vector>

namespace kkb {

// Orientation of the elementary step at loop index m > 0. `lowering` moves to
// lambda - n*beta (the orientation validated by the contravariant-form oracle);
// `reflect_translate` moves to r_beta(lambda) + kappa*m*beta^vee and is kept for
// convention cross-checks. The two agree at m = 0.
enum class StepRule { lowering, reflect_translate };

enum class Parallel { off, on };

struct StarStep {
    Weight beta;
    long long m = 0; // loop index, nonnegative
    long long n = 0; // realized value of the integrality condition, positive
    Weight from;
    Weight to;
};

struct StarChain {
    Weight source;
    Weight target;
    std::vector<StarStep> steps;
};

struct WeightBox {
    std::vector<Rat> lo, hi; // inclusive bounds per fundamental-weight coordinate
    bool contains(const Weight& w) const {
        for (std::size_t i = 0; i < w.rank(); ++i)
            if (w.coords[i] < lo[i] || w.coords[i] > hi[i]) return false;
        return true;
    }
};

struct BlockQuery {
    std::size_t max_chain_len = 8;
    long long max_m = 4;
    std::optional<WeightBox> weight_box;
    bool allow_empty_chain = false; // chains are required to have at least one step by default
    StepRule step_rule = StepRule::lowering;
    Parallel parallel = Parallel::off;
};

// All admissible single steps from lam with loop index <= max_m, ordered by
// (root index, m). Generic level admits only m = 0; for rational kappa < 0 the
// loop index is additionally capped by the bound beyond which the integrality
// condition cannot hold, so the list is complete whenever max_m reaches it.
std::vector<StarStep> star_step_candidates(const RootSystem& rs, const Level& level, const Weight& lam,
                                           long long max_m, StepRule rule = StepRule::lowering);

// Steps y -> lam, enumerated from lam (used for the symmetric closure).
std::vector<StarStep> star_step_candidates_reverse(const RootSystem& rs, const Level& level, const Weight& lam,
                                                   long long max_m, StepRule rule = StepRule::lowering);

// Certificate chain from lam to mu within the query bounds, or nullopt.
std::optional<StarChain> satisfies_star(const RootSystem& rs, const Level& level, const Weight& lam,
                                        const Weight& mu, const BlockQuery& query);

// Independent re-verification of a certificate; returns false on any defect.
// Deliberately recomputes every step from its own formulas rather than reusing
// the search-side candidate generator.
bool verify_star_chain(const RootSystem& rs, const Level& level, const StarChain& chain,
                       StepRule rule = StepRule::lowering, std::string* why = nullptr);

struct LinkMove {
    enum class Kind { weyl, star_forward, star_backward };
    Kind kind = Kind::weyl;
    std::size_t weyl_index = 0; // valid when kind == weyl
    std::optional<StarStep> step;
    Weight from, to;
};

struct LinkedResult {
    bool linked = false;
    bool within_bounds_exhausted = false; // true when the bounded search completed without success
    std::vector<LinkMove> trail;
};

// Membership in the symmetric-transitive closure generated by Weyl moves and
// star steps in either direction, restricted to <= max_chain_len moves.
LinkedResult linked(const RootSystem& rs, const Level& level, const Weight& lam, const Weight& mu,
                    const BlockQuery& query);

struct LinkageClass {
    std::vector<Weight> weights; // sorted
    bool truncated = false;      // frontier nonempty at the bound, or the box cut a candidate
};

LinkageClass linkage_class(const RootSystem& rs, const Level& level, const Weight& lam, const BlockQuery& query);

// mu in W*lam + scale*Q^vee and mu - lam in Q (level-independent as stated).
bool coarse_block_equal(const RootSystem& rs, const Weight& lam, const Weight& mu, const Rat& scale = Rat(1));

// Orbit test for W acting together with translations by p*Q^vee; requires
// kappa = p/q with p, q nonzero coprime and integral weights.
bool rational_block_equal(const RootSystem& rs, long long p, long long q, const Weight& lam, const Weight& mu);

struct SubquotientCandidate {
    Weight mu;       // unshifted candidate weight
    StarChain chain; // certificate on the rho-shifted side
};

// All mu within bounds such that a chain runs from lam + rho to mu + rho,
// with lam the inducing weight. Sorted by mu.
std::vector<SubquotientCandidate> subquotient_candidates(const RootSystem& rs, const Level& level,
                                                         const Weight& lam, const BlockQuery& query);

struct ReachableCell {
    Weight shifted_weight; // chain endpoint on the rho-shifted side
    long long depth = 0;   // accumulated sum of n_i * m_i along the chain
    StarChain chain;
};

// Forward-reachable (weight, loop depth) cells from a shifted start weight,
// with total loop depth <= depth_cap. Used by the oracle comparison; the set
// is finite without a weight box and the enumeration is exhaustive.
std::vector<ReachableCell> star_reachable_cells(const RootSystem& rs, const Level& level, const Weight& shifted_start,
                                                long long depth_cap, long long max_m,
                                                StepRule rule = StepRule::lowering, Parallel parallel = Parallel::off);

} // namespace kkb
