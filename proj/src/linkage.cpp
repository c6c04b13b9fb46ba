#include "kkblocks/linkage.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace kkb {

namespace {

// Forward step from `from` along (beta, m), or nullopt when the integrality
// condition fails. Both step rules share the admissibility test.
std::optional<StarStep> try_make_step(const RootSystem& rs, const Level& level, const Weight& from,
                                      const Weight& beta, long long m, StepRule rule) {
    Rat beta_norm = rs.norm_sq(beta);
    Rat pairing = 2 * rs.inner(from, beta) / beta_norm; // (from, beta^vee)
    auto n = level.positive_integer_value(pairing, Rat(2 * m) / beta_norm);
    if (!n) return std::nullopt;
    Rat n_rat(*n);
    StarStep step;
    step.beta = beta;
    step.m = m;
    step.n = to_long_checked(*n);
    step.from = from;
    if (rule == StepRule::lowering) {
        step.to = from - n_rat * beta;
    } else {
        Weight reflected = from - pairing * beta;
        step.to = reflected;
        if (m != 0) {
            // kappa * m * beta^vee; m > 0 is only admissible at rational level
            Rat scale = level.value() * Rat(m) * Rat(2) / beta_norm;
            step.to = reflected + scale * beta;
        }
    }
    return step;
}

long long effective_max_m(const RootSystem& rs, const Level& level, const Weight& lam, const Weight& beta,
                          long long max_m) {
    if (level.is_generic()) return 0;
    const Rat& kappa = level.value();
    if (kappa > 0) return max_m;
    // kappa < 0: the condition (lam, beta^vee) + 2*kappa*m/|beta|^2 >= 1 caps m.
    Rat beta_norm = rs.norm_sq(beta);
    Rat pairing = 2 * rs.inner(lam, beta) / beta_norm;
    Rat bound = (pairing - 1) * beta_norm / (2 * (-kappa));
    if (bound < 0) return -1;
    Int cap = rat_floor(bound);
    if (cap > max_m) return max_m;
    return to_long_checked(cap);
}

} // namespace

std::vector<StarStep> star_step_candidates(const RootSystem& rs, const Level& level, const Weight& lam,
                                           long long max_m, StepRule rule) {
    if (max_m < 0) throw std::invalid_argument("max_m must be nonnegative");
    std::vector<StarStep> out;
    const auto& roots = rs.roots();
    const std::size_t n_pos = rs.positive_roots().size();
    for (std::size_t bi = 0; bi < roots.size(); ++bi) {
        const Weight& beta = roots[bi];
        long long m_cap = std::min(max_m, level.is_generic() ? 0LL : max_m);
        long long complete_cap = effective_max_m(rs, level, lam, beta, max_m);
        m_cap = std::min(m_cap, complete_cap);
        for (long long m = 0; m <= m_cap; ++m) {
            if (m == 0 && bi >= n_pos) continue; // m = 0 steps need a positive root
            if (auto step = try_make_step(rs, level, lam, beta, m, rule)) out.push_back(std::move(*step));
        }
    }
    return out;
}

std::vector<StarStep> star_step_candidates_reverse(const RootSystem& rs, const Level& level, const Weight& lam,
                                                   long long max_m, StepRule rule) {
    if (max_m < 0) throw std::invalid_argument("max_m must be nonnegative");
    std::vector<StarStep> out;
    const auto& roots = rs.roots();
    const std::size_t n_pos = rs.positive_roots().size();
    for (std::size_t bi = 0; bi < roots.size(); ++bi) {
        const Weight& beta = roots[bi];
        for (long long m = 0; m <= (level.is_generic() ? 0LL : max_m); ++m) {
            if (m == 0 && bi >= n_pos) continue;
            Weight source;
            Rat beta_norm = rs.norm_sq(beta);
            if (rule == StepRule::lowering) {
                // y = lam + n*beta with n = -(lam, beta^vee) - 2*kappa*m/|beta|^2
                auto n = level.positive_integer_value(-(2 * rs.inner(lam, beta) / beta_norm),
                                                      -(Rat(2 * m) / beta_norm));
                if (!n) continue;
                source = lam + Rat(*n) * beta;
            } else {
                // the reflect-translate step map is an involution
                Weight reflected = lam - (2 * rs.inner(lam, beta) / beta_norm) * beta;
                source = reflected;
                if (m != 0) source = reflected + (level.value() * Rat(m) * Rat(2) / beta_norm) * beta;
            }
            auto step = try_make_step(rs, level, source, beta, m, rule);
            if (step && step->to == lam) out.push_back(std::move(*step));
        }
    }
    return out;
}

namespace {

struct SearchNode {
    Weight w;
    long long parent = -1; // index into the node pool
    std::optional<StarStep> step;
};

StarChain chain_from_pool(const std::vector<SearchNode>& pool, long long idx, const Weight& source) {
    StarChain chain;
    chain.source = source;
    std::vector<StarStep> steps;
    for (long long cur = idx; pool[cur].parent >= 0; cur = pool[cur].parent) steps.push_back(*pool[cur].step);
    std::reverse(steps.begin(), steps.end());
    chain.steps = std::move(steps);
    chain.target = chain.steps.empty() ? source : chain.steps.back().to;
    return chain;
}

} // namespace

std::optional<StarChain> satisfies_star(const RootSystem& rs, const Level& level, const Weight& lam,
                                        const Weight& mu, const BlockQuery& query) {
    if (lam == mu && query.allow_empty_chain) {
        StarChain chain;
        chain.source = lam;
        chain.target = lam;
        return chain;
    }
    // Necessary condition: mu - lam lies in the root lattice.
    if (!rs.in_root_lattice(mu - lam)) return std::nullopt;
    if (level.is_generic() && lam != mu) {
        // Only Weyl translates of lam are reachable at generic level.
        bool candidate = false;
        for (const auto& w : rs.weyl_elements())
            if (w.apply(lam) == mu) {
                candidate = true;
                break;
            }
        if (!candidate) return std::nullopt;
    }

    std::vector<SearchNode> pool;
    pool.push_back({lam, -1, std::nullopt});
    std::set<Weight> visited{lam};
    std::vector<long long> layer{0};
    for (std::size_t depth = 1; depth <= query.max_chain_len && !layer.empty(); ++depth) {
        std::vector<long long> next;
        for (long long node_idx : layer) {
            for (auto& step : star_step_candidates(rs, level, pool[node_idx].w, query.max_m, query.step_rule)) {
                if (query.weight_box && !query.weight_box->contains(step.to)) continue;
                if (!visited.insert(step.to).second) continue;
                pool.push_back({step.to, node_idx, step});
                if (step.to == mu) return chain_from_pool(pool, static_cast<long long>(pool.size()) - 1, lam);
                next.push_back(static_cast<long long>(pool.size()) - 1);
            }
        }
        layer = std::move(next);
    }
    return std::nullopt;
}

bool verify_star_chain(const RootSystem& rs, const Level& level, const StarChain& chain, StepRule rule,
                       std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    Weight current = chain.source;
    const std::size_t n_pos = rs.positive_roots().size();
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const StarStep& step = chain.steps[i];
        if (step.from != current) return fail("step " + std::to_string(i) + " does not compose");
        auto idx = rs.root_index(step.beta);
        if (!idx) return fail("step root is not a root");
        if (step.m < 0) return fail("negative loop index");
        if (step.m == 0 && *idx >= n_pos) return fail("m = 0 step with a non-positive root");
        if (level.is_generic() && step.m != 0) return fail("m > 0 step at generic level");

        Rat beta_norm = rs.norm_sq(step.beta);
        Rat pairing = 2 * rs.inner(current, step.beta) / beta_norm;
        Rat shift = Rat(2 * step.m) / beta_norm;
        // realized integer: recomputed, must be positive and match the certificate
        if (level.is_generic()) {
            if (shift != 0) return fail("generic level with loop shift");
            if (!is_positive_integer(pairing) || Rat(step.n) != pairing) return fail("integer condition fails");
        } else {
            Rat value = pairing + shift * level.value();
            if (!is_positive_integer(value) || Rat(step.n) != value) return fail("integer condition fails");
        }
        Weight expected;
        if (rule == StepRule::lowering) {
            expected = current - Rat(step.n) * step.beta;
        } else {
            expected = current - pairing * step.beta;
            if (step.m != 0)
                expected = expected + (level.value() * Rat(step.m) * Rat(2) / beta_norm) * step.beta;
        }
        if (expected != step.to) return fail("step target does not match the formula");
        if (!rs.in_root_lattice(step.to - step.from)) return fail("step leaves the root lattice coset");
        current = step.to;
    }
    if (current != chain.target) return fail("chain target mismatch");
    if (chain.steps.empty() && chain.source != chain.target) return fail("empty chain with distinct endpoints");
    return true;
}

namespace {

struct MoveNode {
    Weight w;
    long long parent = -1;
    std::optional<LinkMove> move;
};

// Expansion order: Weyl moves by element index, then forward steps, then
// backward steps; this fixes the certificate returned for ties.
std::vector<LinkMove> moves_from(const RootSystem& rs, const Level& level, const Weight& x,
                                 const BlockQuery& query) {
    std::vector<LinkMove> out;
    for (std::size_t wi = 0; wi < rs.weyl_elements().size(); ++wi) {
        Weight target = rs.weyl_elements()[wi].apply(x);
        if (target == x) continue;
        LinkMove mv;
        mv.kind = LinkMove::Kind::weyl;
        mv.weyl_index = wi;
        mv.from = x;
        mv.to = target;
        out.push_back(std::move(mv));
    }
    for (auto& step : star_step_candidates(rs, level, x, query.max_m, query.step_rule)) {
        LinkMove mv;
        mv.kind = LinkMove::Kind::star_forward;
        mv.from = x;
        mv.to = step.to;
        mv.step = std::move(step);
        out.push_back(std::move(mv));
    }
    for (auto& step : star_step_candidates_reverse(rs, level, x, query.max_m, query.step_rule)) {
        LinkMove mv;
        mv.kind = LinkMove::Kind::star_backward;
        mv.from = x;
        mv.to = step.from; // moving against the step direction
        mv.step = std::move(step);
        out.push_back(std::move(mv));
    }
    return out;
}

// Layered closure over link moves. Visitor sees each newly discovered node;
// returning true stops the search (used for target queries).
template <class Visit>
void move_bfs(const RootSystem& rs, const Level& level, const Weight& start, const BlockQuery& query,
              std::vector<MoveNode>& pool, bool* truncated, Visit visit) {
    pool.clear();
    pool.push_back({start, -1, std::nullopt});
    std::set<Weight> visited{start};
    std::vector<long long> layer{0};
    bool cut = false;
    for (std::size_t depth = 1; depth <= query.max_chain_len && !layer.empty(); ++depth) {
        std::vector<long long> next;
        std::vector<std::vector<LinkMove>> expansions(layer.size());
        if (query.parallel == Parallel::on) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (std::size_t i = 0; i < layer.size(); ++i)
                expansions[i] = moves_from(rs, level, pool[layer[i]].w, query);
        } else {
            for (std::size_t i = 0; i < layer.size(); ++i)
                expansions[i] = moves_from(rs, level, pool[layer[i]].w, query);
        }
        for (std::size_t i = 0; i < layer.size(); ++i) {
            for (auto& mv : expansions[i]) {
                if (query.weight_box && !query.weight_box->contains(mv.to)) {
                    cut = true;
                    continue;
                }
                if (!visited.insert(mv.to).second) continue;
                pool.push_back({mv.to, layer[i], mv});
                if (visit(static_cast<long long>(pool.size()) - 1)) {
                    if (truncated) *truncated = cut;
                    return;
                }
                next.push_back(static_cast<long long>(pool.size()) - 1);
            }
        }
        layer = std::move(next);
    }
    // Probe whether the final frontier would still grow.
    if (!cut)
        for (long long node_idx : layer) {
            for (auto& mv : moves_from(rs, level, pool[node_idx].w, query)) {
                if (query.weight_box && !query.weight_box->contains(mv.to)) {
                    cut = true;
                    break;
                }
                if (!visited.count(mv.to)) {
                    cut = true;
                    break;
                }
            }
            if (cut) break;
        }
    if (truncated) *truncated = cut;
}

} // namespace

LinkedResult linked(const RootSystem& rs, const Level& level, const Weight& lam, const Weight& mu,
                    const BlockQuery& query) {
    LinkedResult result;
    if (lam == mu) { // reflexivity
        result.linked = true;
        return result;
    }
    std::vector<MoveNode> pool;
    long long found = -1;
    move_bfs(rs, level, lam, query, pool, nullptr, [&](long long idx) {
        if (pool[idx].w == mu) {
            found = idx;
            return true;
        }
        return false;
    });
    if (found < 0) {
        result.within_bounds_exhausted = true;
        return result;
    }
    result.linked = true;
    for (long long cur = found; pool[cur].parent >= 0; cur = pool[cur].parent) result.trail.push_back(*pool[cur].move);
    std::reverse(result.trail.begin(), result.trail.end());
    return result;
}

LinkageClass linkage_class(const RootSystem& rs, const Level& level, const Weight& lam, const BlockQuery& query) {
    LinkageClass out;
    std::vector<MoveNode> pool;
    move_bfs(rs, level, lam, query, pool, &out.truncated, [](long long) { return false; });
    for (const auto& node : pool) out.weights.push_back(node.w);
    std::sort(out.weights.begin(), out.weights.end());
    return out;
}

bool coarse_block_equal(const RootSystem& rs, const Weight& lam, const Weight& mu, const Rat& scale) {
    if (!rs.in_root_lattice(mu - lam)) return false;
    for (const auto& w : rs.weyl_elements())
        if (rs.in_coroot_lattice(mu - w.apply(lam), scale)) return true;
    return false;
}

bool rational_block_equal(const RootSystem& rs, long long p, long long q, const Weight& lam, const Weight& mu) {
    if (p == 0 || q == 0) throw std::invalid_argument("kappa = p/q needs nonzero p and q");
    if (boost::multiprecision::gcd(Int(p < 0 ? -p : p), Int(q < 0 ? -q : q)) != 1)
        throw std::invalid_argument("p and q must be coprime");
    if (!rs.is_integral(lam) || !rs.is_integral(mu))
        throw std::invalid_argument("rational block relation is defined on integral weights");
    for (const auto& w : rs.weyl_elements())
        if (rs.in_coroot_lattice(mu - w.apply(lam), Rat(p))) return true;
    return false;
}

std::vector<SubquotientCandidate> subquotient_candidates(const RootSystem& rs, const Level& level,
                                                         const Weight& lam, const BlockQuery& query) {
    Weight shifted = lam + rs.rho();
    std::vector<SearchNode> pool;
    pool.push_back({shifted, -1, std::nullopt});
    std::set<Weight> visited{shifted};
    std::vector<long long> layer{0};
    std::vector<SubquotientCandidate> out;
    if (query.allow_empty_chain) {
        StarChain chain;
        chain.source = shifted;
        chain.target = shifted;
        out.push_back({lam, std::move(chain)});
    }
    for (std::size_t depth = 1; depth <= query.max_chain_len && !layer.empty(); ++depth) {
        std::vector<long long> next;
        for (long long node_idx : layer) {
            for (auto& step : star_step_candidates(rs, level, pool[node_idx].w, query.max_m, query.step_rule)) {
                if (query.weight_box && !query.weight_box->contains(step.to)) continue;
                if (!visited.insert(step.to).second) continue;
                pool.push_back({step.to, node_idx, step});
                long long idx = static_cast<long long>(pool.size()) - 1;
                out.push_back({step.to - rs.rho(), chain_from_pool(pool, idx, shifted)});
                next.push_back(idx);
            }
        }
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(),
              [](const SubquotientCandidate& a, const SubquotientCandidate& b) { return a.mu < b.mu; });
    return out;
}

std::vector<ReachableCell> star_reachable_cells(const RootSystem& rs, const Level& level, const Weight& shifted_start,
                                                long long depth_cap, long long max_m, StepRule rule,
                                                Parallel parallel) {
    if (depth_cap < 0) throw std::invalid_argument("depth_cap must be nonnegative");
    struct CellNode {
        Weight w;
        long long depth;
        long long parent;
        std::optional<StarStep> step;
    };
    std::vector<CellNode> pool;
    pool.push_back({shifted_start, 0, -1, std::nullopt});
    std::map<std::pair<Weight, long long>, long long> visited;
    visited[{shifted_start, 0}] = 0;
    std::vector<long long> layer{0};
    // The reachable state space is finite: m = 0 steps strictly lower the
    // height inside a Weyl orbit and at most depth_cap loop steps can occur.
    const std::size_t safety_layers = 100000;
    for (std::size_t iter = 0; !layer.empty(); ++iter) {
        if (iter > safety_layers) throw std::logic_error("star_reachable_cells failed to terminate");
        std::vector<long long> next;
        std::vector<std::vector<StarStep>> expansions(layer.size());
        if (parallel == Parallel::on) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (std::size_t i = 0; i < layer.size(); ++i)
                expansions[i] = star_step_candidates(rs, level, pool[layer[i]].w, max_m, rule);
        } else {
            for (std::size_t i = 0; i < layer.size(); ++i)
                expansions[i] = star_step_candidates(rs, level, pool[layer[i]].w, max_m, rule);
        }
        for (std::size_t i = 0; i < layer.size(); ++i) {
            long long node_idx = layer[i];
            for (auto& step : expansions[i]) {
                long long new_depth = pool[node_idx].depth + step.n * step.m;
                if (new_depth > depth_cap) continue;
                auto key = std::make_pair(step.to, new_depth);
                if (visited.count(key)) continue;
                pool.push_back({step.to, new_depth, node_idx, step});
                long long idx = static_cast<long long>(pool.size()) - 1;
                visited[key] = idx;
                next.push_back(idx);
            }
        }
        layer = std::move(next);
    }
    std::vector<ReachableCell> out;
    for (long long idx = 1; idx < static_cast<long long>(pool.size()); ++idx) {
        ReachableCell cell;
        cell.shifted_weight = pool[idx].w;
        cell.depth = pool[idx].depth;
        StarChain chain;
        chain.source = shifted_start;
        std::vector<StarStep> steps;
        for (long long cur = idx; pool[cur].parent >= 0; cur = pool[cur].parent) steps.push_back(*pool[cur].step);
        std::reverse(steps.begin(), steps.end());
        chain.steps = std::move(steps);
        chain.target = cell.shifted_weight;
        cell.chain = std::move(chain);
        out.push_back(std::move(cell));
    }
    std::sort(out.begin(), out.end(), [](const ReachableCell& a, const ReachableCell& b) {
        if (a.shifted_weight != b.shifted_weight) return a.shifted_weight < b.shifted_weight;
        return a.depth < b.depth;
    });
    return out;
}

} // namespace kkb
