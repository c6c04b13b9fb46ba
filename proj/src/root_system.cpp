#include "kkblocks/root_system.hpp"

#include "kkblocks/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kkb {

namespace {

std::vector<std::vector<long long>> cartan_table(char series, std::size_t n) {
    auto chain = [](std::size_t n) {
        std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
        for (std::size_t i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
        return c;
    };
    switch (series) {
    case 'A':
        if (n < 1) throw std::invalid_argument("A_n needs rank >= 1");
        return chain(n);
    case 'B': {
        if (n < 2) throw std::invalid_argument("B_n needs rank >= 2");
        auto c = chain(n);
        c[n - 1][n - 2] = -2; // last simple root is short
        return c;
    }
    case 'C': {
        if (n < 2) throw std::invalid_argument("C_n needs rank >= 2");
        auto c = chain(n);
        c[n - 2][n - 1] = -2; // last simple root is long
        return c;
    }
    case 'D': {
        if (n < 4) throw std::invalid_argument("D_n needs rank >= 4");
        auto c = chain(n - 1);
        for (auto& row : c) row.resize(n, 0);
        c.emplace_back(n, 0);
        c[n - 1][n - 1] = 2;
        c[n - 1][n - 3] = c[n - 3][n - 1] = -1;
        return c;
    }
    case 'E': {
        if (n < 6 || n > 8) throw std::invalid_argument("E_n needs rank in {6,7,8}");
        std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
        auto link = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
        link(0, 2);
        link(1, 3);
        for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
        return c;
    }
    case 'F': {
        if (n != 4) throw std::invalid_argument("F_n needs rank 4");
        auto c = chain(4);
        c[2][1] = -2; // roots 3,4 are short
        return c;
    }
    case 'G': {
        if (n != 2) throw std::invalid_argument("G_n needs rank 2");
        return {{2, -1}, {-3, 2}}; // first simple root is long
    }
    default:
        throw std::invalid_argument(std::string("unknown series '") + series + "'");
    }
}

} // namespace

RootSystem RootSystem::build(const std::string& code, RootSystemLimits limits) {
    if (code.size() < 2) throw std::invalid_argument("root system code must look like \"A1\"");
    std::size_t rank = 0;
    try {
        rank = std::stoul(code.substr(1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rank in root system code: " + code);
    }
    return build(code[0], rank, limits);
}

RootSystem RootSystem::build(char series, std::size_t rank, RootSystemLimits limits) {
    if (rank == 0 || rank > limits.max_rank)
        throw std::invalid_argument("rank out of supported range (1.." + std::to_string(limits.max_rank) + ")");

    RootSystem rs;
    rs.series_ = series;
    rs.rank_ = rank;
    rs.cartan_ = cartan_table(series, rank);
    const std::size_t r = rank;

    // Squared half-lengths d_i = |alpha_i|^2 / 2, propagated along the Dynkin
    // graph from d_0 and rescaled so long roots have squared length 2.
    std::vector<Rat> d(r, Rat(0));
    d[0] = 1;
    std::vector<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.back();
        queue.pop_back();
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j || rs.cartan_[i][j] == 0 || d[j] != 0) continue;
            d[j] = d[i] * Rat(rs.cartan_[i][j]) / Rat(rs.cartan_[j][i]);
            queue.push_back(j);
        }
    }
    Rat dmax = d[0];
    for (const auto& v : d) dmax = std::max(dmax, v);
    for (auto& v : d) v /= dmax;

    rs.simple_norm_sq_.resize(r);
    rs.simple_gram_.assign(r, std::vector<Rat>(r));
    for (std::size_t i = 0; i < r; ++i) {
        rs.simple_norm_sq_[i] = 2 * d[i];
        for (std::size_t j = 0; j < r; ++j) rs.simple_gram_[i][j] = d[i] * Rat(rs.cartan_[i][j]);
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (rs.simple_gram_[i][j] != rs.simple_gram_[j][i])
                throw std::logic_error("Cartan matrix is not symmetrizable");

    // alpha_j has coordinates equal to column j of the Cartan matrix.
    rs.simple_roots_.assign(r, Weight(r));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) rs.simple_roots_[j].coords[i] = Rat(rs.cartan_[i][j]);

    // Inverse of the coordinate map x = C c (alpha-basis -> coordinate basis).
    {
        Matrix<Rat> c(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) c.at(i, j) = Rat(rs.cartan_[i][j]);
        rs.alpha_coords_.assign(r, std::vector<Rat>(r));
        for (std::size_t k = 0; k < r; ++k) {
            std::vector<Rat> e(r, Rat(0));
            e[k] = 1;
            auto col = solve(c, e); // alpha-coordinates of the k-th unit coordinate vector
            for (std::size_t j = 0; j < r; ++j) rs.alpha_coords_[j][k] = col[j];
        }
    }

    // Gram matrix of the fundamental-weight basis: W = C^{-T} G C^{-1}.
    rs.weight_gram_.assign(r, std::vector<Rat>(r, Rat(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rat acc = 0;
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b)
                    acc += rs.alpha_coords_[a][i] * rs.simple_gram_[a][b] * rs.alpha_coords_[b][j];
            rs.weight_gram_[i][j] = acc;
        }

    // Close the simple roots under simple reflections.
    std::set<Weight> closure(rs.simple_roots_.begin(), rs.simple_roots_.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Weight> current(closure.begin(), closure.end());
        for (const auto& beta : current) {
            for (std::size_t i = 0; i < r; ++i) {
                Weight refl = beta - beta.coords[i] * rs.simple_roots_[i];
                if (closure.insert(refl).second) grew = true;
            }
        }
    }

    std::vector<Weight> positives;
    for (const auto& beta : closure) {
        auto c = rs.simple_root_coords_impl(beta);
        bool nonneg = true;
        for (const auto& v : c) nonneg = nonneg && v >= 0;
        if (nonneg && !beta.is_zero()) positives.push_back(beta);
    }
    std::sort(positives.begin(), positives.end(), [&](const Weight& a, const Weight& b) {
        Rat ha = rs.height(a), hb = rs.height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.positive_roots_ = positives;
    rs.roots_ = positives;
    for (const auto& beta : positives) rs.roots_.push_back(-beta);
    if (rs.roots_.size() != closure.size()) throw std::logic_error("root closure is not symmetric");

    rs.rho_ = Weight(std::vector<Rat>(r, Rat(1)));
    rs.highest_root_ = positives.back();
    {
        Rat hv = 1 + rs.inner(rs.rho_, rs.coroot(rs.highest_root_));
        if (!is_integer(hv)) throw std::logic_error("dual Coxeter number came out non-integral");
        rs.dual_coxeter_ = to_long_checked(numerator(hv));
    }

    // Weyl group closure from the simple reflection matrices.
    std::vector<WeylElement> gens(r);
    for (std::size_t i = 0; i < r; ++i) {
        gens[i].mat.assign(r, std::vector<long long>(r, 0));
        for (std::size_t k = 0; k < r; ++k) {
            gens[i].mat[k][k] = 1;
            gens[i].mat[k][i] -= rs.cartan_[k][i];
        }
    }
    std::set<WeylElement> seen;
    WeylElement identity;
    identity.mat.assign(r, std::vector<long long>(r, 0));
    for (std::size_t k = 0; k < r; ++k) identity.mat[k][k] = 1;
    seen.insert(identity);
    std::vector<WeylElement> frontier{identity};
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier) {
            for (const auto& g : gens) {
                WeylElement p;
                p.mat.assign(r, std::vector<long long>(r, 0));
                for (std::size_t a = 0; a < r; ++a)
                    for (std::size_t b = 0; b < r; ++b)
                        for (std::size_t k = 0; k < r; ++k) p.mat[a][b] += g.mat[a][k] * w.mat[k][b];
                if (seen.insert(p).second) {
                    if (seen.size() > limits.max_weyl_order)
                        throw std::length_error("Weyl group order exceeds the configured cap");
                    next.push_back(std::move(p));
                }
            }
        }
        frontier = std::move(next);
    }
    rs.weyl_.assign(seen.begin(), seen.end());
    return rs;
}

Rat RootSystem::inner(const Weight& x, const Weight& y) const {
    if (x.rank() != rank_ || y.rank() != rank_) throw std::invalid_argument("weight rank mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (x.coords[i] == 0) continue;
        for (std::size_t j = 0; j < rank_; ++j)
            if (y.coords[j] != 0) acc += x.coords[i] * weight_gram_[i][j] * y.coords[j];
    }
    return acc;
}

bool RootSystem::is_root(const Weight& x) const { return root_index(x).has_value(); }

std::optional<std::size_t> RootSystem::root_index(const Weight& x) const {
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i] == x) return i;
    return std::nullopt;
}

Weight RootSystem::coroot(const Weight& beta) const {
    if (!is_root(beta)) throw std::invalid_argument("coroot: not a root: " + beta.str());
    return (Rat(2) / norm_sq(beta)) * beta;
}

Weight RootSystem::reflect(const Weight& lam, const Weight& beta) const {
    if (!is_root(beta)) throw std::invalid_argument("reflect: not a root: " + beta.str());
    return lam - inner(lam, coroot(beta)) * beta;
}

std::vector<Rat> RootSystem::simple_root_coords_impl(const Weight& x) const {
    std::vector<Rat> c(rank_, Rat(0));
    for (std::size_t j = 0; j < rank_; ++j)
        for (std::size_t i = 0; i < rank_; ++i) c[j] += alpha_coords_[j][i] * x.coords[i];
    return c;
}

std::vector<Rat> RootSystem::simple_root_coords(const Weight& x) const {
    if (x.rank() != rank_) throw std::invalid_argument("weight rank mismatch");
    return simple_root_coords_impl(x);
}

std::vector<Rat> RootSystem::simple_coroot_coords(const Weight& x) const {
    auto c = simple_root_coords(x);
    for (std::size_t j = 0; j < rank_; ++j) c[j] *= simple_norm_sq_[j] / 2;
    return c;
}

Rat RootSystem::height(const Weight& x) const {
    auto c = simple_root_coords_impl(x);
    Rat acc = 0;
    for (const auto& v : c) acc += v;
    return acc;
}

bool RootSystem::in_root_lattice(const Weight& x) const {
    for (const auto& c : simple_root_coords(x))
        if (!is_integer(c)) return false;
    return true;
}

bool RootSystem::in_coroot_lattice(const Weight& x, const Rat& scale) const {
    if (scale == 0) throw std::invalid_argument("coroot lattice scale must be nonzero");
    auto c = simple_coroot_coords(x);
    for (const auto& v : c)
        if (!is_integer(v / scale)) return false;
    return true;
}

bool RootSystem::is_integral(const Weight& x) const {
    for (const auto& c : x.coords)
        if (!is_integer(c)) return false;
    return true;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& lam) const {
    std::set<Weight> orbit;
    for (const auto& w : weyl_) orbit.insert(w.apply(lam));
    return {orbit.begin(), orbit.end()};
}

Weight RootSystem::weight_from_coords(std::vector<Rat> coords) const {
    if (coords.size() != rank_) throw std::invalid_argument("weight rank mismatch");
    return Weight(std::move(coords));
}

Weight RootSystem::fundamental_weight(std::size_t i) const {
    Weight w(rank_);
    w.coords.at(i) = 1;
    return w;
}

} // namespace kkb
