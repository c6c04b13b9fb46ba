#include "kkblocks/shapovalov.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <set>

namespace kkb {

namespace {

std::string render(const Rat& v) { return rat_to_string(v); }
std::string render(const KRat& v) { return v.str(); }

template <class S>
S kappa_scalar(const Level& level);

template <>
Rat kappa_scalar<Rat>(const Level& level) {
    return level.value();
}
template <>
KRat kappa_scalar<KRat>(const Level&) {
    return KRat::kappa();
}

template <class S>
S inv_kappa_value(const InvKappaExpr& e) {
    // s + r/kappa as a scalar
    S kappa = kappa_scalar<S>(Level::generic());
    return scalar_traits<S>::from_rat(e.s) + scalar_traits<S>::from_rat(e.r) / kappa;
}

template <>
Rat inv_kappa_value<Rat>(const InvKappaExpr&) = delete;

// Chevalley algebras are deterministic per root system; rebuilt on demand.
struct OracleContext {
    ChevalleyAlgebra chev;
    PBWLattice lattice;
    explicit OracleContext(const RootSystem& rs) : chev(rs), lattice(chev) {}
};

template <class S>
std::vector<SingularCellInfo> scan_singular(const RootSystem& rs, OracleContext& ctx, S kappa, const Weight& lam_hw,
                                            long long depth_cap, const Rat& height_cap, Parallel parallel) {
    auto keys = ctx.lattice.cells(depth_cap, height_cap);
    {
        // Precompute every target cell so the parallel phase only reads.
        VermaOracle<S> probe(ctx.chev, ctx.lattice, kappa, lam_hw);
        for (const auto& key : keys)
            for (const auto& g : probe.raising_generators(key.depth)) {
                CellKey target = probe.target_cell(key, g);
                if (target.depth >= 0) ctx.lattice.cell_basis(target);
            }
    }
    std::vector<SingularCellInfo> out(keys.size());
    std::vector<char> nonzero(keys.size(), 0);
    auto run_cell = [&](std::size_t i, VermaOracle<S>& oracle) {
        const CellKey& key = keys[i];
        auto kernel = oracle.singular_kernel(key);
        if (kernel.empty()) return;
        const auto& basis = ctx.lattice.cell_basis(key);
        SingularCellInfo info;
        info.depth = key.depth;
        info.nu = lam_hw - ctx.lattice.eta_weight(key.eta);
        info.space_dim = basis.size();
        info.kernel_dim = kernel.size();
        for (const auto& w : basis) info.basis.push_back(word_name(ctx.chev, w));
        for (const auto& vec : kernel) {
            if (!oracle.check_singular_vector(key, vec))
                throw std::logic_error("kernel vector failed raising-operator re-verification");
            std::vector<std::string> rendered;
            for (const auto& c : vec) rendered.push_back(render(c));
            info.kernel_vectors.push_back(std::move(rendered));
        }
        out[i] = std::move(info);
        nonzero[i] = 1;
    };
    if (parallel == Parallel::on) {
#ifdef _OPENMP
#pragma omp parallel
        {
            VermaOracle<S> oracle(ctx.chev, ctx.lattice, kappa, lam_hw);
#pragma omp for schedule(dynamic)
            for (std::size_t i = 0; i < keys.size(); ++i) run_cell(i, oracle);
        }
#else
        VermaOracle<S> oracle(ctx.chev, ctx.lattice, kappa, lam_hw);
        for (std::size_t i = 0; i < keys.size(); ++i) run_cell(i, oracle);
#endif
    } else {
        VermaOracle<S> oracle(ctx.chev, ctx.lattice, kappa, lam_hw);
        for (std::size_t i = 0; i < keys.size(); ++i) run_cell(i, oracle);
    }
    std::vector<SingularCellInfo> found;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (nonzero[i]) found.push_back(std::move(out[i]));
    return found;
}

template <class S>
L0Arbitration arbitrate(const RootSystem& rs, OracleContext& ctx, S kappa, const Weight& lam_hw) {
    VermaOracle<S> oracle(ctx.chev, ctx.lattice, kappa, lam_hw);
    S value = oracle.sugawara_l0_eigenvalue(oracle.highest_weight_state());
    InvKappaExpr aw = conformal_weight(rs, lam_hw);
    InvKappaExpr ph = phi(rs, lam_hw + rs.rho());
    S aw_value, ph_value;
    if constexpr (std::is_same_v<S, Rat>) {
        Rat k = kappa;
        aw_value = aw.eval(k);
        ph_value = ph.eval(k);
    } else {
        aw_value = inv_kappa_value<S>(aw);
        ph_value = inv_kappa_value<S>(ph);
    }
    L0Arbitration result;
    result.value = render(value);
    bool is_aw = value == aw_value, is_ph = value == ph_value;
    result.convention = is_aw && is_ph ? "both" : is_aw ? "aw" : is_ph ? "ph" : "neither";
    return result;
}

} // namespace

Rat default_height_cap(const RootSystem& rs, const Weight& lam_hw, long long depth_cap) {
    Weight shifted = lam_hw + rs.rho();
    Rat orbit_spread = 0;
    for (const auto& w : rs.weyl_elements())
        orbit_spread = std::max(orbit_spread, rs.height(shifted - w.apply(shifted)));
    Rat theta_height = rs.height(rs.highest_root());
    return orbit_spread + 2 * Rat(depth_cap) * theta_height + 2;
}

WeightSpaceInfo verma_weight_space(const RootSystem& rs, const Weight& lam_hw, long long depth, const Weight& nu) {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    OracleContext ctx(rs);
    WeightSpaceInfo info;
    info.depth = depth;
    info.nu = nu;
    Weight eta = lam_hw - nu;
    if (!rs.in_root_lattice(eta)) return info; // empty: nu is not a weight of the module
    CellKey key{depth, ctx.lattice.eta_from_weight(eta)};
    for (const auto& w : ctx.lattice.cell_basis(key)) info.basis.push_back(word_name(ctx.chev, w));
    return info;
}

namespace {

template <class S>
ShapovalovCellInfo shapovalov_cell_impl(const RootSystem& rs, S kappa, const Weight& lam_hw, long long depth,
                                        const Weight& nu) {
    OracleContext ctx(rs);
    ShapovalovCellInfo info;
    info.depth = depth;
    info.nu = nu;
    Weight eta = lam_hw - nu;
    if (!rs.in_root_lattice(eta)) throw std::invalid_argument("nu is not a weight of the module");
    CellKey key{depth, ctx.lattice.eta_from_weight(eta)};
    VermaOracle<S> oracle(ctx.chev, ctx.lattice, kappa, lam_hw);
    const auto& basis = ctx.lattice.cell_basis(key);
    if (basis.empty()) throw std::invalid_argument("empty weight space");
    for (const auto& w : basis) info.basis.push_back(word_name(ctx.chev, w));
    auto m = oracle.shapovalov_matrix(key);
    if (!m.is_symmetric()) throw std::logic_error("contravariant form came out non-symmetric");
    info.matrix.resize(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) info.matrix[i].push_back(render(m.at(i, j)));
    info.det = render(determinant(m));
    info.kernel_dim = kernel_basis(std::move(m)).size();
    info.l0 = render(oracle.sugawara_l0_on_cell(key));
    return info;
}

} // namespace

ShapovalovCellInfo shapovalov_cell(const RootSystem& rs, const Level& level, const Weight& lam_hw, long long depth,
                                   const Weight& nu) {
    if (level.is_generic()) return shapovalov_cell_impl<KRat>(rs, KRat::kappa(), lam_hw, depth, nu);
    return shapovalov_cell_impl<Rat>(rs, level.value(), lam_hw, depth, nu);
}

std::vector<SingularCellInfo> singular_vectors(const RootSystem& rs, const Level& level, const Weight& lam_hw,
                                               const OracleOptions& options) {
    OracleContext ctx(rs);
    Rat hcap = options.height_cap ? *options.height_cap : default_height_cap(rs, lam_hw, options.depth_cap);
    if (level.is_generic())
        return scan_singular<KRat>(rs, ctx, KRat::kappa(), lam_hw, options.depth_cap, hcap, options.parallel);
    return scan_singular<Rat>(rs, ctx, level.value(), lam_hw, options.depth_cap, hcap, options.parallel);
}

L0Arbitration l0_on_highest_weight(const RootSystem& rs, const Level& level, const Weight& lam_hw) {
    OracleContext ctx(rs);
    if (level.is_generic()) return arbitrate<KRat>(rs, ctx, KRat::kappa(), lam_hw);
    return arbitrate<Rat>(rs, ctx, level.value(), lam_hw);
}

KKReport verify_kk(const RootSystem& rs, const Level& level, const Weight& lam_hw, const OracleOptions& options,
                   StepRule rule) {
    KKReport report;
    report.depth_cap = options.depth_cap;
    report.height_cap = options.height_cap ? *options.height_cap : default_height_cap(rs, lam_hw, options.depth_cap);

    // Oracle side: singular vectors in the truncated module.
    OracleOptions scan = options;
    scan.height_cap = report.height_cap;
    for (const auto& cell : singular_vectors(rs, level, lam_hw, scan)) {
        if (cell.depth == 0 && cell.nu == lam_hw) continue; // the highest weight line itself
        report.singular.push_back({cell.nu + rs.rho(), cell.depth});
    }

    // Linkage side: chain-reachable cells from the shifted weight.
    Weight shifted = lam_hw + rs.rho();
    for (const auto& cell : star_reachable_cells(rs, level, shifted, options.depth_cap, options.depth_cap, rule,
                                                 options.parallel)) {
        KKCell kc{cell.shifted_weight, cell.depth};
        Rat h = rs.height(shifted - cell.shifted_weight);
        if (h > report.height_cap) {
            report.predicted_outside_horizon.push_back(kc);
            continue;
        }
        report.predicted.push_back(kc);
    }

    auto dedupe = [](std::vector<KKCell>& cells) {
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    };
    dedupe(report.singular);
    dedupe(report.predicted);
    dedupe(report.predicted_outside_horizon);

    std::set<KKCell> singular_set(report.singular.begin(), report.singular.end());
    std::set<KKCell> predicted_set(report.predicted.begin(), report.predicted.end());
    for (const auto& c : report.predicted)
        if (!singular_set.count(c)) report.missing.push_back(c);
    for (const auto& c : report.singular)
        if (!predicted_set.count(c)) report.extra.push_back(c);

    report.l0_convention = l0_on_highest_weight(rs, level, lam_hw).convention;
    return report;
}

} // namespace kkb
