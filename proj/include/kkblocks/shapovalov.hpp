#pragma once

#include "kkblocks/charge.hpp"
#include "kkblocks/linkage.hpp"
#include "kkblocks/verma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kkb {

struct OracleOptions {
    long long depth_cap = 4;
    std::optional<Rat> height_cap; // displacement height horizon; derived when absent
    Parallel parallel = Parallel::off;
};

// Default displacement horizon: the widest Weyl-orbit displacement of the
// shifted weight plus the largest displacement depth_cap loop steps can add.
Rat default_height_cap(const RootSystem& rs, const Weight& lam_hw, long long depth_cap);

struct WeightSpaceInfo {
    long long depth = 0;
    Weight nu;
    std::vector<std::string> basis; // PBW monomial names, canonical order
};

WeightSpaceInfo verma_weight_space(const RootSystem& rs, const Weight& lam_hw, long long depth, const Weight& nu);

struct ShapovalovCellInfo {
    long long depth = 0;
    Weight nu;
    std::vector<std::string> basis;
    std::vector<std::vector<std::string>> matrix; // exact entries, rendered
    std::string det;
    std::size_t kernel_dim = 0;
    std::string l0;
};

ShapovalovCellInfo shapovalov_cell(const RootSystem& rs, const Level& level, const Weight& lam_hw, long long depth,
                                   const Weight& nu);

struct SingularCellInfo {
    long long depth = 0;
    Weight nu;
    std::size_t space_dim = 0;
    std::size_t kernel_dim = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<std::string>> kernel_vectors;
};

std::vector<SingularCellInfo> singular_vectors(const RootSystem& rs, const Level& level, const Weight& lam_hw,
                                               const OracleOptions& options);

// Which closed form matches the direct normally ordered L0 on the highest
// weight vector: "aw" for (lam, lam+2rho)/2k, "ph" for the phi value at the
// shifted parameter, "both" when they coincide, "neither" on mismatch.
struct L0Arbitration {
    std::string value; // rendered exact value
    std::string convention;
};

L0Arbitration l0_on_highest_weight(const RootSystem& rs, const Level& level, const Weight& lam_hw);

struct KKCell {
    Weight shifted; // mu + rho
    long long depth = 0;
    friend bool operator==(const KKCell& a, const KKCell& b) { return a.shifted == b.shifted && a.depth == b.depth; }
    friend bool operator<(const KKCell& a, const KKCell& b) {
        if (!(a.shifted == b.shifted)) return a.shifted < b.shifted;
        return a.depth < b.depth;
    }
};

struct KKReport {
    std::vector<KKCell> singular;  // found by the oracle
    std::vector<KKCell> predicted; // chain-reachable within the horizon
    std::vector<KKCell> missing;   // predicted but no singular vector
    std::vector<KKCell> extra;     // singular vector without a chain
    std::vector<KKCell> predicted_outside_horizon;
    long long depth_cap = 0;
    Rat height_cap;
    std::string l0_convention;
    bool empty_difference() const { return missing.empty() && extra.empty(); }
};

KKReport verify_kk(const RootSystem& rs, const Level& level, const Weight& lam_hw, const OracleOptions& options,
                   StepRule rule = StepRule::lowering);

} // namespace kkb
