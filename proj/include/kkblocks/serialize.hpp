#pragma once

#include "kkblocks/charge.hpp"
#include "kkblocks/linkage.hpp"
#include "kkblocks/shapovalov.hpp"

#include <json.hpp>

namespace kkb {

using Json = nlohmann::ordered_json;

// Weights travel as arrays of canonical rational strings in the
// fundamental-weight basis: ["5", "-1/2"].
Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json level_to_json(const Level& level); // "p/q" or "generic"
Level level_from_json(const Json& j);

Json star_step_to_json(const StarStep& step);
Json star_chain_to_json(const StarChain& chain);
StarChain star_chain_from_json(const Json& j);

Json link_move_to_json(const LinkMove& move);

Json affine_weight_to_json(const AffineWeight& aw, const Level& level);

Json kk_report_to_json(const KKReport& report);
Json singular_cells_to_json(const std::vector<SingularCellInfo>& cells);
Json shapovalov_cell_to_json(const ShapovalovCellInfo& cell);

// Weight literal used by the CLI: comma-separated rationals "3,-1/2".
Weight parse_weight(const RootSystem& rs, const std::string& text);

} // namespace kkb
