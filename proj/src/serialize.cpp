#include "kkblocks/serialize.hpp"

#include <sstream>

namespace kkb {

Json weight_to_json(const Weight& w) {
    Json out = Json::array();
    for (const auto& c : w.coords) out.push_back(rat_to_string(c));
    return out;
}

Weight weight_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("weight must be a JSON array of rationals");
    std::vector<Rat> coords;
    for (const auto& entry : j) coords.push_back(parse_rat(entry.get<std::string>()));
    return Weight(std::move(coords));
}

Json level_to_json(const Level& level) { return level.str(); }

Level level_from_json(const Json& j) { return Level::parse(j.get<std::string>()); }

Json star_step_to_json(const StarStep& step) {
    Json out;
    out["beta"] = weight_to_json(step.beta);
    out["m"] = step.m;
    out["n"] = step.n;
    out["to"] = weight_to_json(step.to);
    return out;
}

Json star_chain_to_json(const StarChain& chain) {
    Json out;
    out["source"] = weight_to_json(chain.source);
    Json steps = Json::array();
    for (const auto& step : chain.steps) steps.push_back(star_step_to_json(step));
    out["steps"] = std::move(steps);
    return out;
}

StarChain star_chain_from_json(const Json& j) {
    StarChain chain;
    chain.source = weight_from_json(j.at("source"));
    Weight current = chain.source;
    for (const auto& js : j.at("steps")) {
        StarStep step;
        step.beta = weight_from_json(js.at("beta"));
        step.m = js.at("m").get<long long>();
        step.n = js.at("n").get<long long>();
        step.from = current;
        step.to = weight_from_json(js.at("to"));
        current = step.to;
        chain.steps.push_back(std::move(step));
    }
    chain.target = current;
    return chain;
}

Json link_move_to_json(const LinkMove& move) {
    Json out;
    switch (move.kind) {
    case LinkMove::Kind::weyl:
        out["type"] = "weyl";
        out["element"] = move.weyl_index;
        break;
    case LinkMove::Kind::star_forward:
        out["type"] = "star";
        out["direction"] = "forward";
        out["step"] = star_step_to_json(*move.step);
        break;
    case LinkMove::Kind::star_backward:
        out["type"] = "star";
        out["direction"] = "backward";
        out["step"] = star_step_to_json(*move.step);
        break;
    }
    out["from"] = weight_to_json(move.from);
    out["to"] = weight_to_json(move.to);
    return out;
}

Json affine_weight_to_json(const AffineWeight& aw, const Level& level) {
    Json out;
    out["finite"] = weight_to_json(aw.finite_part);
    if (level.is_generic()) {
        out["level"] = aw.level_coeff.str();
        out["delta"] = aw.delta_coeff.str();
    } else {
        out["level"] = rat_to_string(aw.level_coeff.eval(level.value()));
        out["delta"] = rat_to_string(aw.delta_coeff.eval(level.value()));
    }
    return out;
}

namespace {

Json kk_cells_to_json(const std::vector<KKCell>& cells) {
    Json out = Json::array();
    for (const auto& c : cells) {
        Json jc;
        jc["shifted_weight"] = weight_to_json(c.shifted);
        jc["depth"] = c.depth;
        out.push_back(std::move(jc));
    }
    return out;
}

} // namespace

Json kk_report_to_json(const KKReport& report) {
    Json out;
    out["singular"] = kk_cells_to_json(report.singular);
    out["predicted"] = kk_cells_to_json(report.predicted);
    out["missing"] = kk_cells_to_json(report.missing);
    out["extra"] = kk_cells_to_json(report.extra);
    Json horizon;
    horizon["depth_cap"] = report.depth_cap;
    horizon["height_cap"] = rat_to_string(report.height_cap);
    horizon["predicted_outside"] = kk_cells_to_json(report.predicted_outside_horizon);
    out["horizon"] = std::move(horizon);
    out["l0_convention"] = report.l0_convention;
    return out;
}

Json singular_cells_to_json(const std::vector<SingularCellInfo>& cells) {
    Json out = Json::array();
    for (const auto& cell : cells) {
        Json jc;
        jc["depth"] = cell.depth;
        jc["weight"] = weight_to_json(cell.nu);
        jc["space_dim"] = cell.space_dim;
        jc["kernel_dim"] = cell.kernel_dim;
        jc["basis"] = cell.basis;
        jc["kernel"] = cell.kernel_vectors;
        out.push_back(std::move(jc));
    }
    return out;
}

Json shapovalov_cell_to_json(const ShapovalovCellInfo& cell) {
    Json out;
    out["depth"] = cell.depth;
    out["weight"] = weight_to_json(cell.nu);
    out["basis"] = cell.basis;
    out["matrix"] = cell.matrix;
    out["det"] = cell.det;
    out["kernel_dim"] = cell.kernel_dim;
    out["l0"] = cell.l0;
    return out;
}

Weight parse_weight(const RootSystem& rs, const std::string& text) {
    std::vector<Rat> coords;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) coords.push_back(parse_rat(token));
    if (coords.size() != rs.rank())
        throw std::invalid_argument("weight needs " + std::to_string(rs.rank()) + " coordinates: " + text);
    return Weight(std::move(coords));
}

} // namespace kkb
