#include "kkblocks/chevalley.hpp"

#include "kkblocks/linalg.hpp"

#include <map>
#include <stdexcept>

namespace kkb {

namespace {

// Positive-pair structure constants via extraspecial pairs. For each
// non-simple positive root gamma the decomposition pair with the smallest
// first member (in root order) gets N = +(p+1), p the length of the descending
// root string; every other pair summing to gamma is forced by the Jacobi
// identity on the zero-sum quadruple (a0, b0, -b, -a). Mixed-sign constants
// come from the invariance identity N_{x,y}/|z|^2 = N_{y,z}/|x|^2 for
// x + y + z = 0.
class ConstantBuilder {
public:
    explicit ConstantBuilder(const RootSystem& rs) : rs_(rs) {
        const auto& pos = rs.positive_roots();
        n_ = pos.size();
        for (std::size_t i = 0; i < n_; ++i) index_[pos[i]] = i;
        table_.assign(n_, std::vector<long long>(n_, 0));

        for (std::size_t g = 0; g < n_; ++g) {
            const Weight& gamma = pos[g];
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t a = 0; a < n_; ++a)
                for (std::size_t b = a + 1; b < n_; ++b)
                    if (pos[a] + pos[b] == gamma) pairs.emplace_back(a, b);
            if (pairs.empty()) continue; // simple root
            auto [a0, b0] = pairs.front();
            long long p = 0;
            while (rs_.is_root(pos[b0] - Rat(p + 1) * pos[a0])) ++p;
            table_[a0][b0] = p + 1;
            table_[b0][a0] = -(p + 1);
            for (std::size_t k = 1; k < pairs.size(); ++k) {
                auto [a, b] = pairs[k];
                Rat term2 = 0, term3 = 0;
                if (rs_.is_root(pos[b0] - pos[b]))
                    term2 = n_signed(pos[b0], -pos[b]) * n_signed(-pos[a], pos[a0]) /
                            rs_.norm_sq(pos[b0] - pos[b]);
                if (rs_.is_root(pos[a0] - pos[b]))
                    term3 = n_signed(-pos[b], pos[a0]) * n_signed(-pos[a], pos[b0]) /
                            rs_.norm_sq(pos[a0] - pos[b]);
                Rat value = rs_.norm_sq(gamma) * (term2 + term3) / Rat(table_[a0][b0]);
                if (!is_integer(value)) throw std::logic_error("non-integral Chevalley constant");
                table_[a][b] = to_long_checked(numerator(value));
                table_[b][a] = -table_[a][b];
            }
        }
    }

    std::vector<std::vector<long long>> take_table() { return std::move(table_); }

    Rat n_signed(const Weight& x, const Weight& y) const {
        if (x == -y || !rs_.is_root(x + y)) return Rat(0);
        bool xp = is_positive(x), yp = is_positive(y);
        if (xp && yp) return Rat(table_[index_.at(x)][index_.at(y)]);
        if (!xp && !yp) return -n_signed(-x, -y);
        Weight z = -(x + y);
        bool zp = is_positive(z);
        if (yp == zp) return n_signed(y, z) * rs_.norm_sq(z) / rs_.norm_sq(x);
        return n_signed(z, x) * rs_.norm_sq(z) / rs_.norm_sq(y);
    }

private:
    bool is_positive(const Weight& x) const { return index_.count(x) > 0; }

    const RootSystem& rs_;
    std::size_t n_ = 0;
    std::map<Weight, std::size_t> index_;
    std::vector<std::vector<long long>> table_;
};

} // namespace

ChevalleyAlgebra::ChevalleyAlgebra(const RootSystem& rs) : rs_(&rs) {
    rank_ = rs.rank();
    n_pos_ = rs.positive_roots().size();
    const std::size_t d = dim();

    weights_.resize(d);
    for (std::size_t i = 0; i < rank_; ++i) weights_[h_index(i)] = Weight(rank_);
    for (std::size_t k = 0; k < n_pos_; ++k) {
        weights_[e_index(k)] = rs.positive_roots()[k];
        weights_[f_index(k)] = -rs.positive_roots()[k];
    }

    ConstantBuilder builder(rs);

    table_.assign(d * d, {});
    auto set_pair = [&](std::size_t a, std::size_t b, std::vector<Term> terms) {
        std::vector<Term> neg;
        neg.reserve(terms.size());
        for (const auto& t : terms) neg.push_back({t.index, -t.coeff});
        table_[a * d + b] = std::move(terms);
        table_[b * d + a] = std::move(neg);
    };

    for (std::size_t i = 0; i < rank_; ++i) {
        for (std::size_t a = rank_; a < d; ++a) {
            Rat c = weights_[a].coords[i]; // <wt(a), alpha_i^vee>
            if (c == 0) continue;
            set_pair(h_index(i), a, {Term{a, to_long_checked(numerator(c))}});
        }
    }

    for (std::size_t j = rank_; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            const Weight& x = weights_[j];
            const Weight& y = weights_[k];
            if (x == -y) continue;
            Weight sum = x + y;
            if (!rs.is_root(sum)) continue;
            Rat n = builder.n_signed(x, y);
            if (!is_integer(n)) throw std::logic_error("non-integral structure constant");
            auto target = signed_root_basis_index(sum);
            set_pair(j, k, {Term{*target, to_long_checked(numerator(n))}});
        }
    }

    // [e_gamma, f_gamma] = gamma^vee expanded over the simple coroots.
    for (std::size_t k = 0; k < n_pos_; ++k) {
        auto c = rs.simple_coroot_coords(rs.coroot(rs.positive_roots()[k]));
        std::vector<Term> terms;
        for (std::size_t i = 0; i < rank_; ++i) {
            if (c[i] == 0) continue;
            if (!is_integer(c[i])) throw std::logic_error("coroot not integral over simple coroots");
            terms.push_back(Term{h_index(i), to_long_checked(numerator(c[i]))});
        }
        set_pair(e_index(k), f_index(k), std::move(terms));
    }

    n_pos_table_ = builder.take_table();

    // Invariant form: (h_i, h_j) = (alpha_i^vee, alpha_j^vee), (e, f) = 2/|gamma|^2.
    form_.assign(d * d, Rat(0));
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j)
            form_[h_index(i) * d + h_index(j)] =
                rs.form_gram()[i][j] * 4 / (rs.simple_norms()[i] * rs.simple_norms()[j]);
    for (std::size_t k = 0; k < n_pos_; ++k) {
        Rat v = Rat(2) / rs.norm_sq(rs.positive_roots()[k]);
        form_[e_index(k) * d + f_index(k)] = v;
        form_[f_index(k) * d + e_index(k)] = v;
    }

    // Dual basis: the form is block diagonal, so the Cartan block inverts and
    // each e/f pair swaps with the scale |gamma|^2/2.
    dual_.resize(d);
    {
        Matrix<Rat> gram(rank_, rank_);
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) gram.at(i, j) = form_[h_index(i) * d + h_index(j)];
        for (std::size_t i = 0; i < rank_; ++i) {
            std::vector<Rat> unit(rank_, Rat(0));
            unit[i] = 1;
            auto col = solve(gram, unit);
            for (std::size_t j = 0; j < rank_; ++j)
                if (col[j] != 0) dual_[h_index(i)].push_back({h_index(j), col[j]});
        }
    }
    for (std::size_t k = 0; k < n_pos_; ++k) {
        Rat scale = rs.norm_sq(rs.positive_roots()[k]) / 2;
        dual_[e_index(k)] = {{f_index(k), scale}};
        dual_[f_index(k)] = {{e_index(k), scale}};
    }
}

std::string ChevalleyAlgebra::name_of(std::size_t a) const {
    if (is_cartan(a)) return "h" + std::to_string(a + 1);
    if (is_raising(a)) return "e" + weights_[a].str();
    return "f" + weights_[transpose(a)].str();
}

Rat ChevalleyAlgebra::n_constant(const Weight& x, const Weight& y) const {
    ConstantBuilder builder(*rs_);
    return builder.n_signed(x, y);
}

std::optional<std::size_t> ChevalleyAlgebra::signed_root_basis_index(const Weight& root) const {
    for (std::size_t k = 0; k < n_pos_; ++k) {
        if (rs_->positive_roots()[k] == root) return e_index(k);
        if (rs_->positive_roots()[k] == -root) return f_index(k);
    }
    return std::nullopt;
}

} // namespace kkb
