#include "kkblocks/pbw.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace kkb {

std::string gen_name(const ChevalleyAlgebra& chev, const AffineGen& g) {
    std::string base;
    std::size_t b = static_cast<std::size_t>(g.base);
    if (chev.is_cartan(b)) {
        base = "h" + std::to_string(b + 1);
    } else if (chev.is_raising(b)) {
        base = "e" + std::to_string(b - chev.rank() + 1);
    } else {
        base = "f" + std::to_string(b - chev.rank() - chev.num_positive() + 1);
    }
    if (g.loop == 0) return base;
    return base + "(" + std::to_string(g.loop) + ")";
}

std::string word_name(const ChevalleyAlgebra& chev, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += gen_name(chev, w[i]);
    }
    return out;
}

AffineBracket affine_bracket(const ChevalleyAlgebra& chev, const AffineGen& a, const AffineGen& b) {
    AffineBracket out;
    out.central = 0;
    for (const auto& term : chev.bracket(static_cast<std::size_t>(a.base), static_cast<std::size_t>(b.base)))
        out.terms.push_back({AffineGen{static_cast<int>(term.index), a.loop + b.loop}, term.coeff});
    if (a.loop != 0 && a.loop == -b.loop)
        out.central = Rat(a.loop) * chev.form(static_cast<std::size_t>(a.base), static_cast<std::size_t>(b.base));
    return out;
}

AffineAlgebra::AffineAlgebra(const ChevalleyAlgebra& chev, long long depth_cap)
    : chev_(&chev), depth_cap_(depth_cap) {
    if (depth_cap < 0) throw std::invalid_argument("depth cap must be nonnegative");
}

std::vector<AffineGen> AffineAlgebra::generators() const {
    std::vector<AffineGen> out;
    for (long long n = -depth_cap_; n <= depth_cap_; ++n)
        for (std::size_t b = 0; b < chev_->dim(); ++b) out.push_back({static_cast<int>(b), static_cast<int>(n)});
    return out;
}

AffineBracket AffineAlgebra::bracket(const AffineGen& a, const AffineGen& b) const {
    if (std::abs(a.loop) > depth_cap_ || std::abs(b.loop) > depth_cap_)
        throw std::invalid_argument("generator outside the truncated loop window");
    return affine_bracket(*chev_, a, b);
}

long long PBWLattice::word_depth(const Word& w) {
    long long d = 0;
    for (const auto& g : w) d += gen_depth(g);
    return d;
}

std::vector<long long> PBWLattice::word_displacement(const Word& w) const {
    const auto& rs = chev_->root_system();
    Weight total(rs.rank());
    for (const auto& g : w) total = total - chev_->weight_of(static_cast<std::size_t>(g.base));
    return eta_from_weight(total);
}

Weight PBWLattice::eta_weight(const std::vector<long long>& eta) const {
    const auto& rs = chev_->root_system();
    Weight out(rs.rank());
    for (std::size_t j = 0; j < eta.size(); ++j)
        if (eta[j] != 0) out = out + Rat(eta[j]) * rs.simple_roots()[j];
    return out;
}

std::vector<long long> PBWLattice::eta_from_weight(const Weight& eta) const {
    auto coords = chev_->root_system().simple_root_coords(eta);
    std::vector<long long> out(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (!is_integer(coords[j])) throw std::invalid_argument("displacement not in the root lattice");
        out[j] = to_long_checked(numerator(coords[j]));
    }
    return out;
}

namespace {

// Lowering alphabet in canonical word order: loop factors t^{-depth}..t^{-1}
// over the whole basis, then the finite lowering vectors at t^0.
struct Alphabet {
    std::vector<AffineGen> gens;
    std::vector<long long> depth;
    std::vector<std::vector<long long>> disp; // alpha coordinates of the displacement

    Alphabet(const ChevalleyAlgebra& chev, long long depth_cap) {
        const auto& rs = chev.root_system();
        for (long long n = -depth_cap; n <= -1; ++n)
            for (std::size_t b = 0; b < chev.dim(); ++b)
                gens.push_back({static_cast<int>(b), static_cast<int>(n)});
        for (std::size_t k = 0; k < chev.num_positive(); ++k)
            gens.push_back({static_cast<int>(chev.f_index(k)), 0});
        for (const auto& g : gens) {
            depth.push_back(PBWLattice::gen_depth(g));
            auto coords = rs.simple_root_coords(-chev.weight_of(static_cast<std::size_t>(g.base)));
            std::vector<long long> d(coords.size());
            for (std::size_t j = 0; j < coords.size(); ++j) d[j] = to_long_checked(numerator(coords[j]));
            disp.push_back(std::move(d));
        }
    }
};

// DFS over multiplicity vectors. In exact mode only words hitting the target
// (depth, eta) are emitted; otherwise every word within the depth budget is
// emitted and the caller filters by height.
template <class Emit>
void enumerate_words(const Alphabet& ab, std::size_t idx, long long depth_left,
                     std::vector<long long>& eta, Word& word, const std::vector<long long>* exact_eta,
                     const Rat& height_cap, Emit&& emit) {
    if (idx == ab.gens.size()) {
        if (exact_eta) {
            if (depth_left == 0 && eta == *exact_eta) emit(word, eta);
        } else {
            emit(word, eta);
        }
        return;
    }
    long long max_count;
    if (ab.depth[idx] > 0) {
        max_count = depth_left / ab.depth[idx];
    } else if (exact_eta) {
        // t^0 factors have displacement >= 0 componentwise with some positive
        // entry, and every later factor only adds, so the bound is exact.
        max_count = std::numeric_limits<long long>::max();
        for (std::size_t j = 0; j < eta.size(); ++j) {
            long long room = (*exact_eta)[j] - eta[j];
            if (room < 0) return; // already overshot, no completion possible
            if (ab.disp[idx][j] > 0) max_count = std::min(max_count, room / ab.disp[idx][j]);
        }
        if (max_count == std::numeric_limits<long long>::max()) max_count = 0;
    } else {
        // scan mode: t^0 factors only raise the height, so the cap bounds them
        long long cur_h = 0, gen_h = 0;
        for (std::size_t j = 0; j < eta.size(); ++j) {
            cur_h += eta[j];
            gen_h += ab.disp[idx][j];
        }
        if (gen_h <= 0) throw std::logic_error("t^0 lowering factor with nonpositive height");
        Rat room = height_cap - Rat(cur_h);
        max_count = room < 0 ? 0 : to_long_checked(rat_floor(room / Rat(gen_h)));
    }
    std::size_t saved_len = word.size();
    std::vector<long long> saved_eta = eta;
    for (long long count = 0; count <= max_count; ++count) {
        if (count > 0) {
            word.push_back(ab.gens[idx]);
            for (std::size_t j = 0; j < eta.size(); ++j) eta[j] += ab.disp[idx][j];
        }
        enumerate_words(ab, idx + 1, depth_left - count * ab.depth[idx], eta, word, exact_eta, height_cap,
                        std::forward<Emit>(emit));
    }
    word.resize(saved_len);
    eta = saved_eta;
}

} // namespace

const std::vector<Word>& PBWLattice::cell_basis(const CellKey& key) const {
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<Word> basis;
    if (key.depth >= 0) {
        Alphabet ab(*chev_, key.depth);
        std::vector<long long> eta(chev_->root_system().rank(), 0);
        Word word;
        enumerate_words(ab, 0, key.depth, eta, word, &key.eta, Rat(0),
                        [&](const Word& w, const std::vector<long long>&) { basis.push_back(w); });
        std::sort(basis.begin(), basis.end());
    }
    return cache_.emplace(key, std::move(basis)).first->second;
}

std::vector<CellKey> PBWLattice::cells(long long depth_cap, const Rat& height_cap) const {
    if (depth_cap < 0) throw std::invalid_argument("depth cap must be nonnegative");
    std::map<CellKey, std::vector<Word>> found;
    Alphabet ab(*chev_, depth_cap);
    std::vector<long long> eta(chev_->root_system().rank(), 0);
    Word word;
    enumerate_words(ab, 0, depth_cap, eta, word, nullptr, height_cap,
                    [&](const Word& w, const std::vector<long long>& e) {
                        long long h = 0;
                        for (auto v : e) h += v;
                        if (Rat(h) > height_cap) return;
                        found[CellKey{word_depth(w), e}].push_back(w);
                    });
    std::vector<CellKey> keys;
    for (auto& [key, basis] : found) {
        std::sort(basis.begin(), basis.end());
        cache_[key] = std::move(basis);
        keys.push_back(key);
    }
    return keys;
}

} // namespace kkb
