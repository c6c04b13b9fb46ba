#include "kkblocks/pbw.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <map>

using namespace kkb;

namespace {

// Reference bracket on sparse coefficient vectors over the Chevalley basis.
using Vec = std::map<std::size_t, Rat>;

Vec bracket_vec(const ChevalleyAlgebra& g, const Vec& a, const Vec& b) {
    Vec out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b)
            for (const auto& t : g.bracket(i, j)) out[t.index] += ci * cj * Rat(t.coeff);
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Vec unit(std::size_t i) { return Vec{{i, Rat(1)}}; }

Rat form_vec(const ChevalleyAlgebra& g, const Vec& a, const Vec& b) {
    Rat acc = 0;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) acc += ci * cj * g.form(i, j);
    return acc;
}

} // namespace

TEST_CASE("A1 Chevalley relations") {
    auto rs = RootSystem::build("A1");
    ChevalleyAlgebra g(rs);
    REQUIRE(g.dim() == 3);
    std::size_t h = g.h_index(0), e = g.e_index(0), f = g.f_index(0);
    // [e, f] = h, [h, e] = 2e, [h, f] = -2f
    CHECK(bracket_vec(g, unit(e), unit(f)) == unit(h));
    CHECK(bracket_vec(g, unit(h), unit(e)) == Vec{{e, Rat(2)}});
    CHECK(bracket_vec(g, unit(h), unit(f)) == Vec{{f, Rat(-2)}});
    // invariant form: (e, f) = 1, (h, h) = 2 under the long-root normalization
    CHECK(g.form(e, f) == 1);
    CHECK(g.form(h, h) == 2);
    CHECK(g.form(e, e) == 0);
}

TEST_CASE("bracket antisymmetry and Jacobi, exhaustively, rank <= 2 and A3") {
    for (const char* code : {"A1", "A2", "B2", "C2", "G2", "A3"}) {
        CAPTURE(code);
        auto rs = RootSystem::build(code);
        ChevalleyAlgebra g(rs);
        const std::size_t d = g.dim();
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                Vec ab = bracket_vec(g, unit(a), unit(b));
                Vec ba = bracket_vec(g, unit(b), unit(a));
                for (const auto& [i, c] : ab) {
                    auto it = ba.find(i);
                    REQUIRE(it != ba.end());
                    REQUIRE(it->second == -c);
                }
                REQUIRE(ab.size() == ba.size());
            }
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b)
                for (std::size_t c = b + 1; c < d; ++c) {
                    Vec s = bracket_vec(g, unit(a), bracket_vec(g, unit(b), unit(c)));
                    for (const auto& [i, v] : bracket_vec(g, unit(b), bracket_vec(g, unit(c), unit(a)))) s[i] += v;
                    for (const auto& [i, v] : bracket_vec(g, unit(c), bracket_vec(g, unit(a), unit(b)))) s[i] += v;
                    for (const auto& [i, v] : s) REQUIRE(v == 0);
                }
    }
}

TEST_CASE("form is ad-invariant and dual bases pair correctly") {
    for (const char* code : {"A2", "B2", "G2"}) {
        CAPTURE(code);
        auto rs = RootSystem::build(code);
        ChevalleyAlgebra g(rs);
        const std::size_t d = g.dim();
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t c = 0; c < d; ++c) {
                    // ([a,b],c) + (b,[a,c]) = 0
                    Rat lhs = form_vec(g, bracket_vec(g, unit(a), unit(b)), unit(c)) +
                              form_vec(g, unit(b), bracket_vec(g, unit(a), unit(c)));
                    REQUIRE(lhs == 0);
                }
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                Vec dual_b;
                for (const auto& [i, c] : g.dual_of(b)) dual_b[i] += c;
                CHECK(form_vec(g, unit(a), dual_b) == (a == b ? Rat(1) : Rat(0)));
            }
    }
}

TEST_CASE("structure constants have the root-string magnitude") {
    for (const char* code : {"A2", "B2", "G2"}) {
        CAPTURE(code);
        auto rs = RootSystem::build(code);
        ChevalleyAlgebra g(rs);
        for (const auto& x : rs.roots())
            for (const auto& y : rs.roots()) {
                if (x == -y || !rs.is_root(x + y)) continue;
                long long p = 0;
                while (rs.is_root(y - Rat(p + 1) * x)) ++p;
                Rat n = g.n_constant(x, y);
                CHECK((n == p + 1 || n == -(p + 1)));
            }
    }
}

TEST_CASE("(e_gamma, f_gamma) = 2/|gamma|^2") {
    auto rs = RootSystem::build("B2");
    ChevalleyAlgebra g(rs);
    for (std::size_t k = 0; k < g.num_positive(); ++k)
        CHECK(g.form(g.e_index(k), g.f_index(k)) == Rat(2) / rs.norm_sq(rs.positive_roots()[k]));
}

TEST_CASE("affine bracket: A1 examples") {
    auto rs = RootSystem::build("A1");
    ChevalleyAlgebra g(rs);
    int e = static_cast<int>(g.e_index(0)), f = static_cast<int>(g.f_index(0)), h = static_cast<int>(g.h_index(0));

    // [e t^0, f t^0] = h t^0, no central term
    auto b0 = affine_bracket(g, {e, 0}, {f, 0});
    REQUIRE(b0.terms.size() == 1);
    CHECK(b0.terms[0].first == AffineGen{h, 0});
    CHECK(b0.terms[0].second == 1);
    CHECK(b0.central == 0);

    // [e t^1, f t^-1] = h t^0 + (e,f) K = h + K
    auto b1 = affine_bracket(g, {e, 1}, {f, -1});
    REQUIRE(b1.terms.size() == 1);
    CHECK(b1.terms[0].first == AffineGen{h, 0});
    CHECK(b1.central == 1);

    // [h t^2, h t^-2] = 2 (h,h) K = 4 K
    auto b2 = affine_bracket(g, {h, 2}, {h, -2});
    CHECK(b2.terms.empty());
    CHECK(b2.central == 4);

    // grading convention deg x t^n = -n
    CHECK(AffineAlgebra::grading({e, 1}) == -1);
    CHECK(AffineAlgebra::grading({f, -3}) == 3);
}

TEST_CASE("affine Jacobi and antisymmetry on the truncated window, depth <= 3, rank <= 2") {
    for (const char* code : {"A1", "B2"}) {
        CAPTURE(code);
        auto rs = RootSystem::build(code);
        ChevalleyAlgebra g(rs);
        AffineAlgebra affine(g, 3);
        auto gens = affine.generators();

        // antisymmetry
        for (const auto& a : gens)
            for (const auto& b : gens) {
                if (std::abs(a.loop + b.loop) > 3) continue;
                auto ab = affine.bracket(a, b);
                auto ba = affine.bracket(b, a);
                CHECK(ab.central == -ba.central);
                REQUIRE(ab.terms.size() == ba.terms.size());
                for (std::size_t i = 0; i < ab.terms.size(); ++i) {
                    CHECK(ab.terms[i].first == ba.terms[i].first);
                    CHECK(ab.terms[i].second == -ba.terms[i].second);
                }
            }

        // Jacobi: [[a,b],c] + [[b,c],a] + [[c,a],b] = 0; K is central so the
        // central coefficients of nested brackets also cancel.
        auto nested = [&](const AffineGen& x, const AffineGen& y, const AffineGen& z) {
            std::map<std::pair<int, int>, Rat> terms;
            Rat central = 0;
            auto inner = affine_bracket(g, x, y);
            for (const auto& [t, c] : inner.terms) {
                auto outer = affine_bracket(g, t, z);
                for (const auto& [u, c2] : outer.terms) terms[{u.base, u.loop}] += Rat(c) * Rat(c2);
                central += Rat(c) * outer.central;
            }
            return std::make_pair(terms, central);
        };
        // keep the cube of generators at rank 1; subsample loops for B2
        std::vector<AffineGen> sample;
        for (const auto& gen : gens)
            if (code == std::string("A1") || gen.loop % 2 != 0 || gen.loop == 0) sample.push_back(gen);
        for (const auto& a : sample)
            for (const auto& b : sample)
                for (const auto& c : sample) {
                    if (std::abs(a.loop + b.loop + c.loop) > 3) continue;
                    std::map<std::pair<int, int>, Rat> sum;
                    Rat central = 0;
                    for (auto [t, cc] : {nested(a, b, c), nested(b, c, a), nested(c, a, b)}) {
                        for (const auto& [k, v] : t) sum[k] += v;
                        central += cc;
                    }
                    for (const auto& [k, v] : sum) REQUIRE(v == 0);
                    REQUIRE(central == 0);
                }
    }
}
