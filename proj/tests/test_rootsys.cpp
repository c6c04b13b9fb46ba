#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace kkb;
using kkb::test::WeightGen;
using kkb::test::wt;

TEST_CASE("construction counts against the classical tables") {
    struct Row {
        const char* code;
        std::size_t roots;
        std::size_t weyl;
        long long h_vee;
    };
    // |Delta| and |W| from the standard classification; independent of the
    // closure code under test.
    const Row rows[] = {
        {"A1", 2, 2, 2},   {"A2", 6, 6, 3},    {"A3", 12, 24, 4},  {"B2", 8, 8, 3},
        {"B3", 18, 48, 5}, {"C3", 18, 48, 4},  {"D4", 24, 192, 6}, {"G2", 12, 12, 4},
        {"F4", 48, 1152, 9},
    };
    for (const auto& row : rows) {
        CAPTURE(row.code);
        auto rs = RootSystem::build(row.code);
        CHECK(rs.roots().size() == row.roots);
        CHECK(rs.positive_roots().size() == row.roots / 2);
        CHECK(rs.weyl_elements().size() == row.weyl);
        CHECK(rs.dual_coxeter() == row.h_vee);
    }
}

TEST_CASE("invalid types and caps") {
    CHECK_THROWS_AS(RootSystem::build('X', 2), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build('B', 1), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build('D', 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build('A', 7), std::invalid_argument); // default rank cap
    RootSystemLimits tight;
    tight.max_weyl_order = 10;
    CHECK_THROWS_AS(RootSystem::build('A', 3, tight), std::length_error);
    CHECK_THROWS_AS(RootSystem::build("bogus"), std::invalid_argument);
}

TEST_CASE("A1 form values") {
    auto rs = RootSystem::build("A1");
    Weight alpha = rs.simple_roots()[0];
    Weight omega = rs.fundamental_weight(0);
    CHECK(rs.inner(alpha, alpha) == 2);
    CHECK(rs.inner(omega, omega) == Rat(1, 2));
    CHECK(rs.inner(rs.zero_weight(), omega) == 0);
    CHECK(alpha == Rat(2) * omega);
}

TEST_CASE("two root lengths in B2, long normalized to 2") {
    auto rs = RootSystem::build("B2");
    std::set<Rat> norms;
    for (const auto& beta : rs.roots()) norms.insert(rs.norm_sq(beta));
    CHECK(norms == std::set<Rat>{Rat(1), Rat(2)});
}

TEST_CASE("coroots") {
    auto a1 = RootSystem::build("A1");
    CHECK(a1.coroot(a1.simple_roots()[0]) == a1.simple_roots()[0]);

    auto b2 = RootSystem::build("B2");
    Weight short_root = b2.simple_roots()[1];
    REQUIRE(b2.norm_sq(short_root) == 1);
    CHECK(b2.coroot(short_root) == Rat(2) * short_root);

    auto g2 = RootSystem::build("G2");
    Weight long_root = g2.simple_roots()[0];
    REQUIRE(g2.norm_sq(long_root) == 2);
    CHECK(g2.coroot(long_root) == long_root);

    CHECK_THROWS_AS(a1.coroot(a1.fundamental_weight(0)), std::invalid_argument);
}

TEST_CASE("reflections") {
    auto rs = RootSystem::build("A2");
    for (const auto& beta : rs.roots()) CHECK(rs.reflect(beta, beta) == -beta);
    // fixed hyperplane
    auto a1 = RootSystem::build("A1");
    Weight alpha = a1.simple_roots()[0];
    CHECK(a1.reflect(a1.zero_weight(), alpha) == a1.zero_weight());
    CHECK(a1.reflect(wt(a1, {3}), alpha) == wt(a1, {-3}));
    CHECK_THROWS_AS(a1.reflect(wt(a1, {3}), wt(a1, {1})), std::invalid_argument);
}

TEST_CASE("lattice membership") {
    auto a1 = RootSystem::build("A1");
    Weight alpha = a1.simple_roots()[0];
    Weight omega = a1.fundamental_weight(0);
    CHECK(a1.in_root_lattice(alpha));
    CHECK_FALSE(a1.in_root_lattice(omega));
    CHECK(a1.in_root_lattice(a1.zero_weight()));
    CHECK(a1.in_coroot_lattice(alpha)); // alpha^vee = alpha for A1
    CHECK(a1.is_integral(omega));

    auto a2 = RootSystem::build("A2");
    CHECK(a2.is_integral(a2.fundamental_weight(0)));
    CHECK_FALSE(a2.in_root_lattice(a2.fundamental_weight(0)));

    // B2: Q and Q^vee differ
    auto b2 = RootSystem::build("B2");
    Weight short_root = b2.simple_roots()[1];
    CHECK(b2.in_root_lattice(short_root));
    // short_root^vee = 2*short_root, so short_root itself is not in Q^vee
    CHECK_FALSE(b2.in_coroot_lattice(short_root));
    CHECK(b2.in_coroot_lattice(Rat(2) * short_root));
    // scaled lattice membership
    CHECK(b2.in_coroot_lattice(Rat(4) * short_root, Rat(2)));
    CHECK_FALSE(b2.in_coroot_lattice(Rat(2) * short_root, Rat(2)));
}

TEST_CASE("weyl orbits") {
    auto a1 = RootSystem::build("A1");
    auto orbit = a1.weyl_orbit(wt(a1, {3}));
    CHECK(orbit == std::vector<Weight>{wt(a1, {-3}), wt(a1, {3})});
    CHECK(a1.weyl_orbit(a1.zero_weight()) == std::vector<Weight>{a1.zero_weight()});

    auto a2 = RootSystem::build("A2");
    CHECK(a2.weyl_orbit(a2.rho()).size() == 6);
}

TEST_CASE("rho is the half sum of positive roots and pairs to 1") {
    for (const char* code : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
        CAPTURE(code);
        auto rs = RootSystem::build(code);
        Weight sum(rs.rank());
        for (const auto& beta : rs.positive_roots()) sum = sum + beta;
        CHECK(Rat(1, 2) * sum == rs.rho());
        for (std::size_t i = 0; i < rs.rank(); ++i)
            CHECK(rs.inner(rs.rho(), rs.coroot(rs.simple_roots()[i])) == 1);
    }
}

TEST_CASE("roots closed under negation and reflections; Weyl preserves form and permutes roots") {
    for (const char* code : {"A2", "B2", "G2"}) {
        CAPTURE(code);
        auto rs = RootSystem::build(code);
        std::set<Weight> root_set(rs.roots().begin(), rs.roots().end());
        for (const auto& beta : rs.roots()) {
            CHECK(root_set.count(-beta) == 1);
            for (const auto& gamma : rs.roots()) CHECK(root_set.count(rs.reflect(beta, gamma)) == 1);
        }
        for (const auto& w : rs.weyl_elements())
            for (const auto& beta : rs.roots()) CHECK(root_set.count(w.apply(beta)) == 1);
    }
}

TEST_CASE("property: reflection involution, form invariance, coroot pairing") {
    WeightGen gen;
    for (const char* code : {"A1", "A2", "B2", "G2"}) {
        CAPTURE(code);
        auto rs = RootSystem::build(code);
        for (int trial = 0; trial < 200; ++trial) {
            Weight lam = gen.weight(rs);
            Weight mu = gen.weight(rs);
            const Weight& beta = rs.roots()[gen.index(rs.roots().size())];
            CHECK(rs.reflect(rs.reflect(lam, beta), beta) == lam);
            CHECK(rs.inner(beta, rs.coroot(beta)) == 2);
            const auto& w = rs.weyl_elements()[gen.index(rs.weyl_elements().size())];
            CHECK(rs.inner(w.apply(lam), w.apply(mu)) == rs.inner(lam, mu));
        }
    }
}

TEST_CASE("property: orbit size divides the group order") {
    WeightGen gen(7);
    for (const char* code : {"A2", "B2"}) {
        auto rs = RootSystem::build(code);
        for (int trial = 0; trial < 50; ++trial) {
            Weight lam = gen.weight(rs, -3, 3, 2);
            CHECK(rs.weyl_elements().size() % rs.weyl_orbit(lam).size() == 0);
        }
    }
}

TEST_CASE("property: reflecting an integral weight moves it by a root lattice element") {
    WeightGen gen(11);
    for (const char* code : {"A2", "B2", "G2"}) {
        auto rs = RootSystem::build(code);
        for (int trial = 0; trial < 100; ++trial) {
            Weight lam = gen.integral_weight(rs);
            const Weight& beta = rs.roots()[gen.index(rs.roots().size())];
            CHECK(rs.in_root_lattice(rs.reflect(lam, beta) - lam));
        }
    }
}

TEST_CASE("C2 matches B2 up to relabeling") {
    auto b2 = RootSystem::build("B2");
    auto c2 = RootSystem::build("C2");
    CHECK(b2.roots().size() == c2.roots().size());
    CHECK(b2.weyl_elements().size() == c2.weyl_elements().size());
    CHECK(b2.dual_coxeter() == c2.dual_coxeter());
}
