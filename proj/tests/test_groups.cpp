#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <set>

#include "lcapego/group.hpp"
#include "lcapego/rng.hpp"

using namespace lcapego;

TEST_CASE("make_group validates and enumerates") {
    const auto g = GroupModel::finite_product({4, 3});
    CHECK(g.point_count() == 12);
    CHECK(g.haar_weight() == 1.0);

    const auto w = GroupModel::z_window(512);
    CHECK(w.point_count() == 1025);
    CHECK(w.haar_weight() == 1.0);

    CHECK_THROWS_AS(GroupModel::finite_product({0}), InvalidSpec);
    CHECK_THROWS_AS(GroupModel::finite_product({4, -1}), InvalidSpec);
    CHECK_THROWS_AS(GroupModel::real_grid(1, 2.0, 8), InvalidSpec); // even points
    CHECK_THROWS_AS(GroupModel::real_grid(1, -2.0, 9), InvalidSpec);
    CHECK_THROWS_AS(GroupModel::finite_product({1 << 12, 1 << 12}), InvalidSpec); // cap

    const auto r = GroupModel::real_grid(2, 1.5, 5);
    CHECK(r.point_count() == 25);
    CHECK(r.haar_weight() == doctest::Approx(std::pow(3.0 / 5.0, 2)));

    // neutral element is always a point
    CHECK(g.flat_index(g.neutral()) == 0);
    CHECK(w.point(w.flat_index(w.neutral())).coords[0] == 0);
}

TEST_CASE("point count cap respects the environment override") {
    setenv("LCA_PEGO_MAX_POINTS", "100", 1);
    CHECK_THROWS_AS(GroupModel::z_window(64), InvalidSpec);
    CHECK_NOTHROW(GroupModel::z_window(16));
    unsetenv("LCA_PEGO_MAX_POINTS");
    CHECK_NOTHROW(GroupModel::z_window(64));
}

TEST_CASE("dual_of maps each model to its dual sample set") {
    const auto d6 = dual_of(GroupModel::finite_product({6}));
    CHECK(d6.kind() == DualKind::FiniteDual);
    CHECK(d6.point_count() == 6);
    CHECK(d6.dual_haar_weight() == doctest::Approx(1.0 / 6.0));

    const auto circle = dual_of(GroupModel::z_window(512), 4096);
    CHECK(circle.kind() == DualKind::CircleGrid);
    CHECK(circle.point_count() == 4096);
    CHECK(circle.dual_haar_weight() == doctest::Approx(1.0 / 4096.0));
    CHECK(circle.alpha(1) == doctest::Approx(1.0 / 4096.0));

    const auto d22 = dual_of(GroupModel::finite_product({2, 2}));
    CHECK(d22.point_count() == 4);

    CHECK_THROWS_AS(dual_of(GroupModel::z_window(8)), InvalidSpec);
    CHECK_THROWS_AS(dual_of(GroupModel::z_window(8), 1), InvalidSpec);
}

TEST_CASE("translation follows the model semantics") {
    const auto z4 = GroupModel::finite_product({4});
    const auto r = translate(z4, z4.element({1}), z4.element({3}));
    REQUIRE(r);
    CHECK(r->coords[0] == 2);

    const auto w = GroupModel::z_window(2);
    CHECK_FALSE(translate(w, w.element({2}), w.element({-1}))); // 3 exits the window

    const auto x = w.element({-1});
    const auto id = translate(w, x, w.neutral());
    REQUIRE(id);
    CHECK(*id == x);

    // real grids truncate too (non-periodic by design)
    const auto grid = GroupModel::real_grid(2, 1.0, 5);
    CHECK_FALSE(translate(grid, grid.element({2, 0}), grid.element({-1, 0})));
    const auto gr = translate(grid, grid.element({2, 1}), grid.element({1, 1}));
    REQUIRE(gr);
    CHECK(gr->coords == std::vector<long>{1, 0});
}

TEST_CASE("make_group revalidates a parsed spec") {
    const auto g = make_group(GroupModel::finite_product({4, 3}));
    CHECK(g.point_count() == 12);
    CHECK(make_group(GroupModel::z_window(5)) == GroupModel::z_window(5));
}

TEST_CASE("dual_integrate is the normalized quadrature") {
    // constant 1 integrates to 1 on every normalized dual
    for (const auto& d : {dual_of(GroupModel::finite_product({5})),
                          dual_of(GroupModel::finite_product({2, 3})),
                          dual_of(GroupModel::z_window(4), 64)}) {
        std::vector<std::complex<double>> ones(d.point_count(), 1.0);
        CHECK(std::abs(dual_integrate(d, ones) - 1.0) <= 1e-12);
    }

    // F(alpha_j) = alpha_j: the arithmetic sum gives (M-1)/(2M) exactly
    const long M = 4096;
    const auto circle = dual_of(GroupModel::z_window(4), M);
    std::vector<std::complex<double>> alphas(circle.point_count());
    for (std::size_t j = 0; j < alphas.size(); ++j) alphas[j] = circle.alpha(j);
    const double expected = static_cast<double>(M - 1) / (2.0 * static_cast<double>(M));
    CHECK(std::abs(dual_integrate(circle, alphas).real() - expected) <= 1e-12);
    CHECK(expected == doctest::Approx(0.49988).epsilon(1e-4));

    // indicator of half the points of the dual of Z_2
    const auto d2 = dual_of(GroupModel::finite_product({2}));
    std::vector<std::complex<double>> half = {1.0, 0.0};
    CHECK(std::abs(dual_integrate(d2, half) - 0.5) <= 1e-15);
}

TEST_CASE("characters are unit-modulus and multiplicative") {
    std::mt19937_64 gen(2024);
    int triples = 0;
    while (triples < 1000) {
        std::vector<long> moduli;
        const int d = 1 + static_cast<int>(uniform_index(gen, 3));
        for (int a = 0; a < d; ++a) moduli.push_back(2 + static_cast<long>(uniform_index(gen, 11)));
        const auto g = GroupModel::finite_product(moduli);
        const auto dual = dual_of(g);
        for (int rep = 0; rep < 10 && triples < 1000; ++rep, ++triples) {
            const auto chi = uniform_index(gen, dual.point_count());
            const auto x = g.point(uniform_index(gen, g.point_count()));
            const auto y = g.point(uniform_index(gen, g.point_count()));
            const auto xy = g.add(x, y);
            REQUIRE(xy);
            const auto lhs = dual.character(chi, *xy);
            const auto rhs = dual.character(chi, x) * dual.character(chi, y);
            CHECK(std::abs(lhs - rhs) <= 1e-12);
            CHECK(std::abs(std::abs(lhs) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("Haar weight is translation invariant on finite products") {
    const auto g = GroupModel::finite_product({4, 3});
    // counting measure: translation is a bijection, so any subset and its
    // translate have the same cardinality and hence the same total weight
    const std::vector<std::size_t> subset = {0, 3, 7, 11};
    const auto x = g.element({2, 1});
    std::set<std::size_t> translated;
    for (auto i : subset) {
        const auto moved = g.add(g.point(i), x);
        REQUIRE(moved);
        translated.insert(g.flat_index(*moved));
    }
    CHECK(translated.size() == subset.size());
    CHECK(static_cast<double>(translated.size()) * g.haar_weight() ==
          static_cast<double>(subset.size()) * g.haar_weight());
}

TEST_CASE("characters are orthonormal under the dual weight") {
    for (const auto& moduli : {std::vector<long>{6}, std::vector<long>{4, 3}}) {
        const auto g = GroupModel::finite_product(moduli);
        const auto dual = dual_of(g);
        for (std::size_t a = 0; a < dual.point_count(); ++a) {
            for (std::size_t b = 0; b < dual.point_count(); ++b) {
                std::complex<double> ip = 0.0;
                for (std::size_t i = 0; i < g.point_count(); ++i) {
                    const auto x = g.point(i);
                    ip += dual.character(a, x) * std::conj(dual.character(b, x));
                }
                ip *= dual.dual_haar_weight();
                if (a == b)
                    CHECK(std::abs(ip - 1.0) <= 1e-10);
                else
                    CHECK(std::abs(ip) <= 1e-10);
            }
        }
    }
}
