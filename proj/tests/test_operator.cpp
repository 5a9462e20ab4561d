#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "lcapego/conv_operator.hpp"
#include "lcapego/families.hpp"
#include "lcapego/rng.hpp"

using namespace lcapego;
using cplx = std::complex<double>;

namespace {

GroupFunction random_function(const GroupModel& g, std::mt19937_64& gen) {
    std::vector<cplx> values(g.point_count());
    for (auto& v : values) v = complex_normal(gen);
    return GroupFunction{g, std::move(values), "rand"};
}

std::vector<cplx> matvec(const std::vector<cplx>& m, const std::vector<cplx>& v) {
    const std::size_t n = v.size();
    std::vector<cplx> out(n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r] += m[r * n + c] * v[c];
    return out;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("materialized matrices") {
    const auto g4 = GroupModel::finite_product({4});

    SUBCASE("point mass gives the identity") {
        const auto op = make_operator(delta(g4), true);
        REQUIRE(op.materialized());
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                CHECK(op.matrix()[r * 4 + c] == (r == c ? cplx(1.0) : cplx(0.0)));
    }

    SUBCASE("shifted point mass gives the cyclic shift") {
        const auto d1 = translate_fn(delta(g4), g4.element({1}));
        const auto op = make_operator(d1, true);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                CHECK(op.matrix()[r * 4 + c] == ((r == (c + 1) % 4) ? cplx(1.0) : cplx(0.0)));
    }

    SUBCASE("matrix application agrees with convolution") {
        std::mt19937_64 gen(41);
        const auto g8 = GroupModel::finite_product({8});
        const auto f = random_function(g8, gen);
        const auto op = make_operator(f, true);
        for (int rep = 0; rep < 50; ++rep) {
            const auto phi = random_function(g8, gen);
            CHECK(max_abs_diff(matvec(op.matrix(), phi.values), convolve(f, phi).values) <=
                  1e-12);
        }
    }

    SUBCASE("cap is enforced") {
        const auto big = GroupModel::z_window(2100); // 4201 points
        std::vector<cplx> values(big.point_count(), 0.0);
        CHECK_THROWS_AS(make_operator(GroupFunction{big, std::move(values), "f"}, true),
                        TooLarge);
    }
}

TEST_CASE("apply") {
    std::mt19937_64 gen(43);
    const auto g6 = GroupModel::finite_product({6});

    SUBCASE("identity kernel") {
        const auto op = make_operator(delta(g6), false);
        const auto phi = random_function(g6, gen);
        CHECK(max_abs_diff(op.apply(phi).values, phi.values) == 0.0);
    }

    SUBCASE("abelian commutativity") {
        const auto f = random_function(g6, gen);
        const auto h = random_function(g6, gen);
        CHECK(max_abs_diff(make_operator(f, false).apply(h).values,
                           make_operator(h, false).apply(f).values) <= 1e-12);
    }

    SUBCASE("operator is bounded by the L1 norm of the kernel") {
        for (int rep = 0; rep < 100; ++rep) {
            const auto f = random_function(g6, gen);
            const auto phi = random_function(g6, gen);
            CHECK(norm(make_operator(f, false).apply(phi), NormKind::L2) <=
                  norm(f, NormKind::L1) * norm(phi, NormKind::L2) + 1e-12);
        }
    }
}

TEST_CASE("exact operator norm equals the transform sup") {
    SUBCASE("identity") {
        const auto g = GroupModel::finite_product({4});
        CHECK(opnorm_exact(make_operator(delta(g), true)) == doctest::Approx(1.0));
    }

    SUBCASE("nonnegative kernels attain the L1 norm") {
        std::mt19937_64 gen(47);
        const auto g16 = GroupModel::finite_product({16});
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<cplx> values(16);
            for (auto& v : values) v = uniform01(gen);
            const GroupFunction f{g16, std::move(values), "nonneg"};
            const double l1 = norm(f, NormKind::L1);
            CHECK(std::abs(opnorm_exact(make_operator(f, true)) - l1) / l1 <= 1e-9);
        }
    }

    SUBCASE("random complex kernels across cyclic orders") {
        std::mt19937_64 gen(53);
        for (int rep = 0; rep < 60; ++rep) {
            const long n = 2 + static_cast<long>(uniform_index(gen, 63));
            const auto g = GroupModel::finite_product({n});
            const auto f = random_function(g, gen);
            const double svd = opnorm_exact(make_operator(f, true));
            const double sup = fourier_sup_norm(f);
            CHECK(std::abs(svd - sup) / sup <= 1e-9);
        }
    }

    SUBCASE("truncated models are rejected") {
        const auto w = GroupModel::z_window(4);
        std::vector<cplx> values(w.point_count(), 1.0);
        CHECK_THROWS_AS(opnorm_exact(make_operator(GroupFunction{w, std::move(values), "f"}, false)),
                        WrongModel);
    }

    SUBCASE("multi-level circulants diagonalize the same way") {
        std::mt19937_64 gen(89);
        const auto g = GroupModel::finite_product({4, 3});
        for (int rep = 0; rep < 10; ++rep) {
            const auto f = random_function(g, gen);
            const double svd = opnorm_exact(make_operator(f, true));
            const double sup = fourier_sup_norm(f);
            CHECK(std::abs(svd - sup) / sup <= 1e-9);
        }
    }
}

TEST_CASE("power iteration") {
    SUBCASE("point mass converges immediately") {
        const auto g = GroupModel::finite_product({8});
        const auto r = opnorm_power_iteration(make_operator(delta(g), false), 10, 42);
        CHECK(r.converged);
        CHECK(r.iterations_used == 1);
        CHECK(r.estimate == doctest::Approx(1.0));
        CHECK(r.residual <= 1e-12);
    }

    SUBCASE("kernel (1,1,-1) estimate approaches sqrt(5) from below") {
        const auto g = counterexample_kernel(512);
        const auto r = opnorm_power_iteration(make_operator(g, false), 500, 42);
        CHECK(std::abs(r.estimate - std::sqrt(5.0)) <= 1e-3);
        CHECK(r.estimate <= std::sqrt(5.0) + 1e-12);
        CHECK(r.iterations_used == 500);
    }

    SUBCASE("nonnegative kernel estimate approaches its L1 norm") {
        std::mt19937_64 gen(59);
        const auto w = GroupModel::z_window(256);
        std::vector<cplx> values(w.point_count(), 0.0);
        double mass = 0.0;
        for (long k = -4; k <= 4; ++k) {
            const double v = uniform01(gen);
            values[w.flat_index(w.element({k}))] = v;
            mass += v;
        }
        for (auto& v : values) v /= mass;
        const GroupFunction f{w, std::move(values), "nonneg"};
        const auto r = opnorm_power_iteration(make_operator(f, false), 500, 42);
        CHECK(std::abs(r.estimate - norm(f, NormKind::L1)) <= 1e-3);
    }

    SUBCASE("zero kernel") {
        const auto g = GroupModel::finite_product({5});
        std::vector<cplx> values(5, 0.0);
        const auto r =
            opnorm_power_iteration(make_operator(GroupFunction{g, std::move(values), "z"}, false),
                                   10, 1);
        CHECK(r.converged);
        CHECK(r.estimate == 0.0);
    }

    SUBCASE("preconditions") {
        const auto g = GroupModel::finite_product({5});
        CHECK_THROWS_AS(opnorm_power_iteration(make_operator(delta(g), false), 0, 1),
                        InvalidSpec);
        const auto grid = GroupModel::real_grid(1, 1.0, 5);
        std::vector<cplx> values(5, 1.0);
        CHECK_THROWS_AS(
            opnorm_power_iteration(
                make_operator(GroupFunction{grid, std::move(values), "f"}, false), 10, 1),
            WrongModel);
    }
}

TEST_CASE("truncated estimates are monotone and bounded by the grid sup") {
    // kernel supported in [-8,8]
    std::mt19937_64 gen(61);
    const auto base = GroupModel::z_window(8);
    std::vector<cplx> kernel_values(base.point_count());
    for (auto& v : kernel_values) v = complex_normal(gen) * 0.25;

    const auto embed = [&](long N) {
        const auto w = GroupModel::z_window(N);
        std::vector<cplx> values(w.point_count(), 0.0);
        for (std::size_t i = 0; i < kernel_values.size(); ++i)
            values[w.flat_index(w.element(base.point(i).coords))] = kernel_values[i];
        return GroupFunction{w, std::move(values), "f"};
    };

    const double grid_sup = fourier_sup_norm(embed(8), 1 << 14);
    double prev = 0.0;
    for (long N : {32L, 64L, 128L, 256L}) {
        const auto r = opnorm_power_iteration(make_operator(embed(N), false), 500, 42);
        CHECK(r.estimate >= prev - 1e-9);
        CHECK(r.estimate <= grid_sup + 1e-3); // grid error allowance
        prev = r.estimate;
    }
}

TEST_CASE("the embedding is a *-homomorphism at the matrix level") {
    std::mt19937_64 gen(67);
    const auto g8 = GroupModel::finite_product({8});
    const std::size_t n = 8;

    for (int rep = 0; rep < 20; ++rep) {
        const auto f = random_function(g8, gen);
        const auto h = random_function(g8, gen);

        const auto mf = make_operator(f, true).matrix();
        const auto mh = make_operator(h, true).matrix();
        const auto mfh = make_operator(convolve(f, h), true).matrix();

        // matrix of the convolution equals the matrix product
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                cplx prod = 0.0;
                for (std::size_t k = 0; k < n; ++k) prod += mf[r * n + k] * mh[k * n + c];
                CHECK(std::abs(mfh[r * n + c] - prod) <= 1e-9);
            }
        }

        // matrix of the involution is the conjugate transpose, exactly
        const auto mstar = make_operator(involution(f), true).matrix();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                CHECK(mstar[r * n + c] == std::conj(mf[c * n + r]));
    }

    // Toeplitz case: adjoint kernel builds the conjugate transpose too
    const auto w = GroupModel::z_window(6);
    const auto fw = random_function(w, gen);
    const auto m = make_operator(fw, true).matrix();
    const auto ms = make_operator(involution(fw), true).matrix();
    const std::size_t wn = w.point_count();
    for (std::size_t r = 0; r < wn; ++r)
        for (std::size_t c = 0; c < wn; ++c) CHECK(ms[r * wn + c] == std::conj(m[c * wn + r]));
}

TEST_CASE("operator norms are submultiplicative") {
    std::mt19937_64 gen(71);
    const auto g = GroupModel::finite_product({12});
    for (int rep = 0; rep < 20; ++rep) {
        const auto f = random_function(g, gen);
        const auto h = random_function(g, gen);
        const double lhs = opnorm_exact(make_operator(convolve(f, h), true));
        const double rhs = opnorm_exact(make_operator(f, true)) *
                           opnorm_exact(make_operator(h, true));
        CHECK(lhs <= rhs + 1e-9);
    }
}

TEST_CASE("diagonalization: transform of an operator application is the product") {
    std::mt19937_64 gen(73);
    const auto g = GroupModel::finite_product({9});
    for (int rep = 0; rep < 20; ++rep) {
        const auto f = random_function(g, gen);
        const auto phi = random_function(g, gen);
        const auto lhs = fourier(make_operator(f, false).apply(phi));
        const auto fh = fourier(f);
        const auto ph = fourier(phi);
        for (std::size_t k = 0; k < lhs.values.size(); ++k)
            CHECK(std::abs(lhs.values[k] - fh.values[k] * ph.values[k]) <= 1e-10);
    }
}

TEST_CASE("isometry gap") {
    SUBCASE("the kernel (1,1,-1) certifies non-isometry") {
        const auto g = counterexample_kernel(8);
        const double gap = isometry_gap(g, 4096);
        CHECK(gap == doctest::Approx(3.0 - std::sqrt(5.0)).epsilon(1e-6));
        CHECK(gap > 0.7);
    }

    SUBCASE("nonnegative kernels have zero gap") {
        std::mt19937_64 gen(79);
        const auto g16 = GroupModel::finite_product({16});
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<cplx> values(16);
            for (auto& v : values) v = uniform01(gen);
            const GroupFunction f{g16, std::move(values), "nonneg"};
            CHECK(std::abs(isometry_gap(f)) <= 1e-9);
        }
    }

    SUBCASE("point mass") {
        const auto g = GroupModel::finite_product({4});
        CHECK(std::abs(isometry_gap(delta(g))) <= 1e-12);
    }
}
