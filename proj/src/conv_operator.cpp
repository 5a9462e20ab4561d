#include "lcapego/conv_operator.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>

#include "lcapego/rng.hpp"

namespace lcapego {

namespace {

std::vector<std::complex<double>> build_matrix(const GroupFunction& f) {
    const auto& G = f.group;
    const std::size_t n = G.point_count();
    const double w = G.haar_weight();
    std::vector<std::complex<double>> m(n * n, 0.0);
    for (std::size_t row = 0; row < n; ++row) {
        const auto x = G.point(row);
        for (std::size_t col = 0; col < n; ++col) {
            const auto diff = G.sub(x, G.point(col));
            if (!diff) continue; // zero-extension outside the window
            m[row * n + col] = f.values[G.flat_index(*diff)] * w;
        }
    }
    return m;
}

} // namespace

ConvolutionOperator make_operator(GroupFunction f, bool materialize) {
    ConvolutionOperator op;
    if (materialize) {
        if (f.group.point_count() > ConvolutionOperator::kMaterializeCap)
            throw TooLarge("materialization cap is " +
                           std::to_string(ConvolutionOperator::kMaterializeCap) + " points");
        op.matrix_ = build_matrix(f);
    }
    op.kernel_ = std::move(f);
    return op;
}

GroupFunction ConvolutionOperator::apply(const GroupFunction& phi) const {
    return convolve(kernel_, phi);
}

double opnorm_exact(const ConvolutionOperator& op) {
    const auto& G = op.group();
    if (G.kind() != GroupKind::FiniteProduct)
        throw WrongModel("opnorm_exact needs a finite group; truncated models use power iteration");

    const std::vector<std::complex<double>>* m = &op.matrix();
    std::vector<std::complex<double>> local;
    if (!op.materialized()) {
        if (G.point_count() > ConvolutionOperator::kMaterializeCap)
            throw TooLarge("dense decomposition needs materialization (cap " +
                           std::to_string(ConvolutionOperator::kMaterializeCap) + " points)");
        local = build_matrix(op.kernel());
        m = &local;
    }

    const auto n = static_cast<Eigen::Index>(G.point_count());
    using RowMajorMat =
        Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMajorMat> a(m->data(), n, n);
    if (n > 128) {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
        return svd.singularValues()(0);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    return svd.singularValues()(0);
}

PowerIterationResult opnorm_power_iteration(const ConvolutionOperator& op, int iterations,
                                            std::uint64_t seed) {
    if (iterations < 1) throw InvalidSpec("power iteration needs at least one iteration");
    const auto& G = op.group();
    if (G.kind() == GroupKind::RealGrid)
        throw WrongModel("power iteration runs on z_window or finite groups");

    constexpr double kResidualTol = 1e-6;
    const std::size_t n = G.point_count();

    // A* is the convolution operator with the involuted kernel, also under
    // the truncation semantics.
    const GroupFunction adjoint_kernel = involution(op.kernel());

    std::mt19937_64 gen(seed);
    GroupFunction v{G, std::vector<std::complex<double>>(n), "v"};
    for (auto& z : v.values) z = complex_normal(gen);
    double vnorm = 0.0;
    for (const auto& z : v.values) vnorm += std::norm(z);
    vnorm = std::sqrt(vnorm);
    for (auto& z : v.values) z /= vnorm;

    PowerIterationResult result;
    for (int it = 1; it <= iterations; ++it) {
        const GroupFunction w = convolve(adjoint_kernel, op.apply(v));

        // Rayleigh quotient of A*A at the unit iterate; real and >= 0.
        double lambda = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            lambda += (std::conj(v.values[i]) * w.values[i]).real();
        lambda = std::max(lambda, 0.0);

        double rnorm = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            rnorm += std::norm(w.values[i] - lambda * v.values[i]);
        rnorm = std::sqrt(rnorm);

        result.estimate = std::sqrt(lambda);
        result.residual = rnorm;
        result.iterations_used = it;
        if (rnorm <= kResidualTol) {
            result.converged = true;
            break;
        }

        double wnorm = 0.0;
        for (const auto& z : w.values) wnorm += std::norm(z);
        wnorm = std::sqrt(wnorm);
        if (wnorm == 0.0) { // kernel is zero: the operator norm is 0
            result.estimate = 0.0;
            result.residual = 0.0;
            result.converged = true;
            break;
        }
        v.values = w.values;
        for (auto& z : v.values) z /= wnorm;
    }
    return result;
}

double fourier_sup_norm(const GroupFunction& f, std::optional<long> dual_grid) {
    return norm(fourier(f, dual_grid), NormKind::Linf);
}

double isometry_gap(const GroupFunction& f, std::optional<long> dual_grid) {
    return norm(f, NormKind::L1) - fourier_sup_norm(f, dual_grid);
}

} // namespace lcapego
