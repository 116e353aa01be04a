#include "dualmds/mds.hpp"

#include "dualmds/basis.hpp"
#include "dualmds/spectral.hpp"

#include <Eigen/SVD>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace dualmds {

SquaredDistanceMatrix squared_distances(const PointConfiguration& p) {
    const Matrix& pts = p.points();
    const Eigen::Index n = pts.rows();
    Matrix d = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) d(i, j) = d(j, i) = (pts.row(i) - pts.row(j)).squaredNorm();
    return SquaredDistanceMatrix(std::move(d));
}

GramMatrix double_center(const SquaredDistanceMatrix& d) {
    const Matrix j = CenteringMatrix(d.size()).dense();
    Matrix x = -0.5 * j * d.entries() * j;
    // Symmetrise the round-off from the two products.
    x = 0.5 * (x + x.transpose()).eval();
    return GramMatrix(std::move(x));
}

Matrix dual_expansion(int n, const Vector& coefficients) {
    if (static_cast<std::size_t>(coefficients.size()) != pair_count(n))
        throw DomainError(fmt::format("expected {} coefficients for n = {}, got {}", pair_count(n), n,
                                      coefficients.size()));
    Matrix x = Matrix::Zero(n, n);
    Eigen::Index k = 0;
    for (const auto& alpha : all_pairs(n)) {
        const double c = coefficients(k++);
        if (c != 0.0) DualAtom(alpha).accumulate(c, x);
    }
    return x;
}

GramMatrix dual_expansion(const SquaredDistanceMatrix& d) {
    return GramMatrix(dual_expansion(d.size(), d.upper()));
}

Vector measure_coefficients(const GramMatrix& x) {
    const int n = x.size();
    Vector out(static_cast<Eigen::Index>(pair_count(n)));
    Eigen::Index k = 0;
    for (const auto& alpha : all_pairs(n)) out(k++) = BasisAtom(alpha).inner(x.entries());
    return out;
}

EuclideanTest is_euclidean(const SquaredDistanceMatrix& d, double tol) {
    const Vector values = sym_eigenvalues(double_center(d).entries());
    const double top = values(0);
    const double bottom = values(values.size() - 1);
    return {bottom >= -tol * std::max(1.0, top), bottom, top};
}

EmbeddingResult embed(const SquaredDistanceMatrix& d, std::optional<int> target_dimension, double tol) {
    const int n = d.size();
    if (target_dimension && (*target_dimension < 1 || *target_dimension >= n))
        throw DomainError(fmt::format("target dimension must satisfy 1 <= r < n = {}, got {}", n, *target_dimension));

    const auto eig = sym_eig(double_center(d).entries());
    const double top = eig.values(0);
    const double bottom = eig.values(n - 1);
    if (bottom < -tol * std::max(1.0, top))
        throw NonEuclideanError(fmt::format("distance matrix is not Euclidean: lambda_min = {}", bottom), bottom);

    int rank = 0;
    while (rank < n && top > 0.0 && eig.values(rank) > tol * top) ++rank;

    std::vector<std::string> warnings;
    int kept = rank;
    int width = std::max(rank, 1);
    if (target_dimension) {
        width = *target_dimension;
        if (*target_dimension > rank)
            warnings.push_back(fmt::format("requested dimension {} exceeds detected rank {}; padding with zeros",
                                           *target_dimension, rank));
        kept = std::min(rank, *target_dimension);
    }

    Matrix points = Matrix::Zero(n, width);
    for (int c = 0; c < kept; ++c) points.col(c) = eig.vectors.col(c) * std::sqrt(eig.values(c));

    double discarded = 0.0;
    for (int k = kept; k < n; ++k) discarded += std::abs(eig.values(k));

    return {PointConfiguration(std::move(points)), eig.values.head(kept), discarded, rank, bottom,
            std::move(warnings)};
}

double procrustes_residual(const Matrix& p, const Matrix& q) {
    if (p.rows() != q.rows())
        throw DomainError(fmt::format("Procrustes needs the same number of points, got {} and {}", p.rows(), q.rows()));
    const Eigen::Index width = std::max(p.cols(), q.cols());
    auto center_and_pad = [width](const Matrix& m) {
        Matrix out = Matrix::Zero(m.rows(), width);
        if (m.cols() > 0) out.leftCols(m.cols()) = m.rowwise() - m.colwise().mean();
        return out;
    };
    const Matrix pc = center_and_pad(p);
    const Matrix qc = center_and_pad(q);
    if (width == 0) return 0.0;

    // argmin_R ||pc - qc R|| over orthogonal R is U V^T for qc^T pc = U S V^T.
    Eigen::JacobiSVD<Matrix> svd(qc.transpose() * pc, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Matrix rotation = svd.matrixU() * svd.matrixV().transpose();
    return (pc - qc * rotation).norm();
}

double procrustes_residual(const PointConfiguration& p, const PointConfiguration& q) {
    return procrustes_residual(p.points(), q.points());
}

}  // namespace dualmds
