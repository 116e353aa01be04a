#pragma once

// Classical multidimensional scaling. The Gram matrix of a squared distance
// matrix is available by two independent routes: double centering -1/2 JDJ
// and the dual expansion sum_{i<j} D_ij v_ij.

#include "dualmds/pairspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dualmds {

inline constexpr double kRankTol = 1e-8;

/// Thrown when -1/2 JDJ has an eigenvalue below -tol * max(1, lambda_max).
class NonEuclideanError : public DomainError {
public:
    NonEuclideanError(const std::string& what, double min_eigenvalue)
        : DomainError(what), min_eigenvalue_(min_eigenvalue) {}

    double min_eigenvalue() const { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

struct EuclideanTest {
    bool euclidean;
    double min_eigenvalue;
    double max_eigenvalue;
};

struct EmbeddingResult {
    PointConfiguration points;
    Vector retained;           // descending, strictly positive
    double discarded_mass;     // sum of |dropped eigenvalues|
    int rank;                  // detected; == retained.size() unless a smaller target was requested
    double min_eigenvalue;
    std::vector<std::string> warnings;
};

SquaredDistanceMatrix squared_distances(const PointConfiguration& p);

/// X = -1/2 J D J.
GramMatrix double_center(const SquaredDistanceMatrix& d);

/// X = sum over pairs of D_ij v_ij, accumulated from dyadic dual atoms.
GramMatrix dual_expansion(const SquaredDistanceMatrix& d);

/// sum over pairs of coefficients(k) v_k. Coefficients are in pair order and
/// need not be nonnegative.
Matrix dual_expansion(int n, const Vector& coefficients);

/// Coefficient k = <X, w_k> = X_ii + X_jj - 2 X_ij.
Vector measure_coefficients(const GramMatrix& x);

/// Schoenberg test: lambda_min(-1/2 JDJ) >= -tol * max(1, lambda_max).
EuclideanTest is_euclidean(const SquaredDistanceMatrix& d, double tol = kRankTol);

/// Truncated eigendecomposition of -1/2 JDJ. Without a target dimension the
/// rank is the number of eigenvalues above tol * lambda_max. A target above the
/// detected rank pads with zero columns and records a warning.
EmbeddingResult embed(const SquaredDistanceMatrix& d, std::optional<int> target_dimension = std::nullopt,
                      double tol = kRankTol);

/// min over orthogonal R of ||P_c - Q_c R||_F, with both sets centred and the
/// narrower one padded with zero columns.
double procrustes_residual(const Matrix& p, const Matrix& q);
double procrustes_residual(const PointConfiguration& p, const PointConfiguration& q);

}  // namespace dualmds
