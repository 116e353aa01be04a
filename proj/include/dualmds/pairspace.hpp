#pragma once

// Pair indexing over {(i, j) : 1 <= i < j <= n} and the matrix value types
// shared by the rest of the library. All public indices are 1-based.

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualmds {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a dense object would exceed the configured allocation cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default tolerance for value-type validation. Scaled by max(1, max|entry|).
inline constexpr double kValidationTol = 1e-9;

/// Number of unordered pairs L = n(n-1)/2.
constexpr std::size_t pair_count(int n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// An element (i, j) of the pair set for n points, 1 <= i < j <= n.
class PairIndex {
public:
    PairIndex(int i, int j, int n);

    int i() const { return i_; }
    int j() const { return j_; }
    int n() const { return n_; }

    /// 1-based lexicographic position: (1,2) -> 1, (n-1,n) -> L.
    std::size_t linear() const;

    bool contains(int vertex) const { return vertex == i_ || vertex == j_; }
    bool shares_vertex(const PairIndex& other) const;

    std::string to_string() const;

    friend bool operator==(const PairIndex&, const PairIndex&) = default;

private:
    int i_;
    int j_;
    int n_;
};

std::size_t pair_to_linear(const PairIndex& p);
PairIndex linear_to_pair(std::size_t k, int n);

/// All pairs in increasing linear order.
std::vector<PairIndex> all_pairs(int n);

/// J = I - (1/n) 1 1^T.
class CenteringMatrix {
public:
    explicit CenteringMatrix(int n);

    int size() const { return n_; }
    /// Entry J(i, j), 1-based.
    double entry(int i, int j) const { return (i == j ? 1.0 : 0.0) - 1.0 / n_; }
    /// Column J(:, i), 1-based.
    Vector column(int i) const;
    Matrix dense() const;

private:
    int n_;
};

CenteringMatrix centering_matrix(int n);

/// n x n symmetric, hollow, nonnegative matrix of squared distances.
class SquaredDistanceMatrix {
public:
    explicit SquaredDistanceMatrix(Matrix entries, double tol = kValidationTol);

    const Matrix& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.rows()); }
    double at(const PairIndex& p) const { return entries_(p.i() - 1, p.j() - 1); }

    /// Upper-triangular entries in pair order.
    Vector upper() const;

private:
    Matrix entries_;
};

/// Symmetric matrix with zero row sums.
class GramMatrix {
public:
    explicit GramMatrix(Matrix entries, double tol = kValidationTol);

    const Matrix& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.rows()); }

private:
    Matrix entries_;
};

/// n points in R^r, one per row, n > r.
class PointConfiguration {
public:
    explicit PointConfiguration(Matrix points);

    const Matrix& points() const { return points_; }
    int count() const { return static_cast<int>(points_.rows()); }
    int dimension() const { return static_cast<int>(points_.cols()); }
    /// Points translated so their centroid is the origin.
    Matrix centered() const;

private:
    Matrix points_;
};

namespace detail {

double scale_of(const Matrix& m);
void require_square(const Matrix& m, const char* what);
void require_finite(const Matrix& m, const char* what);
void require_symmetric(const Matrix& m, double tol, const char* what);
void require_hollow(const Matrix& m, double tol, const char* what);
void require_nonnegative(const Matrix& m, double tol, const char* what);

}  // namespace detail

}  // namespace dualmds
