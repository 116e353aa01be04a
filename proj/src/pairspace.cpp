#include "dualmds/pairspace.hpp"

#include <cmath>
#include <fmt/format.h>

namespace dualmds {

PairIndex::PairIndex(int i, int j, int n) : i_(i), j_(j), n_(n) {
    if (n < 2 || i < 1 || j > n || i >= j)
        throw DomainError(fmt::format("invalid pair ({}, {}) for n = {}", i, j, n));
}

std::size_t PairIndex::linear() const {
    // Pairs starting with 1..i-1 precede row i: sum_{s<i} (n - s).
    const auto n = static_cast<std::size_t>(n_);
    const auto i = static_cast<std::size_t>(i_);
    const auto j = static_cast<std::size_t>(j_);
    return (i - 1) * n - (i - 1) * i / 2 + (j - i);
}

bool PairIndex::shares_vertex(const PairIndex& other) const {
    return contains(other.i_) || contains(other.j_);
}

std::string PairIndex::to_string() const { return fmt::format("({},{})", i_, j_); }

std::size_t pair_to_linear(const PairIndex& p) { return p.linear(); }

PairIndex linear_to_pair(std::size_t k, int n) {
    const std::size_t count = pair_count(n);
    if (n < 2 || k < 1 || k > count)
        throw DomainError(fmt::format("linear index {} out of range [1, {}] for n = {}", k, count, n));
    std::size_t remaining = k;
    for (int i = 1; i < n; ++i) {
        const auto row = static_cast<std::size_t>(n - i);
        if (remaining <= row) return PairIndex(i, i + static_cast<int>(remaining), n);
        remaining -= row;
    }
    throw DomainError("unreachable pair enumeration state");
}

std::vector<PairIndex> all_pairs(int n) {
    std::vector<PairIndex> pairs;
    pairs.reserve(pair_count(n));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j, n);
    return pairs;
}

CenteringMatrix::CenteringMatrix(int n) : n_(n) {
    if (n < 2) throw DomainError(fmt::format("centering matrix needs n >= 2, got {}", n));
}

Vector CenteringMatrix::column(int i) const {
    Vector c = Vector::Constant(n_, -1.0 / n_);
    c(i - 1) += 1.0;
    return c;
}

Matrix CenteringMatrix::dense() const {
    return Matrix::Identity(n_, n_) - Matrix::Constant(n_, n_, 1.0 / n_);
}

CenteringMatrix centering_matrix(int n) { return CenteringMatrix(n); }

namespace detail {

double scale_of(const Matrix& m) {
    return m.size() == 0 ? 1.0 : std::max(1.0, m.cwiseAbs().maxCoeff());
}

void require_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols())
        throw DomainError(fmt::format("{} must be square, got {}x{}", what, m.rows(), m.cols()));
}

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) throw DomainError(fmt::format("{} has non-finite entries", what));
}

void require_symmetric(const Matrix& m, double tol, const char* what) {
    const double limit = tol * scale_of(m);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = r + 1; c < m.cols(); ++c)
            if (std::abs(m(r, c) - m(c, r)) > limit)
                throw DomainError(fmt::format("{} is not symmetric at ({}, {})", what, r + 1, c + 1));
}

void require_hollow(const Matrix& m, double tol, const char* what) {
    const double limit = tol * scale_of(m);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        if (std::abs(m(r, r)) > limit)
            throw DomainError(fmt::format("{} has nonzero diagonal at {}", what, r + 1));
}

void require_nonnegative(const Matrix& m, double tol, const char* what) {
    const double limit = tol * scale_of(m);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            if (m(r, c) < -limit)
                throw DomainError(fmt::format("{} has negative entry at ({}, {})", what, r + 1, c + 1));
}

}  // namespace detail

SquaredDistanceMatrix::SquaredDistanceMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
    constexpr const char* what = "squared distance matrix";
    detail::require_square(entries_, what);
    detail::require_finite(entries_, what);
    detail::require_symmetric(entries_, tol, what);
    detail::require_hollow(entries_, tol, what);
    detail::require_nonnegative(entries_, tol, what);
}

Vector SquaredDistanceMatrix::upper() const {
    const int n = size();
    Vector out(static_cast<Eigen::Index>(pair_count(n)));
    Eigen::Index k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out(k++) = entries_(i, j);
    return out;
}

GramMatrix::GramMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
    constexpr const char* what = "Gram matrix";
    detail::require_square(entries_, what);
    detail::require_finite(entries_, what);
    detail::require_symmetric(entries_, tol, what);
    const double limit = tol * detail::scale_of(entries_);
    for (Eigen::Index r = 0; r < entries_.rows(); ++r)
        if (std::abs(entries_.row(r).sum()) > limit)
            throw DomainError(fmt::format("Gram matrix row {} does not sum to zero", r + 1));
}

PointConfiguration::PointConfiguration(Matrix points) : points_(std::move(points)) {
    detail::require_finite(points_, "point configuration");
    if (points_.rows() <= points_.cols())
        throw DomainError(fmt::format("point configuration needs n > r, got n = {}, r = {}",
                                      points_.rows(), points_.cols()));
}

Matrix PointConfiguration::centered() const {
    if (points_.cols() == 0) return points_;
    return points_.rowwise() - points_.colwise().mean();
}

}  // namespace dualmds
