#pragma once

// Triangle-inequality constraint matrix A. One row per (vertex triple, choice
// of the positive edge): D_ik - D_ij - D_jk <= 0. Plain distances only; the
// squared distances used elsewhere have a separate type.

#include "dualmds/pairspace.hpp"
#include "dualmds/spectral.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dualmds {

/// Nonnegative symmetric hollow matrix of plain (not squared) distances.
class DissimilarityMatrix {
public:
    explicit DissimilarityMatrix(Matrix entries, double tol = kValidationTol);

    const Matrix& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.rows()); }
    double at(const PairIndex& p) const { return entries_(p.i() - 1, p.j() - 1); }

private:
    Matrix entries_;
};

/// D(positive) - D(negative[0]) - D(negative[1]) <= 0. Labelled (p_x, p_y, p_z)
/// where (x, y) is the positive pair and z the remaining vertex.
struct TripleConstraint {
    PairIndex positive;
    PairIndex negative_first;
    PairIndex negative_second;
    int apex;  // the vertex outside the positive pair

    std::string label() const;
};

/// A single nonzero of A, 1-based.
struct SignedEntry {
    std::size_t row;
    std::size_t col;
    int sign;
};

class ConstraintMatrix {
public:
    explicit ConstraintMatrix(int n);

    int n() const { return n_; }
    std::size_t rows() const { return constraints_.size(); }
    std::size_t cols() const { return pair_count(n_); }

    const std::vector<TripleConstraint>& constraints() const { return constraints_; }
    /// Sorted by (row, col).
    const std::vector<SignedEntry>& entries() const { return entries_; }

    IntMatrix dense() const;
    /// A^T A, accumulated in integers from the triplets.
    IntMatrix normal_matrix() const;
    /// A x for x indexed by pair order.
    Vector apply(const Vector& x) const;

    /// 1-based row with label (p_x, p_y, p_z), if any.
    std::optional<std::size_t> find_row(int x, int y, int z) const;

private:
    int n_;
    std::vector<TripleConstraint> constraints_;
    std::vector<SignedEntry> entries_;
};

/// Triples {i<j<k} in lexicographic order, each contributing rows with
/// positive pair (i,j), then (i,k), then (j,k).
ConstraintMatrix constraint_matrix(int n);

struct IdentityCheck {
    bool holds;
    long long max_deviation;
};

/// Compares A^T A against (3n - 2) I - H exactly.
IdentityCheck gram_identity_check(int n);

/// [(sqrt(3n-4), n(n-3)/2), (sqrt(2n-2), n-1), (sqrt(n-2), 1)], empty groups
/// dropped.
std::vector<SpectralGroup> predicted_singular_values(int n);

struct Violation {
    std::size_t row;  // 1-based
    TripleConstraint constraint;
    double slack;
};

/// Rows of A whose value on the upper triangle of D exceeds tol, ordered by row.
std::vector<Violation> violations(const DissimilarityMatrix& d, double tol = 0.0);

}  // namespace dualmds
