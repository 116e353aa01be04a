#pragma once

// Basis atoms w_a, their dyadic duals v_a, and the inner-product matrix H of
// the w family over zero-centered symmetric matrices.

#include "dualmds/pairspace.hpp"
#include "dualmds/spectral.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace dualmds {

/// Dense builders refuse L above this many pairs (L x L doubles ~ 3.2 GB).
inline constexpr std::size_t kDensePairCap = 20000;

/// w_a = e_ii + e_jj - e_ij - e_ji for a = (i, j).
class BasisAtom {
public:
    explicit BasisAtom(PairIndex alpha) : alpha_(alpha) {}

    const PairIndex& alpha() const { return alpha_; }
    IntMatrix dense() const;
    /// <X, w_a> = X_ii + X_jj - X_ij - X_ji.
    double inner(const Matrix& x) const;

private:
    PairIndex alpha_;
};

/// v_a = -1/2 (a b^T + b a^T) with a = J(:, i), b = J(:, j). Stored as its
/// two factors; the n x n matrix is built on request.
class DualAtom {
public:
    explicit DualAtom(PairIndex alpha);

    const PairIndex& alpha() const { return alpha_; }
    const Vector& a() const { return a_; }
    const Vector& b() const { return b_; }

    Matrix dense() const;
    /// Adds scale * v_a into target without materialising v_a.
    void accumulate(double scale, Matrix& target) const;
    /// <v_a, w_b>, evaluated from the factors.
    double inner(const BasisAtom& w) const;
    /// <v_a, v_b> = 1/2 ((a.c)(b.d) + (a.d)(b.c)) for v_b = -1/2 (c d^T + d c^T).
    double inner(const DualAtom& other) const;

private:
    PairIndex alpha_;
    Vector a_;
    Vector b_;
};

BasisAtom basis_atom(const PairIndex& alpha);
DualAtom dual_atom(const PairIndex& alpha);

struct EigenPair {
    double value;
    Vector vector;
};

/// The two nonzero eigenpairs of v_a: (1/2, a - b) and (-1/2 + 1/n, a + b).
/// At n = 2 the second eigenvalue is zero and v_a has rank one.
std::array<EigenPair, 2> dual_atom_eigenpairs(const PairIndex& alpha);

/// H with H(a, b) = <w_a, w_b>: 4 on the diagonal, 1 when the pairs share a
/// vertex, 0 otherwise. Entries are integers.
class BasisGram {
public:
    BasisGram(int n, IntMatrix entries) : n_(n), entries_(std::move(entries)) {}

    int n() const { return n_; }
    const IntMatrix& entries() const { return entries_; }
    Matrix real() const { return entries_.cast<double>(); }

private:
    int n_;
    IntMatrix entries_;
};

/// <w_a, w_b> by the case rule.
int basis_gram_entry(const PairIndex& alpha, const PairIndex& beta);

/// Dense H. Throws ResourceError when L exceeds dense_cap.
BasisGram basis_gram(int n, std::size_t dense_cap = kDensePairCap);

/// y = H x without forming H: (H x)_(i,j) = 2 x_ij + s_i + s_j, where s_v sums
/// x over the pairs that contain vertex v.
Vector basis_gram_apply(int n, const Vector& x);

/// Adjacency of the triangular graph T_n (line graph of K_n), built by joining
/// all edges of K_n incident to each vertex.
IntMatrix triangular_graph_adjacency(int n, std::size_t dense_cap = kDensePairCap);

/// [(2, L - n), (n, n - 1), (2n, 1)], normalised (equal values merged, empty
/// groups dropped).
std::vector<SpectralGroup> h_spectrum_predicted(int n);

/// [H^-1](a, b) = <v_a, v_b>, from the dyadic factors.
double dual_gram_entry(const PairIndex& alpha, const PairIndex& beta);

/// Closed form of dual_gram_entry: 1/2 (J_ik J_jl + J_il J_jk) for a = (i, j),
/// b = (k, l). Equals ((n-1)^2 + 1) / (2n^2) on the diagonal, (2 - n) / (2n^2)
/// when one vertex is shared, and 1 / n^2 for disjoint pairs.
double dual_gram_closed_form(const PairIndex& alpha, const PairIndex& beta);

/// Dense H^-1 assembled from dual_gram_entry.
Matrix dual_gram(int n, std::size_t dense_cap = kDensePairCap);

}  // namespace dualmds
