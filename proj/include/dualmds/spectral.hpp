#pragma once

#include "dualmds/pairspace.hpp"

#include <cstddef>
#include <vector>

namespace dualmds {

inline constexpr double kGroupingTol = 1e-8;

/// Eigenvalues in descending order with matching orthonormal eigenvector columns.
struct EigenDecomposition {
    Vector values;
    Matrix vectors;
};

/// An eigenvalue (or singular value) together with its multiplicity.
struct SpectralGroup {
    double value;
    std::size_t multiplicity;
};

struct SpectrumReport {
    std::vector<SpectralGroup> groups;  // strictly decreasing representatives
    Vector eigenvalues;                 // descending
    double rel_tol;

    std::size_t dimension() const { return static_cast<std::size_t>(eigenvalues.size()); }
};

/// Symmetric eigendecomposition. Each eigenvector is flipped so that its
/// largest-magnitude component (lowest index on ties) is positive, which
/// makes the output reproducible for identical input.
EigenDecomposition sym_eig(const Matrix& m, double symmetry_tol = kValidationTol);

/// Eigenvalues only, descending.
Vector sym_eigenvalues(const Matrix& m, double symmetry_tol = kValidationTol);

/// Merges adjacent eigenvalues that differ by at most rel_tol * max(1, |value|).
SpectrumReport group_spectrum(const Vector& descending, double rel_tol = kGroupingTol);

/// Sorts groups by value, merges equal values and drops zero multiplicities.
std::vector<SpectralGroup> normalize_groups(std::vector<SpectralGroup> groups);

/// True when the observed grouping has the same multiplicities as the
/// prediction and every representative agrees within rel_tol.
bool spectrum_matches(const SpectrumReport& observed, const std::vector<SpectralGroup>& predicted,
                      double rel_tol = kGroupingTol);

}  // namespace dualmds
