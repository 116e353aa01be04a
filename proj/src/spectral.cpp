#include "dualmds/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace dualmds {

namespace {

void require_symmetric_input(const Matrix& m, double tol) {
    detail::require_square(m, "eigen input");
    detail::require_finite(m, "eigen input");
    detail::require_symmetric(m, tol, "eigen input");
}

void fix_sign(Eigen::Ref<Vector> v) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (std::abs(v(k)) > best) {
            best = std::abs(v(k));
            pivot = k;
        }
    }
    if (v.size() > 0 && v(pivot) < 0) v = -v;
}

}  // namespace

EigenDecomposition sym_eig(const Matrix& m, double symmetry_tol) {
    require_symmetric_input(m, symmetry_tol);
    const Eigen::Index dim = m.rows();
    if (dim == 0) return {Vector(), Matrix()};

    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw DomainError("symmetric eigensolver did not converge");

    // Eigen returns ascending order.
    EigenDecomposition out{solver.eigenvalues().reverse(), solver.eigenvectors().rowwise().reverse()};
    for (Eigen::Index c = 0; c < dim; ++c) fix_sign(out.vectors.col(c));
    return out;
}

Vector sym_eigenvalues(const Matrix& m, double symmetry_tol) {
    require_symmetric_input(m, symmetry_tol);
    if (m.rows() == 0) return Vector();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw DomainError("symmetric eigensolver did not converge");
    return solver.eigenvalues().reverse();
}

SpectrumReport group_spectrum(const Vector& descending, double rel_tol) {
    SpectrumReport report{{}, descending, rel_tol};
    Eigen::Index start = 0;
    for (Eigen::Index k = 1; k <= descending.size(); ++k) {
        const bool split = k == descending.size() ||
                           std::abs(descending(k - 1) - descending(k)) >
                               rel_tol * std::max(1.0, std::abs(descending(k - 1)));
        if (!split) continue;
        const auto count = k - start;
        report.groups.push_back({descending.segment(start, count).mean(), static_cast<std::size_t>(count)});
        start = k;
    }
    return report;
}

std::vector<SpectralGroup> normalize_groups(std::vector<SpectralGroup> groups) {
    std::sort(groups.begin(), groups.end(),
              [](const SpectralGroup& a, const SpectralGroup& b) { return a.value > b.value; });
    std::vector<SpectralGroup> merged;
    for (const auto& g : groups) {
        if (!merged.empty() && merged.back().value == g.value)
            merged.back().multiplicity += g.multiplicity;
        else
            merged.push_back(g);
    }
    std::erase_if(merged, [](const SpectralGroup& g) { return g.multiplicity == 0; });
    return merged;
}

bool spectrum_matches(const SpectrumReport& observed, const std::vector<SpectralGroup>& predicted,
                      double rel_tol) {
    const auto expected = normalize_groups(predicted);
    if (expected.size() != observed.groups.size()) return false;
    // Every raw eigenvalue, not only the group mean, must sit on its prediction.
    Eigen::Index offset = 0;
    for (std::size_t k = 0; k < expected.size(); ++k) {
        if (observed.groups[k].multiplicity != expected[k].multiplicity) return false;
        const double limit = rel_tol * std::max(1.0, std::abs(expected[k].value));
        for (std::size_t m = 0; m < expected[k].multiplicity; ++m, ++offset)
            if (std::abs(observed.eigenvalues(offset) - expected[k].value) > limit) return false;
    }
    return true;
}

}  // namespace dualmds
