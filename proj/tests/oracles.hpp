#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's numerical routines.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Lexicographic pairs, 0-based.
inline std::vector<std::pair<int, int>> pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

inline Matrix centering(int n) {
    Matrix j(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) j(r, c) = (r == c ? 1.0 : 0.0) - 1.0 / n;
    return j;
}

inline Matrix basis_atom(int n, int i, int j) {
    Matrix w = Matrix::Zero(n, n);
    w(i, i) = w(j, j) = 1.0;
    w(i, j) = w(j, i) = -1.0;
    return w;
}

/// trace(a^T b) by explicit summation.
inline double trace_inner(const Matrix& a, const Matrix& b) {
    double s = 0.0;
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c) s += a(r, c) * b(r, c);
    return s;
}

/// H from trace inner products of explicit atoms.
inline Matrix gram_of_atoms(int n) {
    const auto ps = pairs(n);
    std::vector<Matrix> atoms;
    for (auto [i, j] : ps) atoms.push_back(basis_atom(n, i, j));
    Matrix h(ps.size(), ps.size());
    for (std::size_t r = 0; r < ps.size(); ++r)
        for (std::size_t c = 0; c < ps.size(); ++c) h(r, c) = trace_inner(atoms[r], atoms[c]);
    return h;
}

/// Dual atoms through the definition v_a = sum_b [H^-1]_ab w_b, inverting H
/// with a full-pivot LU.
inline std::vector<Matrix> duals_via_inverse(int n) {
    const auto ps = pairs(n);
    const Matrix h_inv = gram_of_atoms(n).fullPivLu().inverse();
    std::vector<Matrix> out;
    for (std::size_t a = 0; a < ps.size(); ++a) {
        Matrix v = Matrix::Zero(n, n);
        for (std::size_t b = 0; b < ps.size(); ++b) v += h_inv(a, b) * basis_atom(n, ps[b].first, ps[b].second);
        out.push_back(v);
    }
    return out;
}

/// Row and column means: X_ab = -1/2 (D_ab - mean_a. - mean_.b + mean..).
inline Matrix double_center_by_means(const Matrix& d) {
    const Eigen::Index n = d.rows();
    const Vector row = d.rowwise().mean();
    const Vector col = d.colwise().mean().transpose();
    const double all = d.mean();
    Matrix x(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) x(a, b) = -0.5 * (d(a, b) - row(a) - col(b) + all);
    return x;
}

/// Cyclic Jacobi eigenvalue iteration for symmetric matrices. Eigenvalues
/// descending.
inline Vector jacobi_eigenvalues(Matrix a, int sweeps = 100) {
    const Eigen::Index n = a.rows();
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-30 * std::max(1.0, a.squaredNorm())) break;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> values;
    for (Eigen::Index k = 0; k < n; ++k) values.push_back(a(k, k));
    std::sort(values.rbegin(), values.rend());
    Vector out(n);
    for (Eigen::Index k = 0; k < n; ++k) out(k) = values[k];
    return out;
}

/// n^2 * max_{a,b} sum_{i<j} |J_ai J_jb| by direct enumeration of every
/// (a, b, i, j) with integer entries n J = n I - 1 1^T.
inline std::int64_t amplification_numerator(int n, bool mirrored = false) {
    auto nj = [n](int x, int y) -> std::int64_t { return x == y ? n - 1 : -1; };
    std::int64_t best = -1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::int64_t s = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const std::int64_t term = mirrored ? nj(a, j) * nj(i, b) : nj(a, i) * nj(j, b);
                    s += term < 0 ? -term : term;
                }
            best = std::max(best, s);
        }
    return best;
}

/// Every triangle inequality D_xy - D_xz - D_zy <= 0 with x < y and z outside
/// {x, y}, as a sign vector over lexicographic pairs.
inline std::set<std::vector<int>> triangle_rows(int n) {
    const auto ps = pairs(n);
    auto column = [&ps](int u, int v) {
        const auto key = std::make_pair(std::min(u, v), std::max(u, v));
        return static_cast<std::size_t>(std::find(ps.begin(), ps.end(), key) - ps.begin());
    };
    std::set<std::vector<int>> rows;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                std::vector<int> row(ps.size(), 0);
                row[column(x, y)] = 1;
                row[column(x, z)] = -1;
                row[column(y, z)] = -1;
                rows.insert(row);
            }
    return rows;
}

}  // namespace oracle
