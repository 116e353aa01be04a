#include "dualmds/basis.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <utility>

namespace dualmds {

namespace {

void require_same_n(const PairIndex& alpha, const PairIndex& beta) {
    if (alpha.n() != beta.n())
        throw DomainError(fmt::format("pairs {} and {} belong to different n ({} vs {})", alpha.to_string(),
                                      beta.to_string(), alpha.n(), beta.n()));
}

std::size_t checked_pair_count(int n, std::size_t dense_cap) {
    if (n < 2) throw DomainError(fmt::format("need n >= 2, got {}", n));
    const std::size_t count = pair_count(n);
    if (count > dense_cap)
        throw ResourceError(fmt::format("L = {} exceeds the dense cap of {} pairs", count, dense_cap));
    return count;
}

}  // namespace

IntMatrix BasisAtom::dense() const {
    const int n = alpha_.n();
    const int i = alpha_.i() - 1;
    const int j = alpha_.j() - 1;
    IntMatrix w = IntMatrix::Zero(n, n);
    w(i, i) = 1;
    w(j, j) = 1;
    w(i, j) = -1;
    w(j, i) = -1;
    return w;
}

double BasisAtom::inner(const Matrix& x) const {
    const int i = alpha_.i() - 1;
    const int j = alpha_.j() - 1;
    return x(i, i) + x(j, j) - x(i, j) - x(j, i);
}

DualAtom::DualAtom(PairIndex alpha) : alpha_(alpha) {
    const CenteringMatrix centering(alpha_.n());
    a_ = centering.column(alpha_.i());
    b_ = centering.column(alpha_.j());
}

Matrix DualAtom::dense() const { return -0.5 * (a_ * b_.transpose() + b_ * a_.transpose()); }

void DualAtom::accumulate(double scale, Matrix& target) const {
    target.noalias() -= (0.5 * scale) * (a_ * b_.transpose() + b_ * a_.transpose());
}

double DualAtom::inner(const BasisAtom& w) const {
    // <w_(k,l), -1/2 (ab^T + ba^T)> = a_k b_l + a_l b_k - a_k b_k - a_l b_l
    const int k = w.alpha().i() - 1;
    const int l = w.alpha().j() - 1;
    return a_(k) * b_(l) + a_(l) * b_(k) - a_(k) * b_(k) - a_(l) * b_(l);
}

double DualAtom::inner(const DualAtom& other) const {
    const double ac = a_.dot(other.a_);
    const double bd = b_.dot(other.b_);
    const double ad = a_.dot(other.b_);
    const double bc = b_.dot(other.a_);
    return 0.5 * (ac * bd + ad * bc);
}

BasisAtom basis_atom(const PairIndex& alpha) { return BasisAtom(alpha); }

DualAtom dual_atom(const PairIndex& alpha) { return DualAtom(alpha); }

std::array<EigenPair, 2> dual_atom_eigenpairs(const PairIndex& alpha) {
    const DualAtom v(alpha);
    const double n = alpha.n();
    return {EigenPair{0.5, v.a() - v.b()}, EigenPair{-0.5 + 1.0 / n, v.a() + v.b()}};
}

int basis_gram_entry(const PairIndex& alpha, const PairIndex& beta) {
    require_same_n(alpha, beta);
    if (alpha == beta) return 4;
    return alpha.shares_vertex(beta) ? 1 : 0;
}

BasisGram basis_gram(int n, std::size_t dense_cap) {
    const auto count = static_cast<Eigen::Index>(checked_pair_count(n, dense_cap));
    const auto pairs = all_pairs(n);
    IntMatrix h(count, count);
    for (Eigen::Index r = 0; r < count; ++r)
        for (Eigen::Index c = 0; c < count; ++c) h(r, c) = basis_gram_entry(pairs[r], pairs[c]);
    return BasisGram(n, std::move(h));
}

Vector basis_gram_apply(int n, const Vector& x) {
    if (n < 2) throw DomainError(fmt::format("need n >= 2, got {}", n));
    if (static_cast<std::size_t>(x.size()) != pair_count(n))
        throw DomainError(fmt::format("vector length {} does not match L = {}", x.size(), pair_count(n)));
    // Row (i,j) of H: 4 x_ij + sum over pairs touching i or j, excluding (i,j)
    // itself twice, = 2 x_ij + s_i + s_j.
    Vector vertex_sums = Vector::Zero(n);
    Eigen::Index k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            vertex_sums(i) += x(k);
            vertex_sums(j) += x(k);
        }
    Vector y(x.size());
    k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) y(k) = 2.0 * x(k) + vertex_sums(i) + vertex_sums(j);
    return y;
}

IntMatrix triangular_graph_adjacency(int n, std::size_t dense_cap) {
    const auto count = static_cast<Eigen::Index>(checked_pair_count(n, dense_cap));
    IntMatrix adjacency = IntMatrix::Zero(count, count);
    // Edges of K_n meeting at vertex v form a clique in T_n.
    for (int v = 1; v <= n; ++v) {
        std::vector<Eigen::Index> incident;
        for (int u = 1; u <= n; ++u) {
            if (u == v) continue;
            incident.push_back(static_cast<Eigen::Index>(PairIndex(std::min(u, v), std::max(u, v), n).linear()) - 1);
        }
        for (auto p : incident)
            for (auto q : incident)
                if (p != q) adjacency(p, q) = 1;
    }
    return adjacency;
}

std::vector<SpectralGroup> h_spectrum_predicted(int n) {
    if (n < 2) throw DomainError(fmt::format("need n >= 2, got {}", n));
    const auto count = static_cast<long long>(pair_count(n));
    // At n = 2 the count L - n = -1 for eigenvalue 2 cancels against the
    // n - 1 = 1 copies of eigenvalue n = 2, so merge before dropping.
    const std::pair<double, long long> raw[] = {{2.0, count - n}, {double(n), n - 1}, {2.0 * n, 1}};
    std::vector<std::pair<double, long long>> merged;
    for (const auto& [value, multiplicity] : raw) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& g) { return g.first == value; });
        if (it == merged.end()) merged.emplace_back(value, multiplicity);
        else it->second += multiplicity;
    }
    std::vector<SpectralGroup> groups;
    for (const auto& [value, multiplicity] : merged)
        if (multiplicity > 0) groups.push_back({value, static_cast<std::size_t>(multiplicity)});
    return groups;
}

double dual_gram_entry(const PairIndex& alpha, const PairIndex& beta) {
    require_same_n(alpha, beta);
    return DualAtom(alpha).inner(DualAtom(beta));
}

double dual_gram_closed_form(const PairIndex& alpha, const PairIndex& beta) {
    require_same_n(alpha, beta);
    const CenteringMatrix j(alpha.n());
    return 0.5 * (j.entry(alpha.i(), beta.i()) * j.entry(alpha.j(), beta.j()) +
                  j.entry(alpha.i(), beta.j()) * j.entry(alpha.j(), beta.i()));
}

Matrix dual_gram(int n, std::size_t dense_cap) {
    const auto count = static_cast<Eigen::Index>(checked_pair_count(n, dense_cap));
    const auto pairs = all_pairs(n);
    std::vector<DualAtom> atoms;
    atoms.reserve(pairs.size());
    for (const auto& p : pairs) atoms.emplace_back(p);
    Matrix inverse(count, count);
    for (Eigen::Index r = 0; r < count; ++r)
        for (Eigen::Index c = r; c < count; ++c) inverse(r, c) = inverse(c, r) = atoms[r].inner(atoms[c]);
    return inverse;
}

}  // namespace dualmds
