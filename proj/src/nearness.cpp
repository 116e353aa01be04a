#include "dualmds/nearness.hpp"

#include "dualmds/basis.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace dualmds {

DissimilarityMatrix::DissimilarityMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
    constexpr const char* what = "dissimilarity matrix";
    detail::require_square(entries_, what);
    detail::require_finite(entries_, what);
    detail::require_symmetric(entries_, tol, what);
    detail::require_hollow(entries_, tol, what);
    detail::require_nonnegative(entries_, tol, what);
}

std::string TripleConstraint::label() const {
    return fmt::format("(p{},p{},p{})", positive.i(), positive.j(), apex);
}

ConstraintMatrix::ConstraintMatrix(int n) : n_(n) {
    if (n < 3) throw DomainError(fmt::format("constraint matrix needs n >= 3, got {}", n));
    const auto pair = [n](int x, int y) { return PairIndex(std::min(x, y), std::max(x, y), n); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                constraints_.push_back({pair(i, j), pair(i, k), pair(j, k), k});
                constraints_.push_back({pair(i, k), pair(i, j), pair(j, k), j});
                constraints_.push_back({pair(j, k), pair(i, j), pair(i, k), i});
            }

    entries_.reserve(3 * constraints_.size());
    for (std::size_t r = 0; r < constraints_.size(); ++r) {
        const auto& c = constraints_[r];
        std::vector<SignedEntry> row = {{r + 1, c.positive.linear(), +1},
                                        {r + 1, c.negative_first.linear(), -1},
                                        {r + 1, c.negative_second.linear(), -1}};
        std::sort(row.begin(), row.end(), [](const SignedEntry& a, const SignedEntry& b) { return a.col < b.col; });
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

IntMatrix ConstraintMatrix::dense() const {
    IntMatrix a = IntMatrix::Zero(static_cast<Eigen::Index>(rows()), static_cast<Eigen::Index>(cols()));
    for (const auto& e : entries_) a(e.row - 1, e.col - 1) = e.sign;
    return a;
}

IntMatrix ConstraintMatrix::normal_matrix() const {
    if (cols() > kDensePairCap)
        throw ResourceError(fmt::format("L = {} exceeds the dense cap of {} pairs", cols(), kDensePairCap));
    const auto count = static_cast<Eigen::Index>(cols());
    IntMatrix ata = IntMatrix::Zero(count, count);
    // Entries are grouped by row, three per row.
    for (std::size_t start = 0; start < entries_.size(); start += 3)
        for (std::size_t p = start; p < start + 3; ++p)
            for (std::size_t q = start; q < start + 3; ++q)
                ata(entries_[p].col - 1, entries_[q].col - 1) += entries_[p].sign * entries_[q].sign;
    return ata;
}

Vector ConstraintMatrix::apply(const Vector& x) const {
    if (static_cast<std::size_t>(x.size()) != cols())
        throw DomainError(fmt::format("vector length {} does not match L = {}", x.size(), cols()));
    Vector y = Vector::Zero(static_cast<Eigen::Index>(rows()));
    for (const auto& e : entries_) y(e.row - 1) += e.sign * x(e.col - 1);
    return y;
}

std::optional<std::size_t> ConstraintMatrix::find_row(int x, int y, int z) const {
    for (std::size_t r = 0; r < constraints_.size(); ++r) {
        const auto& c = constraints_[r];
        if (c.apex == z && c.positive.contains(x) && c.positive.contains(y) && x != y) return r + 1;
    }
    return std::nullopt;
}

ConstraintMatrix constraint_matrix(int n) { return ConstraintMatrix(n); }

IdentityCheck gram_identity_check(int n) {
    const ConstraintMatrix a(n);
    const IntMatrix ata = a.normal_matrix();
    const IntMatrix h = basis_gram(n).entries();
    const auto count = static_cast<Eigen::Index>(a.cols());
    const IntMatrix expected = (3 * n - 2) * IntMatrix::Identity(count, count) - h;
    const long long deviation = (ata - expected).cwiseAbs().maxCoeff();
    return {deviation == 0, deviation};
}

std::vector<SpectralGroup> predicted_singular_values(int n) {
    if (n < 3) throw DomainError(fmt::format("constraint matrix needs n >= 3, got {}", n));
    const auto first = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 3) / 2;
    std::vector<SpectralGroup> groups = {{std::sqrt(3.0 * n - 4.0), first},
                                         {std::sqrt(2.0 * n - 2.0), static_cast<std::size_t>(n - 1)},
                                         {std::sqrt(n - 2.0), 1}};
    std::erase_if(groups, [](const SpectralGroup& g) { return g.multiplicity == 0; });
    return groups;
}

std::vector<Violation> violations(const DissimilarityMatrix& d, double tol) {
    const int n = d.size();
    if (n < 3) return {};
    const ConstraintMatrix a(n);
    Vector upper(static_cast<Eigen::Index>(pair_count(n)));
    Eigen::Index k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) upper(k++) = d.entries()(i, j);
    const Vector slack = a.apply(upper);
    std::vector<Violation> out;
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (slack(static_cast<Eigen::Index>(r)) > tol) out.push_back({r + 1, a.constraints()[r], slack(static_cast<Eigen::Index>(r))});
    return out;
}

}  // namespace dualmds
