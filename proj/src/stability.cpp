#include "dualmds/stability.hpp"

#include "dualmds/mds.hpp"
#include "dualmds/sampling.hpp"

#include <fmt/format.h>

#include <vector>

namespace dualmds {

NoiseMatrix::NoiseMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
    constexpr const char* what = "noise matrix";
    detail::require_square(entries_, what);
    detail::require_finite(entries_, what);
    detail::require_symmetric(entries_, tol, what);
    detail::require_hollow(entries_, tol, what);
}

AmplificationFactor amplification_factor(int n, FactorOrientation orientation) {
    if (n < 2) throw DomainError(fmt::format("amplification factor needs n >= 2, got {}", n));
    // n |J_xy| is n - 1 on the diagonal and 1 elsewhere.
    const auto scaled = [n](int x, int y) -> std::int64_t { return x == y ? n - 1 : 1; };

    AmplificationFactor best{n, -1, static_cast<std::int64_t>(n) * n, 0, 0};
    std::vector<std::int64_t> suffix(static_cast<std::size_t>(n) + 1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            // row_first:    sum_{i<j} c(a,i) c(j,b)
            // column_first: sum_{i<j} c(a,j) c(i,b)
            const int outer_ref = orientation == FactorOrientation::row_first ? a : b;
            const int inner_ref = orientation == FactorOrientation::row_first ? b : a;
            suffix[n] = 0;
            for (int j = n - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + scaled(j, inner_ref);
            std::int64_t total = 0;
            for (int i = 0; i < n - 1; ++i) total += scaled(outer_ref, i) * suffix[i + 1];
            if (total > best.numerator) best = {n, total, best.denominator, a + 1, b + 1};
        }
    }
    return best;
}

GramMatrix perturbed_gram(const SquaredDistanceMatrix& d, const NoiseMatrix& noise) {
    if (d.size() != noise.size())
        throw DomainError(fmt::format("noise size {} does not match distance size {}", noise.size(), d.size()));
    const int n = d.size();
    const Matrix noisy = d.entries() + noise.entries();
    Vector upper(static_cast<Eigen::Index>(pair_count(n)));
    Eigen::Index k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) upper(k++) = noisy(i, j);
    return GramMatrix(dual_expansion(n, upper));
}

StabilityReport noise_experiment(int n, int r, double epsilon, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError(fmt::format("need at least one trial, got {}", trials));
    if (!(epsilon > 0.0)) throw DomainError(fmt::format("epsilon must be positive, got {}", epsilon));
    if (r < 1 || n <= r) throw DomainError(fmt::format("need n > r >= 1, got n = {}, r = {}", n, r));

    StabilityReport report{n, r, epsilon, seed, trials, 0.0, 0, amplification_factor(n), kNoiseBound, false};
    for (int t = 0; t < trials; ++t) {
        Engine engine = make_engine(seed, static_cast<std::uint64_t>(t));
        const PointConfiguration points(standard_normal_points(n, r, engine));
        const SquaredDistanceMatrix d = squared_distances(points);
        const NoiseMatrix noise(symmetric_hollow_uniform(n, epsilon, engine));
        const double noise_norm = noise.max_abs();
        if (noise_norm == 0.0) continue;

        const Matrix clean = dual_expansion(d).entries();
        const Matrix noisy = perturbed_gram(d, noise).entries();
        const double ratio = (noisy - clean).cwiseAbs().maxCoeff() / noise_norm;
        if (ratio > report.max_ratio) {
            report.max_ratio = ratio;
            report.worst_trial = t;
        }
    }
    report.pass = report.max_ratio < report.bound && report.max_ratio <= report.factor.value() + 1e-12;
    return report;
}

}  // namespace dualmds
