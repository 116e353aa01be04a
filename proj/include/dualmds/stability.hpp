#pragma once

// Entrywise stability of the map D -> X under additive noise on D.

#include "dualmds/pairspace.hpp"

#include <cstdint>

namespace dualmds {

inline constexpr double kNoiseBound = 4.0;

/// Symmetric, hollow perturbation of a squared distance matrix. Entries may be
/// negative.
class NoiseMatrix {
public:
    explicit NoiseMatrix(Matrix entries, double tol = kValidationTol);

    const Matrix& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.rows()); }
    double max_abs() const { return entries_.size() == 0 ? 0.0 : entries_.cwiseAbs().maxCoeff(); }

private:
    Matrix entries_;
};

/// max over (a, b) of sum_{i<j} |J_ai J_jb|, held exactly as
/// numerator / n^2 (n |J| has entries n - 1 and 1, so n^2 times the sum is an
/// integer). argmax_a, argmax_b are 1-based and lexicographically first.
struct AmplificationFactor {
    int n;
    std::int64_t numerator;
    std::int64_t denominator;
    int argmax_a;
    int argmax_b;

    double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    /// Exact comparison factor < bound for an integer bound.
    bool below(std::int64_t bound) const { return numerator < bound * denominator; }
};

enum class FactorOrientation {
    row_first,   // |J_ai J_jb|
    column_first // |J_aj J_ib|
};

AmplificationFactor amplification_factor(int n, FactorOrientation orientation = FactorOrientation::row_first);

/// X_bar = dual expansion of D + noise.
GramMatrix perturbed_gram(const SquaredDistanceMatrix& d, const NoiseMatrix& noise);

struct StabilityReport {
    int n;
    int r;
    double epsilon;
    std::uint64_t seed;
    int trials;
    double max_ratio;       // max over trials of ||X_bar - X||_inf / ||noise||_inf
    int worst_trial;        // 0-based
    AmplificationFactor factor;
    double bound;
    bool pass;
};

/// Random trials with standard-normal points and noise uniform in
/// [-epsilon, epsilon]. Trial t draws from its own generator seeded from
/// (seed, t), so results do not depend on evaluation order.
StabilityReport noise_experiment(int n, int r, double epsilon, int trials, std::uint64_t seed);

}  // namespace dualmds
