#include "dualmds/sampling.hpp"

namespace dualmds {

Engine make_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Engine(seq);
}

Matrix standard_normal_points(int n, int r, Engine& engine) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix p(n, r);
    // Row-major fill so a point's coordinates are drawn together.
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < r; ++c) p(i, c) = normal(engine);
    return p;
}

Matrix symmetric_hollow_uniform(int n, double epsilon, Engine& engine) {
    std::uniform_real_distribution<double> uniform(-epsilon, epsilon);
    Matrix m = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = uniform(engine);
    return m;
}

Matrix random_symmetric(int n, Engine& engine) {
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(engine);
    return m;
}

}  // namespace dualmds
