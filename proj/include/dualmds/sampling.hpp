#pragma once

// Seeded random inputs. All randomness in the library flows through these.

#include "dualmds/pairspace.hpp"

#include <cstdint>
#include <random>

namespace dualmds {

using Engine = std::mt19937_64;

/// Generator for stream `stream` of master seed `seed`.
Engine make_engine(std::uint64_t seed, std::uint64_t stream = 0);

/// n x r matrix of independent standard normal coordinates.
Matrix standard_normal_points(int n, int r, Engine& engine);

/// Symmetric hollow matrix with upper entries uniform in [-epsilon, epsilon].
Matrix symmetric_hollow_uniform(int n, double epsilon, Engine& engine);

/// Symmetric matrix with entries uniform in [-1, 1].
Matrix random_symmetric(int n, Engine& engine);

}  // namespace dualmds
