#pragma once

// Worked n = 4 objects: w_(1,2), 16 v_(1,2), H, 16 H^-1, and the labelled
// rows of the triangle constraint matrix.

#include <array>

namespace dualmds::fixtures {

inline constexpr int kFixtureN = 4;
inline constexpr int kFixtureScale = 16;

inline constexpr std::array<std::array<int, 4>, 4> kW12 = {{
    {1, -1, 0, 0},
    {-1, 1, 0, 0},
    {0, 0, 0, 0},
    {0, 0, 0, 0},
}};

inline constexpr std::array<std::array<int, 4>, 4> kV12Times16 = {{
    {3, -5, 1, 1},
    {-5, 3, 1, 1},
    {1, 1, -1, -1},
    {1, 1, -1, -1},
}};

inline constexpr std::array<std::array<int, 6>, 6> kH = {{
    {4, 1, 1, 1, 1, 0},
    {1, 4, 1, 1, 0, 1},
    {1, 1, 4, 0, 1, 1},
    {1, 1, 0, 4, 1, 1},
    {1, 0, 1, 1, 4, 1},
    {0, 1, 1, 1, 1, 4},
}};

inline constexpr std::array<std::array<int, 6>, 6> kHInverseTimes16 = {{
    {5, -1, -1, -1, -1, 1},
    {-1, 5, -1, -1, 1, -1},
    {-1, -1, 5, 1, -1, -1},
    {-1, -1, 1, 5, -1, -1},
    {-1, 1, -1, -1, 5, -1},
    {1, -1, -1, -1, -1, 5},
}};

/// A labelled constraint row: label (p_x, p_y, p_z) and its six signs over
/// the pair columns (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
struct ConstraintRow {
    int x, y, z;
    std::array<int, 6> signs;
};

inline constexpr std::array<ConstraintRow, 4> kConstraintRows = {{
    {1, 2, 3, {1, -1, 0, -1, 0, 0}},
    {1, 3, 2, {-1, 1, 0, -1, 0, 0}},
    {2, 3, 1, {-1, -1, 0, 1, 0, 0}},
    {2, 3, 4, {0, 0, 0, 1, -1, -1}},
}};

}  // namespace dualmds::fixtures
