#pragma once

// Headerless CSV matrices (one row per line) and the sparse triplet format
// `row col sign` used for the constraint matrix.

#include "dualmds/pairspace.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dualmds {

class ConstraintMatrix;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

Matrix parse_csv(std::string_view text);
Matrix read_csv(const std::filesystem::path& path);

std::string to_csv(const Matrix& m);
std::string to_csv(const IntMatrix& m);
void write_text(const std::filesystem::path& path, std::string_view text);
void write_csv(const std::filesystem::path& path, const Matrix& m);
void write_csv(const std::filesystem::path& path, const IntMatrix& m);

/// 1-based `row col sign` lines sorted by (row, col).
std::string to_triplets(const ConstraintMatrix& a);

}  // namespace dualmds
