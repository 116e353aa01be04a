#include "dualmds/csv.hpp"

#include "dualmds/nearness.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace dualmds {

std::string format_double(double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (ec != std::errc()) throw IoError("could not format floating-point value");
    return std::string(buffer, end);
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_field(std::string_view field, std::size_t line, std::size_t column) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError(fmt::format("line {}, column {}: '{}' is not a number", line, column, field));
    return value;
}

}  // namespace

Matrix parse_csv(std::string_view text) {
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
        ++line_no;
        if (trim(line).empty()) continue;

        std::vector<double> row;
        std::size_t column = 0;
        while (true) {
            const auto comma = line.find(',');
            row.push_back(parse_field(line.substr(0, comma), line_no, ++column));
            if (comma == std::string_view::npos) break;
            line.remove_prefix(comma + 1);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError(fmt::format("line {}: expected {} fields, found {}", line_no, rows.front().size(), row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no data rows");

    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
}

Matrix read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

std::string to_csv(const Matrix& m) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ',';
            out += format_double(m(r, c));
        }
        out += '\n';
    }
    return out;
}

std::string to_csv(const IntMatrix& m) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ',';
            out += std::to_string(m(r, c));
        }
        out += '\n';
    }
    return out;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
    out << text;
    if (!out.flush()) throw IoError(fmt::format("failed writing '{}'", path.string()));
}

void write_csv(const std::filesystem::path& path, const Matrix& m) { write_text(path, to_csv(m)); }

void write_csv(const std::filesystem::path& path, const IntMatrix& m) { write_text(path, to_csv(m)); }

std::string to_triplets(const ConstraintMatrix& a) {
    std::string out;
    for (const auto& e : a.entries()) out += fmt::format("{} {} {}\n", e.row, e.col, e.sign);
    return out;
}

}  // namespace dualmds
