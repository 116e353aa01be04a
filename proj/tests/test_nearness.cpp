#include <doctest.h>

#include "dualmds/basis.hpp"
#include "dualmds/fixtures.hpp"
#include "dualmds/nearness.hpp"
#include "oracles.hpp"

#include <Eigen/SVD>

#include <cmath>

using namespace dualmds;

TEST_CASE("n = 4 constraint matrix") {
    const ConstraintMatrix a(4);
    CHECK(a.rows() == 12);
    CHECK(a.cols() == 6);
    CHECK(a.entries().size() == 36);

    const IntMatrix dense = a.dense();
    for (const auto& row : fixtures::kConstraintRows) {
        const auto index = a.find_row(row.x, row.y, row.z);
        REQUIRE(index.has_value());
        for (std::size_t c = 0; c < row.signs.size(); ++c)
            CHECK(dense(static_cast<Eigen::Index>(*index - 1), static_cast<Eigen::Index>(c)) == row.signs[c]);
    }
    CHECK(a.find_row(2, 3, 4) == std::size_t{10});
    CHECK(a.constraints()[9].label() == "(p2,p3,p4)");
    CHECK(a.constraints()[0].label() == "(p1,p2,p3)");
    CHECK_FALSE(a.find_row(1, 2, 2).has_value());
    CHECK_FALSE(a.find_row(1, 2, 5).has_value());
}

TEST_CASE("constraint matrix structure for n in [3, 12]") {
    for (int n = 3; n <= 12; ++n) {
        const ConstraintMatrix a = constraint_matrix(n);
        CHECK(a.rows() == 3 * static_cast<std::size_t>(n * (n - 1) * (n - 2) / 6));
        CHECK(a.cols() == pair_count(n));
        const IntMatrix dense = a.dense();
        for (Eigen::Index r = 0; r < dense.rows(); ++r) {
            CHECK((dense.row(r).array() == 1).count() == 1);
            CHECK((dense.row(r).array() == -1).count() == 2);
            CHECK(dense.row(r).cwiseAbs().sum() == 3);
        }
        for (Eigen::Index c = 0; c < dense.cols(); ++c) CHECK(dense.col(c).cwiseAbs().sum() == 3 * (n - 2));

        for (std::size_t k = 1; k < a.entries().size(); ++k) {
            const auto& prev = a.entries()[k - 1];
            const auto& cur = a.entries()[k];
            CHECK((prev.row < cur.row || (prev.row == cur.row && prev.col < cur.col)));
        }
    }
}

TEST_CASE("rows are exactly the triangle inequalities") {
    for (int n = 3; n <= 8; ++n) {
        const IntMatrix dense = constraint_matrix(n).dense();
        std::set<std::vector<int>> rows;
        for (Eigen::Index r = 0; r < dense.rows(); ++r) {
            std::vector<int> row;
            for (Eigen::Index c = 0; c < dense.cols(); ++c) row.push_back(dense(r, c));
            rows.insert(row);
        }
        CHECK(rows.size() == static_cast<std::size_t>(dense.rows()));
        CHECK(rows == oracle::triangle_rows(n));
    }
}

TEST_CASE("A^T A = (3n - 2) I - H for n in [3, 25]") {
    for (int n = 3; n <= 25; ++n) {
        const auto check = gram_identity_check(n);
        CHECK(check.holds);
        CHECK(check.max_deviation == 0);
    }
    const IntMatrix normal = constraint_matrix(4).normal_matrix();
    const IntMatrix expected = 10 * IntMatrix::Identity(6, 6) - basis_gram(4).entries();
    CHECK(normal == expected);
    CHECK(normal == constraint_matrix(4).dense().transpose() * constraint_matrix(4).dense());
}

TEST_CASE("singular values") {
    const auto predicted = predicted_singular_values(5);
    REQUIRE(predicted.size() == 3);
    CHECK(predicted[0].value == doctest::Approx(std::sqrt(11.0)));
    CHECK(predicted[0].multiplicity == 5);
    CHECK(predicted[1].value == doctest::Approx(std::sqrt(8.0)));
    CHECK(predicted[1].multiplicity == 4);
    CHECK(predicted[2].value == doctest::Approx(std::sqrt(3.0)));
    CHECK(predicted[2].multiplicity == 1);

    // n = 3: the first group is empty.
    const auto small = predicted_singular_values(3);
    REQUIRE(small.size() == 2);
    CHECK(small[0].value == doctest::Approx(2.0));
    CHECK(small[0].multiplicity == 2);

    for (int n = 3; n <= 10; ++n) {
        const Matrix a = constraint_matrix(n).dense().cast<double>();
        Eigen::JacobiSVD<Matrix> svd(a);
        CHECK(spectrum_matches(group_spectrum(svd.singularValues()), predicted_singular_values(n)));
    }
}

TEST_CASE("apply matches the dense product") {
    const ConstraintMatrix a(6);
    Vector x = Vector::LinSpaced(static_cast<Eigen::Index>(a.cols()), -1.0, 2.0);
    CHECK((a.apply(x) - a.dense().cast<double>() * x).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK_THROWS_AS(a.apply(Vector::Ones(3)), DomainError);
}

TEST_CASE("violations") {
    Matrix d(3, 3);
    d << 0, 3, 1, 3, 0, 1, 1, 1, 0;
    const auto found = violations(DissimilarityMatrix(d));
    REQUIRE(found.size() == 1);
    CHECK(found[0].slack == 1.0);
    CHECK(found[0].constraint.label() == "(p1,p2,p3)");
    CHECK(found[0].row == 1);

    Matrix metric(3, 3);
    metric << 0, 2, 1, 2, 0, 1, 1, 1, 0;
    CHECK(violations(DissimilarityMatrix(metric)).empty());
    CHECK(violations(DissimilarityMatrix(d), 1.5).empty());
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(ConstraintMatrix(2), DomainError);
    CHECK_THROWS_AS(gram_identity_check(2), DomainError);
    Matrix negative = Matrix::Zero(3, 3);
    negative(0, 1) = negative(1, 0) = -1;
    CHECK_THROWS_AS(DissimilarityMatrix{negative}, DomainError);
    CHECK(violations(DissimilarityMatrix(Matrix::Zero(2, 2))).empty());
}
