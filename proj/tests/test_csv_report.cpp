#include <doctest.h>

#include "dualmds/csv.hpp"
#include "dualmds/nearness.hpp"
#include "dualmds/report.hpp"
#include "dualmds/sampling.hpp"

#include <filesystem>

using namespace dualmds;

TEST_CASE("parse headerless CSV") {
    const Matrix m = parse_csv("0,1.5,-2\n3e2, 4 ,+5\n\n");
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    CHECK(m(0, 1) == 1.5);
    CHECK(m(1, 0) == 300.0);
    CHECK(m(1, 1) == 4.0);
    CHECK(m(1, 2) == 5.0);
    CHECK(parse_csv("1,2\r\n3,4\r\n")(1, 1) == 4.0);
    CHECK(parse_csv("7").size() == 1);
}

TEST_CASE("malformed CSV is a parse error") {
    CHECK_THROWS_AS(parse_csv(""), ParseError);
    CHECK_THROWS_AS(parse_csv("\n \n"), ParseError);
    CHECK_THROWS_AS(parse_csv("1,2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("1,x\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("1,,2\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("1,2 3\n"), ParseError);
    CHECK_THROWS_AS(read_csv("/nonexistent/path/d.csv"), IoError);
}

TEST_CASE("shortest round-trip formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.25) == "-0.25");
    CHECK(format_double(1e-300) == "1e-300");

    Engine engine = make_engine(1);
    const Matrix m = random_symmetric(9, engine) * 1e3;
    CHECK(parse_csv(to_csv(m)) == m);
}

TEST_CASE("file round trip") {
    const auto path = std::filesystem::temp_directory_path() / "dualmds_test_csv_roundtrip.csv";
    Matrix m(2, 2);
    m << 0, 1.0 / 3, 1.0 / 3, 0;
    write_csv(path, m);
    CHECK(read_csv(path) == m);

    IntMatrix k(1, 3);
    k << -1, 0, 7;
    write_csv(path, k);
    CHECK(read_csv(path) == k.cast<double>());
    std::filesystem::remove(path);
}

TEST_CASE("triplet format") {
    const std::string text = to_triplets(ConstraintMatrix(3));
    CHECK(text.rfind("1 1 1\n1 2 -1\n1 3 -1\n2 1 -1\n2 2 1\n2 3 -1\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 9);
}

TEST_CASE("run report") {
    RunReport report("demo");
    report.parameter("n", 4);
    report.check("first", true, {{"value", 0.5}});
    report.check("second", false);
    report.note("something happened");
    report.set_duration(0.25);
    CHECK_FALSE(report.passed());

    const auto json = report.to_json();
    CHECK(json["command"] == "demo");
    CHECK(json["status"] == "fail");
    CHECK(json["parameters"]["n"] == 4);
    REQUIRE(json["checks"].size() == 2);
    CHECK(json["checks"][0]["name"] == "first");
    CHECK(json["checks"][0]["passed"] == true);
    CHECK(json["checks"][0]["payload"]["value"] == 0.5);
    CHECK(json["notes"][0] == "something happened");
    CHECK_FALSE(json.contains("duration"));

    std::vector<std::string> keys;
    for (const auto& item : json.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"command", "status", "parameters", "checks", "notes"});

    const std::string text = report.to_text();
    CHECK(text.find("[PASS] first") != std::string::npos);
    CHECK(text.find("[FAIL] second") != std::string::npos);
    CHECK(text.find("status: fail") != std::string::npos);
    CHECK(text.find("0.250 s") != std::string::npos);

    RunReport empty("nothing");
    CHECK(empty.passed());
    CHECK(empty.to_json()["status"] == "pass");
}
