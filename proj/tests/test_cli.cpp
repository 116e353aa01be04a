#include <doctest.h>

#include "dualmds/cli.hpp"
#include "dualmds/csv.hpp"
#include "dualmds/mds.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dualmds;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "dualmds");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "dualmds_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

nlohmann::json report_of(const fs::path& path) { return nlohmann::json::parse(slurp(path)); }

}  // namespace

TEST_CASE("gen is deterministic and produces Euclidean data") {
    const auto a = scratch("gen_a");
    const auto b = scratch("gen_b");
    REQUIRE(run_cli({"gen", "--n", "10", "--r", "3", "--seed", "5", "--out", a.string()}).code == 0);
    REQUIRE(run_cli({"gen", "--n", "10", "--r", "3", "--seed", "5", "--out", b.string()}).code == 0);
    CHECK(slurp(a.string() + ".dist.csv") == slurp(b.string() + ".dist.csv"));
    CHECK(slurp(a.string() + ".points.csv") == slurp(b.string() + ".points.csv"));

    const Matrix points = read_csv(a.string() + ".points.csv");
    CHECK(points.rows() == 10);
    CHECK(points.cols() == 3);
    const Matrix d = read_csv(a.string() + ".dist.csv");
    CHECK(d == squared_distances(PointConfiguration(points)).entries());
}

TEST_CASE("gen rejects n <= r") {
    const auto r = run_cli({"gen", "--n", "2", "--r", "2", "--out", scratch("bad").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("n > r") != std::string::npos);
}

TEST_CASE("embed round trip with a Procrustes check") {
    const auto prefix = scratch("round");
    REQUIRE(run_cli({"gen", "--n", "12", "--r", "2", "--seed", "1", "--out", prefix.string()}).code == 0);
    const auto recovered = scratch("round_recovered.csv");
    const auto json = scratch("round.json");
    const auto r = run_cli({"embed", prefix.string() + ".dist.csv", "--out", recovered.string(), "--reference",
                            prefix.string() + ".points.csv", "--json", json.string()});
    CHECK(r.code == 0);
    CHECK(read_csv(recovered).cols() == 2);
    const auto doc = report_of(json);
    CHECK(doc["status"] == "pass");
    CHECK(doc["exit_code"] == 0);
    CHECK(doc["checks"][0]["payload"]["rank"] == 2);
    CHECK(doc["checks"][1]["name"] == "procrustes_round_trip");
    CHECK(doc["checks"][1]["payload"]["residual"].get<double>() <= 1e-7);
}

TEST_CASE("embed of the zero matrix") {
    const auto path = scratch("zero.csv");
    write_csv(path, Matrix(Matrix::Zero(3, 3)));
    const auto out = scratch("zero_points.csv");
    CHECK(run_cli({"embed", path.string(), "--out", out.string()}).code == 0);
    CHECK(read_csv(out) == Matrix::Zero(3, 1));
}

TEST_CASE("embed input errors") {
    const auto asym = scratch("asym.csv");
    write_text(asym, "0,1\n2,0\n");
    CHECK(run_cli({"embed", asym.string()}).code == 3);

    const auto garbage = scratch("garbage.csv");
    write_text(garbage, "0,a\n1,0\n");
    CHECK(run_cli({"embed", garbage.string()}).code == 3);

    CHECK(run_cli({"embed", scratch("missing.csv").string()}).code == 3);

    const auto broken = scratch("broken.csv");
    write_text(broken, "0,1,9\n1,0,1\n9,1,0\n");
    const auto json = scratch("broken.json");
    CHECK(run_cli({"embed", broken.string(), "--json", json.string()}).code == 2);
    const auto doc = report_of(json);
    CHECK(doc["status"] == "fail");
    CHECK(doc["checks"][0]["name"] == "euclidean");
}

TEST_CASE("noise") {
    const auto a = scratch("noise_a.json");
    const auto b = scratch("noise_b.json");
    CHECK(run_cli({"noise", "--n", "5", "--trials", "50", "--seed", "3", "--json", a.string()}).code == 0);
    CHECK(run_cli({"noise", "--n", "5", "--trials", "50", "--seed", "3", "--json", b.string()}).code == 0);
    CHECK(slurp(a) == slurp(b));
    const auto doc = report_of(a);
    CHECK(doc["checks"][0]["payload"]["amplification_exact"] == "43/25");

    CHECK(run_cli({"noise", "--n", "5", "--epsilon", "0"}).code == 2);
    CHECK(run_cli({"noise", "--n", "5", "--trials", "zero"}).code == 3);
}

TEST_CASE("nearness") {
    const auto dense = scratch("a.csv");
    CHECK(run_cli({"nearness", "--n", "4", "--out", dense.string()}).code == 0);
    const Matrix a = read_csv(dense);
    CHECK(a.rows() == 12);
    CHECK(a.cols() == 6);

    const auto triplets = scratch("a.txt");
    CHECK(run_cli({"nearness", "--n", "4", "--format", "triplets", "--out", triplets.string()}).code == 0);
    const std::string text = slurp(triplets);
    CHECK(std::count(text.begin(), text.end(), '\n') == 36);

    CHECK(run_cli({"nearness", "--n", "2"}).code == 2);
    CHECK(run_cli({"nearness", "--n", "4", "--format", "sparse"}).code == 2);
}

TEST_CASE("verify and basis") {
    const auto r = run_cli({"verify", "--n", "4", "--json", "-"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("n4_fixtures") != std::string::npos);

    const auto b = run_cli({"basis", "--n", "4"});
    CHECK(b.code == 0);
    CHECK(b.out.find("(1/16) *\n3,-5,1,1\n-5,3,1,1\n") != std::string::npos);

    CHECK(run_cli({"basis", "--n", "4", "--pair", "3,3"}).code == 2);
    CHECK(run_cli({"verify", "--n", "2"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 3);
    CHECK(run_cli({"bogus"}).code == 3);
    CHECK(run_cli({"verify"}).code == 3);
    CHECK(run_cli({"--help"}).code == 0);
}
