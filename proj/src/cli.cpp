#include "dualmds/cli.hpp"

#include "dualmds/basis.hpp"
#include "dualmds/csv.hpp"
#include "dualmds/mds.hpp"
#include "dualmds/nearness.hpp"
#include "dualmds/report.hpp"
#include "dualmds/sampling.hpp"
#include "dualmds/stability.hpp"
#include "dualmds/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>

namespace dualmds::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kBasisMaxN = 12;
constexpr double kRoundTripTol = 1e-7;

struct Options {
    int n = 0;
    std::optional<int> r;
    std::uint64_t seed = 0;
    double tol = kRankTol;
    double epsilon = 1e-3;
    int trials = 1000;
    std::string out;
    std::string format = "dense";
    std::string json;
    std::string dist_path;
    std::string reference;
    std::string pair = "1,2";
};

Json vector_json(const Vector& v) { return Json(std::vector<double>(v.data(), v.data() + v.size())); }

Json groups_json(const std::vector<SpectralGroup>& groups) {
    Json out = Json::array();
    for (const auto& g : groups) out.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
    return out;
}

std::string exact_fraction(const AmplificationFactor& f) {
    const auto g = std::gcd(f.numerator, f.denominator);
    return fmt::format("{}/{}", f.numerator / g, f.denominator / g);
}

void cmd_gen(const Options& o, RunReport& report) {
    const int r = o.r.value_or(2);
    report.parameter("n", o.n);
    report.parameter("r", r);
    report.parameter("seed", o.seed);
    if (r < 1 || o.n <= r) throw DomainError(fmt::format("gen needs n > r >= 1, got n = {}, r = {}", o.n, r));
    if (o.out.empty()) throw DomainError("gen needs --out");

    Engine engine = make_engine(o.seed);
    const PointConfiguration points(standard_normal_points(o.n, r, engine));
    const SquaredDistanceMatrix d = squared_distances(points);
    const std::string points_path = o.out + ".points.csv";
    const std::string dist_path = o.out + ".dist.csv";
    write_csv(points_path, points.points());
    write_csv(dist_path, d.entries());

    const auto test = is_euclidean(d, o.tol);
    report.check("generated", true, {{"points", points_path}, {"distances", dist_path}});
    report.check("euclidean", test.euclidean, {{"min_eigenvalue", test.min_eigenvalue}});
}

void cmd_embed(const Options& o, RunReport& report) {
    report.parameter("input", o.dist_path);
    if (o.r) report.parameter("r", *o.r);
    report.parameter("tol", o.tol);

    Matrix raw = read_csv(o.dist_path);
    std::optional<SquaredDistanceMatrix> d;
    try {
        d.emplace(std::move(raw));
    } catch (const DomainError& e) {
        throw ParseError(fmt::format("'{}' is not a squared distance matrix: {}", o.dist_path, e.what()));
    }

    try {
        const EmbeddingResult result = embed(*d, o.r, o.tol);
        if (!o.out.empty()) write_csv(o.out, result.points.points());
        report.check("embedding", true,
                     {{"rank", result.rank},
                      {"dimension", result.points.dimension()},
                      {"retained_eigenvalues", vector_json(result.retained)},
                      {"discarded_mass", result.discarded_mass},
                      {"min_eigenvalue", result.min_eigenvalue}});
        for (const auto& w : result.warnings) report.note(w);
        if (!o.reference.empty()) {
            const Matrix reference = read_csv(o.reference);
            const double residual = procrustes_residual(result.points.points(), reference);
            const double limit = kRoundTripTol * std::max(1.0, reference.norm());
            report.check("procrustes_round_trip", residual <= limit, {{"residual", residual}, {"limit", limit}});
        }
    } catch (const NonEuclideanError& e) {
        report.check("euclidean", false, {{"min_eigenvalue", e.min_eigenvalue()}});
        throw;
    }
}

void cmd_verify(const Options& o, RunReport& report) {
    report.parameter("n", o.n);
    report.parameter("seed", o.seed);
    verify_identities(o.n, o.seed, report);
}

void cmd_noise(const Options& o, RunReport& report) {
    const int r = o.r.value_or(2);
    report.parameter("n", o.n);
    report.parameter("r", r);
    report.parameter("epsilon", o.epsilon);
    report.parameter("trials", o.trials);
    report.parameter("seed", o.seed);
    const StabilityReport s = noise_experiment(o.n, r, o.epsilon, o.trials, o.seed);
    report.check("noise_bound", s.pass,
                 {{"trials", s.trials},
                  {"max_ratio", s.max_ratio},
                  {"worst_trial", s.worst_trial},
                  {"amplification_factor", s.factor.value()},
                  {"amplification_exact", exact_fraction(s.factor)},
                  {"bound", s.bound}});
}

void cmd_nearness(const Options& o, RunReport& report) {
    report.parameter("n", o.n);
    report.parameter("format", o.format);
    if (o.format != "dense" && o.format != "triplets")
        throw DomainError(fmt::format("unknown format '{}', expected dense or triplets", o.format));
    const ConstraintMatrix a(o.n);
    if (!o.out.empty()) {
        if (o.format == "dense") write_csv(o.out, a.dense());
        else write_text(o.out, to_triplets(a));
    }
    report.check("constraint_matrix", true, {{"rows", a.rows()}, {"cols", a.cols()}, {"nonzeros", a.entries().size()}});

    const auto identity = gram_identity_check(o.n);
    report.check("nearness_identity", identity.holds, {{"max_deviation", identity.max_deviation}});

    const Vector singular = sym_eigenvalues(a.normal_matrix().cast<double>()).cwiseMax(0.0).cwiseSqrt();
    const auto observed = group_spectrum(singular);
    const auto predicted = predicted_singular_values(o.n);
    report.check("singular_values", spectrum_matches(observed, predicted),
                 {{"observed", groups_json(observed.groups)}, {"predicted", groups_json(predicted)}});
}

/// Integer matrix equal to scale * m, if every entry is within 1e-9 of one.
std::optional<IntMatrix> as_scaled_integers(const Matrix& m, double scale) {
    IntMatrix out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const double v = scale * m(r, c);
            const double rounded = std::round(v);
            if (std::abs(v - rounded) > 1e-9) return std::nullopt;
            out(r, c) = static_cast<int>(rounded);
        }
    return out;
}

std::string render_scaled(const Matrix& m, int n) {
    // Entries are multiples of 1/(2n^2); most sizes need only 1/n^2.
    for (const int scale : {n * n, 2 * n * n})
        if (const auto ints = as_scaled_integers(m, scale)) return fmt::format("(1/{}) *\n{}", scale, to_csv(*ints));
    return to_csv(m);
}

void cmd_basis(const Options& o, RunReport& report, std::ostream& out) {
    report.parameter("n", o.n);
    report.parameter("pair", o.pair);
    if (o.n < 2 || o.n > kBasisMaxN) throw DomainError(fmt::format("basis prints 2 <= n <= {}, got {}", kBasisMaxN, o.n));
    int i = 0;
    int j = 0;
    if (std::sscanf(o.pair.c_str(), "%d,%d", &i, &j) != 2)
        throw DomainError(fmt::format("--pair expects i,j, got '{}'", o.pair));
    const PairIndex alpha(i, j, o.n);

    out << fmt::format("w{}:\n{}", alpha.to_string(), to_csv(BasisAtom(alpha).dense()));
    out << fmt::format("v{}:\n{}", alpha.to_string(), render_scaled(DualAtom(alpha).dense(), o.n));
    out << fmt::format("H:\n{}", to_csv(basis_gram(o.n).entries()));
    out << fmt::format("H^-1:\n{}", render_scaled(dual_gram(o.n), o.n));
    const auto pairs = dual_atom_eigenpairs(alpha);
    report.check("basis_objects", true,
                 {{"L", pair_count(o.n)}, {"dual_eigenvalues", {pairs[0].value, pairs[1].value}}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classical multidimensional scaling through the dual basis of w_(i,j) atoms"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub) { sub->add_option("--json", o.json, "Write the JSON report here ('-' for stdout)"); };

    auto* gen = app.add_subcommand("gen", "Random points and their squared distances");
    gen->add_option("--n", o.n, "Number of points")->required();
    gen->add_option("--r", o.r, "Dimension (default 2)");
    gen->add_option("--seed", o.seed, "Seed");
    gen->add_option("--tol", o.tol, "Euclidean test tolerance");
    gen->add_option("--out", o.out, "Output prefix: <out>.points.csv, <out>.dist.csv")->required();
    add_common(gen);

    auto* emb = app.add_subcommand("embed", "Recover points from a squared distance CSV");
    emb->add_option("dist_path", o.dist_path, "Squared distance CSV")->required();
    emb->add_option("--r", o.r, "Target dimension (default: detected rank)");
    emb->add_option("--tol", o.tol, "Rank and Euclidean tolerance");
    emb->add_option("--out", o.out, "Recovered points CSV");
    emb->add_option("--reference", o.reference, "Original points CSV for a Procrustes check");
    add_common(emb);

    auto* ver = app.add_subcommand("verify", "Check every closed-form identity for one n");
    ver->add_option("--n", o.n, "Number of points")->required();
    ver->add_option("--seed", o.seed, "Seed for sampled checks");
    add_common(ver);

    auto* noi = app.add_subcommand("noise", "Randomised additive-noise experiment");
    noi->add_option("--n", o.n, "Number of points")->required();
    noi->add_option("--r", o.r, "Dimension (default 2)");
    noi->add_option("--epsilon", o.epsilon, "Noise half-width");
    noi->add_option("--trials", o.trials, "Number of trials");
    noi->add_option("--seed", o.seed, "Seed");
    add_common(noi);

    auto* near = app.add_subcommand("nearness", "Triangle-inequality constraint matrix");
    near->add_option("--n", o.n, "Number of points")->required();
    near->add_option("--out", o.out, "Output file");
    near->add_option("--format", o.format, "dense or triplets");
    add_common(near);

    auto* bas = app.add_subcommand("basis", "Print w, v, H and H^-1 for small n");
    bas->add_option("--n", o.n, "Number of points")->required();
    bas->add_option("--pair", o.pair, "Pair i,j (default 1,2)");
    add_common(bas);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    RunReport report(chosen->get_name());
    const auto start = std::chrono::steady_clock::now();
    int code = kPass;
    std::string failure;
    try {
        if (chosen == gen) cmd_gen(o, report);
        else if (chosen == emb) cmd_embed(o, report);
        else if (chosen == ver) cmd_verify(o, report);
        else if (chosen == noi) cmd_noise(o, report);
        else if (chosen == near) cmd_nearness(o, report);
        else cmd_basis(o, report, out);
        code = report.passed() ? kPass : kCheckFailed;
    } catch (const ParseError& e) {
        failure = e.what();
        code = kParseError;
    } catch (const IoError& e) {
        failure = e.what();
        code = kParseError;
    } catch (const DomainError& e) {
        failure = e.what();
        code = kDomainError;
    } catch (const ResourceError& e) {
        failure = e.what();
        code = kDomainError;
    }
    report.set_duration(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    if (!failure.empty()) {
        report.note(failure);
        err << "error: " << failure << '\n';
    }

    out << report.to_text();
    if (!o.json.empty()) {
        Json doc = report.to_json();
        doc["exit_code"] = code;
        const std::string text = doc.dump(2) + "\n";
        if (o.json == "-") {
            out << text;
        } else {
            try {
                write_text(o.json, text);
            } catch (const IoError& e) {
                err << "error: " << e.what() << '\n';
                return kParseError;
            }
        }
    }
    return code;
}

}  // namespace dualmds::cli
