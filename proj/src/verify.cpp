#include "dualmds/verify.hpp"

#include "dualmds/basis.hpp"
#include "dualmds/fixtures.hpp"
#include "dualmds/mds.hpp"
#include "dualmds/nearness.hpp"
#include "dualmds/sampling.hpp"
#include "dualmds/spectral.hpp"
#include "dualmds/stability.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dualmds {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kFixtureTol = 1e-12;
constexpr double kBiorthogonalityTol = 1e-12;
constexpr double kDualSpectrumTol = 1e-10;
constexpr double kInverseTol = 1e-9;
constexpr double kExpansionTol = 1e-10;
constexpr std::size_t kMaxAtomSamples = 200;

Json groups_json(const std::vector<SpectralGroup>& groups) {
    Json out = Json::array();
    for (const auto& g : groups) out.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
    return out;
}

template <std::size_t R, std::size_t C>
double fixture_deviation(const Matrix& m, const std::array<std::array<int, C>, R>& expected, double scale) {
    if (m.rows() != static_cast<Eigen::Index>(R) || m.cols() != static_cast<Eigen::Index>(C))
        return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < C; ++c) worst = std::max(worst, std::abs(scale * m(r, c) - expected[r][c]));
    return worst;
}

void check_fixtures(RunReport& report) {
    using namespace fixtures;
    const PairIndex first(1, 2, kFixtureN);
    const double w = fixture_deviation(BasisAtom(first).dense().cast<double>(), kW12, 1.0);
    const double v = fixture_deviation(DualAtom(first).dense(), kV12Times16, kFixtureScale);
    const double h = fixture_deviation(basis_gram(kFixtureN).real(), kH, 1.0);
    const double hinv = fixture_deviation(dual_gram(kFixtureN), kHInverseTimes16, kFixtureScale);
    const bool ok = w == 0.0 && h == 0.0 && v <= kFixtureTol && hinv <= kFixtureTol;
    report.check("n4_fixtures", ok, {{"w12", w}, {"v12_x16", v}, {"H", h}, {"H_inverse_x16", hinv}});

    const ConstraintMatrix a(kFixtureN);
    const IntMatrix dense = a.dense();
    bool rows_ok = true;
    for (const auto& row : kConstraintRows) {
        const auto index = a.find_row(row.x, row.y, row.z);
        if (!index) {
            rows_ok = false;
            continue;
        }
        for (std::size_t c = 0; c < row.signs.size(); ++c)
            rows_ok = rows_ok && dense(static_cast<Eigen::Index>(*index - 1), static_cast<Eigen::Index>(c)) == row.signs[c];
    }
    report.check("n4_constraint_rows", rows_ok, {{"rows_checked", kConstraintRows.size()}});
}

std::vector<PairIndex> sample_pairs(int n, std::uint64_t seed) {
    auto pairs = all_pairs(n);
    if (pairs.size() <= kMaxAtomSamples) return pairs;
    Engine engine = make_engine(seed, 0xA70Full);
    std::shuffle(pairs.begin(), pairs.end(), engine);
    pairs.erase(pairs.begin() + kMaxAtomSamples, pairs.end());
    return pairs;
}

}  // namespace

void verify_identities(int n, std::uint64_t seed, RunReport& report) {
    if (n < 3 || n > kVerifyMaxN)
        throw DomainError(fmt::format("verify needs 3 <= n <= {}, got {}", kVerifyMaxN, n));
    const auto pairs = all_pairs(n);
    const auto count = static_cast<Eigen::Index>(pairs.size());

    if (n == fixtures::kFixtureN) check_fixtures(report);

    const BasisGram gram = basis_gram(n);
    const IntMatrix& h = gram.entries();
    {
        // Trace inner products of the materialised atoms.
        std::vector<IntMatrix> atoms;
        for (const auto& p : pairs) atoms.push_back(BasisAtom(p).dense());
        long long worst = 0;
        for (Eigen::Index r = 0; r < count; ++r)
            for (Eigen::Index c = 0; c < count; ++c)
                worst = std::max<long long>(worst, std::abs(atoms[r].cwiseProduct(atoms[c]).sum() - h(r, c)));
        report.check("h_case_rule", worst == 0, {{"max_deviation", worst}});
    }
    {
        const auto observed = group_spectrum(sym_eigenvalues(gram.real()));
        const auto predicted = h_spectrum_predicted(n);
        report.check("h_spectrum", spectrum_matches(observed, predicted),
                     {{"observed", groups_json(observed.groups)}, {"predicted", groups_json(normalize_groups(predicted))}});
    }
    {
        Engine engine = make_engine(seed, 1);
        std::uniform_real_distribution<double> uniform(-1.0, 1.0);
        Vector x(count);
        for (Eigen::Index k = 0; k < count; ++k) x(k) = uniform(engine);
        const double deviation = (basis_gram_apply(n, x) - gram.real() * x).cwiseAbs().maxCoeff();
        report.check("h_implicit_product", deviation <= 1e-12 * std::max(1.0, x.cwiseAbs().maxCoeff()) * 2 * n,
                     {{"max_deviation", deviation}});
    }
    {
        const IntMatrix adjacency = triangular_graph_adjacency(n);
        const IntMatrix split = h - 4 * IntMatrix::Identity(count, count);
        report.check("triangular_decomposition", split == adjacency,
                     {{"row_sum", adjacency.row(0).sum()}, {"expected_row_sum", 2 * (n - 2)}});
    }
    {
        double worst = 0.0;
        for (const auto& alpha : pairs) {
            const Matrix v = DualAtom(alpha).dense();
            for (const auto& beta : pairs)
                worst = std::max(worst, std::abs(BasisAtom(beta).inner(v) - (alpha == beta ? 1.0 : 0.0)));
        }
        report.check("biorthogonality", worst <= kBiorthogonalityTol, {{"max_deviation", worst}});
    }
    {
        const double expected_small = -0.5 + 1.0 / n;
        double worst_value = 0.0;
        double worst_alignment = 0.0;
        bool rank_ok = true;
        const auto sampled = sample_pairs(n, seed);
        for (const auto& alpha : sampled) {
            const DualAtom atom(alpha);
            const auto eig = sym_eig(atom.dense());
            std::vector<Eigen::Index> nonzero;
            for (Eigen::Index k = 0; k < eig.values.size(); ++k)
                if (std::abs(eig.values(k)) > kDualSpectrumTol) nonzero.push_back(k);
            if (nonzero.size() != 2) {
                rank_ok = false;
                continue;
            }
            // Descending: 1/2 first, then -1/2 + 1/n.
            worst_value = std::max({worst_value, std::abs(eig.values(nonzero[0]) - 0.5),
                                    std::abs(eig.values(nonzero[1]) - expected_small)});
            const Vector minus = (atom.a() - atom.b()).normalized();
            const Vector plus = (atom.a() + atom.b()).normalized();
            worst_alignment = std::max({worst_alignment, 1.0 - std::abs(eig.vectors.col(nonzero[0]).dot(minus)),
                                        1.0 - std::abs(eig.vectors.col(nonzero[1]).dot(plus))});
        }
        report.check("dual_atom_spectrum",
                     rank_ok && worst_value <= kDualSpectrumTol && worst_alignment <= kDualSpectrumTol,
                     {{"atoms", sampled.size()},
                      {"eigenvalues", {0.5, expected_small}},
                      {"max_value_deviation", worst_value},
                      {"max_alignment_deficit", worst_alignment}});
    }
    {
        const Matrix inverse = dual_gram(n);
        const double identity = (inverse * gram.real() - Matrix::Identity(count, count)).cwiseAbs().maxCoeff();
        double closed = 0.0;
        for (Eigen::Index r = 0; r < count; ++r)
            for (Eigen::Index c = 0; c < count; ++c)
                closed = std::max(closed, std::abs(dual_gram_closed_form(pairs[r], pairs[c]) - inverse(r, c)));
        report.check("dual_gram_inverse", identity <= kInverseTol && closed <= 1e-15 * n,
                     {{"inverse_deviation", identity}, {"closed_form_deviation", closed}});
    }
    {
        double worst = 0.0;
        for (int t = 0; t < 5; ++t) {
            Engine engine = make_engine(seed, 100 + static_cast<std::uint64_t>(t));
            const int r = 1 + t % std::min(3, n - 1);
            const auto d = squared_distances(PointConfiguration(standard_normal_points(n, r, engine)));
            const double gap = (dual_expansion(d).entries() - double_center(d).entries()).cwiseAbs().maxCoeff();
            worst = std::max(worst, gap / std::max(1.0, d.entries().cwiseAbs().maxCoeff()));
        }
        report.check("expansion_equivalence", worst <= kExpansionTol, {{"max_relative_gap", worst}});
    }
    {
        const ConstraintMatrix a(n);
        std::vector<int> column_counts(a.cols(), 0);
        bool rows_ok = a.entries().size() == 3 * a.rows();
        for (std::size_t start = 0; rows_ok && start < a.entries().size(); start += 3) {
            int plus = 0;
            int minus = 0;
            for (std::size_t p = start; p < start + 3; ++p) (a.entries()[p].sign > 0 ? plus : minus) += 1;
            rows_ok = plus == 1 && minus == 2;
        }
        for (const auto& e : a.entries()) ++column_counts[e.col - 1];
        const bool cols_ok = std::all_of(column_counts.begin(), column_counts.end(), [n](int c) { return c == 3 * (n - 2); });
        report.check("constraint_structure", rows_ok && cols_ok,
                     {{"rows", a.rows()}, {"cols", a.cols()}, {"nonzeros", a.entries().size()}});

        const auto identity = gram_identity_check(n);
        report.check("nearness_identity", identity.holds, {{"max_deviation", identity.max_deviation}});

        const Vector eigen = sym_eigenvalues(a.normal_matrix().cast<double>());
        const Vector singular = eigen.cwiseMax(0.0).cwiseSqrt();
        const auto observed = group_spectrum(singular);
        const auto predicted = predicted_singular_values(n);
        report.check("singular_values", spectrum_matches(observed, predicted),
                     {{"observed", groups_json(observed.groups)}, {"predicted", groups_json(normalize_groups(predicted))}});
    }
    {
        const auto factor = amplification_factor(n);
        const auto mirrored = amplification_factor(n, FactorOrientation::column_first);
        const auto divisor = std::gcd(factor.numerator, factor.denominator);
        report.check("amplification_factor", factor.below(4) && mirrored.numerator == factor.numerator,
                     {{"factor", factor.value()},
                      {"exact", fmt::format("{}/{}", factor.numerator / divisor, factor.denominator / divisor)},
                      {"bound", kNoiseBound}});
    }
}

}  // namespace dualmds
