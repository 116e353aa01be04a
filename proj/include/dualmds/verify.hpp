#pragma once

#include "dualmds/report.hpp"

#include <cstdint>

namespace dualmds {

/// Largest n accepted by verify_identities (L = 1770 pairs).
inline constexpr int kVerifyMaxN = 60;

/// Runs every closed-form check for one n and appends the results to report:
/// H against the case rule, its spectrum and triangular-graph split, the
/// implicit H product, dual biorthogonality and atom spectra, H^-1, the two
/// Gram routes, the constraint-matrix identity and singular values, and the
/// noise amplification factor. For n = 4 the worked fixtures are compared too.
void verify_identities(int n, std::uint64_t seed, RunReport& report);

}  // namespace dualmds
