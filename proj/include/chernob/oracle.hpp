#pragma once

// Brute-force checkers that share no code path with the standard-basis
// engine: truncated linear algebra for colengths and Sylvester resultants
// for plane intersection multiplicities.

#include <cstdint>
#include <optional>

#include "chernob/groebner.hpp"
#include "chernob/matmod.hpp"
#include "chernob/random.hpp"

namespace chernob::oracle {

struct TruncationResult {
  std::uint64_t value;
  int stabilized_at;  // first N with dim(N) == dim(N + 1)
  int cap;
};

inline constexpr int default_truncation_cap = 40;

/// dim_Q of O/(I + m^N) for N = 2, 3, ...; returns the value once two
/// consecutive degrees agree, nullopt if `cap` is reached first.
std::optional<TruncationResult> colength_truncation(const Ideal& ideal,
                                                    int cap = default_truncation_cap);
std::optional<TruncationResult> colength_truncation(const ModulePresentation& presentation,
                                                    int cap = default_truncation_cap);

/// Local intersection multiplicity at the origin of two plane curves:
/// order at 0 of Res_y after a seeded shear x -> x + c y, confirmed with a
/// second seed. Throws SeedDisagreement if the two runs differ and Error if
/// the curves share a component.
std::uint64_t imult_resultant(const Polynomial& f, const Polynomial& g, std::uint64_t seed);

/// Single-shear building block of imult_resultant.
std::uint64_t resultant_order(const Polynomial& f, const Polynomial& g, std::int64_t shear);

/// Random sparse polynomial for randomized checks: `terms` monomials of total
/// degree in [min_degree, max_degree], integer coefficients in
/// [-coef_bound, coef_bound] \ {0}.
Polynomial random_polynomial(const RingPtr& ring, SeededRng& rng, int min_degree, int max_degree,
                             int terms, int coef_bound);

}  // namespace chernob::oracle
